"""Shared graph builders and an independent spectral radius oracle for tests."""

from __future__ import annotations

import numpy as np

from netspectra import Graph


def cycle_graph(n: int) -> Graph:
    g = Graph(n)
    for i in range(n):
        g.add_edge(i, (i + 1) % n)
    return g


def path_graph(n: int) -> Graph:
    g = Graph(n)
    for i in range(n - 1):
        g.add_edge(i, i + 1)
    return g


def complete_graph(n: int) -> Graph:
    g = Graph(n)
    for u in range(n):
        for v in range(u + 1, n):
            g.add_edge(u, v)
    return g


def star_graph(n: int) -> Graph:
    """Hub node 0 joined to n - 1 leaves."""
    g = Graph(n)
    for v in range(1, n):
        g.add_edge(0, v)
    return g


def disjoint_union(a: Graph, b: Graph) -> Graph:
    g = Graph(a.node_count + b.node_count)
    for u, v in a.edges():
        g.add_edge(u, v)
    for u, v in b.edges():
        g.add_edge(a.node_count + u, a.node_count + v)
    return g


def erdos_renyi(n: int, p: float, rng: np.random.Generator) -> Graph:
    g = Graph(n)
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                g.add_edge(u, v)
    return g


def adjacency_matrix(g: Graph) -> np.ndarray:
    a = np.zeros((g.node_count, g.node_count), dtype=np.float64)
    for u, v in g.edges():
        a[u, v] = 1.0
        a[v, u] = 1.0
    return a


def trace_oracle_spectral_radius(g: Graph) -> float:
    """Spectral radius estimate from matrix powers, independent of power iteration.

    Uses trace(A^128) ** (1/128): the 128th power moment of the spectrum is
    dominated by the largest eigenvalue magnitude. Computed by 7 repeated
    squarings with max-entry rescaling, tracking the scale in log space so
    entries never overflow.

    Accurate to well below 1e-3 when one eigenvalue dominates in magnitude.
    A graph whose top magnitude is attained r times (a bipartite graph, or
    tied components) reads high by the factor r ** (1/128), about 0.54% for
    r = 2, so tests that demand tight agreement must use graphs with a
    dominant simple eigenvalue.
    """
    b = adjacency_matrix(g)
    log_scale = 0.0
    for _ in range(7):
        m = float(np.abs(b).max())
        if m == 0.0:
            return 0.0
        b = b / m
        log_scale = 2.0 * (log_scale + np.log(m))
        b = b @ b
    trace = float(np.trace(b))
    if trace <= 0.0:
        return 0.0
    return float(np.exp((np.log(trace) + log_scale) / 128.0))
