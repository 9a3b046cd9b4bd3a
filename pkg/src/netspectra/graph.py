"""Undirected simple graphs with incremental mutation and degree statistics.

Nodes are dense 0-based integer IDs assigned in creation order. Adjacency is
kept as one neighbor set per node, so self-loops and parallel edges cannot be
represented.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Iterator

from .errors import (
    DuplicateEdgeError,
    EdgeListParseError,
    EmptyGraphError,
    MissingEdgeError,
    NodeOutOfRangeError,
    SelfLoopError,
    ZeroMeanDegreeError,
)


class Graph:
    """Mutable undirected simple graph.

    Neighbor sets are symmetric at all times: ``v in g.neighbors(u)`` iff
    ``u in g.neighbors(v)``.
    """

    __slots__ = ("_adj", "_edge_count")

    def __init__(self, node_count: int = 0) -> None:
        if node_count < 0:
            raise ValueError(f"node_count must be nonnegative, got {node_count}")
        self._adj: list[set[int]] = [set() for _ in range(node_count)]
        self._edge_count = 0

    @property
    def node_count(self) -> int:
        return len(self._adj)

    @property
    def edge_count(self) -> int:
        return self._edge_count

    def add_node(self) -> int:
        """Append an isolated node and return its ID (the previous node count)."""
        self._adj.append(set())
        return len(self._adj) - 1

    def _check_node(self, u: int) -> None:
        if not 0 <= u < len(self._adj):
            raise NodeOutOfRangeError(
                f"node {u} out of range for graph with {len(self._adj)} nodes"
            )

    def add_edge(self, u: int, v: int) -> None:
        """Insert edge (u, v).

        Raises SelfLoopError, DuplicateEdgeError, or NodeOutOfRangeError.
        """
        self._check_node(u)
        self._check_node(v)
        if u == v:
            raise SelfLoopError(f"self-loop {u}-{v}")
        if v in self._adj[u]:
            raise DuplicateEdgeError(f"edge {u}-{v} already present")
        self._adj[u].add(v)
        self._adj[v].add(u)
        self._edge_count += 1

    def remove_edge(self, u: int, v: int) -> None:
        """Delete edge (u, v). Raises MissingEdgeError if it is not present."""
        self._check_node(u)
        self._check_node(v)
        if v not in self._adj[u]:
            raise MissingEdgeError(f"edge {u}-{v} not present")
        self._adj[u].discard(v)
        self._adj[v].discard(u)
        self._edge_count -= 1

    def has_edge(self, u: int, v: int) -> bool:
        self._check_node(u)
        self._check_node(v)
        return v in self._adj[u]

    def neighbors(self, u: int) -> set[int]:
        """Neighbor set of ``u``. Treat as read-only; mutate via add/remove_edge."""
        self._check_node(u)
        return self._adj[u]

    def degree(self, u: int) -> int:
        self._check_node(u)
        return len(self._adj[u])

    def degrees(self) -> list[int]:
        """Degree sequence indexed by node ID."""
        return [len(nbrs) for nbrs in self._adj]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield each edge once as (u, v) with u < v, in sorted order."""
        for u, nbrs in enumerate(self._adj):
            for v in sorted(nbrs):
                if u < v:
                    yield (u, v)

    def copy(self) -> "Graph":
        g = Graph()
        g._adj = [set(nbrs) for nbrs in self._adj]
        g._edge_count = self._edge_count
        return g

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __repr__(self) -> str:
        return f"Graph(nodes={self.node_count}, edges={self.edge_count})"


@dataclass(frozen=True)
class DegreeStats:
    """Population statistics of a degree sequence.

    ``k_sd`` divides the variance by n, not n - 1: the degree sequence is the
    whole population of the network, not a sample.
    """

    k_min: int
    k_max: int
    k_avg: float
    k_sd: float

    @property
    def cv(self) -> float:
        """Coefficient of variation, k_sd / k_avg. Undefined at zero mean degree."""
        if self.k_avg == 0:
            raise ZeroMeanDegreeError("cv undefined: graph has no edges")
        return self.k_sd / self.k_avg


def degree_stats(g: Graph) -> DegreeStats:
    """Compute min/mean/max/population-SD of the degree sequence of ``g``."""
    if g.node_count == 0:
        raise EmptyGraphError("degree statistics need at least one node")
    degs = g.degrees()
    n = len(degs)
    k_avg = sum(degs) / n
    variance = math.fsum((d - k_avg) ** 2 for d in degs) / n
    return DegreeStats(k_min=min(degs), k_max=max(degs), k_avg=k_avg, k_sd=math.sqrt(variance))


_NODES_HEADER = re.compile(r"#\s*nodes:\s*(\d+)\s*$")


def parse_edge_list(text: str) -> Graph:
    """Build a graph from edge-list text.

    One edge per line as two whitespace-separated decimal node IDs. Lines
    beginning with ``#`` are comments; a ``# nodes: <n>`` header fixes the node
    count, otherwise it is inferred as 1 + the largest ID seen.

    Raises EdgeListParseError (with line number) on malformed input, and
    SelfLoopError/DuplicateEdgeError tagged with the offending line.
    """
    declared: int | None = None
    edges: list[tuple[int, int, int]] = []
    max_id = -1
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            m = _NODES_HEADER.match(line)
            if m and declared is None:
                declared = int(m.group(1))
            continue
        parts = line.split()
        if len(parts) != 2:
            raise EdgeListParseError(
                f"expected two node IDs, got {len(parts)} field(s): {line!r}", line_no
            )
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListParseError(f"node IDs must be decimal integers: {line!r}", line_no) from None
        if u < 0 or v < 0:
            raise EdgeListParseError(f"node IDs must be nonnegative: {line!r}", line_no)
        edges.append((u, v, line_no))
        max_id = max(max_id, u, v)

    if declared is None:
        if max_id < 0:
            raise EdgeListParseError("no edges and no '# nodes:' header; node count unknown")
        node_count = max_id + 1
    else:
        node_count = declared
        if max_id >= node_count:
            bad = next(ln for u, v, ln in edges if u >= node_count or v >= node_count)
            raise EdgeListParseError(
                f"node ID exceeds declared node count {node_count}", bad
            )

    g = Graph(node_count)
    for u, v, line_no in edges:
        try:
            g.add_edge(u, v)
        except SelfLoopError:
            raise SelfLoopError(f"line {line_no}: self-loop {u}-{v}") from None
        except DuplicateEdgeError:
            raise DuplicateEdgeError(f"line {line_no}: duplicate edge {u}-{v}") from None
    return g


def write_edge_list(g: Graph) -> str:
    """Serialize ``g`` to edge-list text; parse_edge_list(write_edge_list(g)) == g."""
    lines = [f"# nodes: {g.node_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"
