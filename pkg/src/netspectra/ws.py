"""Small-world networks: a coupled double ring with random rewiring.

The starting lattice is two rings of N nodes each. Outer nodes are 0..N-1,
inner nodes N..2N-1. Every node begins with degree 4:

  * ring links: i to its ring neighbors, same on the inner ring
  * cross links: outer i to inner N+i and to inner N+((i+1) mod N)

Rewiring sweeps the initial links once in construction order. A link caught
by the probability draw keeps its lower endpoint and moves the other end to a
node picked uniformly among non-neighbors. Links created by the sweep are
never themselves rewired.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import TooFewNodesError
from .graph import Graph


@dataclass(frozen=True)
class WSConfig:
    nodes_per_ring: int
    rewiring_probability: float

    def __post_init__(self) -> None:
        if self.nodes_per_ring < 3:
            raise TooFewNodesError(
                f"nodes_per_ring must be >= 3, got {self.nodes_per_ring}"
            )
        if not 0.0 <= self.rewiring_probability <= 1.0:
            raise ValueError(
                f"rewiring_probability must be in [0, 1], got {self.rewiring_probability}"
            )


@dataclass(frozen=True)
class RewireEvent:
    """One probability-draw hit during the sweep.

    ``new_edge`` is None when every possible endpoint was already a neighbor
    of the kept node, so the link stayed in place.
    """

    original_edge: tuple[int, int]
    new_edge: tuple[int, int] | None
    event_index: int

    @property
    def skipped(self) -> bool:
        return self.new_edge is None


RewireObserver = Callable[[RewireEvent, Graph], None]


def _ordered(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


def initial_edges(nodes_per_ring: int) -> list[tuple[int, int]]:
    """Lattice links in construction order, each normalized lower-ID first."""
    n = nodes_per_ring
    edges: list[tuple[int, int]] = []
    for i in range(n):
        edges.append(_ordered(i, (i + 1) % n))
    for i in range(n):
        edges.append(_ordered(n + i, n + (i + 1) % n))
    for i in range(n):
        edges.append(_ordered(i, n + i))
        edges.append(_ordered(i, n + (i + 1) % n))
    return edges


def ws_initialize(config: WSConfig) -> Graph:
    """Build the unrewired double-ring lattice: 2N nodes, 4N links, all degree 4."""
    g = Graph(2 * config.nodes_per_ring)
    for u, v in initial_edges(config.nodes_per_ring):
        g.add_edge(u, v)
    return g


def ws_rewire(
    g: Graph,
    config: WSConfig,
    rng: np.random.Generator,
    observer: RewireObserver | None = None,
) -> list[RewireEvent]:
    """Apply the rewiring sweep to a freshly built lattice, in place.

    Each initial link draws one uniform variate; the link is rewired when the
    draw is at or below the rewiring probability. The replacement endpoint is
    uniform over nodes that are neither the kept endpoint nor any of its
    current neighbors. Candidate exhaustion is recorded as a skipped event
    instead of an error.

    Returns the events in order. ``observer`` runs after each completed
    rewire (not after skips), seeing the event and the mutated graph. At
    probability zero the sweep returns immediately and consumes no
    randomness, so the lattice is untouched by construction rather than by
    chance.
    """
    if g.node_count != 2 * config.nodes_per_ring:
        raise ValueError(
            f"graph has {g.node_count} nodes, expected {2 * config.nodes_per_ring}"
        )
    beta = config.rewiring_probability
    if beta == 0.0:
        return []
    total = g.node_count
    events: list[RewireEvent] = []
    for u, v in initial_edges(config.nodes_per_ring):
        if rng.random() > beta:
            continue
        candidates = [
            w for w in range(total) if w != u and w != v and not g.has_edge(u, w)
        ]
        if not candidates:
            events.append(RewireEvent((u, v), None, len(events)))
            continue
        w = candidates[int(rng.integers(len(candidates)))]
        g.remove_edge(u, v)
        g.add_edge(u, w)
        event = RewireEvent((u, v), _ordered(u, w), len(events))
        events.append(event)
        if observer is not None:
            observer(event, g)
    return events
