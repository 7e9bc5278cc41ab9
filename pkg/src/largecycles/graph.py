"""Simple undirected graphs stored as per-vertex neighbourhood bitmasks.

Vertices are always ``0..n-1``.  A :class:`Graph` is immutable and hashable,
so the exponential solvers in :mod:`largecycles.cycles` can cache their
tables per graph.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

MAX_N = 32
INFINITY = math.inf


class CapacityError(ValueError):
    """Raised when a graph exceeds :data:`MAX_N` vertices."""


class EmptyGraphError(ValueError):
    """Raised by parameters that are undefined on the graph with no vertices."""


def _check_capacity(n: int) -> None:
    if n > MAX_N:
        raise CapacityError(f"graph has {n} vertices; supported maximum is {MAX_N}")


def bits(mask: int) -> Iterable[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...] = field(repr=False)

    def __post_init__(self) -> None:
        _check_capacity(self.n)
        if len(self.adj) != self.n:
            raise ValueError("adjacency must have exactly n rows")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"vertex {v} has a neighbour outside 0..{self.n - 1}")
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"adjacency not symmetric on edge {v}-{u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        _check_capacity(n)
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def degrees(self) -> list[int]:
        return [popcount(row) for row in self.adj]

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for v in range(self.n) for u in bits(self.adj[v] & ((1 << v) - 1))]

    def num_edges(self) -> int:
        return sum(self.degrees()) // 2

    def induced(self, vertices: Sequence[int] | int) -> tuple["Graph", list[int]]:
        """Return the induced subgraph relabelled to ``0..k-1`` and the label map.

        ``vertices`` may be a bitmask or a sequence; the map lists original
        labels in increasing order.
        """
        if isinstance(vertices, int):
            keep = list(bits(vertices))
        else:
            keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        rows = []
        sel = mask_of(keep)
        for v in keep:
            rows.append(mask_of(index[u] for u in bits(self.adj[v] & sel)))
        return Graph(len(keep), tuple(rows)), keep

    def delete(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """``G - S``: the induced subgraph on the remaining vertices."""
        return self.induced(self.full_mask & ~mask_of(vertices))

    def components(self, within: int | None = None) -> list[int]:
        """Connected components (as bitmasks) of the subgraph induced by ``within``."""
        left = self.full_mask if within is None else within
        comps = []
        while left:
            seed = left & -left
            comp = seed
            frontier = seed
            while frontier:
                grow = 0
                for v in bits(frontier):
                    grow |= self.adj[v]
                frontier = grow & left & ~comp
                comp |= frontier
            comps.append(comp)
            left &= ~comp
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def is_independent(self, vertices: Iterable[int]) -> bool:
        sel = mask_of(vertices)
        return all(not (self.adj[v] & sel) for v in bits(sel))


# -- constructors -------------------------------------------------------------

def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle graph needs at least 3 vertices")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def star_graph(leaves: int) -> Graph:
    """``K_{1,leaves}`` with the centre labelled 0."""
    return Graph.from_edges(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def disjoint_union(graphs: Sequence[Graph]) -> Graph:
    """Place the graphs side by side, relabelling block ``i`` after blocks ``<i``."""
    rows: list[int] = []
    offset = 0
    for g in graphs:
        rows.extend(row << offset for row in g.adj)
        offset += g.n
    return Graph(offset, tuple(rows))


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union of ``g1`` and ``g2`` plus every edge between them."""
    left = g1.full_mask
    right = g2.full_mask << g1.n
    rows = [row | right for row in g1.adj]
    rows += [(row << g1.n) | left for row in g2.adj]
    return Graph(g1.n + g2.n, tuple(rows))


def add_edge(g: Graph, u: int, v: int) -> Graph:
    rows = list(g.adj)
    rows[u] |= 1 << v
    rows[v] |= 1 << u
    return Graph(g.n, tuple(rows))


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adj)))

