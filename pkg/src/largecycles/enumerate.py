"""Isomorph-free generation of small graphs.

Canonical forms come from individualisation-refinement: equitable partition
refinement, branching on the first smallest non-singleton cell, and pruning
branches that lie in one orbit of the automorphisms found so far.  The
canonical code is the largest upper-triangle bit string over all leaves.

Graphs on n vertices are produced from graphs on n-1 vertices by adding a
vertex of minimum degree, which reaches every isomorphism class.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

from .graph import Graph, bits, popcount
from .graph6 import graph6_decode, graph6_encode

BUILTIN_MAX_N = 9


def _refine(adj: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    cells = [c[:] for c in cells]
    changed = True
    while changed:
        changed = False
        for w in range(len(cells)):
            wmask = 0
            for v in cells[w]:
                wmask |= 1 << v
            out = []
            for cell in cells:
                if len(cell) == 1:
                    out.append(cell)
                    continue
                groups: dict[int, list[int]] = {}
                for v in cell:
                    groups.setdefault(popcount(adj[v] & wmask), []).append(v)
                if len(groups) == 1:
                    out.append(cell)
                else:
                    out.extend(groups[k] for k in sorted(groups))
                    changed = True
            cells = out
            if changed:
                break
    return cells


def _code(adj: tuple[int, ...], order: list[int]) -> int:
    code = 0
    for j in range(1, len(order)):
        row = adj[order[j]]
        for i in range(j):
            code = (code << 1) | (row >> order[i] & 1)
    return code


def _orbits(n: int, autos: list[tuple[int, ...]], fixed: list[int]) -> list[int]:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for perm in autos:
        if any(perm[v] != v for v in fixed):
            continue
        for v in range(n):
            a, b = find(v), find(perm[v])
            if a != b:
                parent[a] = b
    return [find(v) for v in range(n)]


def canonical_order(g: Graph) -> list[int]:
    """Vertex order whose relabelling is the canonical representative of g's class."""
    n = g.n
    if n <= 1:
        return list(range(n))
    adj = g.adj
    state: dict = {"first": None, "best": None}
    autos: list[tuple[int, ...]] = []

    def leaf(order: list[int]) -> None:
        code = _code(adj, order)
        for key in ("first", "best"):
            ref = state[key]
            if ref is not None and ref[0] == code:
                perm = [0] * n
                for a, b in zip(ref[1], order):
                    perm[a] = b
                autos.append(tuple(perm))
                break
        if state["first"] is None:
            state["first"] = (code, order)
        if state["best"] is None or code > state["best"][0]:
            state["best"] = (code, order)

    def search(cells: list[list[int]], prefix: list[int]) -> None:
        cells = _refine(adj, cells)
        if len(cells) == n:
            leaf([c[0] for c in cells])
            return
        size = min(len(c) for c in cells if len(c) > 1)
        pos = next(i for i, c in enumerate(cells) if len(c) == size)
        tried: list[int] = []
        for v in sorted(cells[pos]):
            if tried:
                orb = _orbits(n, autos, prefix)
                if any(orb[v] == orb[u] for u in tried):
                    continue
            rest = [u for u in cells[pos] if u != v]
            search(cells[:pos] + [[v], rest] + cells[pos + 1:], prefix + [v])
            tried.append(v)

    degs = g.degrees()
    groups: dict[int, list[int]] = {}
    for v in range(n):
        groups.setdefault(degs[v], []).append(v)
    search([groups[d] for d in sorted(groups)], [])
    return state["best"][1]


def canonical_form(g: Graph) -> Graph:
    order = canonical_order(g)
    pos = {v: i for i, v in enumerate(order)}
    rows = []
    for v in order:
        m = 0
        for u in bits(g.adj[v]):
            m |= 1 << pos[u]
        rows.append(m)
    return Graph(g.n, tuple(rows))


def canonical_graph6(g: Graph) -> str:
    return graph6_encode(canonical_form(g))


@lru_cache(maxsize=None)
def _all_graphs(n: int) -> tuple[str, ...]:
    if n == 0:
        return ("?",)
    if n == 1:
        return ("@",)
    seen: set[str] = set()
    for text in _all_graphs(n - 1):
        h = graph6_decode(text)
        degs = h.degrees()
        for s in range(1 << (n - 1)):
            k = popcount(s)
            # the new vertex must have minimum degree in the extended graph
            if any(degs[u] + (s >> u & 1) < k for u in range(n - 1)):
                continue
            rows = list(h.adj)
            for u in bits(s):
                rows[u] |= 1 << (n - 1)
            rows.append(s)
            seen.add(canonical_graph6(Graph(n, tuple(rows))))
    return tuple(sorted(seen))


def enumerate_graphs(n: int) -> Iterator[Graph]:
    """One representative per isomorphism class of graphs on n vertices."""
    _check_builtin(n, allow_zero=True)
    for text in _all_graphs(n):
        yield graph6_decode(text)


def enumerate_connected_graphs(n: int) -> Iterator[Graph]:
    """One representative per isomorphism class of connected graphs on n vertices."""
    _check_builtin(n)
    for text in _all_graphs(n):
        g = graph6_decode(text)
        if g.is_connected():
            yield g


def _check_builtin(n: int, allow_zero: bool = False) -> None:
    if n < (0 if allow_zero else 1) or n > BUILTIN_MAX_N:
        raise ValueError(
            f"built-in enumeration covers 1 <= n <= {BUILTIN_MAX_N}; for n={n} supply a "
            "graph6 file from an external generator (hunt --source FILE)"
        )
