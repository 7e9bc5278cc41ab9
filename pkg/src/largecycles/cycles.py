"""Exact longest cycles and paths with degenerate orders 1 and 2 admitted.

A single vertex counts as a cycle of order 1 and a single edge as a cycle of
order 2.  Generalized orders are therefore:

* cycle order of H: 0 if H is empty, 1 if H is edgeless, 2 if H has an edge
  but no cycle, otherwise the circumference;
* path order of H: 0 if H is empty, otherwise the vertex count of a longest path.

Graphs with at most :data:`DP_MAX_N` vertices are solved by a subset dynamic
programme that tabulates every induced subgraph at once, so the remainder
parameters of any cycle are table lookups.  Larger graphs fall back to a
depth-first branch and bound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator

import numpy as np

from ._kernels import bnb_cycles, subset_tables
from .graph import Graph, bits, mask_of, popcount

DP_MAX_N = 20
SEPARATOR_TRIES = 12
EXCLUSION_MAX = 50_000  # candidate complements tried before walking cycles instead


class ContractViolation(ValueError):
    """An argument that must be a cycle of the graph is not one."""


@dataclass(frozen=True)
class CycleResult:
    order: int
    cycle: tuple[int, ...]  # vertex sequence; empty when order <= 2
    vertices: frozenset[int]


@dataclass(frozen=True)
class PathResult:
    order: int
    path: tuple[int, ...]


@dataclass(frozen=True)
class LongestCycles:
    order: int
    sets: tuple[frozenset[int], ...]
    exhausted: bool


@dataclass(frozen=True)
class CycleReport:
    cycle: tuple[int, ...]
    vertices: frozenset[int]
    c: int
    c_bar: int
    p_bar: int


def _lex_key(mask: int) -> tuple[int, ...]:
    return tuple(bits(mask))


def _use_dp(g: Graph, method: str) -> bool:
    if method == "auto":
        return g.n <= DP_MAX_N
    if method == "dp":
        if g.n > DP_MAX_N:
            raise ValueError(f"subset DP supports at most {DP_MAX_N} vertices")
        return True
    if method == "bnb":
        return False
    raise ValueError(f"unknown method {method!r}")


# -- subset DP tier -----------------------------------------------------------

@dataclass(frozen=True)
class _Tables:
    path_ends: np.ndarray
    cyc_ends: np.ndarray
    cyc_val: np.ndarray
    best_cyc: np.ndarray
    best_path: np.ndarray


@lru_cache(maxsize=8)
def _tables(g: Graph) -> _Tables:
    adj = np.array(g.adj, dtype=np.int64)
    return _Tables(*subset_tables(adj, g.n))


def _reversed_masks(masks: np.ndarray, n: int) -> np.ndarray:
    rev = np.zeros_like(masks)
    for i in range(n):
        rev |= ((masks >> i) & 1) << (n - 1 - i)
    return rev


def _sorted_lex(masks: np.ndarray, n: int) -> list[int]:
    """Order equal-size vertex sets by their sorted tuples (lexicographic)."""
    rev = _reversed_masks(masks, n)
    return [int(m) for m in masks[np.argsort(-rev, kind="stable")]]


def _trace(ends: np.ndarray, adj: tuple[int, ...], mask: int, last: int) -> list[int]:
    seq = [last]
    cur = mask
    while cur & (cur - 1):
        prev = cur ^ (1 << seq[-1])
        cand = int(ends[prev]) & adj[seq[-1]]
        v = (cand & -cand).bit_length() - 1
        seq.append(v)
        cur = prev
    seq.reverse()
    return seq


def _dp_cycle_sequence(g: Graph, mask: int) -> tuple[int, ...]:
    t = _tables(g)
    s = (mask & -mask).bit_length() - 1
    closing = int(t.cyc_ends[mask]) & g.adj[s]
    last = (closing & -closing).bit_length() - 1
    return tuple(_trace(t.cyc_ends, g.adj, mask, last))


# -- branch and bound tier ----------------------------------------------------

def _bnb_cycles(g: Graph, target: int | None = None, limit: int | None = None):
    """Search cycles of order >= 3 by branch and bound (see ``_kernels.bnb_cycles``).

    Pruning combines a degree-2 closure with reachability and a separator
    bound: a cycle through h vertices of a set H has at most h arcs outside
    H, one per component of the rest at best.

    With ``target`` None, return ``(order, sequence)`` of a longest cycle.
    Otherwise collect vertex sets of cycles of exactly ``target`` vertices,
    stopping after ``limit + 1`` distinct sets.
    """
    adj = np.array(g.adj, dtype=np.int64)
    lim = -1 if limit is None else limit
    if target is not None and math.comb(g.n, g.n - target) <= EXCLUSION_MAX:
        return _cycle_sets_by_exclusion(g, target, limit)
    best, seq, masks = bnb_cycles(adj, g.n, target or 0, lim, SEPARATOR_TRIES)
    if target is None:
        return int(best), tuple(int(v) for v in seq) if best >= 3 else ()
    return {int(m) for m in masks}


def _cycle_sets_by_exclusion(g: Graph, target: int, limit: int | None) -> set[int]:
    """Sets of ``target`` vertices spanning a cycle, found by testing each complement.

    Cheaper than walking every cycle when few vertices are left out, since a
    dense graph has far more cycle orderings than candidate sets.
    """
    found: set[int] = set()
    for out in combinations(range(g.n), g.n - target):
        keep = g.full_mask & ~mask_of(out)
        if any(popcount(g.adj[v] & keep) < 2 for v in bits(keep)):
            continue
        sub, _ = g.induced(keep)
        best, _, _ = bnb_cycles(np.array(sub.adj, dtype=np.int64), sub.n, 0, -1, SEPARATOR_TRIES)
        if best == target:
            found.add(keep)
            if limit is not None and len(found) > limit:
                break
    return found


def _bnb_path(g: Graph) -> tuple[int, tuple[int, ...]]:
    n = g.n
    best = [1, (0,)]

    def reach_count(end: int, free: int) -> int:
        reach = 0
        frontier = g.adj[end] & free
        while frontier:
            reach |= frontier
            grow = 0
            for v in bits(frontier):
                grow |= g.adj[v]
            frontier = grow & free & ~reach
        return popcount(reach)

    for s in range(n):
        path = [s]

        def dfs(end: int, visited: int) -> None:
            if len(path) > best[0]:
                best[0], best[1] = len(path), tuple(path)
            if best[0] == n:
                return
            free = g.full_mask & ~visited
            if len(path) + reach_count(end, free) <= best[0]:
                return
            for w in bits(g.adj[end] & free):
                path.append(w)
                dfs(w, visited | (1 << w))
                path.pop()
                if best[0] == n:
                    return

        dfs(s, 1 << s)
        if best[0] == n:
            break
    return best[0], best[1]


# -- public API ---------------------------------------------------------------

def _small_cycle(g: Graph) -> CycleResult | None:
    """Handle generalized orders 0, 1, 2 directly; None when order >= 3 is possible."""
    if g.n == 0:
        return CycleResult(0, (), frozenset())
    edges = g.edges()
    if not edges:
        return CycleResult(1, (), frozenset({0}))
    return None


def longest_cycle(g: Graph, method: str = "auto") -> CycleResult:
    """Longest generalized cycle of ``g`` with one witness.

    The DP tier returns the optimal vertex set whose sorted tuple is
    lexicographically smallest; the branch-and-bound tier returns the first
    optimum met in its deterministic search order.
    """
    small = _small_cycle(g)
    if small is not None:
        return small
    if _use_dp(g, method):
        t = _tables(g)
        c = int(t.best_cyc[g.full_mask])
        if c == 2:
            u, v = min(g.edges(), key=lambda e: (min(e), max(e)))
            return CycleResult(2, (), frozenset({u, v}))
        masks = np.flatnonzero(t.cyc_val == c).astype(np.int64)
        best = _sorted_lex(masks, g.n)[0]
        return CycleResult(c, _dp_cycle_sequence(g, best), frozenset(bits(best)))
    c, seq = _bnb_cycles(g)
    if c == 2 and not seq:
        u, v = min(g.edges(), key=lambda e: (min(e), max(e)))
        return CycleResult(2, (), frozenset({u, v}))
    return CycleResult(c, tuple(seq), frozenset(seq))


def longest_path(g: Graph, method: str = "auto") -> PathResult:
    """Longest path (vertex count) of ``g``; order 0 on the empty graph."""
    if g.n == 0:
        return PathResult(0, ())
    if _use_dp(g, method):
        t = _tables(g)
        p = int(t.best_path[g.full_mask])
        idx = np.arange(1 << g.n, dtype=np.int64)
        masks = idx[(t.path_ends != 0) & (np.bitwise_count(idx) == p)]
        best = _sorted_lex(masks, g.n)[0]
        ends = int(t.path_ends[best])
        last = (ends & -ends).bit_length() - 1
        return PathResult(p, tuple(_trace(t.path_ends, g.adj, best, last)))
    p, seq = _bnb_path(g)
    return PathResult(p, seq)


def iter_longest_cycles(g: Graph, method: str = "auto") -> Iterator[frozenset[int]]:
    """Yield every vertex set carrying a longest generalized cycle, in lexicographic order."""
    c = longest_cycle(g, method).order
    if c == 0:
        return
    if c == 1:
        for v in range(g.n):
            yield frozenset({v})
        return
    if c == 2:
        for u, v in sorted((min(e), max(e)) for e in g.edges()):
            yield frozenset({u, v})
        return
    if _use_dp(g, method):
        t = _tables(g)
        masks = np.flatnonzero(t.cyc_val == c).astype(np.int64)
        for m in _sorted_lex(masks, g.n):
            yield frozenset(bits(m))
        return
    for m in sorted(_bnb_cycles(g, target=c), key=_lex_key):
        yield frozenset(bits(m))


def all_longest_cycles(g: Graph, limit: int | None = None, method: str = "auto") -> LongestCycles:
    """Collect up to ``limit`` longest-cycle vertex sets; ``exhausted`` is False if more exist."""
    if limit is not None and limit < 1:
        raise ValueError("limit must be a positive integer")
    c = longest_cycle(g, method).order
    if c == g.n and c >= 3:
        return LongestCycles(c, (frozenset(range(g.n)),), True)
    if c >= 3 and not _use_dp(g, method):
        found = _bnb_cycles(g, target=c, limit=limit)
        ordered = sorted(found, key=_lex_key)
        exhausted = limit is None or len(ordered) <= limit
        sets = tuple(frozenset(bits(m)) for m in ordered[:limit])
        return LongestCycles(c, sets, exhausted)
    sets = []
    exhausted = True
    for s in iter_longest_cycles(g, method):
        if limit is not None and len(sets) == limit:
            exhausted = False
            break
        sets.append(s)
    return LongestCycles(c, tuple(sets), exhausted)


def is_cycle_set(g: Graph, vertices: Iterable[int]) -> bool:
    """True when the vertex set spans a generalized cycle of ``g``."""
    vs = set(vertices)
    if not vs or any(not 0 <= v < g.n for v in vs):
        return False
    mask = mask_of(vs)
    k = len(vs)
    if k == 1:
        return True
    if k == 2:
        u, v = vs
        return g.has_edge(u, v)
    if g.n <= DP_MAX_N:
        return int(_tables(g).cyc_val[mask]) == k
    sub, _ = g.induced(mask)
    return longest_cycle(sub).order == k


def _require_cycle(g: Graph, q: Iterable[int]) -> int:
    vs = list(q)
    if not is_cycle_set(g, vs):
        raise ContractViolation(f"vertex set {sorted(set(vs))} is not a cycle of the graph")
    return mask_of(vs)


def remainder_params(g: Graph, cycle: Iterable[int]) -> tuple[int, int]:
    """Generalized orders ``(c_bar, p_bar)`` of a longest cycle and path in ``G - cycle``."""
    mask = _require_cycle(g, cycle)
    rest = g.full_mask & ~mask
    if g.n <= DP_MAX_N:
        t = _tables(g)
        return int(t.best_cyc[rest]), int(t.best_path[rest])
    sub, _ = g.induced(rest)
    return longest_cycle(sub).order, longest_path(sub).order


def cycle_reports(g: Graph, limit: int | None = None) -> tuple[list[CycleReport], bool]:
    """One report per longest-cycle vertex set, plus the exhausted flag."""
    found = all_longest_cycles(g, limit)
    reports = []
    for vs in found.sets:
        c_bar, p_bar = remainder_params(g, vs)
        if found.order >= 3:
            if g.n <= DP_MAX_N:
                seq = _dp_cycle_sequence(g, mask_of(vs))
            else:
                sub, labels = g.induced(sorted(vs))
                seq = tuple(labels[v] for v in longest_cycle(sub).cycle)
        else:
            seq = ()
        reports.append(CycleReport(seq, vs, found.order, c_bar, p_bar))
    return reports, found.exhausted


def is_D_lambda(g: Graph, q: Iterable[int], lam: int) -> bool:
    """Every component of ``G - q`` has at most ``lam - 1`` vertices."""
    if lam < 1:
        raise ValueError("lambda must be a positive integer")
    mask = _require_cycle(g, q)
    return all(popcount(comp) <= lam - 1 for comp in g.components(g.full_mask & ~mask))


def is_PD_lambda(g: Graph, q: Iterable[int], lam: int) -> bool:
    """``q`` meets every path of order at least ``lam``."""
    if lam < 1:
        raise ValueError("lambda must be a positive integer")
    return remainder_params(g, q)[1] <= lam - 1


def is_CD_lambda(g: Graph, q: Iterable[int], lam: int) -> bool:
    """``q`` meets every (generalized) cycle of order at least ``lam``."""
    if lam < 1:
        raise ValueError("lambda must be a positive integer")
    return remainder_params(g, q)[0] <= lam - 1
