"""numba kernels: the subset dynamic programme and the branch-and-bound cycle search."""

from __future__ import annotations

import numpy as np
from numba import njit, types
from numba.typed import Dict


@njit(cache=True)
def subset_tables(adj, n):
    """Fill the per-subset tables used by the exact cycle/path solver.

    path_ends[S]  bitmask of v such that G[S] has a Hamilton path ending at v
    cyc_ends[S]   same, restricted to paths starting at min(S) and visiting
                  only vertices above it
    cyc_val[S]    generalized cycle order carried by S (|S| if G[S] has a
                  spanning generalized cycle, else 0)
    best_cyc[S]   max generalized cycle order over subsets of S
    best_path[S]  max path order over subsets of S
    """
    size = 1 << n
    path_ends = np.zeros(size, np.int64)
    cyc_ends = np.zeros(size, np.int64)
    pc = np.zeros(size, np.int8)
    for v in range(n):
        path_ends[1 << v] = 1 << v
        cyc_ends[1 << v] = 1 << v
    for mask in range(1, size):
        pc[mask] = pc[mask >> 1] + (mask & 1)
        e = path_ends[mask]
        if e != 0:
            reach = 0
            for v in range(n):
                if (e >> v) & 1:
                    reach |= adj[v]
            reach &= ~mask
            while reach != 0:
                low = reach & -reach
                path_ends[mask | low] |= low
                reach ^= low
        e = cyc_ends[mask]
        if e != 0:
            s_low = mask & -mask
            reach = 0
            for v in range(n):
                if (e >> v) & 1:
                    reach |= adj[v]
            reach &= ~mask
            reach &= ~((s_low << 1) - 1)
            while reach != 0:
                low = reach & -reach
                cyc_ends[mask | low] |= low
                reach ^= low

    cyc_val = np.zeros(size, np.int8)
    best_cyc = np.zeros(size, np.int8)
    best_path = np.zeros(size, np.int8)
    for mask in range(1, size):
        k = pc[mask]
        if path_ends[mask] != 0:
            best_path[mask] = k
        if k <= 2:
            if path_ends[mask] != 0:
                cyc_val[mask] = k
        else:
            s = 0
            while not (mask >> s) & 1:
                s += 1
            if cyc_ends[mask] & adj[s]:
                cyc_val[mask] = k
        best_cyc[mask] = cyc_val[mask]
    for i in range(n):
        bit = 1 << i
        for mask in range(size):
            if mask & bit:
                if best_cyc[mask ^ bit] > best_cyc[mask]:
                    best_cyc[mask] = best_cyc[mask ^ bit]
                if best_path[mask ^ bit] > best_path[mask]:
                    best_path[mask] = best_path[mask ^ bit]
    return path_ends, cyc_ends, cyc_val, best_cyc, best_path


# -- branch and bound for graphs beyond the subset tables ----------------------

@njit(cache=True)
def _popcount(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


@njit(cache=True)
def _closure(adj, n, free, end, start):
    """Free vertices that can still lie on a path from end back to start."""
    ends = (1 << end) | (1 << start)
    changed = True
    while changed:
        changed = False
        for v in range(n):
            if (free >> v) & 1 and _popcount(adj[v] & (free | ends)) < 2:
                free &= ~(1 << v)
                changed = True
    reach = 0
    frontier = adj[end] & free
    while frontier:
        reach |= frontier
        grow = 0
        for v in range(n):
            if (frontier >> v) & 1:
                grow |= adj[v]
        frontier = grow & free & ~reach
    if not (reach & adj[start]):
        return 0
    return _popcount(reach)


@njit(cache=True)
def _separator(adj, n, region, must, tries):
    """Upper bound on a cycle inside ``region`` through every vertex of ``must``.

    A cycle meeting h vertices of H splits into at most h arcs, each inside
    one component of region - H, and every component holding a ``must``
    vertex needs an arc.  H ranges over the top-degree prefixes.
    """
    verts = np.empty(n, np.int64)
    degs = np.empty(n, np.int64)
    m = 0
    for v in range(n):
        if (region >> v) & 1:
            verts[m] = v
            degs[m] = -_popcount(adj[v] & region)
            m += 1
    order = np.argsort(degs[:m], kind="mergesort")
    best = m
    hub = 0
    sizes = np.empty(n, np.int64)
    for k in range(1, min(tries, m) + 1):
        hub |= 1 << verts[order[k - 1]]
        left = region & ~hub
        c = 0
        forced = 0
        forced_total = 0
        while left:
            comp = left & -left
            frontier = comp
            while frontier:
                grow = 0
                for v in range(n):
                    if (frontier >> v) & 1:
                        grow |= adj[v]
                frontier = grow & left & ~comp
                comp |= frontier
            if comp & must:
                forced += 1
                forced_total += _popcount(comp)
            else:
                sizes[c] = -_popcount(comp)
                c += 1
            left &= ~comp
        if forced > k:
            return 0
        top = np.sort(sizes[:c])
        total = k + forced_total
        for i in range(min(k - forced, c)):
            total -= top[i]
        if total < best:
            best = total
    return best


@njit(cache=True)
def _enter(adj, n, s, above, path, depth, visited, target, tries, seen, found, best, best_seq):
    end = path[depth]
    k = depth + 1
    if k >= 3 and (adj[end] >> s) & 1 and path[1] < end:
        if target == 0:
            if k > best[0]:
                best[0] = k
                best_seq[:k] = path[:k]
        elif k == target:
            found[visited] = True
    if target > 0 and k >= target:
        return 0
    # completions depend only on (second vertex, end, visited)
    p1 = path[1] if k > 1 else n
    key = (visited << 12) | (p1 << 6) | end
    if key in seen:
        return 0
    seen[key] = True
    floor = target - 1 if target > 0 else best[0]
    free = above & ~visited
    if k + _closure(adj, n, free, end, s) <= floor:
        return 0
    if k > 2 and _separator(adj, n, visited | free, visited, tries) <= floor:
        return 0
    return adj[end] & free


@njit(cache=True)
def bnb_cycles(adj, n, target, limit, tries):
    """Depth-first search over cycles through their smallest vertex.

    target == 0: returns the longest order found (at least 2) and a sequence.
    target > 0: collects vertex masks of cycles of exactly that order,
    stopping once more than ``limit`` are known (limit < 0: no limit).
    """
    full = (1 << n) - 1
    best = np.full(1, 2, np.int64)
    best_seq = np.zeros(n, np.int64)
    found = Dict.empty(key_type=types.int64, value_type=types.boolean)
    path = np.zeros(n + 1, np.int64)
    cand = np.zeros(n + 1, np.int64)
    for s in range(n):
        if target > 0:
            if limit >= 0 and len(found) > limit:
                break
        elif best[0] == n:
            break
        floor = target - 1 if target > 0 else best[0]
        above = full & ~((1 << (s + 1)) - 1)
        if 1 + _closure(adj, n, above, s, s) <= floor:
            continue
        if _separator(adj, n, above | (1 << s), 1 << s, tries) <= floor:
            continue
        seen = Dict.empty(key_type=types.int64, value_type=types.boolean)
        depth = 0
        path[0] = s
        visited = 1 << s
        cand[0] = _enter(adj, n, s, above, path, 0, visited, target, tries, seen, found, best, best_seq)
        while depth >= 0:
            if target > 0:
                if limit >= 0 and len(found) > limit:
                    break
            elif best[0] == n:
                break
            c = cand[depth]
            if c == 0:
                visited &= ~(1 << path[depth])
                depth -= 1
                continue
            low = c & -c
            cand[depth] = c ^ low
            w = 0
            while not (low >> w) & 1:
                w += 1
            depth += 1
            path[depth] = w
            visited |= low
            cand[depth] = _enter(adj, n, s, above, path, depth, visited, target, tries, seen, found,
                                 best, best_seq)
    masks = np.empty(len(found), np.int64)
    i = 0
    for key in found:
        masks[i] = key
        i += 1
    return best[0], best_seq[:best[0]].copy(), masks
