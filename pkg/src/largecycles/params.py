"""Exact scalar parameters: minimum degree, connectivity, independence, sigma_k."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from .graph import INFINITY, EmptyGraphError, Graph, bits, popcount


def min_degree(g: Graph) -> int:
    if g.n == 0:
        raise EmptyGraphError("minimum degree is undefined on empty graph")
    return min(g.degrees())


def _local_connectivity(g: Graph, s: int, t: int, cutoff: int) -> int:
    """Maximum number of internally disjoint s-t paths (s, t non-adjacent), capped at ``cutoff``.

    Unit vertex capacities are modelled by splitting each vertex v into
    ``2v`` (in) and ``2v+1`` (out).
    """
    residual: dict[int, dict[int, int]] = {}

    def arc(a: int, b: int, cap: int) -> None:
        residual.setdefault(a, {})[b] = residual.get(a, {}).get(b, 0) + cap
        residual.setdefault(b, {}).setdefault(a, 0)

    big = g.n + 1
    for v in range(g.n):
        arc(2 * v, 2 * v + 1, big if v in (s, t) else 1)
        for u in bits(g.adj[v]):
            arc(2 * v + 1, 2 * u, big)

    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while flow < cutoff:
        parent = {source: source}
        queue = deque([source])
        while queue and sink not in parent:
            a = queue.popleft()
            for b, cap in residual[a].items():
                if cap > 0 and b not in parent:
                    parent[b] = a
                    queue.append(b)
        if sink not in parent:
            break
        b = sink
        while b != source:
            a = parent[b]
            residual[a][b] -= 1
            residual[b][a] += 1
            b = a
        flow += 1
    return flow


def vertex_connectivity(g: Graph) -> int:
    """Minimum number of vertices whose removal disconnects ``g`` (``n-1`` for K_n).

    Uses the Esfahanian-Hakimi reduction: with ``v`` of minimum degree, some
    minimum separator either misses ``v`` (then it separates ``v`` from a
    non-neighbour) or contains it (then it separates two neighbours of ``v``).
    """
    n = g.n
    if n <= 1 or not g.is_connected():
        return 0
    degs = g.degrees()
    if min(degs) == n - 1:
        return n - 1
    v = degs.index(min(degs))
    best = n - 1
    if popcount(g.adj[v]) + 1 < n:
        best = degs[v]
    others = g.full_mask & ~g.adj[v] & ~(1 << v)
    for w in bits(others):
        best = min(best, _local_connectivity(g, v, w, best))
    nbrs = list(bits(g.adj[v]))
    for i, x in enumerate(nbrs):
        for y in nbrs[i + 1:]:
            if not g.has_edge(x, y):
                best = min(best, _local_connectivity(g, x, y, best))
    return best


def independence_number(g: Graph) -> int:
    adj = g.adj

    @lru_cache(maxsize=None)
    def alpha(p: int) -> int:
        if not p:
            return 0
        pick, pick_deg = -1, -1
        for v in bits(p):
            d = popcount(adj[v] & p)
            if d <= 1:
                # a vertex of degree <= 1 belongs to some maximum independent set
                return 1 + alpha(p & ~adj[v] & ~(1 << v))
            if d > pick_deg:
                pick, pick_deg = v, d
        return max(alpha(p & ~(1 << pick)), 1 + alpha(p & ~adj[pick] & ~(1 << pick)))

    return alpha(g.full_mask)


def sigma_k(g: Graph, k: int) -> float | int:
    """Minimum degree sum over independent k-sets; :data:`INFINITY` if none exists."""
    if k < 1:
        raise ValueError("k must be a positive integer")
    if k > g.n:
        return INFINITY
    degs = g.degrees()
    order = sorted(range(g.n), key=lambda v: (degs[v], v))
    best = [INFINITY]

    def search(i: int, blocked: int, size: int, total: int) -> None:
        if size == k:
            best[0] = min(best[0], total)
            return
        need = k - size
        bound = total
        taken = 0
        for j in range(i, len(order)):
            if not blocked >> order[j] & 1:
                bound += degs[order[j]]
                taken += 1
                if taken == need:
                    break
        if taken < need or bound >= best[0]:
            return
        for j in range(i, len(order)):
            v = order[j]
            if blocked >> v & 1:
                continue
            search(j + 1, blocked | g.adj[v] | (1 << v), size + 1, total + degs[v])

    search(0, 0, 0, 0)
    return best[0]


@dataclass(frozen=True)
class GraphParams:
    n: int
    delta: int
    kappa: int
    alpha: int
    sigma: tuple[int, ...]  # sigma[k-1] = sigma_k for k = 1..alpha

    def sigma_at(self, k: int) -> float | int:
        if k < 1:
            raise ValueError("k must be a positive integer")
        return self.sigma[k - 1] if k <= self.alpha else INFINITY


def graph_params(g: Graph) -> GraphParams:
    delta = min_degree(g)
    alpha = independence_number(g)
    sigma = tuple(int(sigma_k(g, k)) for k in range(1, alpha + 1))
    return GraphParams(g.n, delta, vertex_connectivity(g), alpha, sigma)
