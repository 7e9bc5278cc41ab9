from itertools import combinations

from hypothesis import HealthCheck, settings, strategies as st

from largecycles.graph import Graph

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def graphs(draw, min_n=0, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, keep in zip(pairs, chosen) if keep])


@st.composite
def connected_graphs(draw, min_n=1, max_n=8):
    g = draw(graphs(min_n, max_n))
    # chain the components so the result is connected
    comps = g.components()
    edges = list(g.edges())
    for a, b in zip(comps, comps[1:]):
        edges.append(((a & -a).bit_length() - 1, (b & -b).bit_length() - 1))
    return Graph.from_edges(g.n, edges)
