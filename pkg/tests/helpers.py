"""Shared graphs and hypothesis strategies for the tests."""
from hypothesis import strategies as st

from treepack.multigraph import build_graph, is_connected


@st.composite
def multigraphs(draw, n_min=2, n_max=7, max_edges=16, mult_max=3, connected=False):
    n = draw(st.integers(n_min, n_max))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    counts = draw(st.lists(st.integers(0, mult_max), min_size=len(pairs), max_size=len(pairs)))
    edges = [p for p, c in zip(pairs, counts) for _ in range(c)][:max_edges]
    edges = draw(st.permutations(edges)) if edges else edges
    G = build_graph(n, edges)
    if connected:
        from hypothesis import assume
        assume(is_connected(G))
    return G


def two_doubled_triangles_bridged():
    """Doubled triangles on {0,1,2} and {3,4,5}; edges 12 and 13 join 2 to 3."""
    edges = []
    for a, b, c in ((0, 1, 2), (3, 4, 5)):
        for u, v in ((a, b), (b, c), (c, a)):
            edges += [(u, v), (u, v)]
    return build_graph(6, edges + [(2, 3), (2, 3)])
