"""Loop-free multigraphs with individually numbered parallel edges.

A :class:`MultiGraph` is immutable.  Edge ``i`` is ``edges[i]``; ids are the
positions ``0..m-1``.  Operations that derive a new graph (contraction,
deletion, induced subgraphs) return a :class:`Derived` record carrying the
new graph, the vertex map and, for every surviving edge, its id in the
source graph.
"""
from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence


class GraphInputError(ValueError):
    """Raised for malformed graphs or arguments outside an operation's domain."""


@dataclass(frozen=True)
class MultiGraph:
    n: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise GraphInputError(f"vertex count must be nonnegative, got {self.n}")
        for i, (u, v) in enumerate(self.edges):
            if u == v:
                raise GraphInputError(f"edge {i}: loops forbidden ({u}, {v})")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphInputError(f"edge {i}: endpoint out of range 0..{self.n - 1}: ({u}, {v})")

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def us(self) -> list[int]:
        return [u for u, _ in self.edges]

    @cached_property
    def vs(self) -> list[int]:
        return [v for _, v in self.edges]

    @cached_property
    def incidence(self) -> tuple[tuple[int, ...], ...]:
        """Edge ids incident to each vertex, ascending."""
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for i, (u, v) in enumerate(self.edges):
            inc[u].append(i)
            inc[v].append(i)
        return tuple(tuple(x) for x in inc)

    @cached_property
    def pair_counts(self) -> Counter:
        """Multiplicity of every adjacent unordered pair ``(min, max)``."""
        return Counter((min(u, v), max(u, v)) for u, v in self.edges)

    def other_end(self, e: int, x: int) -> int:
        u, v = self.edges[e]
        return v if u == x else u

    def mult(self, u: int, v: int) -> int:
        return self.pair_counts.get((min(u, v), max(u, v)), 0)

    def __repr__(self) -> str:
        return f"MultiGraph(n={self.n}, edges={list(self.edges)})"


class Derived(NamedTuple):
    graph: MultiGraph
    vertex_map: dict[int, int]   # source vertex -> new vertex (absent if deleted)
    edge_origin: tuple[int, ...]  # new edge id -> source edge id


class ExceptionForm(enum.Enum):
    K5 = "K5"
    FAT_TRIANGLE = "FatTriangle"
    NONE = "None"


def build_graph(n: int, endpoints: Iterable[Sequence[int]]) -> MultiGraph:
    """Build a multigraph; edge ids follow the order of ``endpoints``."""
    pairs = []
    for i, pair in enumerate(endpoints):
        try:
            u, v = pair
            pairs.append((int(u), int(v)))
        except (TypeError, ValueError):
            raise GraphInputError(f"edge {i}: expected a vertex pair, got {pair!r}") from None
    return MultiGraph(n, tuple(pairs))


def _check_vertices(G: MultiGraph, S: Iterable[int]) -> set[int]:
    S = set(S)
    bad = [x for x in S if not 0 <= x < G.n]
    if bad:
        raise GraphInputError(f"vertices out of range: {sorted(bad)}")
    return S


def _check_edges(G: MultiGraph, X: Iterable[int]) -> set[int]:
    X = set(X)
    bad = [e for e in X if not 0 <= e < G.m]
    if bad:
        raise GraphInputError(f"unknown edge ids: {sorted(bad)}")
    return X


def degrees(G: MultiGraph) -> list[int]:
    return [len(inc) for inc in G.incidence]


def degree_profile(G: MultiGraph) -> tuple[list[int], int, int]:
    """Return ``(degrees, min degree, max degree)``; parallel edges count separately."""
    d = degrees(G)
    if not d:
        return d, 0, 0
    return d, min(d), max(d)


def edge_count_between(G: MultiGraph, X: Iterable[int], Y: Iterable[int]) -> int:
    X, Y = _check_vertices(G, X), _check_vertices(G, Y)
    if X & Y:
        raise GraphInputError(f"vertex sets overlap on {sorted(X & Y)}")
    return sum(1 for u, v in G.edges if (u in X and v in Y) or (u in Y and v in X))


def crossing_edges(G: MultiGraph, side: Iterable[int]) -> list[int]:
    """Edge ids with exactly one end in ``side``."""
    side = set(side)
    return [i for i, (u, v) in enumerate(G.edges) if (u in side) != (v in side)]


def multiplicity(G: MultiGraph) -> int:
    """Largest number of parallel edges on a vertex pair (0 when edgeless)."""
    return max(G.pair_counts.values(), default=0)


def _relabel(n: int, root_of: list[int]) -> dict[int, int]:
    # dense, ordered by the smallest original vertex in each class
    order: dict[int, int] = {}
    vmap = {}
    for x in range(n):
        r = root_of[x]
        if r not in order:
            order[r] = len(order)
        vmap[x] = order[r]
    return vmap


def contract(G: MultiGraph, X: Iterable[int]) -> Derived:
    """Identify the ends of every edge in ``X`` and delete the loops that result.

    Disconnected edge sets are contracted componentwise.  Parallel edges
    survive as distinct edges; ``edge_origin`` maps each new id to its id in
    ``G``.
    """
    X = _check_edges(G, X)
    parent = list(range(G.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in sorted(X):
        u, v = G.edges[e]
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)
    vmap = _relabel(G.n, [find(x) for x in range(G.n)])
    new_edges, origin = [], []
    for i, (u, v) in enumerate(G.edges):
        a, b = vmap[u], vmap[v]
        if a != b:
            new_edges.append((a, b))
            origin.append(i)
    n_new = len(set(vmap.values()))
    return Derived(MultiGraph(n_new, tuple(new_edges)), vmap, tuple(origin))


def contract_vertices(G: MultiGraph, S: Iterable[int]) -> Derived:
    """Merge the vertex set ``S`` into one vertex, deleting edges inside ``S``."""
    S = _check_vertices(G, S)
    inside = [i for i, (u, v) in enumerate(G.edges) if u in S and v in S]
    if len(S) <= 1:
        return contract(G, ())
    # edges inside S might not connect it; identify S explicitly
    anchor = min(S)
    root = [anchor if x in S else x for x in range(G.n)]
    vmap = _relabel(G.n, root)
    new_edges, origin = [], []
    inside_set = set(inside)
    for i, (u, v) in enumerate(G.edges):
        if i in inside_set:
            continue
        new_edges.append((vmap[u], vmap[v]))
        origin.append(i)
    return Derived(MultiGraph(G.n - len(S) + 1, tuple(new_edges)), vmap, tuple(origin))


def delete_vertices(G: MultiGraph, S: Iterable[int]) -> Derived:
    S = _check_vertices(G, S)
    keep = [x for x in range(G.n) if x not in S]
    vmap = {x: i for i, x in enumerate(keep)}
    new_edges, origin = [], []
    for i, (u, v) in enumerate(G.edges):
        if u in vmap and v in vmap:
            new_edges.append((vmap[u], vmap[v]))
            origin.append(i)
    return Derived(MultiGraph(len(keep), tuple(new_edges)), vmap, tuple(origin))


def delete_edges(G: MultiGraph, X: Iterable[int]) -> Derived:
    X = _check_edges(G, X)
    kept = [i for i in range(G.m) if i not in X]
    return Derived(
        MultiGraph(G.n, tuple(G.edges[i] for i in kept)),
        {x: x for x in range(G.n)},
        tuple(kept),
    )


def induced_subgraph(G: MultiGraph, S: Iterable[int]) -> Derived:
    """The subgraph on ``S`` with every edge of ``G`` inside it."""
    S = _check_vertices(G, S)
    return delete_vertices(G, set(range(G.n)) - S)


def components(G: MultiGraph) -> list[tuple[frozenset[int], int]]:
    """Connected components as ``(vertex set, edge count)``, ordered by smallest vertex."""
    parent = list(range(G.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in G.edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)
    verts: dict[int, set[int]] = {}
    counts: Counter = Counter()
    for x in range(G.n):
        verts.setdefault(find(x), set()).add(x)
    for u, _ in G.edges:
        counts[find(u)] += 1
    return [(frozenset(verts[r]), counts[r]) for r in sorted(verts)]


def is_connected(G: MultiGraph) -> bool:
    return G.n <= 1 or len(components(G)) == 1


def classify_exception(G: MultiGraph, k: int) -> ExceptionForm:
    """Recognise the two excluded shapes: K5, and fat-triangles with multiplicity <= k-1."""
    if k < 2:
        raise GraphInputError(f"k must be >= 2, got {k}")
    if G.n == 5 and G.m == 10 and multiplicity(G) == 1 and all(d == 4 for d in degrees(G)):
        return ExceptionForm.K5
    if G.n == 3 and set(G.pair_counts) == {(0, 1), (0, 2), (1, 2)} and multiplicity(G) <= k - 1:
        return ExceptionForm.FAT_TRIANGLE
    return ExceptionForm.NONE


# Named graphs used across tests, examples and the CLI.

def complete_graph(n: int) -> MultiGraph:
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def cycle_graph(n: int) -> MultiGraph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> MultiGraph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def fat_triangle(mult: int) -> MultiGraph:
    """Triangle with every side repeated ``mult`` times (ids grouped by side: ab, bc, ca)."""
    return build_graph(3, [(0, 1)] * mult + [(1, 2)] * mult + [(2, 0)] * mult)


def complete_bipartite(a: int, b: int) -> MultiGraph:
    return build_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def disjoint_union(*graphs: MultiGraph) -> MultiGraph:
    edges, offset = [], 0
    for H in graphs:
        edges.extend((u + offset, v + offset) for u, v in H.edges)
        offset += H.n
    return MultiGraph(offset, tuple(edges))
