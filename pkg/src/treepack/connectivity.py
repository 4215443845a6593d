"""Edge cuts and the connectivity hierarchy.

All edge cuts are bipartition cuts ``E(A, V - A)``.  A cut is *r-essential*
when each side still holds a component with at least ``r`` edges once the
crossing edges are removed; ``r = 1`` is ordinary essential edge
connectivity.  When a graph has no cut of some class the functions return
``None`` and threshold checks treat that as vacuously satisfied.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional

from . import kernels
from .multigraph import GraphInputError, MultiGraph, components, delete_vertices, is_connected

ORACLE_BOUND = 14


class OracleBoundExceeded(GraphInputError):
    """An exhaustive oracle was asked for a graph above its size bound."""


@dataclass(frozen=True)
class Cut:
    side_a: frozenset[int]
    side_b: frozenset[int]
    crossing: tuple[int, ...]
    value: int

    def check(self, G: MultiGraph) -> None:
        """Raise ``AssertionError`` unless the cut is consistent with ``G``."""
        assert self.side_a and self.side_b, "empty side"
        assert not self.side_a & self.side_b, "sides overlap"
        assert self.side_a | self.side_b == frozenset(range(G.n)), "sides do not cover V"
        expected = tuple(i for i, (u, v) in enumerate(G.edges)
                         if (u in self.side_a) != (v in self.side_a))
        assert self.crossing == expected, "crossing set mismatch"
        assert self.value == len(self.crossing), "value != |crossing|"


@dataclass(frozen=True)
class ConnectivityProfile:
    lam: int
    essential_lambda: Optional[int]
    two_essential_lambda: Optional[int]
    kappa: int
    essential_kappa: Optional[int]

    def as_dict(self) -> dict:
        return {
            "lambda": self.lam,
            "essential_lambda": self.essential_lambda,
            "two_essential_lambda": self.two_essential_lambda,
            "kappa": self.kappa,
            "essential_kappa": self.essential_kappa,
        }


def make_cut(G: MultiGraph, side_a: Iterable[int]) -> Cut:
    a = frozenset(side_a)
    b = frozenset(range(G.n)) - a
    crossing = tuple(i for i, (u, v) in enumerate(G.edges) if (u in a) != (v in a))
    return Cut(a, b, crossing, len(crossing))


def _mask(S: Iterable[int]) -> int:
    out = 0
    for x in S:
        out |= 1 << x
    return out


def _members(mask: int) -> list[int]:
    out, x = [], 0
    while mask:
        if mask & 1:
            out.append(x)
        mask >>= 1
        x += 1
    return out


def _normalised(G: MultiGraph, side_mask: int) -> int:
    # the side holding vertex 0 is side A
    if side_mask & 1:
        return side_mask
    return ((1 << G.n) - 1) ^ side_mask


def _better(value: int, mask: int, best: Optional[tuple[int, int]]) -> bool:
    if best is None:
        return True
    return value < best[0] or (value == best[0] and kernels.lex_less(mask, best[1]))


def _terminal_flow(G: MultiGraph, sources: Iterable[int], sinks: Iterable[int]) -> tuple[int, int]:
    labels = [0] * G.n
    for x in sources:
        labels[x] = 1
    for x in sinks:
        labels[x] = 2
    value, side = kernels.max_flow(G.n, G.us, G.vs, labels)
    return value, _mask(i for i, flag in enumerate(side) if flag)


def st_min_edge_cut(G: MultiGraph, s: int, t: int) -> Cut:
    """Minimum cut separating ``s`` (side A) from ``t``; parallel edges are unit capacities."""
    if s == t:
        raise GraphInputError("s and t must differ")
    if not (0 <= s < G.n and 0 <= t < G.n):
        raise GraphInputError(f"terminal out of range 0..{G.n - 1}")
    value, side = _terminal_flow(G, [s], [t])
    cut = make_cut(G, _members(side))
    assert cut.value == value, "max-flow value disagrees with cut size"
    return cut


def global_min_edge_cut(G: MultiGraph) -> Cut:
    """A minimum edge cut of ``G``; disconnected graphs yield value 0."""
    if G.n < 2:
        raise GraphInputError("global min cut needs at least 2 vertices")
    if not is_connected(G):
        return make_cut(G, components(G)[0][0])
    best = None
    for t in range(1, G.n):
        value, side = _terminal_flow(G, [0], [t])
        if _better(value, side, best):
            best = (value, side)
    cut = make_cut(G, _members(best[1]))
    assert cut.value == best[0]
    return cut


def edge_connectivity(G: MultiGraph) -> int:
    if G.n < 2:
        return 0
    return global_min_edge_cut(G).value


def seed_vertex_sets(G: MultiGraph, r: int) -> list[frozenset[int]]:
    """Vertex sets of connected ``r``-edge subgraphs, keeping only inclusion-minimal ones.

    ``S`` carries a connected subgraph with exactly ``r`` edges iff ``G[S]``
    is connected, ``|S| <= r + 1`` and ``e(G[S]) >= r``.
    """
    adj = [set() for _ in range(G.n)]
    for u, v in G.edges:
        adj[u].add(v)
        adj[v].add(u)
    found: set[frozenset[int]] = set()
    frontier = {frozenset(p) for p in G.pair_counts}
    size = 2
    while frontier and size <= r + 1:
        for S in frontier:
            if _inside(G, S) >= r:
                found.add(S)
        grown = set()
        for S in frontier:
            if S in found:
                continue
            for x in S:
                for y in adj[x]:
                    if y not in S:
                        grown.add(S | {y})
        frontier = grown
        size += 1
    minimal = [S for S in found if not any(T < S for T in found)]
    return sorted(minimal, key=lambda S: (len(S), sorted(S)))


def _inside(G: MultiGraph, S: frozenset[int]) -> int:
    return sum(c for (u, v), c in G.pair_counts.items() if u in S and v in S)


def r_essential_edge_connectivity(G: MultiGraph, r: int) -> Optional[Cut]:
    """Minimum r-essential edge cut, or ``None`` when the graph has none.

    Every pair of vertex-disjoint seeds (connected ``r``-edge subgraphs) is
    collapsed to a source and a sink and separated by a max flow; the
    cheapest such cut is the answer.
    """
    if r < 1:
        raise GraphInputError(f"r must be >= 1, got {r}")
    seeds = seed_vertex_sets(G, r)
    best = None
    for S, T in combinations(seeds, 2):
        if S & T:
            continue
        value, side = _terminal_flow(G, S, T)
        side = _normalised(G, side)
        if _better(value, side, best):
            best = (value, side)
    if best is None:
        return None
    cut = make_cut(G, _members(best[1]))
    assert cut.value == best[0]
    return cut


def essential_edge_connectivity(G: MultiGraph) -> Optional[Cut]:
    return r_essential_edge_connectivity(G, 1)


def r_essential_brute_oracle(G: MultiGraph, r: int, bound: int = ORACLE_BOUND) -> Optional[Cut]:
    """Exhaustive minimum over all bipartitions; ground truth for small graphs."""
    if r < 1:
        raise GraphInputError(f"r must be >= 1, got {r}")
    if G.n > bound:
        raise OracleBoundExceeded(f"oracle bound exceeded: n={G.n} > {bound}")
    value, mask = kernels.bipartition_scan(G.n, G.us, G.vs, r)
    if value < 0:
        return None
    return make_cut(G, _members(mask))


def cut_leaves_r_components(G: MultiGraph, cut: Cut, r: int) -> bool:
    """Replay: after deleting the crossing edges, each side has a component with >= r edges."""
    for side in (cut.side_a, cut.side_b):
        H = delete_vertices(G, set(range(G.n)) - side).graph
        if not any(count >= r for _, count in components(H)):
            return False
    return True


def _disconnects(G: MultiGraph, X: tuple[int, ...]) -> list[tuple[frozenset[int], int]]:
    return components(delete_vertices(G, X).graph)


def vertex_connectivity(G: MultiGraph) -> int:
    """Smallest vertex cut; complete underlying graphs get ``n - 1``.

    Subset search, exponential in ``n``: meant for desk-scale graphs.
    """
    if G.n <= 1:
        return 0
    if not is_connected(G):
        return 0
    if len(G.pair_counts) == G.n * (G.n - 1) // 2:
        return G.n - 1
    for size in range(1, G.n - 1):
        for X in combinations(range(G.n), size):
            if len(_disconnects(G, X)) >= 2:
                return size
    return G.n - 1


def essential_vertex_connectivity(G: MultiGraph) -> Optional[int]:
    """Smallest ``|X|`` such that ``G - X`` has two components that each contain an edge.

    Subset search, exponential in ``n``.
    """
    for size in range(0, G.n - 3):
        for X in combinations(range(G.n), size):
            comps = _disconnects(G, X)
            if sum(1 for _, count in comps if count >= 1) >= 2:
                return size
    return None


def connectivity_profile(G: MultiGraph) -> ConnectivityProfile:
    ess = essential_edge_connectivity(G)
    two = r_essential_edge_connectivity(G, 2)
    return ConnectivityProfile(
        lam=edge_connectivity(G),
        essential_lambda=None if ess is None else ess.value,
        two_essential_lambda=None if two is None else two.value,
        kappa=vertex_connectivity(G),
        essential_kappa=essential_vertex_connectivity(G),
    )


def meets(value: Optional[int], threshold) -> bool:
    """Threshold test where an absent cut class satisfies every threshold."""
    return value is None or value >= threshold


def is_hypothesis(G: MultiGraph, m: int, h_ess, h_2ess) -> tuple[bool, bool, bool]:
    """``(lambda >= m, essential lambda >= h_ess, 2-essential lambda >= h_2ess)``."""
    ess = essential_edge_connectivity(G)
    two = r_essential_edge_connectivity(G, 2)
    return (
        edge_connectivity(G) >= m,
        meets(None if ess is None else ess.value, h_ess),
        meets(None if two is None else two.value, h_2ess),
    )
