"""Line graphs, cores, trails and Hamilton-connectedness.

Trail vocabulary: for a trail with vertex sequence ``v0 .. vL`` the
*internal* vertices are ``v1 .. v(L-1)``.  A trail is dominating when every
edge has an end among its internal vertices, and spanning when it is
dominating and visits every vertex.  An ``(e1, e2)``-trail starts with edge
``e1`` and ends with edge ``e2``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import kernels
from .connectivity import edge_connectivity, essential_edge_connectivity, meets, \
    r_essential_edge_connectivity
from .multigraph import GraphInputError, MultiGraph, components, contract, degrees, \
    delete_edges, delete_vertices, is_connected
from .packing import pack_spanning_trees, spanning_tree_packing_number

TRAIL_BUDGET = 5_000_000
HAMILTON_BOUND = 10


class PreconditionError(GraphInputError):
    pass


class Inconclusive(RuntimeError):
    """A bounded search gave up before reaching an answer."""


@dataclass(frozen=True)
class Trail:
    edge_walk: tuple[int, ...]
    start: int

    def vertices(self, G: MultiGraph) -> list[int]:
        seq = [self.start]
        for e in self.edge_walk:
            u, v = G.edges[e]
            if seq[-1] == u:
                seq.append(v)
            elif seq[-1] == v:
                seq.append(u)
            else:
                raise ValueError(f"edge {e} does not continue the walk at {seq[-1]}")
        return seq

    @property
    def ends(self) -> tuple[int, int]:
        return self.edge_walk[0], self.edge_walk[-1]

    def is_valid(self, G: MultiGraph) -> bool:
        if not self.edge_walk or len(set(self.edge_walk)) != len(self.edge_walk):
            return False
        if any(not 0 <= e < G.m for e in self.edge_walk):
            return False
        try:
            self.vertices(G)
        except ValueError:
            return False
        return True

    def is_dominating(self, G: MultiGraph) -> bool:
        internal = set(self.vertices(G)[1:-1])
        return all(u in internal or v in internal for u, v in G.edges)

    def is_spanning(self, G: MultiGraph) -> bool:
        return set(self.vertices(G)) == set(range(G.n)) and self.is_dominating(G)


@dataclass(frozen=True)
class CoreResult:
    core_graph: MultiGraph
    provenance: tuple[int, ...]   # core edge id -> original edge id
    lam: Optional[int]


def line_graph(G: MultiGraph) -> MultiGraph:
    """Simple graph on the edge ids of ``G``; parallel edges are adjacent."""
    pairs = set()
    for inc in G.incidence:
        for i, a in enumerate(inc):
            for b in inc[i + 1:]:
                pairs.add((min(a, b), max(a, b)))
    return MultiGraph(G.m, tuple(sorted(pairs)))


def is_complete_simple(H: MultiGraph) -> bool:
    return len(H.pair_counts) == H.n * (H.n - 1) // 2 and all(c == 1 for c in H.pair_counts.values())


def _core_steps(G: MultiGraph, policy: str) -> tuple[MultiGraph, tuple[int, ...]]:
    current, origin = G, tuple(range(G.m))
    while True:
        deg = degrees(current)
        leaves = [x for x in range(current.n) if deg[x] == 1]
        if leaves and current.n > 2:
            nxt = delete_vertices(current, leaves)
            current, origin = nxt.graph, tuple(origin[e] for e in nxt.edge_origin)
            continue
        target = None
        if current.n > 2:
            # with x == z the uncontracted twin becomes a loop and is dropped
            target = next((inc for inc in current.incidence if len(inc) == 2), None)
        if target is None:
            return current, origin
        pick = min if policy == "low" else max
        e = pick(target, key=lambda i: origin[i])
        nxt = contract(current, [e])
        current, origin = nxt.graph, tuple(origin[i] for i in nxt.edge_origin)


def core(G: MultiGraph, policy: str = "low", strict: bool = True) -> CoreResult:
    """Delete degree-1 vertices and suppress degree-2 vertices until neither remains.

    Each degree-2 vertex on a path ``x y z`` is removed by contracting one of
    its two edges: the one with the lower original id under ``policy="low"``
    and the higher under ``"high"``.  When ``x == z`` both edges vanish.
    Nothing is removed once two vertices remain.  With ``strict`` the input must be
    connected, essentially 3-edge-connected and have a non-complete line
    graph, and the result is checked to be 3-edge-connected.
    """
    if policy not in ("low", "high"):
        raise GraphInputError(f"unknown policy {policy!r}")
    if strict:
        check_core_preconditions(G)
    graph, origin = _core_steps(G, policy)
    lam = edge_connectivity(graph) if graph.n >= 2 else None
    if strict and lam is not None and lam < 3:
        raise AssertionError(f"core is only {lam}-edge-connected")
    return CoreResult(graph, origin, lam)


def check_core_preconditions(G: MultiGraph) -> None:
    if not is_connected(G):
        raise PreconditionError("input graph is not connected")
    ess = essential_edge_connectivity(G)
    if ess is not None and ess.value < 3:
        raise PreconditionError(f"input is not essentially 3-edge-connected (essential lambda = {ess.value})")
    if is_complete_simple(line_graph(G)):
        raise PreconditionError("line graph is complete; core undefined")


def find_trail(G: MultiGraph, mode: str = "spanning", ends: Optional[tuple[int, int]] = None,
               budget: int = TRAIL_BUDGET) -> Optional[Trail]:
    """Search for a spanning or dominating trail, optionally an ``(e1, e2)``-trail.

    Returns ``None`` when no such trail exists and raises
    :class:`Inconclusive` when the node budget runs out first.
    """
    if mode not in ("spanning", "dominating"):
        raise GraphInputError(f"unknown trail mode {mode!r}")
    if G.m == 0:
        return None
    e1 = e2 = -1
    if ends is not None:
        e1, e2 = ends
        if e1 == e2:
            raise GraphInputError("end edges must differ")
        if not (0 <= e1 < G.m and 0 <= e2 < G.m):
            raise GraphInputError("end edge out of range")
    status, walk, start = kernels.trail_search(
        G.n, G.us, G.vs, e1, e2, mode == "spanning", True, budget)
    if status == kernels.BUDGET_EXCEEDED:
        raise Inconclusive(f"trail search exceeded {budget} nodes")
    if status == kernels.NOT_FOUND:
        return None
    return Trail(tuple(walk), start)


def is_essential_edge_cut(G: MultiGraph, X) -> bool:
    """Does removing the edge set ``X`` leave two components that each contain an edge?"""
    H = delete_edges(G, X).graph
    return sum(1 for _, count in components(H) if count >= 1) >= 2


def catlin_lai_predicate(G: MultiGraph, e1: int, e2: int, verify: bool = True) -> bool:
    """True iff ``{e1, e2}`` is not an essential edge cut (needs two disjoint spanning trees).

    ``verify=False`` skips the packing check when the caller already knows
    the graph has two trees.
    """
    if e1 == e2:
        raise GraphInputError("e1 and e2 must differ")
    if verify and not pack_spanning_trees(G, 2).feasible:
        raise PreconditionError("graph lacks two edge-disjoint spanning trees")
    return not is_essential_edge_cut(G, (e1, e2))


def is_hamilton_connected(G: MultiGraph, bound: int = HAMILTON_BOUND) -> bool:
    """Every vertex pair joined by a Hamilton path (subset dynamic programme)."""
    if G.n > bound:
        raise Inconclusive(f"Hamilton check bound exceeded: n={G.n} > {bound}")
    adj = [0] * G.n
    for u, v in G.edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    ok, _, _ = kernels.hamilton_connected(G.n, adj)
    return ok


def corollary_pipeline(G: MultiGraph, hamilton_bound: int = HAMILTON_BOUND) -> dict:
    """Trace the chain: hypotheses on ``G`` -> core -> two trees -> spanning trail -> L(G)."""
    if not is_connected(G):
        raise PreconditionError("input graph is not connected")
    ess = essential_edge_connectivity(G)
    if ess is not None and ess.value < 3:
        raise PreconditionError(f"input is not essentially 3-edge-connected (essential lambda = {ess.value})")
    two = r_essential_edge_connectivity(G, 2)
    ess_v = None if ess is None else ess.value
    two_v = None if two is None else two.value
    L = line_graph(G)
    report: dict = {
        "n": G.n,
        "m": G.m,
        "essential_lambda": ess_v,
        "two_essential_lambda": two_v,
        "hypotheses": meets(ess_v, 5) and meets(two_v, 8),
        "line_graph_complete": is_complete_simple(L),
    }
    graph, origin = _core_steps(G, "low")
    core_ess = essential_edge_connectivity(graph)
    core_two = r_essential_edge_connectivity(graph, 2)
    core_lam = edge_connectivity(graph) if graph.n >= 2 else None
    report["core"] = {"n": graph.n, "edges": [list(e) for e in graph.edges], "provenance": list(origin)}
    report["core_hypotheses"] = (
        (core_lam is None or core_lam >= 3)
        and meets(None if core_ess is None else core_ess.value, 5)
        and meets(None if core_two is None else core_two.value, 8)
    )
    tau = spanning_tree_packing_number(graph)
    report["core_tau"] = tau if tau != float("inf") else "unbounded"
    report["core_two_trees"] = tau >= 2
    trail = find_trail(graph, "spanning") if graph.m else None
    report["core_spanning_trail"] = None if trail is None else list(trail.edge_walk)
    # a spanning trail in the core makes L(G) Hamilton-connected
    report["hamilton_connected_by_core"] = trail is not None
    if L.n <= hamilton_bound:
        report["hamilton_connected_direct"] = is_hamilton_connected(L, hamilton_bound)
    else:
        report["hamilton_connected_direct"] = None
    if not report["hypotheses"]:
        report["verdict"] = "hypotheses not met"
    elif report["hamilton_connected_by_core"] and report["hamilton_connected_direct"] is not False:
        report["verdict"] = "holds"
    else:
        report["verdict"] = "counterexample"
    return report
