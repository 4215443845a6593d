"""Contract dense pieces until the graph is reduced, then lift packings back.

A vertex set ``S`` is *contractible* for ``k`` when ``G[S]`` has ``k``
edge-disjoint spanning trees.  Contracting such a set preserves the
existence of a ``k``-packing in both directions: trees of ``G/S`` extended
by the trees of ``G[S]`` are trees of ``G``.  Repeating until nothing is
contractible yields a *reduced* graph, in which every nontrivial subgraph
``H`` has fewer than ``k(|V(H)| - 1)`` edges.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional

from .connectivity import OracleBoundExceeded
from .multigraph import MultiGraph, contract, degrees, induced_subgraph, is_connected
from .packing import TreePacking, explain_packing, pack_spanning_trees

EXHAUSTIVE_BOUND = 16


class LiftError(ValueError):
    pass


@dataclass(frozen=True)
class BoundSymbols:
    k: int
    m: int
    h: object = None

    def in_range(self) -> bool:
        return self.k + 1 <= self.m <= 2 * self.k - 1


@dataclass(frozen=True)
class ReductionStep:
    vertex_set: frozenset[int]         # in the graph before this step
    packing: TreePacking               # edge ids of the graph before this step
    vertex_map: dict[int, int]
    edge_origin: tuple[int, ...]       # next-graph edge id -> edge id before this step

    def as_dict(self, index: int) -> dict:
        return {
            "step": index,
            "vertex_set": sorted(self.vertex_set),
            "trees": [sorted(t) for t in self.packing.trees],
            "vertex_map": [self.vertex_map[x] for x in sorted(self.vertex_map)],
            "edge_origin": list(self.edge_origin),
        }


@dataclass
class ReductionTrace:
    k: int
    steps: list[ReductionStep] = field(default_factory=list)

    def to_jsonl(self) -> str:
        return "".join(json.dumps(s.as_dict(i)) + "\n" for i, s in enumerate(self.steps))


def _inside_count(G: MultiGraph, S: frozenset[int]) -> int:
    return sum(1 for u, v in G.edges if u in S and v in S)


def _sub_packing(G: MultiGraph, S: frozenset[int], k: int) -> Optional[TreePacking]:
    sub = induced_subgraph(G, S)
    result = pack_spanning_trees(sub.graph, k)
    if not result.feasible:
        return None
    return TreePacking(tuple(frozenset(sub.edge_origin[e] for e in t) for t in result.trees))


def _candidates(G: MultiGraph, k: int):
    # pairs with >= k parallel edges first, then larger connected dense sets
    for (u, v), c in sorted(G.pair_counts.items()):
        if c >= k:
            yield frozenset((u, v))
    for size in range(3, G.n + 1):
        for S in combinations(range(G.n), size):
            S = frozenset(S)
            if _inside_count(G, S) < k * (size - 1):
                continue
            if is_connected(induced_subgraph(G, S).graph):
                yield S


def find_contractible(G: MultiGraph, k: int, bound: int = EXHAUSTIVE_BOUND) -> Optional[frozenset[int]]:
    """Smallest (then lexicographically first) vertex set whose induced subgraph has k trees."""
    found = _find_with_packing(G, k, bound)
    return None if found is None else found[0]


def _find_with_packing(G, k, bound):
    if G.n > bound:
        raise OracleBoundExceeded(f"exhaustive subset search bound exceeded: n={G.n} > {bound}")
    for S in _candidates(G, k):
        packing = _sub_packing(G, S, k)
        if packing is not None:
            return S, packing
    return None


def is_reduced(G: MultiGraph, k: int, bound: int = EXHAUSTIVE_BOUND) -> Optional[bool]:
    """True iff no connected vertex subset ``S`` (|S| >= 2) has ``e(G[S]) >= k(|S| - 1)``.

    Returns ``None`` (unknown) above the exhaustive bound.
    """
    if G.n > bound:
        return None
    return next(iter(_candidates(G, k)), None) is None


def reduce(G: MultiGraph, k: int, bound: int = EXHAUSTIVE_BOUND) -> tuple[MultiGraph, ReductionTrace]:
    trace = ReductionTrace(k)
    current = G
    while True:
        found = _find_with_packing(current, k, bound)
        if found is None:
            return current, trace
        S, packing = found
        inside = [i for i, (u, v) in enumerate(current.edges) if u in S and v in S]
        nxt = contract(current, inside)
        trace.steps.append(ReductionStep(S, packing, nxt.vertex_map, nxt.edge_origin))
        current = nxt.graph


def replay(G: MultiGraph, trace: ReductionTrace) -> MultiGraph:
    """Re-apply the recorded contractions to ``G``."""
    current = G
    for step in trace.steps:
        inside = [i for i, (u, v) in enumerate(current.edges)
                  if u in step.vertex_set and v in step.vertex_set]
        nxt = contract(current, inside)
        if nxt.edge_origin != step.edge_origin:
            raise LiftError("trace does not replay on this graph")
        current = nxt.graph
    return current


def lift_packing(G: MultiGraph, trace: ReductionTrace, reduced_packing: TreePacking) -> TreePacking:
    """Turn a packing of the reduced graph into a packing of ``G``."""
    graphs = [G]
    for step in trace.steps:
        inside = [i for i, (u, v) in enumerate(graphs[-1].edges)
                  if u in step.vertex_set and v in step.vertex_set]
        graphs.append(contract(graphs[-1], inside).graph)
    problem = explain_packing(graphs[-1], reduced_packing)
    if problem:
        raise LiftError(f"reduced packing invalid: {problem}")
    trees = [set(t) for t in reduced_packing.trees]
    for idx in range(len(trace.steps) - 1, -1, -1):
        step, before = trace.steps[idx], graphs[idx]
        if step.packing.k != len(trees):
            raise LiftError(f"step {idx}: packs {step.packing.k} trees, reduced packing has {len(trees)}")
        problem = explain_packing(induced_subgraph(before, step.vertex_set).graph,
                                  _local(before, step))
        if problem:
            raise LiftError(f"step {idx}: internal packing invalid: {problem}")
        trees = [{step.edge_origin[e] for e in t} | set(inner)
                 for t, inner in zip(trees, step.packing.trees)]
    lifted = TreePacking(tuple(frozenset(t) for t in trees))
    problem = explain_packing(G, lifted)
    if problem:
        raise LiftError(f"lifted packing invalid: {problem}")
    return lifted


def _local(before: MultiGraph, step: ReductionStep) -> TreePacking:
    # re-express a step's packing in ids of the induced subgraph
    sub = induced_subgraph(before, step.vertex_set)
    back = {orig: i for i, orig in enumerate(sub.edge_origin)}
    return TreePacking(tuple(frozenset(back.get(e, -1) for e in t) for t in step.packing.trees))


def degree_surplus(G: MultiGraph, k: int) -> int:
    """``sum(d(v) - 2k)`` over all vertices."""
    return sum(d - 2 * k for d in degrees(G))
