"""Theorem checkers producing one :class:`GraphRecord` per graph.

A record is a counterexample when every hypothesis holds, the conclusion
(enough edge-disjoint spanning trees) fails, and the graph is not one of
the excluded shapes.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional

from ..connectivity import edge_connectivity, meets, r_essential_edge_connectivity
from ..multigraph import ExceptionForm, GraphInputError, MultiGraph, classify_exception, degrees
from ..packing import UNBOUNDED, spanning_tree_packing_number
from ..thresholds import f_threshold


@dataclass
class GraphRecord:
    graph_id: int
    n: int
    edge_count: int
    seed: Optional[int]
    theorem: str
    profile: dict
    tau: object
    hypotheses: dict
    conclusion: bool
    exception: str
    runtime_ms: float = 0.0
    extra: dict = field(default_factory=dict)

    @property
    def hypotheses_hold(self) -> bool:
        return all(self.hypotheses.values())

    @property
    def counterexample(self) -> bool:
        return self.hypotheses_hold and not self.conclusion and self.exception == ExceptionForm.NONE.value

    def as_dict(self, timings: bool = False) -> dict:
        out = {
            "graph_id": self.graph_id,
            "n": self.n,
            "edge_count": self.edge_count,
            "seed": self.seed,
            "theorem": self.theorem,
            "profile": self.profile,
            "tau": "unbounded" if self.tau == UNBOUNDED else self.tau,
            "hypotheses": self.hypotheses,
            "hypotheses_hold": self.hypotheses_hold,
            "conclusion": self.conclusion,
            "exception": self.exception,
            "counterexample": self.counterexample,
        }
        if self.extra:
            out.update(self.extra)
        if timings:
            out["runtime_ms"] = round(self.runtime_ms, 3)
        return out


def _value(cut):
    return None if cut is None else cut.value


def check_main2(G: MultiGraph, m: int, k: int, graph_id: int = 0, seed=None) -> GraphRecord:
    """m-edge-connected + 2-essentially f(m,k)-edge-connected + not excluded => k trees."""
    if not k + 1 <= m <= 2 * k - 1:
        raise GraphInputError(f"need k+1 <= m <= 2k-1, got m={m}, k={k}")
    start = time.perf_counter()
    h = f_threshold(m, k)
    lam = edge_connectivity(G)
    two = _value(r_essential_edge_connectivity(G, 2))
    form = classify_exception(G, k)
    tau = spanning_tree_packing_number(G)
    return GraphRecord(
        graph_id=graph_id, n=G.n, edge_count=G.m, seed=seed, theorem=f"main2(m={m},k={k})",
        profile={"lambda": lam, "two_essential_lambda": two},
        tau=tau,
        hypotheses={
            "lambda_ge_m": lam >= m,
            "two_essential_ge_f": meets(two, h),
            "not_excluded": form is ExceptionForm.NONE,
        },
        conclusion=tau >= k,
        exception=form.value,
        runtime_ms=(time.perf_counter() - start) * 1000,
    )


def check_main1(G: MultiGraph, graph_id: int = 0, seed=None) -> GraphRecord:
    """3-edge-connected, essentially 5- and 2-essentially 8-edge-connected => 2 trees."""
    start = time.perf_counter()
    lam = edge_connectivity(G)
    ess = _value(r_essential_edge_connectivity(G, 1))
    two = _value(r_essential_edge_connectivity(G, 2))
    tau = spanning_tree_packing_number(G)
    return GraphRecord(
        graph_id=graph_id, n=G.n, edge_count=G.m, seed=seed, theorem="main1",
        profile={"lambda": lam, "essential_lambda": ess, "two_essential_lambda": two},
        tau=tau,
        hypotheses={
            "lambda_ge_3": lam >= 3,
            "essential_ge_5": meets(ess, 5),
            "two_essential_ge_8": meets(two, 8),
        },
        conclusion=tau >= 2,
        exception=classify_exception(G, 2).value,
        runtime_ms=(time.perf_counter() - start) * 1000,
    )


def check_structural_lemmas(G: MultiGraph) -> dict:
    """Degree facts a graph meeting the main1 hypotheses is expected to show."""
    d = degrees(G)
    adjacent = set(G.pair_counts)
    nbrs = [set() for _ in range(G.n)]
    for u, v in adjacent:
        nbrs[u].add(v)
        nbrs[v].add(u)
    path_sums = [d[u] + d[v] + d[w] for v in range(G.n) for u, w in combinations(sorted(nbrs[v]), 2)]
    return {
        "min_degree_ge_3": bool(d) and min(d) >= 3,
        "no_adjacent_3_vertices": not any(d[u] == 3 and d[v] == 3 for u, v in adjacent),
        "path_degree_sum_ge_12": all(s >= 12 for s in path_sums),
        "min_path_degree_sum": min(path_sums, default=None),
        "degree_surplus_nonneg": sum(x - 4 for x in d) >= 0,
    }


def structural_lemmas_hold(flags: dict) -> bool:
    return all(v for key, v in flags.items() if key != "min_path_degree_sum")


THEOREMS = ("main1", "main2", "corollary")


def run_check(theorem: str, G: MultiGraph, m: int = 0, k: int = 0, graph_id: int = 0, seed=None) -> GraphRecord:
    if theorem == "main1":
        rec = check_main1(G, graph_id, seed)
        rec.extra["lemmas"] = check_structural_lemmas(G)
        return rec
    if theorem == "main2":
        return check_main2(G, m, k, graph_id, seed)
    raise GraphInputError(f"unknown theorem {theorem!r}")
