"""Random and exhaustive multigraph sources.

Random graph ``i`` of a stream depends only on ``(seed, i)``, so streams can
be cut into chunks and generated in any order or process.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Optional

import numpy as np

from ..connectivity import edge_connectivity
from ..multigraph import (GraphInputError, MultiGraph, build_graph, complete_bipartite,
                          complete_graph, cycle_graph, fat_triangle, is_connected, path_graph)

ENUMERATION_GUARD = 6


@dataclass(frozen=True)
class GenSpec:
    n_min: int
    n_max: int
    e_min: int
    e_max: int
    mult_max: int = 1
    lambda_min: int = 0
    seed: int = 0
    count: int = 0
    retries: int = 200

    def __post_init__(self):
        if self.n_min > self.n_max or self.e_min > self.e_max:
            raise GraphInputError("empty generation range")
        if self.n_min < 1 or self.mult_max < 1 or self.count < 0:
            raise GraphInputError("n_min and mult_max must be >= 1, count >= 0")


def _rng(seed: int, index: int) -> np.random.Generator:
    return np.random.default_rng([seed, index])


def random_multigraph(rng: np.random.Generator, n: int, e: int, mult_max: int) -> MultiGraph:
    """``e`` edges on ``n`` vertices, each placed on a uniform pair still below the cap."""
    pairs = list(combinations(range(n), 2))
    counts = [0] * len(pairs)
    edges = []
    for _ in range(min(e, mult_max * len(pairs))):
        open_pairs = [i for i, c in enumerate(counts) if c < mult_max]
        i = open_pairs[int(rng.integers(len(open_pairs)))]
        counts[i] += 1
        edges.append(pairs[i])
    order = rng.permutation(len(edges))
    return build_graph(n, [edges[j] for j in order])


def generate_one(spec: GenSpec, index: int) -> Optional[MultiGraph]:
    """Graph ``index`` of the stream, or ``None`` if the filter never passed."""
    rng = _rng(spec.seed, index)
    for _ in range(spec.retries):
        n = int(rng.integers(spec.n_min, spec.n_max + 1))
        e = int(rng.integers(spec.e_min, spec.e_max + 1))
        G = random_multigraph(rng, n, e, spec.mult_max)
        if spec.lambda_min > 0:
            if G.n < 2 or not is_connected(G) or edge_connectivity(G) < spec.lambda_min:
                continue
        return G
    return None


def generate(spec: GenSpec) -> Iterator[MultiGraph]:
    """The deterministic stream; slots whose filter gave up are skipped."""
    for i in range(spec.count):
        G = generate_one(spec, i)
        if G is not None:
            yield G


def enumerate_small(n: int, max_edges: int, mult_cap: int, min_edges: int = 0) -> Iterator[MultiGraph]:
    """Every labeled multigraph on ``n`` vertices with at most ``max_edges`` edges.

    Edges are listed pair by pair in lexicographic order.  No isomorphism
    reduction is done.
    """
    if n > ENUMERATION_GUARD:
        raise GraphInputError(f"enumeration guard: n={n} > {ENUMERATION_GUARD}")
    pairs = list(combinations(range(n), 2))
    counts = [0] * len(pairs)

    def rec(i: int, total: int):
        if i == len(pairs):
            if total >= min_edges:
                edges = [p for p, c in zip(pairs, counts) for _ in range(c)]
                yield MultiGraph(n, tuple(edges))
            return
        for c in range(0, min(mult_cap, max_edges - total) + 1):
            counts[i] = c
            yield from rec(i + 1, total + c)
        counts[i] = 0

    yield from rec(0, 0)


def named_graphs() -> dict[str, MultiGraph]:
    K4 = complete_graph(4)
    two_k4 = build_graph(8, list(K4.edges) + [(u + 4, v + 4) for u, v in K4.edges]
                         + [(0, 4), (1, 5), (2, 6)])
    return {
        "triangle": cycle_graph(3),
        "doubled_edge": build_graph(2, [(0, 1), (0, 1)]),
        "path3": path_graph(3),
        "C4": cycle_graph(4),
        "C5": cycle_graph(5),
        "C6": cycle_graph(6),
        "C8": cycle_graph(8),
        "K4": K4,
        "K5": complete_graph(5),
        "K2,3": complete_bipartite(2, 3),
        "K3,3": complete_bipartite(3, 3),
        "doubled_triangle": fat_triangle(2),
        "tripled_triangle": fat_triangle(3),
        "two_K4": two_k4,
        "bowtie": build_graph(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]),
        "wheel5": build_graph(6, [(0, i) for i in range(1, 6)] + [(i, i % 5 + 1) for i in range(1, 6)]),
        "prism": build_graph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)]),
    }


def corpus(max_n: int = 8, random_count: int = 300, seed: int = 2024) -> list[MultiGraph]:
    """Fixed test corpus: named graphs, all small labeled graphs, and a seeded random sample."""
    graphs = [G for G in named_graphs().values() if G.n <= max_n]
    for n in range(2, min(4, max_n) + 1):
        graphs.extend(G for G in enumerate_small(n, 6, 2, min_edges=1) if is_connected(G))
    spec = GenSpec(2, max_n, 1, 3 * max_n, mult_max=3, seed=seed, count=random_count)
    graphs.extend(G for G in generate(spec) if is_connected(G))
    return graphs


def subdivided_graph(rng: np.random.Generator, base: MultiGraph, p_subdivide: float,
                     pendants: int = 0) -> MultiGraph:
    """Subdivide each edge with probability ``p_subdivide``; hang ``pendants`` leaves."""
    n = base.n
    edges = []
    for u, v in base.edges:
        if rng.random() < p_subdivide:
            edges.extend([(u, n), (n, v)])
            n += 1
        else:
            edges.append((u, v))
    for _ in range(pendants):
        edges.append((int(rng.integers(base.n)), n))
        n += 1
    return build_graph(n, edges)
