"""Edge-disjoint spanning tree packing.

Packing uses matroid-union augmentation: ``k`` forests are grown edge by
edge (ascending id), and an edge that fits in no forest directly is
inserted along a shortest exchange path found by FIFO labelling.  A graph
has ``k`` edge-disjoint spanning trees iff every forest ends with ``n - 1``
edges.
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Optional, Sequence

from . import kernels
from .connectivity import OracleBoundExceeded
from .multigraph import GraphInputError, MultiGraph, components, is_connected

UNBOUNDED = math.inf  # packing number of the one-vertex graph
PARTITION_BOUND = 10


class Cancelled(RuntimeError):
    pass


@dataclass(frozen=True)
class TreePacking:
    trees: tuple[frozenset[int], ...]
    feasible = True

    @property
    def k(self) -> int:
        return len(self.trees)


@dataclass(frozen=True)
class PartitionCertificate:
    parts: tuple[frozenset[int], ...]
    crossing_count: int
    bound: int

    @classmethod
    def from_parts(cls, G: MultiGraph, parts) -> "PartitionCertificate":
        parts = tuple(sorted((frozenset(p) for p in parts), key=min))
        block = {x: i for i, p in enumerate(parts) for x in p}
        crossing = sum(1 for u, v in G.edges if block[u] != block[v])
        return cls(parts, crossing, crossing // (len(parts) - 1))


@dataclass(frozen=True)
class Infeasible:
    k: int
    certificate: Optional[PartitionCertificate] = None
    feasible = False


class _Forests:
    """``k`` edge-disjoint forests over a fixed multigraph."""

    def __init__(self, G: MultiGraph, k: int):
        self.G = G
        self.k = k
        self.owner: dict[int, int] = {}
        self.adj: list[list[set[int]]] = [[set() for _ in range(G.n)] for _ in range(k)]
        self.size = [0] * k

    def _path(self, i: int, s: int, t: int) -> Optional[list[int]]:
        # edge ids on the forest-i path from s to t, None when disconnected
        if s == t:
            return []
        G, adj = self.G, self.adj[i]
        pred = {s: -1}
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for e in sorted(adj[x]):
                y = G.other_end(e, x)
                if y in pred:
                    continue
                pred[y] = e
                if y == t:
                    path = []
                    while y != s:
                        e = pred[y]
                        path.append(e)
                        y = G.other_end(e, y)
                    path.reverse()
                    return path
                queue.append(y)
        return None

    def _move(self, e: int, i: int) -> None:
        u, v = self.G.edges[e]
        j = self.owner.get(e)
        if j is not None:
            self.adj[j][u].discard(e)
            self.adj[j][v].discard(e)
            self.size[j] -= 1
        self.adj[i][u].add(e)
        self.adj[i][v].add(e)
        self.size[i] += 1
        self.owner[e] = i

    def insert(self, e: int) -> bool:
        label: dict[int, Optional[tuple[int, int]]] = {e: None}
        queue = deque([e])
        while queue:
            x = queue.popleft()
            u, v = self.G.edges[x]
            for i in range(self.k):
                if self.owner.get(x) == i:
                    continue
                path = self._path(i, u, v)
                if path is None:
                    self._augment(x, i, label)
                    return True
                for y in path:
                    if y not in label:
                        label[y] = (x, i)
                        queue.append(y)
        return False

    def _augment(self, x: int, i: int, label) -> None:
        while True:
            self._move(x, i)
            step = label[x]
            if step is None:
                return
            x, i = step

    def trees(self) -> tuple[frozenset[int], ...]:
        out = [set() for _ in range(self.k)]
        for e, i in self.owner.items():
            out[i].add(e)
        return tuple(frozenset(t) for t in out)


def pack_spanning_trees(G: MultiGraph, k: int, certificate: bool = False,
                        certificate_bound: int = PARTITION_BOUND, cancel=None):
    """Find ``k`` edge-disjoint spanning trees.

    Returns a :class:`TreePacking` on success and :class:`Infeasible`
    otherwise.  With ``certificate=True`` an infeasible answer carries a
    partition witness when ``n <= certificate_bound``.  ``cancel`` may be any
    object with ``is_set()``; it is polled between edge insertions.
    """
    if k < 1:
        raise GraphInputError(f"k must be >= 1, got {k}")
    if G.n <= 1:
        return TreePacking(tuple(frozenset() for _ in range(k)))
    if not is_connected(G):
        return Infeasible(k, PartitionCertificate.from_parts(G, [c for c, _ in components(G)]))
    need = G.n - 1
    if G.m >= k * need:
        forests = _Forests(G, k)
        for e in range(G.m):
            if cancel is not None and cancel.is_set():
                raise Cancelled("packing cancelled")
            forests.insert(e)
            if all(s == need for s in forests.size):
                packing = TreePacking(forests.trees())
                assert verify_packing(G, packing), explain_packing(G, packing)
                return packing
    if certificate and G.n <= certificate_bound:
        value, parts = partition_bound_oracle(G, certificate_bound)
        assert value < k, "partition bound contradicts failed packing"
        return Infeasible(k, PartitionCertificate.from_parts(G, parts))
    return Infeasible(k)


def spanning_tree_packing_number(G: MultiGraph):
    """Largest ``k`` with ``k`` edge-disjoint spanning trees.

    0 for the empty or a disconnected graph, :data:`UNBOUNDED` for one vertex.
    """
    if G.n == 0:
        return 0
    if G.n == 1:
        return UNBOUNDED
    if not is_connected(G):
        return 0
    lo, hi = 0, G.m // (G.n - 1)  # lo is always feasible
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if pack_spanning_trees(G, mid).feasible:
            lo = mid
        else:
            hi = mid - 1
    return lo


def partition_bound_oracle(G: MultiGraph, bound: int = PARTITION_BOUND):
    """Minimum of ``floor(crossing(P) / (|P| - 1))`` over partitions with >= 2 blocks.

    Exhaustive over all set partitions (Bell-number many); returns
    ``(value, parts)``.
    """
    if G.n < 2:
        raise GraphInputError("partition bound needs at least 2 vertices")
    if G.n > bound:
        raise OracleBoundExceeded(f"partition bound exceeded: n={G.n} > {bound}")
    value, labels = kernels.partition_scan(G.n, G.us, G.vs)
    blocks: dict[int, set[int]] = {}
    for x, b in enumerate(labels):
        blocks.setdefault(b, set()).add(x)
    return value, tuple(frozenset(blocks[b]) for b in sorted(blocks))


def explain_packing(G: MultiGraph, packing) -> Optional[str]:
    """Why ``packing`` is not a valid tree packing of ``G``, or ``None`` if it is."""
    trees: Sequence = packing.trees if isinstance(packing, TreePacking) else packing
    seen: dict[int, int] = {}
    for i, tree in enumerate(trees):
        for e in tree:
            if not (isinstance(e, int) and 0 <= e < G.m):
                return f"tree {i}: unknown edge id {e!r}"
            if e in seen:
                return f"edge {e} used by trees {seen[e]} and {i}"
            seen[e] = i
        if len(tree) != max(G.n - 1, 0):
            return f"tree {i}: has {len(tree)} edges, expected {G.n - 1}"
        parent = list(range(G.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for e in tree:
            u, v = G.edges[e]
            ru, rv = find(u), find(v)
            if ru == rv:
                return f"tree {i}: edge {e} closes a cycle"
            parent[ru] = rv
    return None


def verify_packing(G: MultiGraph, packing) -> bool:
    """True iff the trees are pairwise disjoint spanning trees of ``G``."""
    return explain_packing(G, packing) is None
