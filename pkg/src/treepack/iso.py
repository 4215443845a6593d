"""Multigraph isomorphism by backtracking, for desk-scale graphs."""
from __future__ import annotations

from .multigraph import MultiGraph, degrees


def _matrix(G: MultiGraph) -> list[list[int]]:
    M = [[0] * G.n for _ in range(G.n)]
    for u, v in G.edges:
        M[u][v] += 1
        M[v][u] += 1
    return M


def _signature(M: list[list[int]], v: int) -> tuple:
    return tuple(sorted(x for x in M[v] if x))


def are_isomorphic(G: MultiGraph, H: MultiGraph) -> bool:
    """True iff a vertex bijection preserves every pair multiplicity."""
    if G.n != H.n or G.m != H.m or sorted(degrees(G)) != sorted(degrees(H)):
        return False
    A, B = _matrix(G), _matrix(H)
    sig_a = [_signature(A, v) for v in range(G.n)]
    sig_b = [_signature(B, v) for v in range(H.n)]
    if sorted(sig_a) != sorted(sig_b):
        return False
    order = sorted(range(G.n), key=lambda v: -sum(1 for x in A[v] if x))
    image = [-1] * G.n
    used = [False] * H.n

    def extend(pos: int) -> bool:
        if pos == len(order):
            return True
        v = order[pos]
        for w in range(H.n):
            if used[w] or sig_a[v] != sig_b[w]:
                continue
            if any(A[v][x] != B[w][image[x]] for x in order[:pos]):
                continue
            image[v], used[w] = w, True
            if extend(pos + 1):
                return True
            image[v], used[w] = -1, False
        return False

    return extend(0)
