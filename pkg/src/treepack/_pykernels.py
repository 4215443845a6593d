"""Pure-Python reference kernels.

Every function here has a twin with the identical signature in the compiled
``_ckernels`` extension.  :mod:`treepack.kernels` picks one at import time.
Graphs arrive as flat endpoint lists ``us``/``vs`` (edge ``e`` joins
``us[e]`` and ``vs[e]``); vertex sets travel as int bitmasks.
"""
from __future__ import annotations

from collections import deque

FOUND = 1
NOT_FOUND = 0
BUDGET_EXCEEDED = -1


def lex_less(a: int, b: int) -> bool:
    """Compare two vertex bitmasks as sorted tuples, lexicographically."""
    if a == b:
        return False
    diff = a ^ b
    d = (diff & -diff).bit_length() - 1
    above = ~((1 << (d + 1)) - 1)
    if (a >> d) & 1:
        # a has d where b has something bigger or has run out
        return (b & above) != 0
    return (a & above) == 0


def _find(parent: list[int], x: int) -> int:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def _side_ok(n: int, us, vs, side: int, r: int) -> bool:
    """True if the graph induced on ``side`` has a component with >= r edges."""
    parent = list(range(n))
    for u, v in zip(us, vs):
        if (side >> u) & 1 and (side >> v) & 1:
            ru, rv = _find(parent, u), _find(parent, v)
            if ru != rv:
                parent[ru] = rv
    count = [0] * n
    for u, v in zip(us, vs):
        if (side >> u) & 1 and (side >> v) & 1:
            root = _find(parent, u)
            count[root] += 1
            if count[root] >= r:
                return True
    return False


def bipartition_scan(n: int, us, vs, r: int) -> tuple[int, int]:
    """Minimum bipartition cut whose two sides each keep a component with >= r edges.

    Returns ``(value, side_a_mask)`` with vertex 0 always in side A, or
    ``(-1, 0)`` when no bipartition qualifies.  Ties go to the
    lexicographically smallest side A.
    """
    if n < 2:
        return -1, 0
    full = (1 << n) - 1
    best, best_mask = -1, 0
    for x in range((1 << (n - 1)) - 1):
        a = (x << 1) | 1
        b = full ^ a
        cross = 0
        for u, v in zip(us, vs):
            if ((a >> u) ^ (a >> v)) & 1:
                cross += 1
        if best >= 0 and (cross > best or (cross == best and not lex_less(a, best_mask))):
            continue
        if _side_ok(n, us, vs, a, r) and _side_ok(n, us, vs, b, r):
            best, best_mask = cross, a
    return best, best_mask


def partition_scan(n: int, us, vs) -> tuple[int, list[int]]:
    """Minimise floor(crossing / (blocks - 1)) over vertex partitions with >= 2 blocks.

    Partitions are walked as restricted growth strings in lexicographic
    order; the first minimiser wins.  Returns ``(-1, [])`` for ``n < 2``.
    """
    if n < 2:
        return -1, []
    best, best_labels = -1, []
    labels = [0] * n
    maxes = [0] * n  # maxes[i] = max(labels[:i + 1])
    while True:
        blocks = maxes[n - 1] + 1
        if blocks >= 2:
            cross = 0
            for u, v in zip(us, vs):
                if labels[u] != labels[v]:
                    cross += 1
            value = cross // (blocks - 1)
            if best < 0 or value < best:
                best, best_labels = value, labels[:]
        # advance to the next restricted growth string
        i = n - 1
        while i > 0 and labels[i] > maxes[i - 1]:
            i -= 1
        if i == 0:
            break
        labels[i] += 1
        maxes[i] = max(maxes[i - 1], labels[i])
        for j in range(i + 1, n):
            labels[j] = 0
            maxes[j] = maxes[i]
    return best, best_labels


def max_flow(n: int, us, vs, labels) -> tuple[int, list[int]]:
    """Unit-capacity undirected max flow between two terminal vertex groups.

    ``labels[v]`` is 1 for sources, 2 for sinks, 0 otherwise.  Returns the
    flow value and a 0/1 list marking the source side of a minimum cut
    (vertices reachable from the sources in the final residual graph).
    """
    inc: list[list[int]] = [[] for _ in range(n)]
    for e, (u, v) in enumerate(zip(us, vs)):
        inc[u].append(e)
        inc[v].append(e)
    flow = [0] * len(us)  # +1 means us[e] -> vs[e]
    sources = [v for v in range(n) if labels[v] == 1]
    value = 0
    while True:
        pred_edge = [-2] * n
        for s in sources:
            pred_edge[s] = -1
        queue = deque(sources)
        hit = -1
        while queue and hit < 0:
            x = queue.popleft()
            for e in inc[x]:
                if us[e] == x:
                    y, residual = vs[e], 1 - flow[e]
                else:
                    y, residual = us[e], 1 + flow[e]
                if residual > 0 and pred_edge[y] == -2:
                    pred_edge[y] = e
                    if labels[y] == 2:
                        hit = y
                        break
                    queue.append(y)
        if hit < 0:
            side = [1 if pred_edge[v] != -2 else 0 for v in range(n)]
            return value, side
        y = hit
        while pred_edge[y] >= 0:
            e = pred_edge[y]
            if vs[e] == y:
                flow[e] += 1
                y = us[e]
            else:
                flow[e] -= 1
                y = vs[e]
        value += 1


def trail_search(n: int, us, vs, e1: int, e2: int, need_span: bool,
                 need_dom: bool, budget: int) -> tuple[int, list[int], int]:
    """Depth-first search for a trail, optionally with prescribed end edges.

    A trail is accepted when it covers every vertex (``need_span``) and/or
    every edge has an end among the trail's internal vertices
    (``need_dom``).  With ``e1 >= 0`` the trail must start with ``e1`` and
    end with ``e2``.  Without ends, only trails whose first edge id is at most
    the last edge id are reported (each trail is met in both directions).

    Returns ``(status, walk, start_vertex)``; status is ``FOUND``,
    ``NOT_FOUND`` or ``BUDGET_EXCEEDED``.
    """
    m = len(us)
    inc: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    inc_mask = [0] * n
    for e, (u, v) in enumerate(zip(us, vs)):
        inc[u].append((e, v))
        inc[v].append((e, u))
        inc_mask[u] |= 1 << e
        inc_mask[v] |= 1 << e
    full_v = (1 << n) - 1
    full_e = (1 << m) - 1
    nodes = 0
    walk: list[int] = []

    def accept(visited: int, dominated: int) -> bool:
        if need_span and visited != full_v:
            return False
        if need_dom and dominated != full_e:
            return False
        if e2 >= 0:
            return walk[-1] == e2
        return walk[0] <= walk[-1]

    def dfs(cur: int, used: int, visited: int, dominated: int) -> int:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            return BUDGET_EXCEEDED
        if accept(visited, dominated):
            return FOUND
        if e2 >= 0 and walk[-1] == e2:
            return NOT_FOUND
        child_dom = dominated | inc_mask[cur]
        for e, w in inc[cur]:
            if (used >> e) & 1:
                continue
            walk.append(e)
            status = dfs(w, used | (1 << e), visited | (1 << w), child_dom)
            if status != NOT_FOUND:
                return status
            walk.pop()
        return NOT_FOUND

    if e1 >= 0:
        starts = [(us[e1], e1, vs[e1]), (vs[e1], e1, us[e1])]
    else:
        starts = []
        for e in range(m):
            starts.append((us[e], e, vs[e]))
            starts.append((vs[e], e, us[e]))
    for s, e, w in starts:
        walk[:] = [e]
        status = dfs(w, 1 << e, (1 << s) | (1 << w), 0)
        if status == FOUND:
            return FOUND, list(walk), s
        if status == BUDGET_EXCEEDED:
            return BUDGET_EXCEEDED, [], -1
    return NOT_FOUND, [], -1


def hamilton_connected(n: int, adj) -> tuple[bool, int, int]:
    """Check Hamilton-connectedness of a simple graph by subset DP.

    ``adj[v]`` is the neighbour bitmask of ``v``.  Returns ``(ok, s, t)``;
    on failure ``(s, t)`` is the first pair without a Hamilton path.
    """
    if n <= 1:
        return True, -1, -1
    full = (1 << n) - 1
    for s in range(n):
        # ends[mask] = vertices where a path from s covering exactly mask may end
        ends = [0] * (1 << n)
        ends[1 << s] = 1 << s
        for mask in range(1 << n):
            if not (mask >> s) & 1:
                continue
            tails = ends[mask]
            while tails:
                low = tails & -tails
                v = low.bit_length() - 1
                tails ^= low
                nxt = adj[v] & ~mask
                while nxt:
                    bit = nxt & -nxt
                    nxt ^= bit
                    ends[mask | bit] |= bit
        reached = ends[full]
        for t in range(s + 1, n):
            if not (reached >> t) & 1:
                return False, s, t
    return True, -1, -1
