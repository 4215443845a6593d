# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the kernels in ``_pykernels``.

Signatures and return conventions match the pure-Python module exactly.
Bitmask-based kernels require ``n <= 63`` (and ``m <= 63`` for the trail
search); :mod:`treepack.kernels` routes larger inputs to the fallback.
"""
from libc.stdlib cimport malloc, free
from libc.stdint cimport uint64_t, int64_t

FOUND = 1
NOT_FOUND = 0
BUDGET_EXCEEDED = -1

MAX_BITS = 63


cdef inline int _ctz(uint64_t x) nogil:
    cdef int i = 0
    while not (x & 1):
        x >>= 1
        i += 1
    return i


cdef inline bint _lex_less(uint64_t a, uint64_t b) nogil:
    if a == b:
        return False
    cdef uint64_t diff = a ^ b
    cdef int d = _ctz(diff)
    cdef uint64_t above = ~((<uint64_t>1 << (d + 1)) - 1)
    if (a >> d) & 1:
        return (b & above) != 0
    return (a & above) == 0


def lex_less(a, b):
    return _lex_less(<uint64_t>a, <uint64_t>b)


cdef inline int _find(int *parent, int x) nogil:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


cdef bint _side_ok(int n, int m, int *us, int *vs, uint64_t side, int r,
                   int *parent, int *count) nogil:
    cdef int i, u, v, ru, rv, root
    for i in range(n):
        parent[i] = i
        count[i] = 0
    for i in range(m):
        u = us[i]
        v = vs[i]
        if (side >> u) & 1 and (side >> v) & 1:
            ru = _find(parent, u)
            rv = _find(parent, v)
            if ru != rv:
                parent[ru] = rv
    for i in range(m):
        u = us[i]
        v = vs[i]
        if (side >> u) & 1 and (side >> v) & 1:
            root = _find(parent, u)
            count[root] += 1
            if count[root] >= r:
                return True
    return False


cdef int *_to_c(seq, int length) except NULL:
    cdef int *out = <int *>malloc((length + 1) * sizeof(int))
    if out == NULL:
        raise MemoryError()
    cdef int i
    for i in range(length):
        out[i] = seq[i]
    return out


def bipartition_scan(int n, us, vs, int r):
    if n < 2:
        return -1, 0
    cdef int m = len(us)
    cdef int *cu = _to_c(us, m)
    cdef int *cv = _to_c(vs, m)
    cdef int *parent = <int *>malloc(n * sizeof(int))
    cdef int *count = <int *>malloc(n * sizeof(int))
    cdef uint64_t full = (<uint64_t>1 << n) - 1
    cdef uint64_t x, a, b, best_mask = 0
    cdef uint64_t top = (<uint64_t>1 << (n - 1)) - 1
    cdef int best = -1, cross, i
    try:
        with nogil:
            x = 0
            while x < top:
                a = (x << 1) | 1
                b = full ^ a
                cross = 0
                for i in range(m):
                    if ((a >> cu[i]) ^ (a >> cv[i])) & 1:
                        cross += 1
                if best < 0 or cross < best or (cross == best and _lex_less(a, best_mask)):
                    if (_side_ok(n, m, cu, cv, a, r, parent, count)
                            and _side_ok(n, m, cu, cv, b, r, parent, count)):
                        best = cross
                        best_mask = a
                x += 1
    finally:
        free(cu)
        free(cv)
        free(parent)
        free(count)
    return best, best_mask


def partition_scan(int n, us, vs):
    if n < 2:
        return -1, []
    cdef int m = len(us)
    cdef int *cu = _to_c(us, m)
    cdef int *cv = _to_c(vs, m)
    cdef int *labels = <int *>malloc(n * sizeof(int))
    cdef int *maxes = <int *>malloc(n * sizeof(int))
    cdef int *best_labels = <int *>malloc(n * sizeof(int))
    cdef int best = -1, blocks, cross, value, i, j
    try:
        with nogil:
            for i in range(n):
                labels[i] = 0
                maxes[i] = 0
                best_labels[i] = 0
            while True:
                blocks = maxes[n - 1] + 1
                if blocks >= 2:
                    cross = 0
                    for i in range(m):
                        if labels[cu[i]] != labels[cv[i]]:
                            cross += 1
                    value = cross // (blocks - 1)
                    if best < 0 or value < best:
                        best = value
                        for i in range(n):
                            best_labels[i] = labels[i]
                i = n - 1
                while i > 0 and labels[i] > maxes[i - 1]:
                    i -= 1
                if i == 0:
                    break
                labels[i] += 1
                maxes[i] = maxes[i - 1] if maxes[i - 1] > labels[i] else labels[i]
                for j in range(i + 1, n):
                    labels[j] = 0
                    maxes[j] = maxes[i]
        out = [best_labels[i] for i in range(n)]
    finally:
        free(cu)
        free(cv)
        free(labels)
        free(maxes)
        free(best_labels)
    return best, out


def max_flow(int n, us, vs, labels):
    cdef int m = len(us)
    cdef int *cu = _to_c(us, m)
    cdef int *cv = _to_c(vs, m)
    cdef int *lab = _to_c(labels, n)
    cdef int *flow = <int *>malloc((m + 1) * sizeof(int))
    cdef int *pred = <int *>malloc((n + 1) * sizeof(int))
    cdef int *queue = <int *>malloc((n + 1) * sizeof(int))
    cdef int *deg = <int *>malloc((n + 1) * sizeof(int))
    cdef int *start = <int *>malloc((n + 2) * sizeof(int))
    cdef int *inc = <int *>malloc((2 * m + 1) * sizeof(int))
    cdef int value = 0, i, e, x, y, head, tail, hit, residual
    try:
        with nogil:
            for i in range(n + 1):
                deg[i] = 0
            for e in range(m):
                flow[e] = 0
                deg[cu[e]] += 1
                deg[cv[e]] += 1
            start[0] = 0
            for i in range(n):
                start[i + 1] = start[i] + deg[i]
                deg[i] = start[i]
            for e in range(m):
                inc[deg[cu[e]]] = e
                deg[cu[e]] += 1
                inc[deg[cv[e]]] = e
                deg[cv[e]] += 1
            while True:
                head = 0
                tail = 0
                for i in range(n):
                    if lab[i] == 1:
                        pred[i] = -1
                        queue[tail] = i
                        tail += 1
                    else:
                        pred[i] = -2
                hit = -1
                while head < tail and hit < 0:
                    x = queue[head]
                    head += 1
                    for i in range(start[x], start[x + 1]):
                        e = inc[i]
                        if cu[e] == x:
                            y = cv[e]
                            residual = 1 - flow[e]
                        else:
                            y = cu[e]
                            residual = 1 + flow[e]
                        if residual > 0 and pred[y] == -2:
                            pred[y] = e
                            if lab[y] == 2:
                                hit = y
                                break
                            queue[tail] = y
                            tail += 1
                if hit < 0:
                    break
                y = hit
                while pred[y] >= 0:
                    e = pred[y]
                    if cv[e] == y:
                        flow[e] += 1
                        y = cu[e]
                    else:
                        flow[e] -= 1
                        y = cv[e]
                value += 1
        side = [1 if pred[i] != -2 else 0 for i in range(n)]
    finally:
        free(cu)
        free(cv)
        free(lab)
        free(flow)
        free(pred)
        free(queue)
        free(deg)
        free(start)
        free(inc)
    return value, side


cdef struct TrailCtx:
    int n
    int m
    int *us
    int *vs
    int *inc_start
    int *inc_edge
    int *inc_other
    uint64_t *inc_mask
    uint64_t full_v
    uint64_t full_e
    int e2
    bint need_span
    bint need_dom
    int64_t budget
    int64_t nodes
    int *walk
    int depth


cdef int _dfs(TrailCtx *c, int cur, uint64_t used, uint64_t visited,
              uint64_t dominated) nogil:
    c.nodes += 1
    if c.nodes > c.budget:
        return -1
    cdef bint ok = True
    if c.need_span and visited != c.full_v:
        ok = False
    if ok and c.need_dom and dominated != c.full_e:
        ok = False
    if ok:
        if c.e2 >= 0:
            ok = c.walk[c.depth - 1] == c.e2
        else:
            ok = c.walk[0] <= c.walk[c.depth - 1]
    if ok:
        return 1
    if c.e2 >= 0 and c.walk[c.depth - 1] == c.e2:
        return 0
    cdef uint64_t child_dom = dominated | c.inc_mask[cur]
    cdef int i, e, w, status
    for i in range(c.inc_start[cur], c.inc_start[cur + 1]):
        e = c.inc_edge[i]
        if (used >> e) & 1:
            continue
        w = c.inc_other[i]
        c.walk[c.depth] = e
        c.depth += 1
        status = _dfs(c, w, used | (<uint64_t>1 << e),
                      visited | (<uint64_t>1 << w), child_dom)
        if status != 0:
            return status
        c.depth -= 1
    return 0


def trail_search(int n, us, vs, int e1, int e2, bint need_span, bint need_dom,
                 budget):
    cdef int m = len(us)
    cdef TrailCtx c
    cdef int i, e, s, w, status = 0, k, found_start = -1
    cdef int *deg = <int *>malloc((n + 1) * sizeof(int))
    c.n = n
    c.m = m
    c.us = _to_c(us, m)
    c.vs = _to_c(vs, m)
    c.inc_start = <int *>malloc((n + 2) * sizeof(int))
    c.inc_edge = <int *>malloc((2 * m + 1) * sizeof(int))
    c.inc_other = <int *>malloc((2 * m + 1) * sizeof(int))
    c.inc_mask = <uint64_t *>malloc((n + 1) * sizeof(uint64_t))
    c.walk = <int *>malloc((m + 1) * sizeof(int))
    c.full_v = (<uint64_t>1 << n) - 1
    c.full_e = (<uint64_t>1 << m) - 1
    c.e2 = e2
    c.need_span = need_span
    c.need_dom = need_dom
    c.budget = budget
    c.nodes = 0
    c.depth = 0
    try:
        with nogil:
            for i in range(n):
                deg[i] = 0
                c.inc_mask[i] = 0
            for e in range(m):
                deg[c.us[e]] += 1
                deg[c.vs[e]] += 1
                c.inc_mask[c.us[e]] |= <uint64_t>1 << e
                c.inc_mask[c.vs[e]] |= <uint64_t>1 << e
            c.inc_start[0] = 0
            for i in range(n):
                c.inc_start[i + 1] = c.inc_start[i] + deg[i]
                deg[i] = c.inc_start[i]
            for e in range(m):
                c.inc_edge[deg[c.us[e]]] = e
                c.inc_other[deg[c.us[e]]] = c.vs[e]
                deg[c.us[e]] += 1
                c.inc_edge[deg[c.vs[e]]] = e
                c.inc_other[deg[c.vs[e]]] = c.us[e]
                deg[c.vs[e]] += 1
            for e in range(m):
                if e1 >= 0 and e != e1:
                    continue
                for k in range(2):
                    if k == 0:
                        s = c.us[e]
                        w = c.vs[e]
                    else:
                        s = c.vs[e]
                        w = c.us[e]
                    c.walk[0] = e
                    c.depth = 1
                    status = _dfs(&c, w, <uint64_t>1 << e,
                                  (<uint64_t>1 << s) | (<uint64_t>1 << w), 0)
                    if status != 0:
                        found_start = s
                        break
                if status != 0:
                    break
        if status == 1:
            result = (FOUND, [c.walk[i] for i in range(c.depth)], found_start)
        elif status == -1:
            result = (BUDGET_EXCEEDED, [], -1)
        else:
            result = (NOT_FOUND, [], -1)
    finally:
        free(deg)
        free(c.us)
        free(c.vs)
        free(c.inc_start)
        free(c.inc_edge)
        free(c.inc_other)
        free(c.inc_mask)
        free(c.walk)
    return result


def hamilton_connected(int n, adj):
    if n <= 1:
        return True, -1, -1
    cdef uint64_t *cadj = <uint64_t *>malloc(n * sizeof(uint64_t))
    cdef uint64_t size = <uint64_t>1 << n
    cdef uint64_t *ends = <uint64_t *>malloc(size * sizeof(uint64_t))
    cdef uint64_t full = size - 1
    cdef uint64_t mask, tails, low, nxt, bit
    cdef int s, t, v, bad_s = -1, bad_t = -1
    for v in range(n):
        cadj[v] = adj[v]
    try:
        with nogil:
            for s in range(n):
                for mask in range(size):
                    ends[mask] = 0
                ends[<uint64_t>1 << s] = <uint64_t>1 << s
                for mask in range(size):
                    if not (mask >> s) & 1:
                        continue
                    tails = ends[mask]
                    while tails:
                        low = tails & (~tails + 1)
                        tails ^= low
                        v = _ctz(low)
                        nxt = cadj[v] & ~mask
                        while nxt:
                            bit = nxt & (~nxt + 1)
                            nxt ^= bit
                            ends[mask | bit] |= bit
                for t in range(s + 1, n):
                    if not (ends[full] >> t) & 1:
                        bad_s = s
                        bad_t = t
                        break
                if bad_s >= 0:
                    break
    finally:
        free(cadj)
        free(ends)
    if bad_s >= 0:
        return False, bad_s, bad_t
    return True, -1, -1
