# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled bit-set kernels for graphs on at most 64 vertices.

Mirrors ``_pykernels`` function for function.
"""

from libc.stdlib cimport malloc, free

ctypedef unsigned long long u64

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil


cdef inline u64 _full(int n) nogil:
    if n >= 64:
        return <u64>0xFFFFFFFFFFFFFFFFULL
    return (<u64>1 << n) - 1


cdef u64* _adj_array(adj, int n) except NULL:
    cdef u64* a = <u64*>malloc((n if n > 0 else 1) * sizeof(u64))
    if a == NULL:
        raise MemoryError()
    cdef int i
    for i in range(n):
        a[i] = <u64>adj[i]
    return a


def components(adj, int n, removed):
    cdef u64* a = _adj_array(adj, n)
    cdef u64 remaining = _full(n) & ~(<u64>removed)
    cdef u64 comp, frontier, reach, f
    out = []
    try:
        while remaining:
            comp = remaining & (~remaining + 1)
            frontier = comp
            while frontier:
                reach = 0
                f = frontier
                while f:
                    reach |= a[__builtin_ctzll(f)]
                    f &= f - 1
                frontier = reach & remaining & ~comp
                comp |= frontier
            out.append(comp)
            remaining &= ~comp
    finally:
        free(a)
    return out


cdef inline bint _edges_covered(u64 x, u64 y, u64 z, u64* adj, u64 full) nogil:
    cdef u64 f = full
    cdef u64 low, cov
    cdef int u
    while f:
        u = __builtin_ctzll(f)
        low = (<u64>1) << u
        cov = 0
        if x & low:
            cov |= x
        if y & low:
            cov |= y
        if z & low:
            cov |= z
        if adj[u] & ~cov:
            return False
        f &= f - 1
    return True


cdef class _Sides:
    cdef u64* vm
    cdef int* sz
    cdef int m
    cdef int n
    # by_vertex[v] lists indices of sides containing v, ascending
    cdef int* bv
    cdef int* bv_start

    def __cinit__(self, list ordered, int n):
        cdef int m = len(ordered)
        cdef int i, v, total = 0
        cdef u64 s
        self.m = m
        self.n = n
        self.vm = <u64*>malloc((m if m > 0 else 1) * sizeof(u64))
        self.sz = <int*>malloc((m if m > 0 else 1) * sizeof(int))
        self.bv_start = <int*>malloc((n + 1) * sizeof(int))
        if self.vm == NULL or self.sz == NULL or self.bv_start == NULL:
            raise MemoryError()
        for i in range(n + 1):
            self.bv_start[i] = 0
        for i in range(m):
            s = <u64>ordered[i]
            self.vm[i] = s
            self.sz[i] = __builtin_popcountll(s)
            total += self.sz[i]
            while s:
                self.bv_start[__builtin_ctzll(s) + 1] += 1
                s &= s - 1
        for v in range(n):
            self.bv_start[v + 1] += self.bv_start[v]
        self.bv = <int*>malloc((total if total > 0 else 1) * sizeof(int))
        if self.bv == NULL:
            raise MemoryError()
        cdef int* fill = <int*>malloc((n if n > 0 else 1) * sizeof(int))
        if fill == NULL:
            raise MemoryError()
        for v in range(n):
            fill[v] = self.bv_start[v]
        for i in range(m):
            s = self.vm[i]
            while s:
                v = __builtin_ctzll(s)
                self.bv[fill[v]] = i
                fill[v] += 1
                s &= s - 1
        free(fill)

    def __dealloc__(self):
        free(self.vm)
        free(self.sz)
        free(self.bv)
        free(self.bv_start)


cdef int _third(u64* vm, int* sz, int m, int* bv, int* bv_start, int j,
                u64 a, u64 b, u64 rest, u64* adj, u64 full) nogil:
    cdef int idx, p, need, r
    if rest == 0:
        for idx in range(j, m):
            if _edges_covered(a, b, vm[idx], adj, full):
                return idx
        return -1
    need = __builtin_popcountll(rest)
    r = __builtin_ctzll(rest)
    for p in range(bv_start[r], bv_start[r + 1]):
        idx = bv[p]
        if idx < j:
            continue
        if sz[idx] < need:
            break
        if (vm[idx] & rest) == rest and _edges_covered(a, b, vm[idx], adj, full):
            return idx
    return -1


def _order(sides):
    return sorted(set(sides), key=lambda s: (-s.bit_count(), s))


def find_cover(sides, adj, int n):
    cdef list ordered = _order(sides)
    cdef _Sides S = _Sides(ordered, n)
    cdef u64* a = _adj_array(adj, n)
    cdef u64 full = _full(n)
    cdef int i, j, l
    cdef int found_i = -1, found_j = -1, found_l = -1
    try:
        with nogil:
            for i in range(S.m):
                if 3 * S.sz[i] < n:
                    break
                for j in range(i, S.m):
                    if S.sz[i] + 2 * S.sz[j] < n:
                        break
                    l = _third(S.vm, S.sz, S.m, S.bv, S.bv_start, j, S.vm[i], S.vm[j],
                               full & ~(S.vm[i] | S.vm[j]), a, full)
                    if l >= 0:
                        found_i = i
                        found_j = j
                        found_l = l
                        break
                if found_l >= 0:
                    break
    finally:
        free(a)
    if found_l < 0:
        return None
    return (ordered[found_i], ordered[found_j], ordered[found_l])


def find_cover_with(x, sides, adj, int n):
    cdef list ordered = _order(list(sides) + [x])
    cdef _Sides S = _Sides(ordered, n)
    cdef u64* a = _adj_array(adj, n)
    cdef u64 full = _full(n)
    cdef u64 ux = <u64>x
    cdef int sx = __builtin_popcountll(ux)
    cdef int j, l
    cdef int found_j = -1, found_l = -1
    try:
        with nogil:
            for j in range(S.m):
                if sx + 2 * S.sz[j] < n:
                    break
                l = _third(S.vm, S.sz, S.m, S.bv, S.bv_start, j, ux, S.vm[j],
                           full & ~(ux | S.vm[j]), a, full)
                if l >= 0:
                    found_j = j
                    found_l = l
                    break
    finally:
        free(a)
    if found_l < 0:
        return None
    return (x, ordered[found_j], ordered[found_l])
