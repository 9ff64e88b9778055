# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twins of the ``_kernels`` functions.

Mask functions handle carriers of at most 64 elements, one uint64 per
mask; ``_accel`` routes wider carriers to the pure kernels. The table
scan ``distributive_witness`` works at any size. Results must agree with
``_kernels`` bit for bit.
"""

from cpython.mem cimport PyMem_Free, PyMem_Malloc
from libc.stdint cimport uint64_t


cdef inline int _ctz(uint64_t x):
    cdef int i = 0
    while (x & 1) == 0:
        x >>= 1
        i += 1
    return i


def closure(below):
    cdef int n = len(below)
    cdef uint64_t masks[64]
    cdef int i, j
    cdef uint64_t m, acc, t, low
    cdef bint changed = True
    for i in range(n):
        masks[i] = <uint64_t> below[i] | ((<uint64_t> 1) << i)
    while changed:
        changed = False
        for i in range(n):
            m = masks[i]
            acc = m
            t = m
            while t:
                low = t & (~t + 1)
                t ^= low
                acc |= masks[_ctz(low)]
            if acc != m:
                masks[i] = acc
                changed = True
    return [masks[i] for i in range(n)]


def check_poset(below):
    cdef int n = len(below)
    cdef uint64_t masks[64]
    cdef int i, j
    cdef uint64_t m, t, low
    for i in range(n):
        masks[i] = <uint64_t> below[i]
    for i in range(n):
        m = masks[i]
        if below[i] >> n:
            return ("out of range", i, n)
        if not (m >> i) & 1:
            return ("not reflexive", i, i)
        t = m
        while t:
            low = t & (~t + 1)
            t ^= low
            j = _ctz(low)
            if j != i and (masks[j] >> i) & 1:
                return ("not antisymmetric", i, j)
            if masks[j] & ~m:
                return ("not transitive", i, j)
    return None


def transpose(below):
    cdef int n = len(below)
    cdef uint64_t src[64]
    cdef uint64_t out[64]
    cdef int i, j
    cdef uint64_t t, low
    for i in range(n):
        src[i] = <uint64_t> below[i]
        out[i] = 0
    for j in range(n):
        t = src[j]
        while t:
            low = t & (~t + 1)
            t ^= low
            out[_ctz(low)] |= (<uint64_t> 1) << j
    return [out[i] for i in range(n)]


cdef int _principal(uint64_t *masks, uint64_t common):
    cdef uint64_t t = common, low
    cdef int c
    while t:
        low = t & (~t + 1)
        t ^= low
        c = _ctz(low)
        if masks[c] == common:
            return c
    return -1


def bound_tables(below):
    cdef int n = len(below)
    cdef uint64_t bel[64]
    cdef uint64_t abv[64]
    cdef int x, y, m
    cdef uint64_t common, t, low
    for x in range(n):
        bel[x] = <uint64_t> below[x]
        abv[x] = 0
    for y in range(n):
        t = bel[y]
        while t:
            low = t & (~t + 1)
            t ^= low
            abv[_ctz(low)] |= (<uint64_t> 1) << y
    meet = [[0] * n for _ in range(n)]
    join = [[0] * n for _ in range(n)]
    for x in range(n):
        for y in range(x, n):
            common = bel[x] & bel[y]
            m = _principal(bel, common)
            if m < 0:
                return None, None, ("meet", x, y)
            meet[x][y] = m
            meet[y][x] = m
            common = abv[x] & abv[y]
            m = _principal(abv, common)
            if m < 0:
                return None, None, ("join", x, y)
            join[x][y] = m
            join[y][x] = m
    return meet, join, None


def distributive_witness(meet, join):
    cdef int n = len(meet)
    cdef int *mt = <int *> PyMem_Malloc(n * n * sizeof(int))
    cdef int *jt = <int *> PyMem_Malloc(n * n * sizeof(int))
    cdef int x, y, z, xy
    cdef int *mx
    cdef int *jy
    cdef int *jxy
    if mt == NULL or jt == NULL:
        PyMem_Free(mt)
        PyMem_Free(jt)
        raise MemoryError()
    try:
        for x in range(n):
            row = meet[x]
            for y in range(n):
                mt[x * n + y] = row[y]
            row = join[x]
            for y in range(n):
                jt[x * n + y] = row[y]
        for x in range(n):
            mx = mt + x * n
            for y in range(n):
                xy = mx[y]
                jy = jt + y * n
                jxy = jt + xy * n
                for z in range(n):
                    if mx[jy[z]] != jxy[mx[z]]:
                        return (x, y, z)
        return None
    finally:
        PyMem_Free(mt)
        PyMem_Free(jt)


def downset_masks(below, cap):
    cdef int n = len(below)
    cdef uint64_t masks[64]
    cdef int order[64]
    cdef int i, j, k, e, count, best
    cdef uint64_t need, bit, s
    cdef bint used[64]
    for i in range(n):
        masks[i] = <uint64_t> below[i]
        used[i] = False
    # Linear extension: ascending lower-cone size, ties by index. Matches
    # the sort in the pure kernel, so output order is identical.
    for k in range(n):
        best = -1
        for i in range(n):
            if used[i]:
                continue
            if best < 0:
                best = i
            elif _popcount(masks[i]) < _popcount(masks[best]):
                best = i
        order[k] = best
        used[best] = True
    sets = [0]
    for k in range(n):
        e = order[k]
        need = masks[e] & ~((<uint64_t> 1) << e)
        bit = (<uint64_t> 1) << e
        grown = []
        for obj in sets:
            s = <uint64_t> obj
            if need & ~s == 0:
                grown.append(s | bit)
        sets.extend(grown)
        if len(sets) > cap:
            return None
    sets.sort()
    return sets


cdef inline int _popcount(uint64_t x):
    cdef int c = 0
    while x:
        x &= x - 1
        c += 1
    return c
