# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels; same contracts as ``_kernels_py``."""

from libc.stdlib cimport malloc, free
from libc.string cimport memset

cdef enum:
    MAXM = 16


cdef extern from *:
    int __builtin_parity(unsigned int) nogil


cdef inline int _popparity(unsigned int x) noexcept nogil:
    return __builtin_parity(x)


cdef bint _next_permutation(int* a, int n) noexcept nogil:
    cdef int i = n - 2
    cdef int j, t
    while i >= 0 and a[i] >= a[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = n - 1
    while a[j] <= a[i]:
        j -= 1
    t = a[i]; a[i] = a[j]; a[j] = t
    i += 1
    j = n - 1
    while i < j:
        t = a[i]; a[i] = a[j]; a[j] = t
        i += 1
        j -= 1
    return True


def character_gram(int m):
    if m < 0 or m >= MAXM:
        raise ValueError("m out of range for the compiled kernel")
    cdef int size = m + 1
    cdef int perm[MAXM]
    cdef unsigned int cmask[MAXM]
    cdef int clen[MAXM]
    cdef long long poly[MAXM + 1]
    cdef long long gram[MAXM + 1][MAXM + 1]
    cdef int ncyc, start, v, length, d, a, b, c
    cdef unsigned int seen, mask, signs, nsigns = 1u << m
    cdef long long coef, pa

    memset(gram, 0, sizeof(gram))
    for v in range(m):
        perm[v] = v
    with nogil:
        while True:
            ncyc = 0
            seen = 0
            for start in range(m):
                if (seen >> start) & 1u:
                    continue
                mask = 0
                length = 0
                v = start
                while not ((mask >> v) & 1u):
                    mask |= 1u << v
                    length += 1
                    v = perm[v]
                seen |= mask
                cmask[ncyc] = mask
                clen[ncyc] = length
                ncyc += 1
            for signs in range(nsigns):
                poly[0] = 1
                for d in range(1, size):
                    poly[d] = 0
                for c in range(ncyc):
                    length = clen[c]
                    if _popparity(signs & cmask[c]):
                        for d in range(m - length, -1, -1):
                            poly[d + length] -= poly[d]
                    else:
                        for d in range(m - length, -1, -1):
                            poly[d + length] += poly[d]
                for a in range(size):
                    pa = poly[a]
                    if pa != 0:
                        for b in range(size):
                            gram[a][b] += pa * poly[b]
            if m == 0 or not _next_permutation(perm, m):
                break
    return [[gram[a][b] for b in range(size)] for a in range(size)]


def orienting_masks(int m, cup_pairs, unsigned int ray_mask):
    if m < 0 or m > 30:
        raise ValueError("m out of range for the compiled kernel")
    cdef int npairs = len(cup_pairs)
    cdef int* left = <int*> malloc(max(npairs, 1) * sizeof(int))
    cdef int* right = <int*> malloc(max(npairs, 1) * sizeof(int))
    cdef int p
    cdef unsigned int g, total = 1u << m
    cdef bint good
    out = []
    try:
        for p, (i, j) in enumerate(cup_pairs):
            left[p] = i
            right[p] = j
        for g in range(total):
            if g & ray_mask:
                continue
            good = True
            for p in range(npairs):
                if ((g >> left[p]) & 1u) == ((g >> right[p]) & 1u):
                    good = False
                    break
            if good:
                out.append(g)
    finally:
        free(left)
        free(right)
    return out
