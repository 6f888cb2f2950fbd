# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled counting kernels; mirror of ``_pykernels``."""

from libc.stdint cimport uint32_t, uint64_t, int64_t

BACKEND = "cython"

cdef enum:
    MAX_SIDE = 16

cdef extern from *:
    int __builtin_popcount(unsigned int) nogil
    int __builtin_popcountll(unsigned long long) nogil


cdef int _m
cdef int _last
cdef uint32_t _full
cdef uint32_t _col_used[MAX_SIDE]


cdef int64_t _fill(int r, int c, uint32_t row_used) nogil:
    cdef int64_t total = 0
    cdef uint32_t avail, bit
    if c == _m:
        if r == _last:
            return 1
        return _fill(r + 1, 1, (<uint32_t>1) << (r + 1))
    avail = _full & ~row_used & ~_col_used[c]
    while avail:
        bit = avail & (~avail + 1)
        avail ^= bit
        _col_used[c] |= bit
        total += _fill(r, c + 1, row_used | bit)
        _col_used[c] ^= bit
    return total


def reduced_latin_count(int m):
    """Number of reduced Latin squares of side ``m``."""
    global _m, _last, _full
    cdef int c
    cdef int64_t result
    if m < 1:
        raise ValueError("side must be positive")
    if m > 8:
        raise ValueError("side too large for the compiled kernel")
    if m <= 2:
        return 1
    _m = m
    _last = m - 2
    _full = ((<uint32_t>1) << m) - 1
    for c in range(m):
        _col_used[c] = (<uint32_t>1) << c
    with nogil:
        result = _fill(1, 1, (<uint32_t>1) << 1)
    return result


cdef int64_t _ryser(uint32_t* rows, int m) nogil:
    cdef int64_t total = 0, prod
    cdef uint32_t subset
    cdef int i, k
    for subset in range(1, (<uint32_t>1) << m):
        prod = 1
        for i in range(m):
            k = __builtin_popcount(rows[i] & subset)
            if k == 0:
                prod = 0
                break
            prod *= k
        if prod:
            if (m - __builtin_popcount(subset)) & 1:
                total -= prod
            else:
                total += prod
    return total


def permanent_rows(rows, int m):
    """Permanent of a 0/1 matrix given as ``m`` row bitmasks; exact for m <= 13."""
    cdef uint32_t buf[MAX_SIDE]
    cdef int i
    if m == 0:
        return 1
    if m > 13:
        raise ValueError("side too large for the compiled kernel")
    for i in range(m):
        buf[i] = rows[i]
    return _ryser(buf, m)


def shao_wei_sum(int m):
    """Sum over all m x m 0/1 matrices A of (-1)^(zeros of A) * C(per A, m); m <= 5."""
    cdef uint32_t rows[MAX_SIDE]
    cdef int64_t binom[121]
    cdef int64_t total = 0, per
    cdef uint64_t mask, limit
    cdef uint32_t full
    cdef int i, cells, zeros, p, j
    if m < 1:
        raise ValueError("side must be positive")
    if m > 5:
        raise ValueError("side too large for the compiled kernel")
    # C(p, m) for every reachable permanent value 0..m!
    for p in range(121):
        binom[p] = 1
        for j in range(m):
            binom[p] = binom[p] * (p - j) // (j + 1) if p >= m else 0
    cells = m * m
    full = ((<uint32_t>1) << m) - 1
    limit = (<uint64_t>1) << cells
    with nogil:
        mask = 0
        while mask < limit:
            for i in range(m):
                rows[i] = <uint32_t>((mask >> (m * i)) & full)
            per = _ryser(rows, m)
            if per >= m:
                zeros = cells - __builtin_popcountll(mask)
                if zeros & 1:
                    total -= binom[per]
                else:
                    total += binom[per]
            mask += 1
    return total
