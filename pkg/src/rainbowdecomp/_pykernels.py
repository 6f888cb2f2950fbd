"""Pure-Python implementations of the counting kernels.

Same signatures and results as the compiled ``_kernels`` module; used when
the extension is not built or ``RAINBOWDECOMP_PURE_PYTHON`` is set.
"""

from math import comb

BACKEND = "python"


def reduced_latin_count(m):
    """Number of reduced Latin squares of side ``m`` (first row and column in order).

    Rows 1..m-2 are enumerated cell by cell; the last row of a Latin
    rectangle with m-1 rows is forced, so every completed rectangle is one
    square.
    """
    if m < 1:
        raise ValueError("side must be positive")
    if m <= 2:
        return 1
    full = (1 << m) - 1
    col_used = [1 << c for c in range(m)]
    last = m - 2

    def fill(r, c, row_used):
        if c == m:
            if r == last:
                return 1
            return fill(r + 1, 1, 1 << (r + 1))
        total = 0
        avail = full & ~row_used & ~col_used[c]
        while avail:
            bit = avail & -avail
            avail ^= bit
            col_used[c] |= bit
            total += fill(r, c + 1, row_used | bit)
            col_used[c] ^= bit
        return total

    return fill(1, 1, 1 << 1)


def permanent_rows(rows, m):
    """Permanent of a 0/1 matrix given as ``m`` row bitmasks (Ryser's formula)."""
    if m == 0:
        return 1
    total = 0
    for subset in range(1, 1 << m):
        prod = 1
        for row in rows:
            k = (row & subset).bit_count()
            if not k:
                prod = 0
                break
            prod *= k
        if prod:
            size = subset.bit_count()
            total += prod if (m - size) % 2 == 0 else -prod
    return total


def shao_wei_sum(m):
    """Sum over all m x m 0/1 matrices A of (-1)^(zeros of A) * C(per A, m)."""
    if m < 1:
        raise ValueError("side must be positive")
    full = (1 << m) - 1
    cells = m * m
    cache = {}
    total = 0
    for mask in range(1 << cells):
        rows = tuple(sorted((mask >> (m * i)) & full for i in range(m)))
        if rows[0] == 0:
            continue
        per = cache.get(rows)
        if per is None:
            per = cache[rows] = permanent_rows(rows, m)
        if per < m:
            continue
        zeros = cells - mask.bit_count()
        term = comb(per, m)
        total += -term if zeros & 1 else term
    return total
