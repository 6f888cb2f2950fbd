"""Latin squares, the rainbow matrix encoding, and three ways to count them.

* ``count_latin_squares`` enumerates reduced squares and scales by m!(m-1)!.
* ``count_latin_via_permanent`` evaluates the Shao-Wei permanent sum.
* ``enumerate_latin_squares`` is plain cell-by-cell backtracking, kept as an
  independent oracle for small sides.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial
from typing import Iterator, Sequence

from . import kernels
from .errors import InvalidLatinSquare, NotMatrixEncodable, OutOfSupportedRange
from .graph import ColoredMultigraph, RainbowCollection

MAX_REDUCED_SIDE = 7
MAX_PERMANENT_SIDE = 4
MAX_PERMANENT_SIDE_LONG = 5
MAX_PERMANENT_MATRIX = 20


@dataclass(frozen=True)
class LatinSquare:
    cells: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        cells = tuple(tuple(int(x) for x in row) for row in self.cells)
        object.__setattr__(self, "cells", cells)
        m = len(cells)
        symbols = set(range(m))
        for i, row in enumerate(cells):
            if len(row) != m or set(row) != symbols:
                raise InvalidLatinSquare(f"row {i} is not a permutation of 0..{m - 1}")
        for j in range(m):
            if {row[j] for row in cells} != symbols:
                raise InvalidLatinSquare(f"column {j} is not a permutation of 0..{m - 1}")

    @property
    def side(self) -> int:
        return len(self.cells)

    def __getitem__(self, ij):
        i, j = ij
        return self.cells[i][j]

    def to_lists(self) -> list[list[int]]:
        return [list(r) for r in self.cells]

    @classmethod
    def cyclic(cls, m: int) -> "LatinSquare":
        """Row i is the identity shifted right by i: cell (i, j) = (j - i) mod m."""
        return cls(tuple(tuple((j - i) % m for j in range(m)) for i in range(m)))


def is_latin(cells: Sequence[Sequence[int]]) -> bool:
    try:
        LatinSquare(tuple(tuple(r) for r in cells))
    except InvalidLatinSquare:
        return False
    return True


def default_slots(g: ColoredMultigraph) -> list[tuple[int, int]]:
    """Distinct endpoint pairs of ``g`` in ascending order."""
    return sorted({e.ends for e in g.edges})


def rainbow_matrix_of(
    g: ColoredMultigraph,
    coll: RainbowCollection,
    slot_order: Sequence[tuple[int, int]] | None = None,
) -> LatinSquare:
    """Cell (i, j) is the color of part i's edge lying on slot j.

    A slot is an unordered vertex pair.  The default slot order is the sorted
    list of distinct endpoint pairs, which for a same-center star graph is its
    leaves in ascending order and for identical trees the template's edges.
    """
    slots = [tuple(sorted(s)) for s in (slot_order if slot_order is not None else default_slots(g))]
    m = len(coll.parts)
    if len(slots) != m or len(set(slots)) != m:
        raise NotMatrixEncodable(f"need {m} distinct slots, got {len(slots)}")
    index = {s: j for j, s in enumerate(slots)}
    rows = []
    for i, part in enumerate(coll.parts):
        row = [None] * m
        for eid in part.edges:
            e = g.edges[eid]
            j = index.get(e.ends)
            if j is None:
                raise NotMatrixEncodable(f"part {i}: edge {eid} lies on no slot")
            if row[j] is not None:
                raise NotMatrixEncodable(f"part {i}: slot {slots[j]} used twice")
            row[j] = e.color
        if None in row:
            raise NotMatrixEncodable(f"part {i}: some slot left empty")
        rows.append(tuple(row))
    try:
        return LatinSquare(tuple(rows))
    except InvalidLatinSquare as exc:
        raise NotMatrixEncodable(str(exc)) from exc


def enumerate_latin_squares(m: int) -> Iterator[LatinSquare]:
    """Yield every Latin square of side m in lexicographic order (small m only)."""
    if m < 1:
        raise OutOfSupportedRange(f"side {m} < 1")
    full = (1 << m) - 1
    grid = [[0] * m for _ in range(m)]
    row_used = [0] * m
    col_used = [0] * m

    def place(k):
        if k == m * m:
            yield LatinSquare(tuple(tuple(r) for r in grid))
            return
        i, j = divmod(k, m)
        avail = full & ~row_used[i] & ~col_used[j]
        for s in range(m):
            bit = 1 << s
            if avail & bit:
                grid[i][j] = s
                row_used[i] |= bit
                col_used[j] |= bit
                yield from place(k + 1)
                row_used[i] ^= bit
                col_used[j] ^= bit

    yield from place(0)


def reduced_count(m: int) -> int:
    if not 1 <= m <= MAX_REDUCED_SIDE:
        raise OutOfSupportedRange(f"reduced-square enumeration supports sides 1..{MAX_REDUCED_SIDE}, got {m}")
    return kernels.reduced_latin_count(m)


def count_latin_squares(m: int) -> int:
    """L_m = m! (m-1)! R_m, with R_m counted by enumerating reduced squares."""
    return factorial(m) * factorial(m - 1) * reduced_count(m)


def count_omega(n: int) -> int:
    """Collections of n-1 rainbow stars in the same-center star graph on n vertices."""
    if n < 1:
        raise OutOfSupportedRange(f"n must be at least 1, got {n}")
    if n == 1:
        return 1  # L_0 = 0! = 1
    m = n - 1
    q, r = divmod(count_latin_squares(m), factorial(m))
    if r:
        raise ArithmeticError(f"L_{m} not divisible by {m}!")
    return q


def permanent(a: Sequence[Sequence[int]]) -> int:
    """Permanent of a square 0/1 matrix by inclusion-exclusion over column subsets."""
    m = len(a)
    if m > MAX_PERMANENT_MATRIX:
        raise OutOfSupportedRange(f"permanent supports sides up to {MAX_PERMANENT_MATRIX}, got {m}")
    rows = []
    for row in a:
        if len(row) != m or any(x not in (0, 1) for x in row):
            raise ValueError("expected a square 0/1 matrix")
        rows.append(sum(1 << j for j, x in enumerate(row) if x))
    return kernels.permanent_rows(rows, m)


def permanent_sum(m: int, allow_long: bool = False) -> int:
    """sum over all m x m 0/1 matrices A of (-1)^(zeros of A) * C(per A, m)."""
    cap = MAX_PERMANENT_SIDE_LONG if allow_long else MAX_PERMANENT_SIDE
    if not 1 <= m <= cap:
        hint = "" if allow_long or m != MAX_PERMANENT_SIDE_LONG else " (pass allow_long for side 5)"
        raise OutOfSupportedRange(f"permanent formula supports sides 1..{cap}, got {m}{hint}")
    return kernels.shao_wei_sum(m)


def count_latin_via_permanent(m: int, allow_long: bool = False) -> int:
    return factorial(m) * permanent_sum(m, allow_long)


def omega_via_permanent(n: int, allow_long: bool = False) -> int:
    """Omega(n) straight from the permanent sum over (n-1) x (n-1) matrices."""
    if n < 1:
        raise OutOfSupportedRange(f"n must be at least 1, got {n}")
    if n == 1:
        return 1
    return permanent_sum(n - 1, allow_long)
