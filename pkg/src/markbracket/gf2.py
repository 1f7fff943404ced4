"""Dense matrices over GF(2) stored as packed integer rows.

Row ``i`` is an ``int`` whose bit ``j`` holds entry ``(i, j)``; row reduction
is a sequence of XORs on whole rows.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DimensionError


def rank_of_rows(rows: Iterable[int]) -> int:
    """Rank over GF(2) of a collection of packed rows."""
    pivots: dict[int, int] = {}
    for row in rows:
        while row:
            top = row.bit_length() - 1
            pivot = pivots.get(top)
            if pivot is None:
                pivots[top] = row
                break
            row ^= pivot
    return len(pivots)


@dataclass(frozen=True)
class Gf2Matrix:
    n_rows: int
    n_cols: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.n_rows < 0 or self.n_cols < 0:
            raise DimensionError("matrix dimensions must be nonnegative")
        if len(self.rows) != self.n_rows:
            raise DimensionError(f"expected {self.n_rows} rows, got {len(self.rows)}")
        limit = 1 << self.n_cols
        for row in self.rows:
            if row < 0 or row >= limit:
                raise DimensionError("row has bits outside the column range")

    @classmethod
    def from_lists(cls, entries: Sequence[Sequence[int]], n_cols: int | None = None) -> Gf2Matrix:
        entries = [list(r) for r in entries]
        if n_cols is None:
            n_cols = len(entries[0]) if entries else 0
        rows = []
        for r in entries:
            if len(r) != n_cols:
                raise DimensionError("ragged matrix")
            packed = 0
            for j, x in enumerate(r):
                if x & 1:
                    packed |= 1 << j
            rows.append(packed)
        return cls(len(rows), n_cols, tuple(rows))

    @classmethod
    def zeros(cls, n_rows: int, n_cols: int | None = None) -> Gf2Matrix:
        if n_cols is None:
            n_cols = n_rows
        return cls(n_rows, n_cols, (0,) * n_rows)

    @classmethod
    def identity(cls, n: int) -> Gf2Matrix:
        return cls(n, n, tuple(1 << i for i in range(n)))

    def to_lists(self) -> list[list[int]]:
        return [[(row >> j) & 1 for j in range(self.n_cols)] for row in self.rows]

    @property
    def is_square(self) -> bool:
        return self.n_rows == self.n_cols

    def __getitem__(self, index: tuple[int, int]) -> int:
        i, j = index
        if not (0 <= i < self.n_rows and 0 <= j < self.n_cols):
            raise DimensionError(f"entry ({i}, {j}) out of range for {self.n_rows}x{self.n_cols}")
        return (self.rows[i] >> j) & 1

    def rank(self) -> int:
        return rank_of_rows(self.rows)

    def permuted(self, perm: Sequence[int]) -> Gf2Matrix:
        """Apply the same permutation to rows and columns (square only)."""
        if not self.is_square or sorted(perm) != list(range(self.n_rows)):
            raise DimensionError("permutation must match a square matrix")
        new_rows = []
        for i in range(self.n_rows):
            src = self.rows[perm[i]]
            packed = 0
            for j in range(self.n_cols):
                if (src >> perm[j]) & 1:
                    packed |= 1 << j
            new_rows.append(packed)
        return Gf2Matrix(self.n_rows, self.n_cols, tuple(new_rows))

    def __str__(self):
        return "\n".join(" ".join(str(x) for x in r) for r in self.to_lists())


def nullity(m: Gf2Matrix) -> int:
    """``n_cols - rank`` of a square matrix; the 0x0 matrix has nullity 0."""
    if not m.is_square:
        raise DimensionError(f"nullity needs a square matrix, got {m.n_rows}x{m.n_cols}")
    return m.n_cols - m.rank()


def delete_row_col(m: Gf2Matrix, indices: Iterable[int]) -> Gf2Matrix:
    """Remove the listed rows and the same-numbered columns, keeping order."""
    drop = set(indices)
    for i in drop:
        if not (0 <= i < m.n_rows and i < m.n_cols):
            raise DimensionError(f"index {i} out of range for {m.n_rows}x{m.n_cols}")
    keep_rows = [i for i in range(m.n_rows) if i not in drop]
    keep_cols = [j for j in range(m.n_cols) if j not in drop]
    rows = []
    for i in keep_rows:
        src = m.rows[i]
        packed = 0
        for k, j in enumerate(keep_cols):
            if (src >> j) & 1:
                packed |= 1 << k
        rows.append(packed)
    return Gf2Matrix(len(keep_rows), len(keep_cols), tuple(rows))


def block_diag(*blocks: Gf2Matrix) -> Gf2Matrix:
    rows = []
    offset = 0
    for b in blocks:
        rows.extend(r << offset for r in b.rows)
        offset += b.n_cols
    return Gf2Matrix(len(rows), offset, tuple(rows))
