"""Dense square matrices over the dyadic rationals with an exact determinant."""

from __future__ import annotations

from typing import Iterable, Sequence

from .dyadic import Dyadic


class ExactMatrix:
    """Immutable square matrix of :class:`Dyadic` entries."""

    __slots__ = ("_rows",)

    def __init__(self, rows: Iterable[Iterable]):
        rows = tuple(tuple(Dyadic.coerce(x) for x in row) for row in rows)
        n = len(rows)
        if any(len(row) != n for row in rows):
            raise ValueError("ExactMatrix must be square")
        self._rows = rows

    @classmethod
    def zeros(cls, n: int) -> "ExactMatrix":
        return cls([[0] * n for _ in range(n)])

    @property
    def dimension(self) -> int:
        return len(self._rows)

    def __getitem__(self, index):
        i, j = index
        return self._rows[i][j]

    def rows(self) -> tuple[tuple[Dyadic, ...], ...]:
        return self._rows

    def minor(self, delete: int) -> "ExactMatrix":
        """Remove row and column ``delete``."""
        n = self.dimension
        if not 0 <= delete < n:
            raise IndexError(f"row/column {delete} out of range for {n}x{n} matrix")
        return ExactMatrix(
            [x for j, x in enumerate(row) if j != delete]
            for i, row in enumerate(self._rows)
            if i != delete
        )

    def to_lists(self) -> list[list[Dyadic]]:
        return [list(row) for row in self._rows]

    def __eq__(self, other):
        if isinstance(other, ExactMatrix):
            return self._rows == other._rows
        if isinstance(other, Sequence):
            try:
                return self == ExactMatrix(other)
            except (TypeError, ValueError):
                return False
        return NotImplemented

    def __hash__(self):
        return hash(self._rows)

    def __repr__(self):
        body = ", ".join("[" + ", ".join(str(x) for x in row) + "]" for row in self._rows)
        return f"ExactMatrix([{body}])"


def bareiss_det(a: list[list[int]]) -> int:
    """Determinant of an integer matrix by fraction-free Gaussian elimination.

    The input is left untouched. Every division in the loop is exact (Sylvester's
    identity), so the intermediate entries stay integers of bounded size.
    """
    a = [list(row) for row in a]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        row_k = a[k]
        for i in range(k + 1, n):
            row_i = a[i]
            lead = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - lead * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def det_exact(m: ExactMatrix) -> Dyadic:
    """Exact determinant of a dyadic matrix.

    Entries are brought to a common denominator ``2**e``, the integer matrix
    goes through :func:`bareiss_det`, and the result is rescaled by
    ``2**(-e*n)``. The 0x0 matrix has determinant 1.
    """
    n = m.dimension
    if n == 0:
        return Dyadic(1)
    e = max(x.exponent for row in m.rows() for x in row)
    scaled = [[x.numerator << (e - x.exponent) for x in row] for row in m.rows()]
    return Dyadic(bareiss_det(scaled), e * n)
