"""Exact linear algebra over the rationals.

Entries are :class:`fractions.Fraction`; nothing here ever touches a float.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floating point entries are not allowed")
    return Fraction(x)


class RationalMatrix:
    """A dense ``rows x cols`` matrix of Fractions.

    Instances are treated as immutable; every operation returns a new matrix.
    """

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, rows: int, cols: int, data: Sequence[Sequence] | None = None):
        if rows < 0 or cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        self.rows = rows
        self.cols = cols
        if data is None:
            self._data = tuple(tuple(Fraction(0) for _ in range(cols)) for _ in range(rows))
        else:
            if len(data) != rows or any(len(r) != cols for r in data):
                raise ValueError(f"data does not have shape {rows}x{cols}")
            self._data = tuple(tuple(_frac(x) for x in r) for r in data)

    @classmethod
    def from_rows(cls, data: Sequence[Sequence], cols: int | None = None) -> "RationalMatrix":
        if not data:
            return cls(0, cols or 0)
        return cls(len(data), len(data[0]), data)

    @classmethod
    def identity(cls, n: int, scale=1) -> "RationalMatrix":
        s = _frac(scale)
        return cls(n, n, [[s if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RationalMatrix":
        return cls(rows, cols)

    def __getitem__(self, idx):
        i, j = idx
        return self._data[i][j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self._data[i]

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self._data]

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self):
        return hash((self.rows, self.cols, self._data))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in r) for r in self._data)
        return f"RationalMatrix({self.rows}x{self.cols}: [{body}])"

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        ot = list(zip(*other._data)) if other.rows else [() for _ in range(other.cols)]
        data = [[sum((a * b for a, b in zip(r, c)), Fraction(0)) for c in ot] for r in self._data]
        return RationalMatrix(self.rows, other.cols, data)

    def scale(self, c) -> "RationalMatrix":
        c = _frac(c)
        return RationalMatrix(self.rows, self.cols, [[c * x for x in r] for r in self._data])

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(self.cols, self.rows, [list(c) for c in zip(*self._data)] if self.rows else [[] for _ in range(self.cols)])

    def hstack(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.rows != other.rows:
            raise ValueError("hstack needs equal row counts")
        return RationalMatrix(self.rows, self.cols + other.cols,
                              [a + b for a, b in zip(self._data, other._data)])

    def vstack(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.cols != other.cols:
            raise ValueError("vstack needs equal column counts")
        return RationalMatrix(self.rows + other.rows, self.cols, self._data + other._data)

    def rref(self) -> tuple["RationalMatrix", tuple[int, ...]]:
        """Reduced row echelon form and the pivot columns."""
        rows, pivots = rref_rows(self._data, self.cols)
        rows = rows + [[Fraction(0)] * self.cols for _ in range(self.rows - len(rows))]
        return RationalMatrix(self.rows, self.cols, rows), tuple(pivots)

    def rank(self) -> int:
        return rank(self._data, self.cols)

    def is_identity(self) -> bool:
        return self.rows == self.cols and all(
            self._data[i][j] == (1 if i == j else 0) for i in range(self.rows) for j in range(self.cols)
        )


def rref_rows(rows: Iterable[Sequence], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    """Reduce ``rows`` to reduced echelon form, dropping zero rows.

    Columns are pivoted left to right, so the pivot set is the lexicographically
    smallest possible one; callers rely on this to pick leading monomials.
    """
    basis: list[list[Fraction]] = []
    pivots: list[int] = []
    for r in rows:
        v = [_frac(x) for x in r]
        if len(v) != ncols:
            raise ValueError("row length mismatch")
        for b, p in zip(basis, pivots):
            c = v[p]
            if c:
                v = [x - c * y for x, y in zip(v, b)]
        lead = next((j for j, x in enumerate(v) if x), None)
        if lead is None:
            continue
        inv = 1 / v[lead]
        v = [x * inv for x in v]
        for i, b in enumerate(basis):
            c = b[lead]
            if c:
                basis[i] = [x - c * y for x, y in zip(b, v)]
        k = 0
        while k < len(pivots) and pivots[k] < lead:
            k += 1
        basis.insert(k, v)
        pivots.insert(k, lead)
    return basis, pivots


def rank(rows: Iterable[Sequence], ncols: int) -> int:
    """Rank by forward elimination (no back substitution needed)."""
    echelon: dict[int, list[Fraction]] = {}
    r = 0
    for row in rows:
        v = [_frac(x) for x in row]
        while True:
            lead = next((j for j, x in enumerate(v) if x), None)
            if lead is None:
                break
            piv = echelon.get(lead)
            if piv is None:
                echelon[lead] = v
                r += 1
                break
            c = v[lead] / piv[lead]
            v = [x - c * y for x, y in zip(v, piv)]
    return r
