"""Exact dense linear algebra over the rationals.

Entries are :class:`fractions.Fraction`; nothing here ever touches a float.
Matrices are small (a few hundred columns at most), so plain Gauss-Jordan
elimination on lists of fractions is all that is needed.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

__all__ = [
    "Matrix",
    "as_fraction",
    "rref",
    "rank",
    "kernel_basis",
    "column_span_equal",
]


def as_fraction(x) -> Fraction:
    """Coerce ints, fractions and rational strings ("3", "-2/5") to Fraction.

    Floats are refused: they would silently smuggle rounding into an exact
    computation.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not matrix entries")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot use {type(x).__name__} as an exact scalar")


class Matrix:
    """Immutable rows x cols matrix of Fractions, stored row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Iterable = ()):
        entries = tuple(as_fraction(e) for e in entries)
        if rows < 0 or cols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        if len(entries) != rows * cols:
            raise ValueError(
                f"expected {rows * cols} entries for a {rows}x{cols} matrix, "
                f"got {len(entries)}"
            )
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    # -- construction -----------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> Matrix:
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged rows")
        return cls(len(rows), cols, [x for r in rows for x in r])

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int) -> Matrix:
        """Build a matrix from column vectors; `rows` is needed when there are none."""
        columns = [list(c) for c in columns]
        for c in columns:
            if len(c) != rows:
                raise ValueError(f"column of length {len(c)}, expected {rows}")
        return cls(
            rows,
            len(columns),
            [columns[j][i] for i in range(rows) for j in range(len(columns))],
        )

    @classmethod
    def zeros(cls, rows: int, cols: int) -> Matrix:
        return cls(rows, cols, [0] * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> Matrix:
        return cls(n, n, [1 if i == j else 0 for i in range(n) for j in range(n)])

    @classmethod
    def hstack(cls, blocks: Sequence[Matrix], rows: int) -> Matrix:
        cols = []
        for b in blocks:
            if b.rows != rows:
                raise ValueError(f"block has {b.rows} rows, expected {rows}")
            cols.extend(b.columns())
        return cls.from_columns(cols, rows)

    # -- access -----------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> tuple[Fraction, ...]:
        return self.entries[j::self.cols] if self.cols else ()

    def to_rows(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def columns(self) -> list[tuple[Fraction, ...]]:
        return [self.column(j) for j in range(self.cols)]

    def transpose(self) -> Matrix:
        return Matrix.from_columns(self.to_rows(), self.cols)

    def is_zero(self) -> bool:
        return not any(self.entries)

    def __matmul__(self, other: Matrix) -> Matrix:
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        a = self.to_rows()
        b = other.to_rows()
        out = []
        for i in range(self.rows):
            ai = a[i]
            acc = [Fraction(0)] * other.cols
            for k, aik in enumerate(ai):
                if aik:
                    bk = b[k]
                    for j in range(other.cols):
                        if bk[j]:
                            acc[j] += aik * bk[j]
            out.extend(acc)
        return Matrix(self.rows, other.cols, out)

    def __neg__(self) -> Matrix:
        return Matrix(self.rows, self.cols, [-e for e in self.entries])

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in self.row(i)) for i in range(self.rows))
        return f"Matrix({self.rows}x{self.cols}: [{body}])"


def _rref_rows(rows: list[list[Fraction]], ncols: int) -> list[int]:
    """Gauss-Jordan in place; returns pivot columns."""
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        pr = rows[r]
        inv = 1 / pr[c]
        if inv != 1:
            for j in range(c, ncols):
                if pr[j]:
                    pr[j] *= inv
        for i in range(nrows):
            if i != r:
                f = rows[i][c]
                if f:
                    ri = rows[i]
                    for j in range(c, ncols):
                        if pr[j]:
                            ri[j] -= f * pr[j]
        pivots.append(c)
        r += 1
    return pivots


def rref(m: Matrix) -> tuple[Matrix, tuple[int, ...]]:
    """Reduced row echelon form of `m` and its strictly increasing pivot columns."""
    rows = m.to_rows()
    pivots = _rref_rows(rows, m.cols)
    return Matrix(m.rows, m.cols, [x for r in rows for x in r]), tuple(pivots)


def rank(m: Matrix) -> int:
    if m.rows == 0 or m.cols == 0:
        return 0
    # eliminate on whichever orientation has fewer columns
    rows = m.to_rows() if m.cols <= m.rows else m.transpose().to_rows()
    return len(_rref_rows(rows, len(rows[0])))


def kernel_basis(m: Matrix) -> Matrix:
    """Canonical null-space basis as the columns of a (cols x k) matrix.

    One column per free variable, in increasing column order; that free
    variable is 1, the other free variables 0, and pivot variables are read
    off the reduced form.
    """
    reduced, pivots = rref(m)
    n = m.cols
    pivot_set = set(pivots)
    free = [j for j in range(n) if j not in pivot_set]
    basis = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for r, p in enumerate(pivots):
            v[p] = -reduced[r, f]
        basis.append(v)
    return Matrix.from_columns(basis, n)


def column_span_equal(a: Matrix, b: Matrix) -> bool:
    """True when the columns of `a` and `b` span the same subspace."""
    if a.rows != b.rows:
        raise ValueError("column spaces live in different ambient dimensions")
    ra, rb = rank(a), rank(b)
    if ra != rb:
        return False
    both = Matrix.hstack([a, b], a.rows)
    return rank(both) == ra
