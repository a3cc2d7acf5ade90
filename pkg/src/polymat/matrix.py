"""Dense matrices of polynomials.

Exact determinants and rank via fraction-free (Bareiss) elimination, minor
enumeration with the gcd chain d_i and reduced minors, column reduced
minors, Fitting ideals of a presentation matrix, and unimodularity.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Sequence

from .groebner import IdealBasis, buchberger
from .poly import (DEGREVLEX, DimensionError, MonomialOrder, Polynomial,
                   exact_div, gcd_many)


class ShapeError(ValueError):
    """Matrix shapes incompatible with the requested operation."""


class PolyMatrix:
    """An l x m matrix of polynomials sharing one ambient variable count."""

    __slots__ = ("rows", "cols", "nvars", "entries")

    def __init__(self, entries: Sequence[Sequence[Polynomial]]):
        if not entries or not entries[0]:
            raise ShapeError("matrix must have at least one row and column")
        rows = len(entries)
        cols = len(entries[0])
        nvars = entries[0][0].nvars
        grid = []
        for row in entries:
            if len(row) != cols:
                raise ShapeError("ragged rows")
            for p in row:
                if p.nvars != nvars:
                    raise DimensionError("entries have mixed variable counts")
            grid.append(tuple(row))
        self.rows = rows
        self.cols = cols
        self.nvars = nvars
        self.entries = tuple(grid)

    # -- constructors ---------------------------------------------------

    @classmethod
    def identity(cls, n: int, nvars: int) -> "PolyMatrix":
        one = Polynomial.one(nvars)
        zero = Polynomial.zero(nvars)
        return cls([[one if i == j else zero for j in range(n)]
                    for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int, nvars: int) -> "PolyMatrix":
        zero = Polynomial.zero(nvars)
        return cls([[zero] * cols for _ in range(rows)])

    @classmethod
    def diagonal(cls, diag: Sequence[Polynomial]) -> "PolyMatrix":
        n = len(diag)
        zero = Polynomial.zero(diag[0].nvars)
        return cls([[diag[i] if i == j else zero for j in range(n)]
                    for i in range(n)])

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Polynomial]]) -> "PolyMatrix":
        return cls(rows)

    # -- basic access -----------------------------------------------------

    def __getitem__(self, ij: tuple[int, int]) -> Polynomial:
        i, j = ij
        return self.entries[i][j]

    def row(self, i: int) -> tuple[Polynomial, ...]:
        return self.entries[i]

    def column(self, j: int) -> tuple[Polynomial, ...]:
        return tuple(self.entries[i][j] for i in range(self.rows))

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __eq__(self, other) -> bool:
        return (isinstance(other, PolyMatrix)
                and self.shape == other.shape
                and self.entries == other.entries)

    def __hash__(self):
        return hash(self.entries)

    def map(self, fn: Callable[[Polynomial], Polynomial]) -> "PolyMatrix":
        return PolyMatrix([[fn(p) for p in row] for row in self.entries])

    def transpose(self) -> "PolyMatrix":
        return PolyMatrix([[self.entries[i][j] for i in range(self.rows)]
                           for j in range(self.cols)])

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> "PolyMatrix":
        return PolyMatrix([[self.entries[i][j] for j in col_idx]
                           for i in row_idx])

    def vstack(self, other: "PolyMatrix") -> "PolyMatrix":
        if other.cols != self.cols:
            raise ShapeError("column counts differ")
        return PolyMatrix(list(self.entries) + list(other.entries))

    # -- arithmetic -------------------------------------------------------

    def __mul__(self, other: "PolyMatrix") -> "PolyMatrix":
        if not isinstance(other, PolyMatrix):
            return self.map(lambda p: p * other)
        if self.cols != other.rows:
            raise ShapeError(
                f"cannot multiply {self.shape} by {other.shape}")
        zero = Polynomial.zero(self.nvars)
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = zero
                for k in range(self.cols):
                    acc = acc + self.entries[i][k] * other.entries[k][j]
                row.append(acc)
            out.append(row)
        return PolyMatrix(out)

    def __sub__(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.shape != other.shape:
            raise ShapeError("shape mismatch")
        return PolyMatrix([[a - b for a, b in zip(ra, rb)]
                           for ra, rb in zip(self.entries, other.entries)])

    def __add__(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.shape != other.shape:
            raise ShapeError("shape mismatch")
        return PolyMatrix([[a + b for a, b in zip(ra, rb)]
                           for ra, rb in zip(self.entries, other.entries)])

    def substitute(self, index: int, value: Polynomial) -> "PolyMatrix":
        """Entrywise substitution z_{index+1} -> value."""
        return self.map(lambda p: p.substitute(index, value))

    def permute_variables(self, perm: Sequence[int]) -> "PolyMatrix":
        return self.map(lambda p: p.permute_variables(perm))

    # -- elimination ------------------------------------------------------

    def determinant(self) -> Polynomial:
        """Exact determinant by fraction-free Bareiss elimination."""
        if not self.is_square:
            raise ShapeError("determinant of a non-square matrix")
        n = self.rows
        if n == 1:
            return self.entries[0][0]
        m = [list(row) for row in self.entries]
        sign = 1
        prev = Polynomial.one(self.nvars)
        for k in range(n - 1):
            pivot_row = next((i for i in range(k, n) if not m[i][k].is_zero), None)
            if pivot_row is None:
                return Polynomial.zero(self.nvars)
            if pivot_row != k:
                m[k], m[pivot_row] = m[pivot_row], m[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = exact_div(m[k][k] * m[i][j] - m[i][k] * m[k][j],
                                        prev)
                m[i][k] = Polynomial.zero(self.nvars)
            prev = m[k][k]
        det = m[n - 1][n - 1]
        return det if sign > 0 else -det

    def rank(self) -> int:
        """Rank over the fraction field (fraction-free elimination)."""
        m = [list(row) for row in self.entries]
        nrows, ncols = self.rows, self.cols
        r = 0
        prev = Polynomial.one(self.nvars)
        for c in range(ncols):
            pivot_row = next((i for i in range(r, nrows) if not m[i][c].is_zero),
                             None)
            if pivot_row is None:
                continue
            if pivot_row != r:
                m[r], m[pivot_row] = m[pivot_row], m[r]
            for i in range(r + 1, nrows):
                for j in range(c + 1, ncols):
                    m[i][j] = exact_div(m[r][c] * m[i][j] - m[i][c] * m[r][j],
                                        prev)
                m[i][c] = Polynomial.zero(self.nvars)
            prev = m[r][c]
            r += 1
            if r == nrows:
                break
        return r

    # -- unimodularity ------------------------------------------------------

    def is_unimodular(self) -> bool:
        if not self.is_square:
            raise ShapeError("unimodularity is defined for square matrices")
        det = self.determinant()
        return det.is_constant and not det.is_zero

    def inverse_unimodular(self) -> "PolyMatrix":
        """Exact inverse; requires a nonzero constant determinant."""
        if not self.is_square:
            raise ShapeError("inverse of a non-square matrix")
        det = self.determinant()
        if not det.is_constant or det.is_zero:
            raise ValueError("matrix is not unimodular; no polynomial inverse")
        n = self.rows
        inv_det = 1 / det.constant_value()
        if n == 1:
            return PolyMatrix([[Polynomial.constant(self.nvars, inv_det)]])
        out = []
        idx = list(range(n))
        for i in range(n):
            row = []
            for j in range(n):
                minor = self.submatrix([r for r in idx if r != j],
                                       [c for c in idx if c != i]).determinant()
                sign = -1 if (i + j) % 2 else 1
                row.append(minor * (sign * inv_det))
            out.append(row)
        result = PolyMatrix(out)
        assert result * self == PolyMatrix.identity(n, self.nvars)
        return result

    def __str__(self) -> str:
        return "[" + "; ".join(", ".join(str(p) for p in row)
                               for row in self.entries) + "]"

    def __repr__(self) -> str:
        return f"<PolyMatrix {self.rows}x{self.cols} {self}>"


# ---------------------------------------------------------------------------
# minors and reduced minors

@dataclass(frozen=True)
class MinorReport:
    """All i x i minors of a matrix, their gcd d, and the reduced minors b
    with minor_j = d * b_j exactly (all zero minors give d = 0)."""

    size: int
    minors: tuple[Polynomial, ...]
    d: Polynomial
    reduced: tuple[Polynomial, ...]


def all_minors(matrix: PolyMatrix, size: int,
               reverse_subsets: bool = False) -> list[Polynomial]:
    """Every size x size minor, row subsets outer and column subsets inner,
    both in lexicographic subset order (reversed when asked)."""
    if not 1 <= size <= min(matrix.rows, matrix.cols):
        raise ShapeError(f"minor size {size} out of range for {matrix.shape}")
    row_subsets = list(combinations(range(matrix.rows), size))
    col_subsets = list(combinations(range(matrix.cols), size))
    if reverse_subsets:
        row_subsets.reverse()
        col_subsets.reverse()
    memo: dict[tuple, Polynomial] = {}
    zero = Polynomial.zero(matrix.nvars)

    def det(rows: tuple[int, ...], cols: tuple[int, ...]) -> Polynomial:
        if len(rows) == 1:
            return matrix.entries[rows[0]][cols[0]]
        key = (rows, cols)
        hit = memo.get(key)
        if hit is not None:
            return hit
        first = rows[0]
        rest = rows[1:]
        acc = zero
        for t, c in enumerate(cols):
            entry = matrix.entries[first][c]
            if entry.is_zero:
                continue
            sub = det(rest, cols[:t] + cols[t + 1:])
            term = entry * sub
            acc = acc + term if t % 2 == 0 else acc - term
        memo[key] = acc
        return acc

    return [det(r, c) for r in row_subsets for c in col_subsets]


def minors_report(matrix: PolyMatrix, size: int) -> MinorReport:
    minors = all_minors(matrix, size)
    if all(p.is_zero for p in minors):
        zero = Polynomial.zero(matrix.nvars)
        return MinorReport(size, tuple(minors), zero, tuple(minors))
    d = gcd_many(minors)
    reduced = tuple(exact_div(p, d) for p in minors)
    return MinorReport(size, tuple(minors), d, reduced)


def gcd_chain(matrix: PolyMatrix) -> list[Polynomial]:
    """[d_0, d_1, ..., d_k] for k = min(rows, cols); d_0 = 1 by convention."""
    chain = [Polynomial.one(matrix.nvars)]
    for i in range(1, min(matrix.rows, matrix.cols) + 1):
        chain.append(minors_report(matrix, i).d)
    return chain


def column_reduced_minors(matrix: PolyMatrix,
                          reverse_subsets: bool = False) -> list[Polynomial]:
    """Reduced maximal minors of the first full-column-rank r-column
    submatrix, r the rank; empty for the zero matrix.

    The result does not depend on the submatrix choice except for signs,
    which the tests assert.
    """
    r = matrix.rank()
    if r == 0:
        return []
    subsets = list(combinations(range(matrix.cols), r))
    if reverse_subsets:
        subsets.reverse()
    for cols in subsets:
        sub = matrix.submatrix(range(matrix.rows), cols)
        if sub.rank() == r:
            return list(minors_report(sub, r).reduced)
    raise AssertionError("rank-many independent columns must exist")


def row_reduced_minors(matrix: PolyMatrix) -> list[Polynomial]:
    """Mirror of column_reduced_minors acting on rows."""
    return column_reduced_minors(matrix.transpose())


def minor_ideal_generators(matrix: PolyMatrix, size: int) -> list[Polynomial]:
    """Nonzero generators of the ideal of size x size minors; the empty list
    when the size exceeds the shape or all minors vanish."""
    if size <= 0:
        return [Polynomial.one(matrix.nvars)]
    if size > min(matrix.rows, matrix.cols):
        return []
    return [p for p in all_minors(matrix, size) if not p.is_zero]


def fitting_ideal(presentation: PolyMatrix, j: int,
                  order: MonomialOrder = DEGREVLEX) -> IdealBasis:
    """The j-th Fitting ideal of the module presented by the given matrix
    (rows are relations among ``cols`` generators).

    Follows the usual conventions: the whole ring for j >= cols, zero for
    j < max(cols - rows, 0).
    """
    size = presentation.cols - j
    if size <= 0:
        return buchberger([Polynomial.one(presentation.nvars)], order)
    gens = minor_ideal_generators(presentation, size)
    return buchberger(gens, order)
