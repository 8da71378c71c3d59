"""Sylvester-type coefficient matrix of a polynomial vector.

For a vector v of dimension n and degree d, the matrix A has 2d+1 rows and
n(d+1) columns: d+1 copies of the transposed coefficient matrix of v are
laid out left to right, each shifted down by one more row.  Multiplying A
against the stacked coefficients of a vector h of degree at most d produces
the coefficients of the scalar product <v, h>, which turns questions about
polynomial identities into exact linear algebra.

Column indices of A are 1-based throughout this module to match the usual
pivot bookkeeping; coefficient-matrix columns elsewhere are 0-based.  The
accessors on :class:`SylvesterSystem` are the only place both conventions
meet.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import ratlin
from .poly import Polynomial
from .vectors import PolyVector


def sharp(v: PolyVector, bound: int) -> tuple[Fraction, ...]:
    """Stack the coefficient matrix of ``v`` column by column.

    Block j of the result (of width n) holds the degree-j coefficients of
    the components, for j = 0..bound.
    """
    if v.degree > bound:
        raise ValueError("vector degree exceeds the stacking bound")
    out: list[Fraction] = []
    for j in range(bound + 1):
        out.extend(c.coeff(j) for c in v.components)
    return tuple(out)


def flat(values: Sequence[Fraction], n: int, bound: int) -> PolyVector:
    """Inverse of :func:`sharp`: rebuild a vector from stacked coefficients."""
    if n < 1:
        raise ValueError("dimension must be positive")
    if len(values) != n * (bound + 1):
        raise ValueError("stacked length does not match n*(bound+1)")
    comps = []
    for i in range(n):
        comps.append(Polynomial(Fraction(values[j * n + i]) for j in range(bound + 1)))
    return PolyVector(comps)


@dataclass(frozen=True)
class SylvesterSystem:
    """The matrix A of a vector with its reduced form and pivot data.

    ``pivot_cols`` are the 1-based indices of columns that are linearly
    independent of all columns to their left; ``basic_nonpivot`` keeps the
    first non-pivotal index of each residue class modulo n.  ``transform``
    satisfies ``transform @ matrix == reduced``.
    """

    vector: PolyVector
    n: int
    d: int
    matrix: ratlin.Matrix
    reduced: ratlin.Matrix
    transform: ratlin.Matrix
    pivot_cols: tuple[int, ...]
    nonpivot_cols: tuple[int, ...]
    basic_nonpivot: tuple[int, ...]

    @property
    def nrows(self) -> int:
        return 2 * self.d + 1

    @property
    def ncols(self) -> int:
        return self.n * (self.d + 1)

    @property
    def rank(self) -> int:
        return len(self.pivot_cols)

    def apply(self, values: Sequence[Fraction]) -> tuple[Fraction, ...]:
        """Matrix-vector product A @ values."""
        return ratlin.mat_vec(self.matrix, [Fraction(x) for x in values])

    def column(self, index: int) -> tuple[Fraction, ...]:
        """Column by 1-based index."""
        if not 1 <= index <= self.ncols:
            raise ValueError("column index out of range")
        return tuple(row[index - 1] for row in self.matrix)


def build_sylvester(v: PolyVector) -> SylvesterSystem:
    """Construct the Sylvester-type system of a nonzero vector."""
    if v.is_zero:
        raise ValueError("zero vector has no Sylvester matrix")
    n = v.dim
    d = int(v.degree)
    coeff_rows = v.coefficient_matrix()
    block = ratlin.transpose(coeff_rows)  # (d+1) x n, rows by degree
    nrows, ncols = 2 * d + 1, n * (d + 1)
    zero = Fraction(0)
    rows = [[zero] * ncols for _ in range(nrows)]
    for copy in range(d + 1):
        for r in range(d + 1):
            for c in range(n):
                rows[copy + r][copy * n + c] = block[r][c]
    matrix = ratlin.freeze(rows)
    reduced, transform, pivots0 = ratlin.rref_with_transform(matrix)
    pivot_cols = tuple(p + 1 for p in pivots0)
    nonpivot = tuple(
        j for j in range(1, ncols + 1) if j not in set(pivot_cols)
    )
    seen: set[int] = set()
    basic = []
    for j in nonpivot:
        cls = j % n
        if cls not in seen:
            seen.add(cls)
            basic.append(j)
    return SylvesterSystem(
        vector=v,
        n=n,
        d=d,
        matrix=matrix,
        reduced=reduced,
        transform=transform,
        pivot_cols=pivot_cols,
        nonpivot_cols=nonpivot,
        basic_nonpivot=tuple(basic),
    )
