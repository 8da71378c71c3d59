"""Vectors and matrices of polynomials.

A :class:`PolyVector` models a polynomial curve or tangent vector, a
:class:`PolyMatrix` a polynomial matrix whose columns are such vectors.  The
degree of a vector is the maximum of its component degrees; the degree of a
matrix is the sum of its column degrees.  Both follow the absorbing
``NEG_INF`` convention for zero entries.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from . import ratlin
from .poly import NEG_INF, Polynomial, Scalar, poly_gcd


class RegularityError(ValueError):
    """An input vector or curve fails a structural precondition."""


def _as_poly(entry) -> Polynomial:
    if isinstance(entry, Polynomial):
        return entry
    if isinstance(entry, (int, Fraction)):
        return Polynomial.constant(entry)
    return Polynomial(entry)


class PolyVector:
    """Immutable column vector of polynomials."""

    __slots__ = ("components",)

    components: tuple[Polynomial, ...]

    def __init__(self, components: Iterable):
        object.__setattr__(
            self, "components", tuple(_as_poly(c) for c in components)
        )
        if not self.components:
            raise ValueError("vector needs at least one component")

    def __setattr__(self, name, value):
        raise AttributeError("PolyVector is immutable")

    def __len__(self) -> int:
        return len(self.components)

    def __iter__(self):
        return iter(self.components)

    def __getitem__(self, i: int) -> Polynomial:
        return self.components[i]

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolyVector):
            return NotImplemented
        return self.components == other.components

    def __hash__(self) -> int:
        return hash(self.components)

    def __repr__(self) -> str:
        return f"PolyVector([{', '.join(str(c) for c in self.components)}])"

    @property
    def dim(self) -> int:
        return len(self.components)

    @property
    def degree(self) -> int | float:
        return max(c.degree for c in self.components)

    @property
    def is_zero(self) -> bool:
        return all(c.is_zero for c in self.components)

    def __add__(self, other: "PolyVector") -> "PolyVector":
        if not isinstance(other, PolyVector):
            return NotImplemented
        if other.dim != self.dim:
            raise ValueError("dimension mismatch")
        return PolyVector(a + b for a, b in zip(self, other))

    def __sub__(self, other: "PolyVector") -> "PolyVector":
        if not isinstance(other, PolyVector):
            return NotImplemented
        if other.dim != self.dim:
            raise ValueError("dimension mismatch")
        return PolyVector(a - b for a, b in zip(self, other))

    def __neg__(self) -> "PolyVector":
        return PolyVector(-c for c in self.components)

    def scale(self, factor) -> "PolyVector":
        """Multiply every component by a scalar or polynomial."""
        factor = _as_poly(factor) if not isinstance(factor, Polynomial) else factor
        return PolyVector(c * factor for c in self.components)

    def shift(self, s: Scalar) -> "PolyVector":
        """Reparametrized vector ``v(t + s)``."""
        return PolyVector(c.shift(s) for c in self.components)

    def derivative(self) -> "PolyVector":
        return PolyVector(c.derivative() for c in self.components)

    def dot(self, other: "PolyVector") -> Polynomial:
        if other.dim != self.dim:
            raise ValueError("dimension mismatch")
        out = Polynomial.zero()
        for a, b in zip(self, other):
            out = out + a * b
        return out

    def translate(self, offset: Sequence[Fraction]) -> "PolyVector":
        if len(offset) != self.dim:
            raise ValueError("dimension mismatch")
        return PolyVector(c + Fraction(a) for c, a in zip(self, offset))

    def linear_map(self, matrix: Sequence[Sequence[Fraction]]) -> "PolyVector":
        """Left multiplication by a constant matrix."""
        if any(len(row) != self.dim for row in matrix):
            raise ValueError("dimension mismatch")
        out = []
        for row in matrix:
            acc = Polynomial.zero()
            for coef, comp in zip(row, self.components):
                acc = acc + comp * Fraction(coef)
            out.append(acc)
        return PolyVector(out)

    def gcd(self) -> Polynomial:
        """Monic gcd of the nonzero components."""
        nonzero = [c for c in self.components if not c.is_zero]
        if not nonzero:
            raise RegularityError("gcd of the zero vector is undefined")
        g = nonzero[0]
        for c in nonzero[1:]:
            g = poly_gcd(g, c)
        return g.monic()

    def coefficient_matrix(self, width: int | None = None) -> ratlin.Matrix:
        """n x (d+1) matrix of coefficients, columns in ascending degree."""
        if width is None:
            if self.is_zero:
                raise ValueError("zero vector has no coefficient matrix")
            width = int(self.degree) + 1
        elif self.degree != NEG_INF and width < self.degree + 1:
            raise ValueError("width below the vector degree")
        return tuple(
            tuple(c.coeff(j) for j in range(width)) for c in self.components
        )

    def evaluate(self, x: Scalar) -> tuple[Fraction, ...]:
        return tuple(c.evaluate(x) for c in self.components)


class PolyMatrix:
    """Immutable matrix of polynomials, stored by rows."""

    __slots__ = ("rows",)

    rows: tuple[tuple[Polynomial, ...], ...]

    def __init__(self, rows: Iterable[Iterable]):
        frozen = tuple(tuple(_as_poly(e) for e in row) for row in rows)
        if not frozen or not frozen[0]:
            raise ValueError("matrix must be nonempty")
        if any(len(row) != len(frozen[0]) for row in frozen):
            raise ValueError("ragged matrix")
        object.__setattr__(self, "rows", frozen)

    def __setattr__(self, name, value):
        raise AttributeError("PolyMatrix is immutable")

    @classmethod
    def from_columns(cls, columns: Sequence[PolyVector]) -> "PolyMatrix":
        if not columns:
            raise ValueError("matrix must be nonempty")
        n = columns[0].dim
        if any(col.dim != n for col in columns):
            raise ValueError("columns differ in dimension")
        return cls(
            tuple(col[i] for col in columns) for i in range(n)
        )

    @classmethod
    def identity(cls, n: int) -> "PolyMatrix":
        one, zero = Polynomial.one(), Polynomial.zero()
        return cls(
            tuple(one if i == j else zero for j in range(n)) for i in range(n)
        )

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0])

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        body = "; ".join(
            "[" + ", ".join(str(e) for e in row) + "]" for row in self.rows
        )
        return f"PolyMatrix({body})"

    def entry(self, i: int, j: int) -> Polynomial:
        return self.rows[i][j]

    def column(self, j: int) -> PolyVector:
        return PolyVector(row[j] for row in self.rows)

    def columns(self) -> list[PolyVector]:
        return [self.column(j) for j in range(self.ncols)]

    def transpose(self) -> "PolyMatrix":
        return PolyMatrix(zip(*self.rows))

    @property
    def degree(self) -> int | float:
        total: int | float = 0
        for j in range(self.ncols):
            total += max(row[j].degree for row in self.rows)
        return total

    def shift(self, s: Scalar) -> "PolyMatrix":
        return PolyMatrix(
            tuple(e.shift(s) for e in row) for row in self.rows
        )

    def linear_map(self, matrix: Sequence[Sequence[Fraction]]) -> "PolyMatrix":
        """Left multiplication by a constant matrix."""
        if any(len(row) != self.nrows for row in matrix):
            raise ValueError("dimension mismatch")
        out = []
        for lrow in matrix:
            new_row = []
            for j in range(self.ncols):
                acc = Polynomial.zero()
                for coef, prow in zip(lrow, self.rows):
                    acc = acc + prow[j] * Fraction(coef)
                new_row.append(acc)
            out.append(new_row)
        return PolyMatrix(out)

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        if self.ncols != other.nrows:
            raise ValueError("dimension mismatch")
        out = []
        for i in range(self.nrows):
            new_row = []
            for j in range(other.ncols):
                acc = Polynomial.zero()
                for k in range(self.ncols):
                    acc = acc + self.rows[i][k] * other.rows[k][j]
                new_row.append(acc)
            out.append(new_row)
        return PolyMatrix(out)

    def scale_column(self, j: int, factor) -> "PolyMatrix":
        cols = self.columns()
        cols[j] = cols[j].scale(factor)
        return PolyMatrix.from_columns(cols)

    def determinant(self) -> Polynomial:
        """Exact determinant, fraction-free for moderate sizes."""
        if self.nrows != self.ncols:
            raise ValueError("determinant requires a square matrix")
        if self.nrows <= 6:
            return _det_bareiss(self.rows)
        return _det_cofactor(self.rows)

    def inverse_unimodular(self) -> "PolyMatrix":
        """Inverse of a matrix with nonzero constant determinant."""
        d = self.determinant()
        if d.is_zero or not d.is_constant:
            raise ValueError("inverse requires a nonzero constant determinant")
        n = self.nrows
        if n == 1:
            return PolyMatrix([[Polynomial.one() / d.coeff(0)]])
        adj = []
        for i in range(n):
            row = []
            for j in range(n):
                minor = [
                    [self.rows[r][c] for c in range(n) if c != i]
                    for r in range(n) if r != j
                ]
                cof = _det_bareiss(minor) if n - 1 <= 6 else _det_cofactor(minor)
                if (i + j) % 2:
                    cof = -cof
                row.append(cof / d.coeff(0))
            adj.append(row)
        return PolyMatrix(adj)

    def evaluate(self, x: Scalar) -> ratlin.Matrix:
        return tuple(
            tuple(e.evaluate(x) for e in row) for row in self.rows
        )


def _det_cofactor(rows: Sequence[Sequence[Polynomial]]) -> Polynomial:
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = Polynomial.zero()
    for j, head in enumerate(rows[0]):
        if head.is_zero:
            continue
        minor = [[row[c] for c in range(n) if c != j] for row in rows[1:]]
        term = head * _det_cofactor(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def _det_bareiss(rows: Sequence[Sequence[Polynomial]]) -> Polynomial:
    """Bareiss fraction-free elimination; divisions are exact in the ring."""
    n = len(rows)
    work = [list(row) for row in rows]
    sign = 1
    prev = Polynomial.one()
    for k in range(n - 1):
        if work[k][k].is_zero:
            src = next(
                (i for i in range(k + 1, n) if not work[i][k].is_zero), None
            )
            if src is None:
                return Polynomial.zero()
            work[k], work[src] = work[src], work[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = work[i][j] * work[k][k] - work[i][k] * work[k][j]
                work[i][j] = num.exact_div(prev)
            work[i][k] = Polynomial.zero()
        prev = work[k][k]
    result = work[n - 1][n - 1]
    return -result if sign < 0 else result


def outer_product(vectors: Sequence[PolyVector]) -> PolyVector:
    """Generalized cross product of n-1 vectors in dimension n.

    Component i carries the sign ``(-1)**i`` times the minor that omits row
    i, so ``w.dot(outer_product(us)) == det([w | us])`` columnwise.
    """
    if not vectors:
        raise ValueError("outer product needs at least one vector")
    n = vectors[0].dim
    if len(vectors) != n - 1 or any(v.dim != n for v in vectors):
        raise ValueError("outer product takes n-1 vectors of dimension n")
    comps = []
    for i in range(n):
        minor = [
            [vec[r] for vec in vectors] for r in range(n) if r != i
        ]
        d = _det_bareiss(minor) if n - 1 <= 6 else _det_cofactor(minor)
        comps.append(d if i % 2 == 0 else -d)
    return PolyVector(comps)


def require_regular(v: PolyVector) -> None:
    """Raise :class:`RegularityError` unless ``v`` is a regular vector.

    Regular means: unit gcd, linearly independent components, and degree at
    least the dimension.
    """
    if v.is_zero:
        raise RegularityError("vector is zero")
    if v.gcd() != Polynomial.one():
        raise RegularityError("components share a nonconstant factor")
    if ratlin.rank(v.coefficient_matrix()) < v.dim:
        raise RegularityError("components are linearly dependent")
    if v.degree < v.dim:
        raise RegularityError("degree is below the dimension")
