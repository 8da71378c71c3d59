"""Exact linear algebra over the rationals.

Matrices are tuples of rows of :class:`fractions.Fraction`.  Every routine
is pure (inputs are never mutated) and deterministic: elimination always
takes the leftmost column with a nonzero entry as the next pivot, so reduced
forms and everything read off them are reproducible bit for bit.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Matrix = tuple[tuple[Fraction, ...], ...]
Vector = tuple[Fraction, ...]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def freeze(rows: Iterable[Iterable]) -> Matrix:
    """Copy ``rows`` into an immutable matrix of Fractions."""
    out = tuple(tuple(Fraction(x) for x in row) for row in rows)
    if out and any(len(row) != len(out[0]) for row in out):
        raise ValueError("ragged matrix")
    return out


def identity(n: int) -> Matrix:
    return tuple(
        tuple(_ONE if i == j else _ZERO for j in range(n)) for i in range(n)
    )


def transpose(m: Sequence[Sequence[Fraction]]) -> Matrix:
    return tuple(zip(*[tuple(row) for row in m])) if m else ()


def mat_mul(a: Sequence[Sequence[Fraction]], b: Sequence[Sequence[Fraction]]) -> Matrix:
    if a and b and len(a[0]) != len(b):
        raise ValueError("dimension mismatch")
    bt = transpose(b)
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a
    )


def mat_vec(a: Sequence[Sequence[Fraction]], x: Sequence[Fraction]) -> Vector:
    if a and len(a[0]) != len(x):
        raise ValueError("dimension mismatch")
    return tuple(sum(c * v for c, v in zip(row, x)) for row in a)


def _eliminate(work: list[list[Fraction]]) -> list[int]:
    """Gauss-Jordan reduce ``work`` in place; return pivot column indices."""
    nrows = len(work)
    ncols = len(work[0]) if nrows else 0
    pivots: list[int] = []
    row = 0
    for col in range(ncols):
        if row == nrows:
            break
        src = next((i for i in range(row, nrows) if work[i][col] != 0), None)
        if src is None:
            continue
        if src != row:
            work[row], work[src] = work[src], work[row]
        inv = _ONE / work[row][col]
        work[row] = [x * inv for x in work[row]]
        for i in range(nrows):
            if i != row and work[i][col] != 0:
                factor = work[i][col]
                work[i] = [x - factor * y for x, y in zip(work[i], work[row])]
        pivots.append(col)
        row += 1
    return pivots


def rref(rows: Sequence[Sequence[Fraction]]) -> tuple[Matrix, tuple[int, ...]]:
    """Reduced row-echelon form and 0-based pivot column indices."""
    work = [list(row) for row in rows]
    pivots = _eliminate(work)
    return freeze(work), tuple(pivots)


def rref_with_transform(
    rows: Sequence[Sequence[Fraction]],
) -> tuple[Matrix, Matrix, tuple[int, ...]]:
    """Like :func:`rref`, also returning E with ``E @ rows == reduced``."""
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    aug = [list(row) + [_ONE if i == j else _ZERO for j in range(nrows)]
           for i, row in enumerate(rows)]
    pivots = [c for c in _eliminate(aug) if c < ncols]
    reduced = freeze(row[:ncols] for row in aug)
    transform = freeze(row[ncols:] for row in aug)
    return reduced, transform, tuple(pivots)


def rank(rows: Sequence[Sequence[Fraction]]) -> int:
    work = [list(row) for row in rows]
    return len(_eliminate(work)) if work else 0


def det(rows: Sequence[Sequence[Fraction]]) -> Fraction:
    n = len(rows)
    if any(len(row) != n for row in rows):
        raise ValueError("determinant requires a square matrix")
    work = [list(row) for row in rows]
    result = _ONE
    for col in range(n):
        src = next((i for i in range(col, n) if work[i][col] != 0), None)
        if src is None:
            return _ZERO
        if src != col:
            work[col], work[src] = work[src], work[col]
            result = -result
        pivot = work[col][col]
        result *= pivot
        for i in range(col + 1, n):
            if work[i][col] != 0:
                factor = work[i][col] / pivot
                work[i] = [x - factor * y for x, y in zip(work[i], work[col])]
    return result


def inverse(rows: Sequence[Sequence[Fraction]]) -> Matrix:
    n = len(rows)
    if any(len(row) != n for row in rows):
        raise ValueError("inverse requires a square matrix")
    reduced, transform, pivots = rref_with_transform(rows)
    if len(pivots) != n:
        raise ValueError("matrix is singular")
    return transform
