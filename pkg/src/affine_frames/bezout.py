"""Minimal Bezout vectors and syzygy bases from pivot structure.

Both constructions read coefficients off the reduced Sylvester system of a
vector, so they are deterministic: the minimal Bezout vector is the unique
solution of ``A b = e1`` supported on pivotal columns, and each syzygy basis
element expresses a basic non-pivotal column through the pivotal columns to
its left.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil

from . import ratlin
from .poly import Polynomial
from .sylvester import SylvesterSystem, build_sylvester, flat
from .vectors import PolyVector, RegularityError, outer_product


@dataclass(frozen=True)
class BezoutVector:
    """Vector b with <v, b> = 1 of minimal degree among all such."""

    vector: PolyVector
    degree: int


@dataclass(frozen=True)
class MuBasis:
    """Degree-ordered basis of the syzygy module of a vector.

    ``outer_product(elements)`` equals ``scale * v`` for the nonzero
    rational ``scale``.
    """

    elements: tuple[PolyVector, ...]
    scale: Fraction


def _require_unit_gcd(v: PolyVector) -> None:
    if v.is_zero:
        raise RegularityError("vector is zero")
    if v.gcd() != Polynomial.one():
        raise RegularityError("components share a nonconstant factor")


def minimal_bezout(v: PolyVector, system: SylvesterSystem | None = None) -> BezoutVector:
    """Minimal-degree b with ``v . b = 1``, supported on pivotal columns.

    Requires the components of ``v`` to be coprime; the result is unique
    among Bezout vectors supported on the pivotal column set.
    """
    _require_unit_gcd(v)
    sys = system if system is not None else build_sylvester(v)
    if sys.rank != sys.nrows:
        raise RegularityError("system is rank deficient")
    coords = [Fraction(0)] * sys.ncols
    # e1 in the pivot-column basis: coefficients sit in the first column of
    # the elimination transform.
    for row, col in enumerate(sys.pivot_cols):
        coords[col - 1] = sys.transform[row][0]
    b = flat(coords, sys.n, sys.d)
    return BezoutVector(b, int(b.degree))


def mu_basis(v: PolyVector, system: SylvesterSystem | None = None) -> MuBasis:
    """Syzygy basis with one element per basic non-pivotal column.

    Element degrees are ascending and sum to the degree of ``v``.
    """
    _require_unit_gcd(v)
    if v.dim < 2:
        raise RegularityError("syzygies need dimension at least 2")
    sys = system if system is not None else build_sylvester(v)
    if sys.rank != sys.nrows:
        raise RegularityError("system is rank deficient")
    pivot_rows = {col: row for row, col in enumerate(sys.pivot_cols)}
    elements = []
    for col in sys.basic_nonpivot:
        coords = [Fraction(0)] * sys.ncols
        coords[col - 1] = Fraction(1)
        for pcol, prow in pivot_rows.items():
            if pcol < col:
                coords[pcol - 1] = -sys.reduced[prow][col - 1]
        elements.append(flat(coords, sys.n, sys.d))
    cross = outer_product(elements)
    scale = None
    for a, b in zip(v, cross):
        if not a.is_zero:
            ratio = b.exact_div(a)
            if not ratio.is_constant:
                raise RegularityError("syzygy basis is not proportional to input")
            scale = ratio.coeff(0)
            break
    if scale is None or scale == 0 or cross != v.scale(scale):
        raise RegularityError("syzygy basis is not proportional to input")
    return MuBasis(tuple(elements), scale)


def expected_bezout_degree(system: SylvesterSystem, b: PolyVector) -> int:
    """Degree predicted from the last pivotal column carrying a coefficient."""
    from .sylvester import sharp

    coords = sharp(b, system.d)
    last = max(j + 1 for j, x in enumerate(coords) if x != 0)
    return ceil(last / system.n) - 1


def bezout_degree_search(v: PolyVector) -> int:
    """Smallest degree bound that makes ``v . b = 1`` solvable.

    Brute-force oracle: for e = 0, 1, 2, ... check by elimination whether
    ``A b = e1`` has a solution using only the columns that encode
    coefficients up to degree e.  Independent of the pivot-supported
    construction, so it can certify minimality.
    """
    _require_unit_gcd(v)
    sys = build_sylvester(v)
    target_col = [Fraction(1 if i == 0 else 0) for i in range(sys.nrows)]
    for e in range(sys.d + 1):
        width = sys.n * (e + 1)
        augmented = [
            list(row[:width]) + [target_col[i]]
            for i, row in enumerate(sys.matrix)
        ]
        _, pivots = ratlin.rref(augmented)
        if width not in pivots:
            return e
    raise RegularityError("no Bezout vector exists")
