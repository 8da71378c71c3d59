"""Moving frames along polynomial curves.

A curve qualifies when its tangent vector never vanishes (over the
algebraic closure), its image spans the ambient space affinely, and its
degree exceeds the dimension.  For such curves the frame attaches the
equivariant minimal completion of the tangent, yielding a determinant-one
matrix of polynomials whose first column is the tangent and which transforms
covariantly under special-affine maps and parameter shifts.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import ratlin
from .equivariance import equivariant_completion_with_section
from .groups import GroupElement
from .poly import Polynomial
from .vectors import PolyMatrix, PolyVector


@dataclass(frozen=True)
class GenericCurve:
    """A curve that passed :func:`validate_curve`."""

    vector: PolyVector

    @property
    def dim(self) -> int:
        return self.vector.dim

    @property
    def degree(self) -> int:
        return int(self.vector.degree)

    def tangent(self) -> PolyVector:
        return self.vector.derivative()


@dataclass(frozen=True)
class CurveRejection:
    """Names every failed admissibility condition."""

    failures: tuple[str, ...]


@dataclass(frozen=True)
class FrameResult:
    """Frame matrix with the section data that produced it."""

    matrix: PolyMatrix
    section: GroupElement
    canonical_tangent: PolyVector
    bezout_degree: int


def validate_curve(c: PolyVector) -> GenericCurve | CurveRejection:
    """Structured admissibility check; collects all failures, raises none."""
    failures = []
    tangent = c.derivative()
    if tangent.is_zero:
        failures.append("tangent vector is identically zero")
        failures.append("curve lies in a proper affine subspace")
    else:
        if tangent.gcd() != Polynomial.one():
            failures.append("tangent vanishes at a parameter value")
        if ratlin.rank(tangent.coefficient_matrix()) < c.dim:
            failures.append("curve lies in a proper affine subspace")
    if c.degree <= c.dim:
        failures.append("degree does not exceed the dimension")
    if failures:
        return CurveRejection(tuple(failures))
    return GenericCurve(c)


def moving_frame(curve: GenericCurve) -> FrameResult:
    """Equivariant minimal-degree frame along the curve.

    The first column of the frame is the tangent; the whole matrix has
    determinant one and minimal degree among completions of the tangent.
    """
    completion, g, reduced = equivariant_completion_with_section(
        curve.tangent()
    )
    return FrameResult(
        matrix=completion.matrix,
        section=g,
        canonical_tangent=reduced,
        bezout_degree=completion.bezout_degree,
    )
