"""Group elements acting on polynomial vectors and matrices.

Two actions are used throughout:

* a volume-preserving linear map together with a parameter shift, acting by
  ``(L, s) . W = L * W(t + s)``;
* its affine extension with a translation part, acting on curves by
  ``(L, a, s) . c = L * c(t + s) + a``.

Determinant-one is validated at construction; invalid matrices are rejected
rather than normalized.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from . import ratlin
from .vectors import PolyMatrix, PolyVector

Actable = Union[PolyVector, PolyMatrix]


def _check_unimodular(matrix: ratlin.Matrix) -> None:
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("group matrix must be square")
    if ratlin.det(matrix) != 1:
        raise ValueError("group matrix must have determinant 1")


@dataclass(frozen=True)
class GroupElement:
    """Determinant-one matrix paired with a parameter shift."""

    matrix: ratlin.Matrix
    shift: Fraction

    def __init__(self, matrix: Sequence[Sequence], shift=0):
        frozen = ratlin.freeze(matrix)
        _check_unimodular(frozen)
        object.__setattr__(self, "matrix", frozen)
        object.__setattr__(self, "shift", Fraction(shift))

    @classmethod
    def identity(cls, n: int) -> "GroupElement":
        return cls(ratlin.identity(n), 0)

    @property
    def dim(self) -> int:
        return len(self.matrix)

    def compose(self, other: "GroupElement") -> "GroupElement":
        """Product g1 * g2, acting as g1 after g2."""
        return GroupElement(
            ratlin.mat_mul(self.matrix, other.matrix),
            self.shift + other.shift,
        )

    def inverse(self) -> "GroupElement":
        return GroupElement(ratlin.inverse(self.matrix), -self.shift)

    def apply(self, target: Actable) -> Actable:
        if isinstance(target, (PolyVector, PolyMatrix)):
            return target.shift(self.shift).linear_map(self.matrix)
        raise TypeError(f"cannot act on {type(target).__name__}")

    def is_identity(self) -> bool:
        return self.shift == 0 and self.matrix == ratlin.identity(self.dim)


@dataclass(frozen=True)
class AffineElement:
    """Special-affine map with a parameter shift, acting on curves."""

    matrix: ratlin.Matrix
    translation: tuple[Fraction, ...]
    shift: Fraction

    def __init__(self, matrix: Sequence[Sequence], translation: Sequence, shift=0):
        frozen = ratlin.freeze(matrix)
        _check_unimodular(frozen)
        offset = tuple(Fraction(a) for a in translation)
        if len(offset) != len(frozen):
            raise ValueError("translation dimension mismatch")
        object.__setattr__(self, "matrix", frozen)
        object.__setattr__(self, "translation", offset)
        object.__setattr__(self, "shift", Fraction(shift))

    @classmethod
    def identity(cls, n: int) -> "AffineElement":
        return cls(ratlin.identity(n), (0,) * n, 0)

    @property
    def dim(self) -> int:
        return len(self.matrix)

    @property
    def linear_part(self) -> GroupElement:
        """The action induced on tangent vectors, which drops translations."""
        return GroupElement(self.matrix, self.shift)

    def compose(self, other: "AffineElement") -> "AffineElement":
        return AffineElement(
            ratlin.mat_mul(self.matrix, other.matrix),
            tuple(
                x + y
                for x, y in zip(
                    ratlin.mat_vec(self.matrix, other.translation),
                    self.translation,
                )
            ),
            self.shift + other.shift,
        )

    def inverse(self) -> "AffineElement":
        inv = ratlin.inverse(self.matrix)
        return AffineElement(
            inv,
            tuple(-x for x in ratlin.mat_vec(inv, self.translation)),
            -self.shift,
        )

    def apply(self, curve: PolyVector) -> PolyVector:
        if not isinstance(curve, PolyVector):
            raise TypeError(f"cannot act on {type(curve).__name__}")
        return curve.shift(self.shift).linear_map(self.matrix).translate(
            self.translation
        )
