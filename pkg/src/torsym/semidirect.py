"""Semidirect products of the torus with its matrix, braid, and cover
symmetries, acting on rational torus points.

A pair (p, A) acts affinely on T^2 by q -> A q + p, and the monoid law
making this a homomorphism is

    (p, A) * (q, B) = (A q + p, A B).

Three ambient monoids share this shape, differing only in what the
second component is and how it shadows a matrix: an integer matrix
with nonzero determinant acts directly; a braid word acts through its
matrix image; a cover element acts through its matrix projection.  A
semidirect element is invertible exactly when its matrix shadow is
invertible over the integers (for cover parts this means the matrix
lies in the special linear group, since covered matrices have positive
determinant).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .braid import BraidWord, matrix_rep
from .cover import CoverElement, cover_inverse
from .mat2 import Mat2


@dataclass(frozen=True)
class TorusPoint:
    """A rational point of T^2; coordinates reduced into [0, 1)."""

    x: Fraction
    y: Fraction

    def __post_init__(self):
        for name, v in (("x", self.x), ("y", self.y)):
            v = Fraction(v)
            object.__setattr__(self, name, v - (v.numerator // v.denominator))

    @classmethod
    def of(cls, x, y):
        return cls(Fraction(x), Fraction(y))

    def __add__(self, other):
        return TorusPoint(self.x + other.x, self.y + other.y)

    def __neg__(self):
        return TorusPoint(-self.x, -self.y)

    def as_pair(self):
        return (self.x, self.y)


ZERO = TorusPoint(Fraction(0), Fraction(0))


def act_point(m, p):
    """Apply an integer matrix with det != 0 to a torus point."""
    if not m.is_integral:
        raise ValueError("only integer matrices act on the torus quotient")
    if m.det() == 0:
        raise ValueError("singular matrix does not act cofinitely")
    x, y = m.apply((p.x, p.y))
    return TorusPoint(x, y)


@dataclass(frozen=True)
class SemidirectElement:
    """A translation together with a matrix, braid, or cover part."""

    point: TorusPoint
    part: object

    def __post_init__(self):
        part = self.part
        if isinstance(part, Mat2):
            if not part.is_integral or part.det() == 0:
                raise ValueError("matrix part must be integral with det != 0")
        elif isinstance(part, CoverElement):
            if not part.is_integral:
                raise ValueError("cover part must have an integer matrix")
        elif not isinstance(part, BraidWord):
            raise TypeError(f"unsupported part {part!r}")

    @property
    def kind(self):
        if isinstance(self.part, Mat2):
            return "matrix"
        if isinstance(self.part, BraidWord):
            return "braid"
        return "cover"

    def matrix_shadow(self):
        if isinstance(self.part, Mat2):
            return self.part
        if isinstance(self.part, BraidWord):
            return matrix_rep(self.part)
        return self.part.matrix


def aff_apply(g, q):
    """The affine map of g: q -> (shadow of g) q + translation of g."""
    return act_point(g.matrix_shadow(), q) + g.point


def sd_mul(g, h):
    """(p, A) * (q, B) = (A q + p, A B); parts multiply in their monoid."""
    if g.kind != h.kind:
        raise ValueError(f"cannot mix ambient monoids {g.kind} and {h.kind}")
    point = act_point(g.matrix_shadow(), h.point) + g.point
    return SemidirectElement(point, g.part * h.part)


def sd_identity(kind):
    part = {
        "matrix": Mat2.identity(),
        "braid": BraidWord(),
        "cover": CoverElement(Mat2.identity(), 0),
    }[kind]
    return SemidirectElement(ZERO, part)


def is_invertible(g):
    """Invertibility in the ambient monoid: matrix shadow in GL2(Z).

    Braid parts are always invertible; cover parts need determinant
    one (their determinants are positive).
    """
    det = g.matrix_shadow().det()
    if g.kind == "matrix":
        return det in (1, -1)
    if g.kind == "braid":
        return True
    return det == 1


def sd_inverse(g):
    if not is_invertible(g):
        raise ValueError("element is not invertible in its ambient monoid")
    if isinstance(g.part, CoverElement):
        part = cover_inverse(g.part)
    else:
        part = g.part.inverse()
    bare = SemidirectElement(ZERO, part)
    return SemidirectElement(-act_point(bare.matrix_shadow(), g.point), part)
