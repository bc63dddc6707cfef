"""The winding-number cover of the positive-determinant matrix monoids.

A matrix A = [[a, b], [c, d]] with det A > 0 determines the nonzero
complex number

    z(A) = (a + d) + i(b - c),

and the circle projection A -> unit(z(A)).  The cover monoid consists
of pairs (A, s) with s a real number satisfying e^{is} = unit(z(A));
here s is encoded exactly as s = Arg(z(A)) + 2*pi*winding with Arg
valued in (-pi, pi] and an integer winding, which makes equality
decidable.  Multiplication is

    (A, s) * (B, t) = (AB, s + t + eta(A, B)),

where the angle defect eta is the argument of the rational complex
number

    zeta(A, B) = z(AB) * conj(z(A)) * conj(z(B)).

zeta always has positive real part, so eta lies in (-pi/2, pi/2), and
the winding of a product differs from the sum of the windings by a
carry in {-1, 0, 1} computed purely by rational sign tests (quadrant
bookkeeping; no floating point anywhere).

An equivalent classical formula expresses e^{i eta(A,B)} through the
disk coordinate of the corresponding SU(1,1) element.  Writing the
Cayley transform of A as [[p, q], [conj q, conj p]] with
2p = (a + d) + i(b - c) and 2q = (a - d) - i(b + c), the coordinate is
alpha_A = q/p = (a^2 - b^2 + c^2 - d^2 - 2i(ab + cd)) / |z(A)|^2, and

    e^{i eta(A, B)} = unit(1 - alpha_A * conj(alpha_{B^-1})).

It is implemented as `cocycle_complex_alpha` and used as a cross-check
of the zeta form.

Braid words lift to the cover through their matrix images; the lift of
(t1 t2)^6 is (identity, 1), realizing the kernel of the matrix
representation as the central winding integer.  Transposition lifts to
the anti-automorphism sending the encoded parameter s to -s, and the
scalar matrices n*I lift with winding 0; inverting them embeds the
integer cover into the cover of the positive-determinant rational
group, where equality of pairs is again literal.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .braid import GENERATOR_MATRICES
from .mat2 import Mat2, as_entry


@dataclass(frozen=True)
class RationalComplex:
    """A complex number with exact rational real and imaginary parts."""

    re: object
    im: object

    def __post_init__(self):
        object.__setattr__(self, "re", as_entry(self.re))
        object.__setattr__(self, "im", as_entry(self.im))

    def __mul__(self, other):
        if not isinstance(other, RationalComplex):
            return NotImplemented
        return RationalComplex(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def __sub__(self, other):
        if not isinstance(other, RationalComplex):
            return NotImplemented
        return RationalComplex(self.re - other.re, self.im - other.im)

    def conj(self):
        return RationalComplex(self.re, -self.im)

    def scale(self, k):
        return RationalComplex(k * self.re, k * self.im)

    def is_zero(self):
        return self.re == 0 and self.im == 0

    def arg_sign(self):
        """Sign of Arg valued in (-pi, pi]: +1, 0, or -1."""
        if self.im > 0 or (self.im == 0 and self.re < 0):
            return 1  # Arg in (0, pi]
        if self.im < 0:
            return -1
        return 0  # positive real axis

    def same_direction(self, other):
        """Exact test unit(self) == unit(other), by cross-multiplication."""
        cross = self * other.conj()
        return cross.im == 0 and cross.re > 0

    def __repr__(self):
        return f"RationalComplex({self.re}, {self.im})"


def arg_complex(m):
    """z(m) = (a + d) + i(b - c); requires det(m) > 0."""
    if m.det() <= 0:
        raise ValueError(f"determinant {m.det()} <= 0; no angle coordinate")
    return RationalComplex(m.a + m.d, m.b - m.c)


def cocycle_complex(ma, mb):
    """zeta(A, B) = z(AB) conj(z(A)) conj(z(B)); its argument is the defect.

    The contract Re(zeta) > 0 (equivalently, the defect angle lies in
    (-pi/2, pi/2)) is asserted; a violation would be an internal
    inconsistency, not a caller error.
    """
    za, zb, zab = arg_complex(ma), arg_complex(mb), arg_complex(ma * mb)
    zeta = zab * za.conj() * zb.conj()
    if zeta.re <= 0:
        raise RuntimeError(f"cocycle value {zeta!r} left the right half-plane")
    return zeta


def cocycle_complex_alpha(ma, mb):
    """Cross-check form of the defect: 1 - alpha_A * conj(alpha_{B^-1}).

    The disk coordinate alpha is invariant under scaling, so
    alpha_{B^-1} is computed from the adjugate.  The result is a
    positive real multiple of unit(e^{i eta(A,B)}) and must point in
    the same direction as `cocycle_complex(ma, mb)`.
    """
    if ma.det() <= 0 or mb.det() <= 0:
        raise ValueError("defect cross-check needs positive determinants")
    return RationalComplex(1, 0) - _disk_coordinate(ma) * _disk_coordinate(
        mb.adjugate()
    ).conj()


def _disk_coordinate(m):
    a, b, c, d = m.a, m.b, m.c, m.d
    denom = (a + d) ** 2 + (b - c) ** 2
    return RationalComplex(
        Fraction(a * a - b * b + c * c - d * d, denom),
        Fraction(-2 * (a * b + c * d), denom),
    )


def _wrap(u, v):
    """Integer w with Arg(u) + Arg(v) = Arg(u*v) + 2*pi*w, via sign tests."""
    su, sv = u.arg_sign(), v.arg_sign()
    if su > 0 and sv > 0:
        p = u * v
        if p.im < 0 or (p.im == 0 and p.re > 0):
            return 1
    elif su < 0 and sv < 0:
        p = u * v
        if p.im > 0 or (p.im == 0 and p.re < 0):
            return -1
    return 0


@dataclass(frozen=True)
class CoverElement:
    """A pair (matrix, winding) with det(matrix) > 0.

    The encoded real parameter is s = Arg(z(matrix)) + 2*pi*winding.
    The matrix may have rational entries; integer matrices form the
    cover monoid proper, rational ones its group completion.
    """

    matrix: Mat2
    winding: int = 0

    def __post_init__(self):
        if self.matrix.det() <= 0:
            raise ValueError(
                f"determinant {self.matrix.det()} <= 0; not coverable"
            )
        if arg_complex(self.matrix).is_zero():
            raise RuntimeError("zero angle coordinate despite det > 0")
        if not isinstance(self.winding, int):
            raise TypeError("winding must be an integer")

    def __mul__(self, other):
        if not isinstance(other, CoverElement):
            return NotImplemented
        return cover_mul(self, other)

    @property
    def is_integral(self):
        return self.matrix.is_integral


def cover_mul(x, y):
    """Multiply cover elements; the winding carry is exact."""
    zx, zy = arg_complex(x.matrix), arg_complex(y.matrix)
    zeta = cocycle_complex(x.matrix, y.matrix)
    carry = _wrap(zx, zy) + _wrap(zx * zy, zeta)
    return CoverElement(x.matrix * y.matrix, x.winding + y.winding + carry)


def cover_identity():
    return CoverElement(Mat2.identity(), 0)


def cover_inverse(x):
    """Inverse in the completed group (or in the monoid when unimodular)."""
    inv = x.matrix.inverse()
    probe = cover_mul(x, CoverElement(inv, 0))
    return CoverElement(inv, -probe.winding)


def lift_letter(letter):
    """Lift of a single braid generator: (U_i, 0) or its cover inverse."""
    m = GENERATOR_MATRICES[letter]
    if letter > 0:
        return CoverElement(m, 0)
    return cover_inverse(CoverElement(GENERATOR_MATRICES[-letter], 0))


def lift_word(w):
    """Lift of a braid word; the matrix component is its matrix image."""
    out = cover_identity()
    for letter in w.letters:
        out = cover_mul(out, lift_letter(letter))
    return out


def transpose_cover(x):
    """The lift of matrix transposition; sends encoded parameter s to -s.

    z(A^T) = conj(z(A)), so Arg flips sign except on the branch cut:
    when z(A) is a negative real (Arg = pi), both A and A^T keep
    Arg = pi and the winding absorbs the extra turn, dropping by one.
    """
    z = arg_complex(x.matrix)
    on_cut = z.im == 0 and z.re < 0
    return CoverElement(x.matrix.transpose(), -x.winding - (1 if on_cut else 0))


def scalar_lift(n):
    """The canonical lift (n*I, 0) of a positive integer scalar."""
    if not isinstance(n, int) or n <= 0:
        raise ValueError(f"scalar lift needs a positive integer, got {n!r}")
    return CoverElement(Mat2.scalar(n), 0)


def scalar_shrink(x, n):
    """Divide by the scalar lift of n (multiplication by ((1/n)I, 0))."""
    if not isinstance(n, int) or n <= 0:
        raise ValueError(f"scalar division needs a positive integer, got {n!r}")
    return cover_mul(CoverElement(Mat2.scalar(Fraction(1, n)), 0), x)


def completion_eq(x, y):
    """Equality in the completed rational cover group.

    The (matrix, winding) encoding is already canonical, so this is
    literal equality of the records.
    """
    return x.matrix == y.matrix and x.winding == y.winding
