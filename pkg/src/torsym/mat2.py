"""Exact 2x2 matrices over the integers and rationals.

Entries are Python ints or Fractions; arithmetic never rounds.
Integral Fractions are demoted to int on construction so that equal
matrices always have equal representations.  The module also provides
the membership predicates for the matrix monoids used throughout the
package (integer matrices with nonzero / positive determinant, the
unimodular group, the special linear group) and the row-style Hermite
normal form that canonicalizes row lattices.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


def as_entry(x):
    """Coerce to an exact scalar: int, Fraction, or a string like '-3/7'."""
    if isinstance(x, bool):
        raise TypeError("bool is not a matrix entry")
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else x
    if isinstance(x, str):
        return as_entry(Fraction(x))
    raise TypeError(f"inexact matrix entry {x!r}")


class Mat2:
    """An immutable 2x2 matrix [[a, b], [c, d]] with exact entries."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a, b, c, d):
        object.__setattr__(self, "a", as_entry(a))
        object.__setattr__(self, "b", as_entry(b))
        object.__setattr__(self, "c", as_entry(c))
        object.__setattr__(self, "d", as_entry(d))

    def __setattr__(self, name, value):
        raise AttributeError("Mat2 is immutable")

    @classmethod
    def identity(cls):
        return cls(1, 0, 0, 1)

    @classmethod
    def scalar(cls, n):
        return cls(n, 0, 0, n)

    @classmethod
    def from_rows(cls, r0, r1):
        return cls(r0[0], r0[1], r1[0], r1[1])

    @classmethod
    def parse(cls, text):
        """Parse '[[a,b],[c,d]]' with integer or p/q entries."""
        s = "".join(text.split())
        if not (s.startswith("[[") and s.endswith("]]")):
            raise ValueError(f"malformed matrix literal {text!r}")
        body = s[2:-2]
        rows = body.split("],[")
        if len(rows) != 2:
            raise ValueError(f"malformed matrix literal {text!r}")
        entries = []
        for row in rows:
            parts = row.split(",")
            if len(parts) != 2:
                raise ValueError(f"malformed matrix literal {text!r}")
            entries.extend(Fraction(p) for p in parts)
        return cls(*entries)

    def det(self):
        return self.a * self.d - self.b * self.c

    def trace(self):
        return self.a + self.d

    def transpose(self):
        return Mat2(self.a, self.c, self.b, self.d)

    def adjugate(self):
        return Mat2(self.d, -self.b, -self.c, self.a)

    def inverse(self):
        det = self.det()
        if det == 0:
            raise ValueError("singular matrix has no inverse")
        inv = Fraction(1, 1) / det
        return Mat2(inv * self.d, -inv * self.b, -inv * self.c, inv * self.a)

    @property
    def is_integral(self):
        return all(isinstance(x, int) for x in (self.a, self.b, self.c, self.d))

    def __mul__(self, other):
        if not isinstance(other, Mat2):
            return NotImplemented
        return Mat2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def scale(self, k):
        k = as_entry(k)
        return Mat2(k * self.a, k * self.b, k * self.c, k * self.d)

    def __neg__(self):
        return self.scale(-1)

    def apply(self, v):
        """Matrix times column vector (x, y)."""
        x, y = v
        return (self.a * x + self.b * y, self.c * x + self.d * y)

    def rows(self):
        return ((self.a, self.b), (self.c, self.d))

    def columns(self):
        return ((self.a, self.c), (self.b, self.d))

    def entries(self):
        return (self.a, self.b, self.c, self.d)

    def to_lists(self):
        return [[self.a, self.b], [self.c, self.d]]

    def __eq__(self, other):
        if not isinstance(other, Mat2):
            return NotImplemented
        return self.entries() == other.entries()

    def __hash__(self):
        return hash(self.entries())

    def __repr__(self):
        return f"Mat2([[{self.a}, {self.b}], [{self.c}, {self.d}]])"

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        base = self if n >= 0 else self.inverse()
        out = Mat2.identity()
        for _ in range(abs(n)):
            out = out * base
        return out


U1 = Mat2(1, 1, 0, 1)
U2 = Mat2(1, 0, -1, 1)
# quarter rotation; U1*U2*U1 == U2*U1*U2 == ROT4, and ROT4**4 is the identity
ROT4 = Mat2(0, 1, -1, 0)


@dataclass(frozen=True)
class Membership:
    """Monoid/group memberships of an integer matrix.

    cofinite:       det != 0 (finite-index endomorphism of Z^2)
    isogeny:        det > 0
    unimodular:     det = +-1 (invertible over Z)
    special_linear: det = 1
    """

    cofinite: bool
    isogeny: bool
    unimodular: bool
    special_linear: bool


def classify(m):
    """Membership record of an integer matrix; rejects non-integral input."""
    if not m.is_integral:
        raise ValueError("classify expects an integer matrix")
    det = m.det()
    return Membership(
        cofinite=det != 0,
        isogeny=det > 0,
        unimodular=det in (1, -1),
        special_linear=det == 1,
    )


def row_hnf(r0, r1):
    """Row-style Hermite normal form of the lattice spanned by two rows.

    Returns the unique basis [[a, b], [0, d]] with a >= 1, d >= 1 and
    0 <= b < d generating the same row lattice.  Rejects rank-deficient
    and non-integer input.
    """
    for v in (r0, r1):
        if not all(isinstance(x, int) for x in v):
            raise ValueError("row_hnf expects integer rows")
    a, b = hnf_rows_int([tuple(r0), tuple(r1)])
    return Mat2.from_rows(a, b)


def hnf_rows_int(rows):
    """HNF rows ((a, b), (0, d)) of the lattice spanned by integer rows.

    Accepts any number of generating rows; the lattice must have rank 2.
    """
    first = []   # rows with nonzero first entry
    second = []  # values appearing in the second column with first entry 0
    for x, y in rows:
        if x != 0:
            first.append((x, y))
        elif y != 0:
            second.append(y)
    # Euclidean reduction of the first column down to a single pivot row
    while len(first) > 1:
        first.sort(key=lambda r: abs(r[0]))
        px, py = first[0]
        rest = []
        for x, y in first[1:]:
            q = x // px
            x2, y2 = x - q * px, y - q * py
            if x2 != 0:
                rest.append((x2, y2))
            elif y2 != 0:
                second.append(y2)
        first = [(px, py)] + rest
    if not first or not second:
        raise ValueError("rows do not span a rank-2 lattice")
    a, b0 = first[0]
    if a < 0:
        a, b0 = -a, -b0
    d = 0
    for y in second:
        d = _gcd(d, y)
    b = b0 % d
    return ((a, b), (0, d))


def _gcd(x, y):
    x, y = abs(x), abs(y)
    while y:
        x, y = y, x % y
    return x
