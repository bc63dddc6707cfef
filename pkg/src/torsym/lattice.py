"""Cofinite sublattices of Z^2, superlattices inside Q^2, and finite
subgroups of the torus T^2 = Q^2 / Z^2 (rational points suffice for
everything exact done here).

Lattices are stored through a row-convention Hermite normal form: the
basis matrix [[a, b], [0, d]] has its rows generating the lattice,
with a, d > 0 and 0 <= b < d.  This form is unique, so lattice
equality is record equality.  A sublattice of Z^2 has an integer HNF
basis whose index is a*d; a superlattice of Z^2 has a rational one of
index 1/(a*d), and index-n superlattices are exactly the index-n
sublattices scaled by 1/n.

A finite subgroup C of the torus is stored as the superlattice of its
representatives, quot^{-1}(C); its order is the index of Z^2 there.
The duality with matrices goes through the HNF basis (u1, u2), which
lies in the closed non-negative quadrant and is positively oriented:
`matrix_from_subgroup` returns the unique integer matrix A_C with
A_C u_i = e_i (so det A_C = order C), and `kernel_subgroup` recovers C
as the kernel (A^-1 Z^2)/Z^2 of the induced torus endomorphism.  The
two maps are mutually inverse and order-preserving: C <= C' exactly
when A_{C'} A_C^{-1} is integral.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .mat2 import Mat2, hnf_rows_int

SUBLATTICE = "sublattice"
SUPERLATTICE = "superlattice"


def _rational_hnf_rows(rows):
    """Row HNF of the lattice spanned by rational rows (rank 2 required)."""
    denom = 1
    for x, y in rows:
        denom = _lcm(denom, Fraction(x).denominator)
        denom = _lcm(denom, Fraction(y).denominator)
    int_rows = [
        (int(Fraction(x) * denom), int(Fraction(y) * denom)) for x, y in rows
    ]
    (a, b), (_, d) = hnf_rows_int(int_rows)
    return Mat2(Fraction(a, denom), Fraction(b, denom), 0, Fraction(d, denom))


def _lcm(x, y):
    from math import gcd

    return x * y // gcd(x, y)


@dataclass(frozen=True)
class HnfLattice:
    """A rank-2 lattice in canonical row-HNF form."""

    basis: Mat2
    kind: str

    def __post_init__(self):
        if self.kind not in (SUBLATTICE, SUPERLATTICE):
            raise ValueError(f"unknown lattice kind {self.kind!r}")
        if self.kind == SUBLATTICE and not self.basis.is_integral:
            raise ValueError("sublattice of Z^2 needs an integer basis")
        if self.kind == SUPERLATTICE:
            for e in ((1, 0), (0, 1)):
                if not self.contains(e):
                    raise ValueError("superlattice must contain Z^2")

    @classmethod
    def from_rows(cls, rows, kind):
        return cls(_rational_hnf_rows(rows), kind)

    @property
    def index(self):
        """Index of the lattice in Z^2, or of Z^2 in it, per kind."""
        det = self.basis.a * self.basis.d
        if self.kind == SUBLATTICE:
            return int(det)
        inv = 1 / Fraction(det)
        if inv.denominator != 1:
            raise RuntimeError(f"non-integer superlattice index {inv}")
        return int(inv)

    def coordinates(self, v):
        """Coefficients (s, t) with v = s*row0 + t*row1 (rationals)."""
        a, b, d = self.basis.a, self.basis.b, self.basis.d
        s = Fraction(v[0]) / a
        t = (Fraction(v[1]) - s * b) / d
        return s, t

    def contains(self, v):
        s, t = self.coordinates(v)
        return s.denominator == 1 and t.denominator == 1

    def contains_lattice(self, other):
        return all(self.contains(r) for r in other.basis.rows())

    def reduce(self, v):
        """Canonical representative of v modulo the lattice."""
        s, t = self.coordinates(v)
        r0, r1 = self.basis.rows()
        fs, ft = s - (s.numerator // s.denominator), t - (
            t.numerator // t.denominator
        )
        return (
            fs * r0[0] + ft * r1[0],
            fs * r0[1] + ft * r1[1],
        )


def enumerate_sublattices(n):
    """All index-n sublattices of Z^2 as HNF records [[a, b], [0, d]].

    There are sigma_1(n) of them: a*d = n with 0 <= b < d.
    """
    if not isinstance(n, int) or n <= 0:
        raise ValueError(f"index must be a positive integer, got {n!r}")
    out = []
    for a in range(1, n + 1):
        if n % a:
            continue
        d = n // a
        for b in range(d):
            out.append(HnfLattice(Mat2(a, b, 0, d), SUBLATTICE))
    return out


def image_lattice(m):
    """The sublattice m(Z^2), i.e. the span of the columns of m."""
    if not m.is_integral:
        raise ValueError("image lattice needs an integer matrix")
    if m.det() == 0:
        raise ValueError("singular matrix has rank-deficient image")
    return HnfLattice.from_rows(m.columns(), SUBLATTICE)


def _point_mod_1(p):
    x, y = Fraction(p[0]), Fraction(p[1])
    return (x - (x.numerator // x.denominator), y - (y.numerator // y.denominator))


@dataclass(frozen=True)
class FiniteTorusSubgroup:
    """A finite subgroup of T^2, canonically its superlattice of lifts."""

    superlattice: HnfLattice
    generators: tuple = field(default=(), compare=False)

    def __post_init__(self):
        if self.superlattice.kind != SUPERLATTICE:
            raise ValueError("a finite torus subgroup lifts to a superlattice")

    @property
    def order(self):
        return self.superlattice.index

    def contains(self, p):
        return self.superlattice.contains(p)

    def __le__(self, other):
        return other.superlattice.contains_lattice(self.superlattice)

    def elements(self):
        """All points, as reduced rational pairs; BFS over the generators."""
        r0, r1 = self.superlattice.basis.rows()
        gens = [_point_mod_1(r0), _point_mod_1(r1)]
        seen = {(Fraction(0), Fraction(0))}
        frontier = list(seen)
        while frontier:
            p = frontier.pop()
            for g in gens:
                q = _point_mod_1((p[0] + g[0], p[1] + g[1]))
                if q not in seen:
                    seen.add(q)
                    frontier.append(q)
        return sorted(seen)


def trivial_subgroup():
    return FiniteTorusSubgroup(
        HnfLattice(Mat2(1, 0, 0, 1), SUPERLATTICE), generators=()
    )


def subgroup_from_generators(gens):
    """The subgroup of T^2 generated by rational points (pairs mod 1)."""
    pts = [_point_mod_1(g) for g in gens]
    rows = [(1, 0), (0, 1)] + pts
    lat = HnfLattice.from_rows(rows, SUPERLATTICE)
    return FiniteTorusSubgroup(lat, generators=tuple(pts))


def enumerate_subgroups(order):
    """All finite subgroups of T^2 of the given order (sigma_1 many)."""
    out = []
    for sub in enumerate_sublattices(order):
        scaled = sub.basis.scale(Fraction(1, order))
        out.append(FiniteTorusSubgroup(HnfLattice(scaled, SUPERLATTICE)))
    return out


def matrix_from_subgroup(c):
    """The integer matrix A_C sending the HNF basis of the lifts to e1, e2.

    The HNF basis rows (u1, u2) of quot^{-1}(C) are non-negative and
    positively oriented; A_C is inverse to the matrix with columns u1,
    u2, has positive determinant equal to order(C), and maps the
    superlattice onto Z^2.
    """
    a = c.superlattice.basis.transpose().inverse()
    if not a.is_integral:
        raise RuntimeError(f"duality produced a non-integral matrix {a!r}")
    return a


def kernel_subgroup(m):
    """Kernel of the endomorphism of T^2 induced by m, for det(m) > 0.

    The lifts of the kernel form m^{-1} Z^2, the lattice spanned by the
    columns of m^{-1}; its order is det(m).
    """
    if m.det() <= 0:
        raise ValueError(f"determinant {m.det()} <= 0; not an isogeny")
    inv = m.inverse()
    lat = HnfLattice.from_rows(inv.columns(), SUPERLATTICE)
    return FiniteTorusSubgroup(lat)
