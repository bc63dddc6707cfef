"""Finite-dimensional associative algebras over Q by structure constants.

An algebra is a dimension, a list of basis labels, a unit vector, and
rational constants c[i][j][k] with e_i e_j = sum_k c[i][j][k] e_k.  A
two-fold algebra carries a second product on the same underlying space
sharing the same unit; the interchange law ties the two together.
Validation is report-based: every violated associativity, unitality,
or interchange instance is listed, and an empty report means valid.

Builtin algebras (addressable by name in the CLI):

    q       the ground field Q
    dual    Q[x]/(x^2)
    trunc3  Q[x]/(x^3)
    prod2   Q x Q
    mat2    2x2 matrices over Q (elementary-matrix basis)
    group2  the group algebra Q[Z/2]
    group3  the group algebra Q[Z/3]

Algebras can also be loaded from a plain-text file::

    # comment lines start with '#'
    dim 2
    basis 1 x
    unit 1 0
    mul 0 0 0 1
    mul 0 1 1 1
    mul 1 0 1 1
    mul2 ...      # optional second product

`mul i j k coeff` sets c[i][j][k] (0-based indices, rational coeff);
unlisted constants are zero.  `mul2` lines, when present, define a
second product for a two-fold algebra.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


def _zero_constants(dim):
    return [[[Fraction(0)] * dim for _ in range(dim)] for _ in range(dim)]


def _freeze(constants):
    return tuple(
        tuple(tuple(row) for row in plane) for plane in constants
    )


@dataclass(frozen=True)
class StructureConstantAlgebra:
    dim: int
    labels: tuple
    unit: tuple
    mul: tuple  # mul[i][j][k] with e_i e_j = sum_k mul[i][j][k] e_k

    def multiply(self, u, v):
        """Product of two coefficient vectors."""
        out = [Fraction(0)] * self.dim
        for i, ui in enumerate(u):
            if not ui:
                continue
            for j, vj in enumerate(v):
                if not vj:
                    continue
                for k, c in enumerate(self.mul[i][j]):
                    if c:
                        out[k] += ui * vj * c
        return tuple(out)

    def basis_vector(self, i):
        return tuple(Fraction(1) if k == i else Fraction(0) for k in range(self.dim))


@dataclass(frozen=True)
class TwoAlgebra:
    """One space, two products sharing a unit, tied by interchange."""

    dim: int
    labels: tuple
    unit: tuple
    mul1: tuple
    mul2: tuple

    def first(self):
        return StructureConstantAlgebra(self.dim, self.labels, self.unit, self.mul1)

    def second(self):
        return StructureConstantAlgebra(self.dim, self.labels, self.unit, self.mul2)

    def swapped(self):
        return TwoAlgebra(self.dim, self.labels, self.unit, self.mul2, self.mul1)


def algebra(dim, labels, unit, entries):
    """Build an algebra from sparse entries {(i, j, k): coeff}."""
    constants = _zero_constants(dim)
    for (i, j, k), coeff in entries.items():
        constants[i][j][k] = Fraction(coeff)
    return StructureConstantAlgebra(
        dim, tuple(labels), tuple(Fraction(c) for c in unit), _freeze(constants)
    )


def from_commutative(a):
    """The two-fold algebra (A, mul, mul) of a commutative algebra."""
    return TwoAlgebra(a.dim, a.labels, a.unit, a.mul, a.mul)


def two_algebra(a, second_mul):
    return TwoAlgebra(a.dim, a.labels, a.unit, a.mul, second_mul)


# ---------------------------------------------------------------------------
# builtins
# ---------------------------------------------------------------------------


def ground_field():
    return algebra(1, ("1",), (1,), {(0, 0, 0): 1})


def truncated_polynomial(power):
    """Q[x]/(x^power), basis 1, x, ..., x^(power-1)."""
    labels = tuple("1" if k == 0 else f"x^{k}" if k > 1 else "x" for k in range(power))
    entries = {}
    for i in range(power):
        for j in range(power):
            if i + j < power:
                entries[(i, j, i + j)] = 1
    unit = tuple(1 if k == 0 else 0 for k in range(power))
    return algebra(power, labels, unit, entries)


def dual_numbers():
    return truncated_polynomial(2)


def product_ring():
    """Q x Q with idempotent basis."""
    return algebra(
        2, ("e0", "e1"), (1, 1), {(0, 0, 0): 1, (1, 1, 1): 1}
    )


def matrix_algebra_2():
    """M2(Q) on the elementary matrices E11, E12, E21, E22."""
    idx = {(r, s): 2 * r + s for r in range(2) for s in range(2)}
    entries = {}
    for (r, s), i in idx.items():
        for (t, u), j in idx.items():
            if s == t:
                entries[(i, j, idx[(r, u)])] = 1
    return algebra(4, ("E11", "E12", "E21", "E22"), (1, 0, 0, 1), entries)


def group_algebra_cyclic(n):
    """Q[Z/n] on the group-element basis."""
    labels = tuple(f"g^{k}" if k else "1" for k in range(n))
    entries = {(i, j, (i + j) % n): 1 for i in range(n) for j in range(n)}
    unit = tuple(1 if k == 0 else 0 for k in range(n))
    return algebra(n, labels, unit, entries)


BUILTIN = {
    "q": ground_field,
    "dual": dual_numbers,
    "trunc3": lambda: truncated_polynomial(3),
    "prod2": product_ring,
    "mat2": matrix_algebra_2,
    "group2": lambda: group_algebra_cyclic(2),
    "group3": lambda: group_algebra_cyclic(3),
}

# builtins that are commutative, hence give two-fold algebras
COMMUTATIVE_BUILTINS = ("q", "dual", "trunc3", "prod2", "group2", "group3")


def builtin_algebra(name):
    try:
        return BUILTIN[name]()
    except KeyError:
        raise ValueError(
            f"unknown algebra {name!r}; builtins: {', '.join(sorted(BUILTIN))}"
        ) from None


def load_algebra(source):
    """Load from a builtin name or a spec file path."""
    if source in BUILTIN:
        return builtin_algebra(source)
    with open(source, encoding="utf-8") as fh:
        return parse_algebra_text(fh.read())


def parse_algebra_text(text):
    """Parse the plain-text schema; returns an algebra or a two-fold one."""
    dim = None
    labels = None
    unit = None
    mul_entries = {}
    mul2_entries = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        key, args = parts[0], parts[1:]
        try:
            if key == "dim":
                dim = int(args[0])
            elif key == "basis":
                labels = tuple(args)
            elif key == "unit":
                unit = tuple(Fraction(a) for a in args)
            elif key in ("mul", "mul2"):
                i, j, k = (int(a) for a in args[:3])
                target = mul_entries if key == "mul" else mul2_entries
                target[(i, j, k)] = Fraction(args[3])
            else:
                raise ValueError(f"unknown field {key!r}")
        except (IndexError, ValueError) as exc:
            raise ValueError(f"algebra file line {lineno}: {exc}") from None
    if dim is None or dim <= 0:
        raise ValueError("algebra file must set a positive dim")
    if labels is None:
        labels = tuple(f"e{k}" for k in range(dim))
    if len(labels) != dim:
        raise ValueError(f"{len(labels)} labels for dim {dim}")
    if unit is None or len(unit) != dim:
        raise ValueError("algebra file must set a unit vector of length dim")
    for (i, j, k) in list(mul_entries) + list(mul2_entries):
        if not all(0 <= x < dim for x in (i, j, k)):
            raise ValueError(f"structure constant index ({i},{j},{k}) out of range")
    base = algebra(dim, labels, unit, mul_entries)
    if not mul2_entries:
        return base
    constants2 = _zero_constants(dim)
    for (i, j, k), coeff in mul2_entries.items():
        constants2[i][j][k] = coeff
    return two_algebra(base, _freeze(constants2))
