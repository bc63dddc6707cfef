"""The finite orbit category of the torus and the isogeny action on it.

Objects are quotients T^2/C by finite subgroups; a T^2-equivariant map
T^2/C -> T^2/C' exists exactly when C <= C', and then every such map
is translation by a point of T^2/C'.  Only rational translations are
representable here, which suffices for all the poset-level statements:
morphisms are stored as canonical coset representatives modulo the
target's superlattice of lifts.

A positive-determinant integer matrix acts on orbits through the
transpose-inverse on lifts:

    act(m, C) has lifts {v : v . m in lifts(C)}  (row convention),

equivalently (m^T)^{-1} applied to the superlattice.  This is the left
monoid action induced by the transpose identification of the isogeny
monoid with its opposite, so act(m1 * m2, C) = act(m1, act(m2, C)).

`factorization_poset` materializes the divisibility poset of
left-unimodular classes [A] of positive-determinant integer matrices,
ordered by [A] <= [B] iff B A^{-1} is integral, together with the
order isomorphism [A] -> kernel_subgroup(A) onto finite subgroups
ordered by inclusion.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .lattice import (
    SUPERLATTICE,
    FiniteTorusSubgroup,
    HnfLattice,
    enumerate_sublattices,
    kernel_subgroup,
)
from .mat2 import Mat2


@dataclass(frozen=True)
class OrbitObject:
    """A transitive torus space with finite isotropy, T^2/C."""

    subgroup: FiniteTorusSubgroup

    @property
    def isotropy_order(self):
        return self.subgroup.order


@dataclass(frozen=True)
class OrbitMorphism:
    """A translation map T^2/C -> T^2/C'; requires C <= C'."""

    source: OrbitObject
    target: OrbitObject
    translation: tuple

    def __post_init__(self):
        if not hom_exists(self.source, self.target):
            raise ValueError(
                "no equivariant maps: source isotropy not contained in target"
            )
        reduced = self.target.subgroup.superlattice.reduce(self.translation)
        object.__setattr__(self, "translation", reduced)


def identity_morphism(obj):
    return OrbitMorphism(obj, obj, (Fraction(0), Fraction(0)))


def hom_exists(src, dst):
    """Maps T^2/C -> T^2/C' exist iff C <= C'."""
    return src.subgroup <= dst.subgroup


def compose(f, g):
    """First f, then g; translations add modulo the final target."""
    if f.target != g.source:
        raise ValueError("morphisms do not compose: endpoints mismatch")
    t = (
        f.translation[0] + g.translation[0],
        f.translation[1] + g.translation[1],
    )
    return OrbitMorphism(f.source, g.target, t)


def isogeny_act(m, obj):
    """Left action of a positive-determinant integer matrix on orbits.

    The new isotropy has lifts {v : v . m in lifts(C)}; its order is
    det(m) times the old order.
    """
    if not m.is_integral:
        raise ValueError("isogeny action needs an integer matrix")
    if m.det() <= 0:
        raise ValueError(f"determinant {m.det()} <= 0; not an isogeny")
    basis = obj.subgroup.superlattice.basis * m.inverse()
    lat = HnfLattice.from_rows(basis.rows(), SUPERLATTICE)
    return OrbitObject(FiniteTorusSubgroup(lat))


def translations_with_denominator(src, dst, denom):
    """All morphisms src -> dst whose translation has denominator | denom.

    For C <= C' there are denom^2 / order(C') of them; used as a
    counting sanity check.
    """
    if not hom_exists(src, dst):
        return []
    seen = set()
    for i in range(denom):
        for j in range(denom):
            p = (Fraction(i, denom), Fraction(j, denom))
            seen.add(dst.subgroup.superlattice.reduce(p))
    return sorted(seen)


@dataclass(frozen=True)
class FactorizationPoset:
    """Left-unimodular classes of integer matrices with det <= max_index.

    `objects[i]` is the canonical (row-HNF) representative of a class;
    `relation` holds the pairs (i, j) with objects[i] <= objects[j];
    `kernels[i]` is the finite subgroup witnessing the order
    isomorphism with subgroup inclusion.
    """

    max_index: int
    objects: tuple
    relation: frozenset
    kernels: tuple

    def leq(self, i, j):
        return (i, j) in self.relation


def class_leq(a, b):
    """[A] <= [B] in the factorization order: B A^{-1} integral."""
    return (b * a.inverse()).is_integral


def factorization_poset(max_index):
    if not isinstance(max_index, int) or max_index <= 0:
        raise ValueError(f"max_index must be a positive integer, got {max_index!r}")
    objects = []
    for n in range(1, max_index + 1):
        for lat in enumerate_sublattices(n):
            objects.append(lat.basis)
    relation = frozenset(
        (i, j)
        for i, a in enumerate(objects)
        for j, b in enumerate(objects)
        if class_leq(a, b)
    )
    kernels = tuple(kernel_subgroup(a) for a in objects)
    return FactorizationPoset(max_index, tuple(objects), relation, kernels)
