"""Supercharacter theory of UT_R from the lattice of normal pattern subgroups.

Class functions are expanded in one of four bases, all indexed by
non-nesting partitions of R:

* ``delta``: indicator functions of superclasses;
* ``chi``: supercharacters;
* ``subgroup-chi``: induced trivial characters Ind_{UT_lambda}(1);
* ``delta-subgroup``: indicator functions of the subgroups UT_lambda.

Everything is a rational function of the field size q.
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from typing import Iterable, Mapping

from . import _linalg
from .errors import MixedReferenceError
from .group import GroupElement, superclass_of
from .lattice import lower_exponent, ut_lower, ut_upper
from .nonnesting import NNPartition, enumerate_nn, same_reference
from .poset import Poset
from .scalars import ONE, ZERO, RationalFunction, as_rf


class Basis(str, Enum):
    DELTA = "delta"
    CHI = "chi"
    SUBGROUP_CHI = "subgroup-chi"
    SUBGROUP_DELTA = "delta-subgroup"

    @classmethod
    def parse(cls, value) -> "Basis":
        if isinstance(value, Basis):
            return value
        return cls(value)


def group_exponent(poset: Poset) -> int:
    return len(poset.proper_intervals())


def group_order(poset: Poset) -> RationalFunction:
    return RationalFunction.qpow(group_exponent(poset))


def _strictly_nested(mu: NNPartition, lam: NNPartition) -> bool:
    P = lam.poset
    return any(m != a and P.interval_leq(m, a) for m in mu.arcs for a in lam.arcs)


def chi_value(lam: NNPartition, mu: NNPartition) -> RationalFunction:
    """Value of the supercharacter ``lam`` on the superclass ``mu``."""
    P = same_reference(lam, mu)
    if _strictly_nested(mu, lam):
        return ZERO
    shared = len(lam.arcs & mu.arcs)
    k = len(lam.arcs)
    # q^(eR-e_lam) (1-1/q)^k (1/(1-q))^shared
    return RationalFunction.qpow(
        group_exponent(P) - lower_exponent(lam) - k, k - shared, -1 if shared % 2 else 1
    )


def chi_degree(lam: NNPartition) -> RationalFunction:
    k = len(lam.arcs)
    return RationalFunction.qpow(group_exponent(lam.poset) - lower_exponent(lam) - k, k)


def superclass_size(mu: NNPartition) -> RationalFunction:
    k = len(mu.arcs)
    return RationalFunction.qpow(len(ut_upper(mu).members) - k, k)


def subgroup_contains_class(lam: NNPartition, mu: NNPartition) -> bool:
    """The superclass ``mu`` lies inside UT_lam."""
    return ut_upper(mu).members <= ut_lower(lam).members


def subgroup_chi_value(lam: NNPartition, mu: NNPartition) -> RationalFunction:
    same_reference(lam, mu)
    if not subgroup_contains_class(lam, mu):
        return ZERO
    return RationalFunction.qpow(group_exponent(lam.poset) - lower_exponent(lam))


def subgroup_delta_value(lam: NNPartition, mu: NNPartition) -> RationalFunction:
    same_reference(lam, mu)
    return ONE if subgroup_contains_class(lam, mu) else ZERO


_VALUE = {
    Basis.CHI: chi_value,
    Basis.SUBGROUP_CHI: subgroup_chi_value,
    Basis.SUBGROUP_DELTA: subgroup_delta_value,
    Basis.DELTA: lambda lam, mu: ONE if lam == mu else ZERO,
}


def basis_value(basis: Basis, lam: NNPartition, mu: NNPartition) -> RationalFunction:
    return _VALUE[Basis.parse(basis)](lam, mu)


def value_matrix(poset: Poset, basis: Basis) -> list[list[RationalFunction]]:
    """Rows: basis functions; columns: superclasses; both in canonical order."""
    basis = Basis.parse(basis)
    key = ("values", basis)
    hit = poset._cache.get(key)
    if hit is None:
        parts = enumerate_nn(poset)
        fn = _VALUE[basis]
        hit = [[fn(lam, mu) for mu in parts] for lam in parts]
        poset._cache[key] = hit
    return hit


def _inverse_matrix(poset: Poset, basis: Basis) -> list[list[RationalFunction]]:
    key = ("inverse", basis)
    hit = poset._cache.get(key)
    if hit is None:
        hit = _linalg.inverse(value_matrix(poset, basis))
        poset._cache[key] = hit
    return hit


def table(poset: Poset) -> list[list[RationalFunction]]:
    return value_matrix(poset, Basis.CHI)


def table_determinant(poset: Poset) -> RationalFunction:
    """The product formula prod_lambda |UT_R|/|UT_lambda|."""
    e = group_exponent(poset)
    return RationalFunction.qpow(sum(e - lower_exponent(lam) for lam in enumerate_nn(poset)))


def table_determinant_direct(poset: Poset) -> RationalFunction:
    return _linalg.determinant(table(poset))


def determinant_sign(poset: Poset) -> int:
    """+1 or -1 relating the direct determinant to the product formula."""
    ratio = table_determinant_direct(poset) / table_determinant(poset)
    if ratio == ONE:
        return 1
    if ratio == -ONE:
        return -1
    raise ArithmeticError(f"determinant differs from the product formula by {ratio}")


class ClassFunction:
    """A class function of UT_R expanded in one basis."""

    __slots__ = ("poset", "basis", "coeffs")

    def __init__(self, poset: Poset, basis, coeffs: Mapping[NNPartition, object] | None = None):
        self.poset = poset
        self.basis = Basis.parse(basis)
        clean = {}
        for lam, c in (coeffs or {}).items():
            if lam.poset != poset:
                raise MixedReferenceError("label does not live over the reference poset")
            c = as_rf(c)
            if not c.is_zero():
                clean[lam] = clean.get(lam, ZERO) + c
        self.coeffs = {k: v for k, v in clean.items() if not v.is_zero()}

    @classmethod
    def basis_vector(cls, lam: NNPartition, basis) -> "ClassFunction":
        return cls(lam.poset, basis, {lam: ONE})

    def _check(self, other: "ClassFunction"):
        if other.poset != self.poset:
            raise MixedReferenceError("class functions live over different posets")
        if other.basis != self.basis:
            other = convert(other, self.basis)
        return other

    def __add__(self, other: "ClassFunction") -> "ClassFunction":
        other = self._check(other)
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, ZERO) + v
        return ClassFunction(self.poset, self.basis, out)

    def __neg__(self):
        return ClassFunction(self.poset, self.basis, {k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "ClassFunction":
        c = as_rf(c)
        return ClassFunction(self.poset, self.basis, {k: v * c for k, v in self.coeffs.items()})

    def __rmul__(self, c):
        return self.scale(c)

    def coefficient(self, lam: NNPartition) -> RationalFunction:
        return self.coeffs.get(lam, ZERO)

    def items(self) -> list[tuple[NNPartition, RationalFunction]]:
        return sorted(self.coeffs.items(), key=lambda kv: kv[0].key)

    def values(self) -> dict[NNPartition, RationalFunction]:
        """Values on each superclass."""
        return convert(self, Basis.DELTA).coeffs

    def __eq__(self, other):
        if not isinstance(other, ClassFunction):
            return NotImplemented
        if other.poset != self.poset:
            return False
        return convert(other, self.basis).coeffs == self.coeffs

    __hash__ = None

    def __repr__(self):
        body = " + ".join(f"({c})*{self.basis.value}{lam!r}" for lam, c in self.items())
        return f"ClassFunction[{body or '0'}]"


def convert(f: ClassFunction, target) -> ClassFunction:
    target = Basis.parse(target)
    if f.basis == target:
        return f
    parts = enumerate_nn(f.poset)
    index = {lam: i for i, lam in enumerate(parts)}
    vec = [ZERO] * len(parts)
    for lam, c in f.coeffs.items():
        vec[index[lam]] = c
    if f.basis != Basis.DELTA:
        vec = _linalg.vec_mat(vec, value_matrix(f.poset, f.basis))
    if target != Basis.DELTA:
        vec = _linalg.vec_mat(vec, _inverse_matrix(f.poset, target))
    return ClassFunction(f.poset, target, {lam: c for lam, c in zip(parts, vec)})


def inner_product(f: ClassFunction, g: ClassFunction) -> RationalFunction:
    """(1/|UT_R|) sum over the group of f(u) g(u), summed class by class."""
    if f.poset != g.poset:
        raise MixedReferenceError("class functions live over different posets")
    fv, gv = f.values(), g.values()
    total = ZERO
    for mu, a in fv.items():
        b = gv.get(mu)
        if b is not None:
            total = total + superclass_size(mu) * a * b
    return total / group_order(f.poset)


def evaluate_at_element(f: ClassFunction, g: GroupElement) -> Fraction:
    if f.poset != g.poset:
        raise MixedReferenceError("class function and element live over different posets")
    return f.values().get(superclass_of(g), ZERO).evaluate(g.p)


def supercharacter(lam: NNPartition) -> ClassFunction:
    return ClassFunction.basis_vector(lam, Basis.CHI)


def class_function(poset: Poset, basis, items: Iterable[tuple[NNPartition, object]]) -> ClassFunction:
    out: dict = {}
    for lam, c in items:
        out[lam] = out.get(lam, ZERO) + as_rf(c)
    return ClassFunction(poset, basis, out)
