"""Elements of the Hopf monoid and its product and coproduct.

A :class:`SpeciesElement` is a finite linear combination of tensors of basis
vectors.  Every tensor factor is an :class:`NNPartition` whose reference poset
is the ambient poset of that factor, so ambients are tracked automatically.
For the subgroup bases the label ``lam`` stands for the subgroup UT_lam of its
ambient.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Mapping

from ..errors import AtomMismatchError, NotSubposetError, OverlapError
from ..lattice import lbl_ch_inverse, lower_exponent, ut_lower
from ..nonnesting import NNPartition, antichains, check_subposet, int_lambda_mu, restrict_nn
from ..poset import Poset, intern
from ..scalars import ONE, ZERO, RationalFunction, as_rf
from ..supercharacters import Basis, ClassFunction, chi_degree, convert

EMPTY = intern(Poset.empty())
EMPTY_LABEL = NNPartition.empty(EMPTY)

Key = tuple  # tuple of NNPartition, one per tensor factor


def _term_key(key: Key) -> tuple:
    return tuple((lab.poset.sort_key(), lab.key) for lab in key)


class SpeciesElement:
    __slots__ = ("basis", "terms")

    def __init__(self, basis, terms: Mapping[Key, object] | None = None):
        self.basis = Basis.parse(basis)
        clean: dict = {}
        for key, c in (terms or {}).items():
            c = as_rf(c)
            if c.is_zero():
                continue
            clean[key] = clean.get(key, ZERO) + c
        self.terms = {k: v for k, v in clean.items() if not v.is_zero()}
        arities = {len(k) for k in self.terms}
        if len(arities) > 1:
            raise ValueError("terms of different tensor arity")

    @classmethod
    def basis_vector(cls, label: NNPartition, basis) -> "SpeciesElement":
        return cls(basis, {(label,): ONE})

    @classmethod
    def unit(cls, basis) -> "SpeciesElement":
        return cls(basis, {(EMPTY_LABEL,): ONE})

    @classmethod
    def zero(cls, basis) -> "SpeciesElement":
        return cls(basis)

    @property
    def arity(self) -> int | None:
        for k in self.terms:
            return len(k)
        return None

    def ground(self) -> frozenset:
        out: set = set()
        for k in self.terms:
            for lab in k:
                out |= lab.poset.atom_set
        return frozenset(out)

    def is_zero(self) -> bool:
        return not self.terms

    def items(self) -> list[tuple[Key, RationalFunction]]:
        return sorted(self.terms.items(), key=lambda kv: _term_key(kv[0]))

    def coefficient(self, *labels: NNPartition) -> RationalFunction:
        return self.terms.get(tuple(labels), ZERO)

    def _aligned(self, other: "SpeciesElement") -> "SpeciesElement":
        return other if other.basis == self.basis else other.convert(self.basis)

    def __add__(self, other: "SpeciesElement") -> "SpeciesElement":
        other = self._aligned(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, ZERO) + v
        return SpeciesElement(self.basis, out)

    def __neg__(self):
        return SpeciesElement(self.basis, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "SpeciesElement":
        c = as_rf(c)
        return SpeciesElement(self.basis, {k: v * c for k, v in self.terms.items()})

    def __rmul__(self, c):
        return self.scale(c)

    def __mul__(self, other):
        if isinstance(other, SpeciesElement):
            return product(self, other)
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, SpeciesElement):
            return NotImplemented
        return self.terms == self._aligned(other).terms

    __hash__ = None

    def convert(self, target) -> "SpeciesElement":
        """Change basis in every tensor factor."""
        target = Basis.parse(target)
        if target == self.basis:
            return self
        out: dict = {}
        for key, c in self.terms.items():
            expansions = [convert(ClassFunction.basis_vector(lab, self.basis), target).coeffs for lab in key]
            partial = {(): c}
            for exp in expansions:
                nxt: dict = {}
                for k0, c0 in partial.items():
                    for lab, c1 in exp.items():
                        k1 = k0 + (lab,)
                        nxt[k1] = nxt.get(k1, ZERO) + c0 * c1
                partial = nxt
            for k, v in partial.items():
                out[k] = out.get(k, ZERO) + v
        return SpeciesElement(target, out)

    def forget(self) -> dict:
        """Sum coefficients over ambients that share the same subgroup.

        Only meaningful in the subgroup bases, where a label determines a
        subgroup poset independently of its ambient.
        """
        if self.basis not in (Basis.SUBGROUP_DELTA, Basis.SUBGROUP_CHI):
            raise ValueError("forgetful projection needs a subgroup basis")
        out: dict = {}
        for key, c in self.terms.items():
            if self.basis == Basis.SUBGROUP_CHI:
                # chi^{UT_lam} = (|UT_R|/|UT_lam|) delta_{UT_lam}
                for lab in key:
                    c = c * RationalFunction.qpow(len(lab.poset.less) - lower_exponent(lab))
            fk = tuple(subgroup_poset(lab) for lab in key)
            out[fk] = out.get(fk, ZERO) + c
        return {k: v for k, v in out.items() if not v.is_zero()}

    def __repr__(self):
        if not self.terms:
            return f"SpeciesElement[{self.basis.value}: 0]"
        parts = []
        for key, c in self.items():
            tensor = " (x) ".join(f"{lab.poset!r}:{lab!r}" for lab in key)
            parts.append(f"({c}) {tensor}")
        return f"SpeciesElement[{self.basis.value}: " + " + ".join(parts) + "]"


def subgroup_poset(label: NNPartition) -> Poset:
    """The poset Q with UT_Q = UT_label."""
    return intern(label.poset.with_relations(ut_lower(label).members))


def subgroup_label(ambient: Poset, sub: Poset) -> NNPartition:
    """The label of the subgroup UT_sub inside UT_ambient (normality checked)."""
    from ..lattice import CoIdeal

    if sub.atom_set != ambient.atom_set:
        raise AtomMismatchError("subgroup poset must use the ambient atoms")
    check_subposet(ambient, sub)
    return lbl_ch_inverse(CoIdeal(ambient, sub.less))


# basis-vector rules ------------------------------------------------------------

@lru_cache(maxsize=1 << 16)
def _concat(p1: Poset, p2: Poset) -> Poset:
    return intern(p1.concatenate(p2))


@lru_cache(maxsize=1 << 16)
def _restrict(p: Poset, block: frozenset) -> Poset:
    return intern(p.restrict(block))


@lru_cache(maxsize=1 << 17)
def product_labels(basis: Basis, x: NNPartition, y: NNPartition) -> tuple:
    """Product of two basis vectors as a tuple of ``(label, coeff)``."""
    if x.poset.atom_set & y.poset.atom_set:
        raise OverlapError("factors share atoms")
    if not x.poset.atom_set:
        return ((y, ONE),)
    if not y.poset.atom_set:
        return ((x, ONE),)
    P = _concat(x.poset, y.poset)
    joined = x.arcs | y.arcs
    if basis != Basis.DELTA:
        return ((NNPartition(P, joined, check=False), ONE),)
    # superclass indicators: add every admissible set of cross arcs
    A, B = x.poset.atom_set, y.poset.atom_set
    cross = []
    for a in A:
        for b in B:
            if any(P.leq(a, i) for i, _ in x.arcs):
                continue
            if any(P.leq(j, b) for _, j in y.arcs):
                continue
            cross.append((a, b))
    out = []
    for extra in antichains(cross, P.interval_leq):
        out.append((NNPartition(P, joined | extra, check=False), ONE))
    return tuple(out)


@lru_cache(maxsize=1 << 17)
def coproduct_label(basis: Basis, x: NNPartition, left: frozenset) -> tuple:
    """Coproduct of a basis vector along ``(left, rest)`` as ``((lA, lB), coeff)`` pairs."""
    R = x.poset
    right = R.atom_set - left
    RA, RB = _restrict(R, left), _restrict(R, right)
    if basis == Basis.DELTA:
        la = frozenset(a for a in x.arcs if a[0] in left and a[1] in left)
        lb = frozenset(a for a in x.arcs if a[0] in right and a[1] in right)
        if la | lb != x.arcs:
            return ()
        return (((NNPartition(RA, la, check=False), NNPartition(RB, lb, check=False)), ONE),)
    if basis in (Basis.SUBGROUP_DELTA, Basis.SUBGROUP_CHI):
        members = ut_lower(x).members
        pieces = []
        for sub_p, block in ((RA, left), (RB, right)):
            outside = [iv for iv in sub_p.proper_intervals() if iv not in members]
            maxs = [m for m in outside if not any(o != m and sub_p.interval_leq(m, o) for o in outside)]
            pieces.append(NNPartition(sub_p, maxs, check=False))
        coeff = ONE
        if basis == Basis.SUBGROUP_CHI:
            # chi^{UT} = (|UT_R|/|UT|) delta_{UT}, applied on both sides
            e = len(R.less) - lower_exponent(x)
            ea = len(RA.less) - lower_exponent(pieces[0])
            eb = len(RB.less) - lower_exponent(pieces[1])
            coeff = RationalFunction.qpow(e - ea - eb)
        return ((tuple(pieces), coeff),)
    # supercharacters: restrict to the disjoint union, then split
    Q = intern(R.with_relations(RA.less | RB.less))
    res = restriction_general(R, Q, x)
    out = []
    for nu, c in res.items():
        na = NNPartition(RA, (a for a in nu.arcs if a[0] in left), check=False)
        nb = NNPartition(RB, (a for a in nu.arcs if a[0] in right), check=False)
        out.append(((na, nb), c))
    return tuple(out)


def restriction_general(big: Poset, sub: Poset, lam: NNPartition) -> ClassFunction:
    """Restriction of the supercharacter ``lam`` of UT_big to UT_sub, in the chi basis."""
    check_subposet(big, sub)
    if sub.atom_set != big.atom_set:
        raise NotSubposetError("restriction needs a subposet on the same atoms")
    lam_q = restrict_nn(lam, sub)
    inter = sum(1 for iv in ut_lower(lam).members if iv in sub.less)
    coeff = RationalFunction.qpow(inter - lower_exponent(lam_q)) * chi_degree(lam) / chi_degree(lam_q)
    poset_int = int_lambda_mu(big, sub, lam, lam_q)
    out = {}
    for extra in antichains(list(poset_int.atoms), poset_int.leq):
        out[NNPartition(sub, lam_q.arcs | extra, check=False)] = coeff
    return ClassFunction(sub, Basis.CHI, out)


# element-level operations ----------------------------------------------------------

def product(x: SpeciesElement, y: SpeciesElement) -> SpeciesElement:
    """Inflation product of two arity-one elements over disjoint grounds."""
    y = x._aligned(y)
    out: dict = {}
    for (kx,), cx in x.terms.items():
        for (ky,), cy in y.terms.items():
            for lab, c in product_labels(x.basis, kx, ky):
                key = (lab,)
                out[key] = out.get(key, ZERO) + cx * cy * c
    return SpeciesElement(x.basis, out)


def coproduct(x: SpeciesElement, left: Iterable, right: Iterable | None = None) -> SpeciesElement:
    """Restriction coproduct along the split ``(left, right)``; result has arity two."""
    left = frozenset(left)
    ground = x.ground()
    if right is not None:
        right = frozenset(right)
        if left & right or (left | right) != ground and x.terms:
            raise AtomMismatchError("split must be an ordered partition of the ground set")
    out: dict = {}
    for (k,), c in x.terms.items():
        if not left <= k.poset.atom_set:
            raise AtomMismatchError("split does not match the ambient atoms")
        for pair, c1 in coproduct_label(x.basis, k, left):
            out[pair] = out.get(pair, ZERO) + c * c1
    return SpeciesElement(x.basis, out)


def apply_at(x: SpeciesElement, position: int, fn) -> SpeciesElement:
    """Apply a linear map (label -> iterable of (key, coeff)) to one tensor factor."""
    out: dict = {}
    for key, c in x.terms.items():
        for sub, c1 in fn(key[position]):
            k = key[:position] + tuple(sub) + key[position + 1:]
            out[k] = out.get(k, ZERO) + c * c1
    return SpeciesElement(x.basis, out)


def coproduct_at(x: SpeciesElement, position: int, left: frozenset) -> SpeciesElement:
    return apply_at(x, position, lambda lab: coproduct_label(x.basis, lab, frozenset(left)))


def multiply_tensor(x: SpeciesElement) -> SpeciesElement:
    """Collapse every tensor to a single factor by multiplying left to right."""
    out: dict = {}
    for key, c in x.terms.items():
        for lab, c1 in iterated_product(x.basis, key):
            out[(lab,)] = out.get((lab,), ZERO) + c * c1
    return SpeciesElement(x.basis, out)


@lru_cache(maxsize=1 << 17)
def iterated_product(basis: Basis, key: tuple) -> tuple:
    if len(key) == 1:
        return ((key[0], ONE),)
    acc: dict = {}
    for head, c0 in iterated_product(basis, key[:-1]):
        for lab, c1 in product_labels(basis, head, key[-1]):
            acc[lab] = acc.get(lab, ZERO) + c0 * c1
    return tuple((k, v) for k, v in acc.items() if not v.is_zero())


@lru_cache(maxsize=1 << 17)
def iterated_coproduct(basis: Basis, label: NNPartition, comp: tuple) -> tuple:
    """Coproduct along a set composition, as ``(tensor, coeff)`` pairs."""
    if len(comp) == 1:
        return (((label,), ONE),)
    acc: dict = {}
    for (first, rest), c0 in coproduct_label(basis, label, comp[0]):
        for tail, c1 in iterated_coproduct(basis, rest, comp[1:]):
            key = (first,) + tail
            acc[key] = acc.get(key, ZERO) + c0 * c1
    return tuple((k, v) for k, v in acc.items() if not v.is_zero())


def clear_caches() -> None:
    for fn in (_concat, _restrict, product_labels, coproduct_label, iterated_product, iterated_coproduct):
        fn.cache_clear()
