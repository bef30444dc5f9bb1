"""Antipodes: Takeuchi's alternating sum and the two closed forms."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from ..config import get_caps
from ..errors import AtomMismatchError, NotNormalError, SizeCapError
from ..lattice import is_normal, ut_lower
from ..nonnesting import NNPartition, check_subposet, enumerate_nn
from ..poset import Poset, atom_key, intern, set_compositions
from ..scalars import ONE, ZERO, RationalFunction
from ..supercharacters import Basis, chi_degree
from .species import (
    EMPTY_LABEL,
    SpeciesElement,
    _concat,
    _restrict,
    iterated_coproduct,
    iterated_product,
    subgroup_label,
)

Composition = tuple  # tuple of frozensets


def ordered_bell(n: int) -> int:
    """Number of set compositions of an n-set."""
    fub = [1]
    for m in range(1, n + 1):
        total = 0
        binom = 1
        for k in range(1, m + 1):
            binom = binom * (m - k + 1) // k
            total += binom * fub[m - k]
        fub.append(total)
    return fub[n]


def check_composition_cap(n: int) -> None:
    count = ordered_bell(n)
    cap = get_caps().compositions
    if count > cap:
        raise SizeCapError(f"{count} set compositions exceed cap {cap}")


def composition_key(comp: Composition) -> tuple:
    return (len(comp), tuple(tuple(sorted(atom_key(a) for a in block)) for block in comp))


@lru_cache(maxsize=1 << 15)
def fac(Q: Poset, P: Poset) -> tuple:
    """Set compositions ``I`` with ``P = Q|I_1 . Q|I_2 . ...``.

    Equivalently: every block carries the same order in P and Q, and every
    element of a block is below every element of the next block in P.
    """
    if Q.atom_set != P.atom_set:
        raise AtomMismatchError("posets must share their atoms")
    if not P.atom_set:
        return ((),)
    blocks = P.ordinal_blocks()
    m = len(blocks)
    out = []
    for mask in range(1 << (m - 1)):
        comp, current = [], set(blocks[0])
        for j in range(1, m):
            if (mask >> (j - 1)) & 1:
                comp.append(frozenset(current))
                current = set()
            current |= blocks[j]
        comp.append(frozenset(current))
        if all(_same_order(P, Q, b) for b in comp):
            out.append(tuple(comp))
    return tuple(sorted(out, key=composition_key))


def _same_order(P: Poset, Q: Poset, block: frozenset) -> bool:
    return all(((a, b) in P.less) == ((a, b) in Q.less) for a in block for b in block if a != b)


def joint_fac(R: Poset, X: Poset, Q: Poset, Y: Poset) -> tuple:
    """Compositions that factor ``X`` over ``R`` and ``Y`` over ``Q`` at once."""
    other = set(fac(Q, Y))
    return tuple(c for c in fac(R, X) if c in other)


def concat_restrictions(P: Poset, comp: Composition) -> Poset:
    out = intern(Poset.empty())
    for block in comp:
        out = _concat(out, _restrict(P, block))
    return out


# Takeuchi ---------------------------------------------------------------------

def antipode_takeuchi(x: SpeciesElement, *, shifted_sign: bool = False) -> SpeciesElement:
    """S(x) = sum over set compositions of (-1)^l m o Delta (x).

    ``shifted_sign`` uses (-1)^(l-1) instead, which negates S off the empty set.
    """
    if x.arity not in (None, 1):
        raise ValueError("antipode is defined on arity-one elements")
    out: dict = {}
    for (label,), c in x.terms.items():
        flip = -c if shifted_sign and label.poset.atom_set else c
        for key, c1 in _takeuchi_label(x.basis, label):
            out[key] = out.get(key, ZERO) + flip * c1
    return SpeciesElement(x.basis, out)


@lru_cache(maxsize=1 << 14)
def _takeuchi_label(basis: Basis, label: NNPartition) -> tuple:
    ground = label.poset.atom_set
    if not ground:
        return (((EMPTY_LABEL,), ONE),)
    check_composition_cap(len(ground))
    acc: dict = {}
    for comp in set_compositions(ground):
        sign = -ONE if len(comp) % 2 else ONE
        for tensor, c in iterated_coproduct(basis, label, comp):
            for lab, c1 in iterated_product(basis, tensor):
                acc[lab] = acc.get(lab, ZERO) + sign * c * c1
    return tuple(((lab,), v) for lab, v in acc.items() if not v.is_zero())


def _candidate_pairs(R: Poset, Q: Poset) -> set:
    """All ``(R|A_1 . ... , Q|A_1 . ...)`` over set compositions ``A``."""
    check_composition_cap(len(R.atom_set))
    return {
        (concat_restrictions(R, comp), concat_restrictions(Q, comp))
        for comp in set_compositions(R.atom_set)
    }


def _convention(terms: dict, basis: Basis, shifted_sign: bool) -> SpeciesElement:
    """Closed forms below are written with the (-1)^(l-1) sign; flip to the true antipode."""
    x = SpeciesElement(basis, terms)
    return x if shifted_sign else -x


def antipode_delta_subgroup(
    Q: Poset, ambient: Poset | None = None, *, shifted_sign: bool = False
) -> SpeciesElement:
    """Closed form for S(delta_{UT_Q}): posets with a unique factorization.

    With ``ambient`` R, a term is indexed by the pair (X, Y) of the ambient
    and subgroup posets, and the factorizations counted are those shared by
    ``Fac_R(X)`` and ``Fac_Q(Y)``.  Without it R = Q and X = Y = P.
    """
    R = Q if ambient is None else ambient
    check_subposet(R, Q)
    if Q.atom_set != R.atom_set:
        raise AtomMismatchError("subgroup poset must use the ambient atoms")
    if not is_normal(R, Q):
        raise NotNormalError("UT_Q is not normal in the ambient pattern group")
    if not R.atom_set:
        return SpeciesElement.unit(Basis.SUBGROUP_DELTA)
    out: dict = {}
    for X, Y in _candidate_pairs(R, Q):
        facs = joint_fac(R, X, Q, Y)
        if len(facs) == 1:
            sign = 1 if len(facs[0]) % 2 else -1
            out[(subgroup_label(X, Y),)] = RationalFunction.constant(sign)
    return _convention(out, Basis.SUBGROUP_DELTA, shifted_sign)


def delta_subgroup_forgotten(Q: Poset, *, shifted_sign: bool = False) -> dict:
    """The ambient-free formula: coefficient of each delta_{UT_P}, keyed by P."""
    out = {}
    for _, P in _candidate_pairs(Q, Q):
        facs = fac(Q, P)
        if len(facs) == 1:
            sign = 1 if len(facs[0]) % 2 else -1
            out[(P,)] = RationalFunction.constant(sign if shifted_sign else -sign)
    return out


# supercharacters ------------------------------------------------------------------

def _cuts(P: Poset, comp: Composition):
    for j in range(len(comp) - 1):
        yield P.maximal(comp[j]), P.minimal(comp[j + 1])


def is_lambda_atomic(R: Poset, P: Poset, lam: NNPartition) -> bool:
    """Fac_R(P) is nonempty and its longest element has no lambda-neutral cut."""
    facs = fac(R, P)
    if not facs:
        return False
    longest = max(facs, key=len)
    members = ut_lower(lam).members
    for tops, bottoms in _cuts(P, longest):
        if all((a, b) in members for a in tops for b in bottoms):
            return False
    return True


def _inside_blocks(arcs, comp: Composition) -> bool:
    where = {a: i for i, block in enumerate(comp) for a in block}
    return all(where[i] == where[j] for i, j in arcs)


def antipode_chi(
    R: Poset, lam: NNPartition, *, literal: bool = False, shifted_sign: bool = False
) -> SpeciesElement:
    """Closed form for S(chi^lam), one term per (P, nu) with P lambda-atomic.

    The coefficient is chi^lam(1) (q/(q-1))^{|lam & nu|} times the signed sum
    of |UT_lam & UT_{R|I}| / |UT_{R|I}| over factorizations I of P that keep
    every arc of nu inside a block and cut no arc of lam & nu.  ``literal``
    drops the q^{|lam & nu|} factor for comparison purposes.
    """
    if lam.poset != R:
        raise AtomMismatchError("partition must live over R")
    if not R.atom_set:
        return SpeciesElement.unit(Basis.CHI)
    lower = ut_lower(lam).members
    degree = chi_degree(lam)
    check_composition_cap(len(R.atom_set))
    posets = {concat_restrictions(R, comp) for comp in set_compositions(R.atom_set)}
    out: dict = {}
    for P in posets:
        if not is_lambda_atomic(R, P, lam):
            continue
        facs = fac(R, P)
        for nu in enumerate_nn(P):
            if not nu.arcs <= R.less:
                continue
            extra = nu.arcs - lam.arcs
            if not all(any(R.interval_leq(a, l) for l in lam.arcs) for a in extra):
                continue
            shared = lam.arcs & nu.arcs
            total = ZERO
            for comp in facs:
                if not _inside_blocks(nu.arcs, comp):
                    continue
                lam_i = frozenset(a for a in lam.arcs if _inside_blocks((a,), comp))
                if lam_i != shared:
                    continue
                inside = frozenset(iv for iv in R.less if _inside_blocks((iv,), comp))
                blocks = R.with_relations(inside)
                if any(blocks.interval_leq(a, l) for a in extra for l in lam_i):
                    continue
                kept = sum(1 for iv in inside if iv in lower)
                term = RationalFunction.qpow(kept - len(inside))
                total = total + (term if len(comp) % 2 else -term)
            if total.is_zero():
                continue
            k = len(shared)
            factor = RationalFunction.qpow(0 if literal else k, -k)
            out[(nu,)] = degree * factor * total
    return _convention(out, Basis.CHI, shifted_sign)


def antipode_trivial(R: Poset, *, shifted_sign: bool = False) -> SpeciesElement:
    """S(chi^{empty}) = sum over P with a unique R-factorization of +-chi^{empty_P}."""
    if not R.atom_set:
        return SpeciesElement.unit(Basis.CHI)
    out = {}
    for P in {concat_restrictions(R, c) for c in set_compositions(R.atom_set)}:
        facs = fac(R, P)
        if len(facs) == 1:
            out[(NNPartition.empty(P),)] = RationalFunction.constant(1 if len(facs[0]) % 2 else -1)
    return _convention(out, Basis.CHI, shifted_sign)


def all_splits(ground: frozenset):
    """Ordered pairs (A, B) with A | B = ground, empty blocks allowed."""
    items = sorted(ground, key=atom_key)
    for r in range(len(items) + 1):
        for left in combinations(items, r):
            yield frozenset(left), ground - frozenset(left)
