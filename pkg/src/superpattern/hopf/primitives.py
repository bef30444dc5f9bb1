"""Atomic pairs, free generators and primitive elements."""

from __future__ import annotations

from itertools import combinations

from ..errors import NotAtomicError, NotNormalError, UnknownAtomError
from ..lattice import is_normal
from ..nonnesting import check_subposet, enumerate_nn
from ..poset import Poset, atom_key, set_compositions
from ..scalars import ONE, ZERO, RationalFunction
from ..supercharacters import Basis
from .antipode import _candidate_pairs, all_splits, check_composition_cap, joint_fac
from .species import (
    SpeciesElement,
    _restrict,
    coproduct,
    iterated_coproduct,
    iterated_product,
    product,
    subgroup_label,
    subgroup_poset,
)


def _splits_as_concat(P: Poset, left: frozenset) -> bool:
    right = P.atom_set - left
    return all((a, b) in P.less for a in left for b in right)


def _valid_cuts(P: Poset, Q: Poset) -> tuple[list, list[bool]]:
    blocks = P.ordinal_blocks()
    ok, seen = [], set()
    for block in blocks[:-1]:
        seen |= block
        ok.append(_splits_as_concat(Q, frozenset(seen)))
    return blocks, ok


def is_atomic_pair(P: Poset, Q: Poset) -> bool:
    """No proper nonempty A splits both P and Q as concatenations."""
    check_subposet(P, Q)
    if Q.atom_set != P.atom_set:
        raise UnknownAtomError("pair must share its atoms")
    if not P.atom_set:
        return False
    _, ok = _valid_cuts(P, Q)
    return not any(ok)


def is_atomic_pair_scan(P: Poset, Q: Poset) -> bool:
    """Same test by scanning every proper subset; slow, for cross-checks."""
    check_subposet(P, Q)
    items = sorted(P.atom_set, key=atom_key)
    for r in range(1, len(items)):
        for left in combinations(items, r):
            left = frozenset(left)
            if _splits_as_concat(P, left) and _splits_as_concat(Q, left):
                return False
    return bool(items)


def decompose_atomic(P: Poset, Q: Poset) -> tuple:
    """Finest composition cutting both P and Q into atomic concatenation factors."""
    check_subposet(P, Q)
    if Q.atom_set != P.atom_set:
        raise UnknownAtomError("pair must share its atoms")
    if not P.atom_set:
        return ()
    blocks, ok = _valid_cuts(P, Q)
    comp, current = [], set(blocks[0])
    for block, cut in zip(blocks[1:], ok):
        if cut:
            comp.append(frozenset(current))
            current = set()
        current |= block
    comp.append(frozenset(current))
    return tuple(comp)


def slt(ground) -> object:
    """The chosen atom of a ground set: its least element in canonical order."""
    return min(ground, key=atom_key)


def primitive_generator(a, P: Poset, Q: Poset) -> SpeciesElement:
    """S^(a) for the atomic pair (P, Q), in the subgroup delta basis.

    Terms are pairs (X, Y) obtained by stacking restrictions of P and Q along
    one set composition.  Among the compositions factoring X over P and Y over
    Q at once, keep those with ``a`` in the first block; when exactly one
    remains, the pair gets the sign (-1)^(length-1).
    """
    check_subposet(P, Q)
    if a not in P.atom_set:
        raise UnknownAtomError(f"atom {a!r} not in the ground set")
    if not is_normal(P, Q):
        raise NotNormalError("UT_Q is not normal in UT_P")
    if not is_atomic_pair(P, Q):
        raise NotAtomicError("pair factors as a concatenation")
    out = {}
    for X, Y in _candidate_pairs(P, Q):
        facs = [c for c in joint_fac(P, X, Q, Y) if a in c[0]]
        if len(facs) == 1:
            sign = 1 if len(facs[0]) % 2 else -1
            out[(subgroup_label(X, Y),)] = RationalFunction.constant(sign)
    return SpeciesElement(Basis.SUBGROUP_DELTA, out)


def primitive_projection(a, x: SpeciesElement) -> SpeciesElement:
    """sum over compositions with ``a`` in the first block of (-1)^(l-1) m o Delta(x)."""
    out: dict = {}
    for (label,), c in x.terms.items():
        ground = label.poset.atom_set
        check_composition_cap(len(ground))
        for comp in set_compositions(ground):
            if a not in comp[0]:
                continue
            sign = ONE if len(comp) % 2 else -ONE
            for tensor, c1 in iterated_coproduct(x.basis, label, comp):
                for lab, c2 in iterated_product(x.basis, tensor):
                    out[(lab,)] = out.get((lab,), ZERO) + sign * c * c1 * c2
    return SpeciesElement(x.basis, out)


def is_primitive(x: SpeciesElement) -> bool:
    """Every coproduct along a split with both sides nonempty vanishes."""
    if x.is_zero():
        return True
    ground = x.ground()
    for left, right in all_splits(ground):
        if left and right and not coproduct(x, left, right).is_zero():
            return False
    return True


def generator_product(R: Poset, Q: Poset) -> SpeciesElement:
    """Product of the primitive generators of the atomic factors of (R, Q)."""
    acc = SpeciesElement.unit(Basis.SUBGROUP_DELTA)
    for block in decompose_atomic(R, Q):
        gen = primitive_generator(slt(block), _restrict(R, block), _restrict(Q, block))
        acc = product(acc, gen)
    return acc


def is_triangular(R: Poset, Q: Poset) -> bool:
    """Leading term +delta_{UT_Q}; every other term is a larger subgroup (more relations)."""
    x = generator_product(R, Q)
    lead = subgroup_label(R, Q)
    if x.coefficient(lead) != ONE:
        return False
    size = len(Q.less)
    for (lab,), _ in x.items():
        if lab == lead:
            continue
        if len(subgroup_poset(lab).less) <= size:
            return False
    return True


def atomic_nn_count(n: int) -> int:
    """Non-nesting partitions of the chain 1<...<n that are not shifted concatenations."""
    chain = Poset.chain(range(1, n + 1))
    count = 0
    for lam in enumerate_nn(chain):
        if all(any(i <= k < j for i, j in lam.arcs) for k in range(1, n)):
            count += 1
    return count
