"""Normal pattern subgroups as co-ideals of the proper-interval poset.

A normal pattern subgroup of UT_R is stored as the set of intervals on which
its elements may be nonzero; normality is exactly upward closure under
interval inclusion.  Lattice operations then reduce to set operations.
"""

from __future__ import annotations

from typing import Iterable

from .config import get_caps
from .errors import MixedReferenceError, NotCoIdealError, SizeCapError
from .nonnesting import NNPartition, check_subposet, enumerate_nn
from .poset import Interval, Poset


class CoIdeal:
    __slots__ = ("poset", "members", "_hash")

    def __init__(self, poset: Poset, members: Iterable = (), *, check: bool = True):
        members = frozenset(Interval(*m) for m in members)
        if check:
            for m in members:
                poset.check_interval(m)
            for m in members:
                for iv in poset.proper_intervals():
                    if iv not in members and poset.interval_leq(m, iv):
                        raise NotCoIdealError(f"{iv!r} contains {m!r} but is missing")
        self.poset = poset
        self.members = members
        self._hash = None

    @classmethod
    def full(cls, poset: Poset) -> "CoIdeal":
        return cls(poset, poset.proper_intervals(), check=False)

    @classmethod
    def trivial(cls, poset: Poset) -> "CoIdeal":
        return cls(poset, (), check=False)

    @classmethod
    def from_subposet(cls, poset: Poset, sub: Poset) -> "CoIdeal":
        check_subposet(poset, sub)
        return cls(poset, sub.less)

    def subposet(self) -> Poset:
        """The poset Q with UT_Q equal to this subgroup."""
        return self.poset.with_relations(self.members)

    @property
    def exponent(self) -> int:
        return len(self.members)

    def sorted_members(self) -> list[Interval]:
        return sorted(self.members, key=self.poset.interval_key)

    def __len__(self):
        return len(self.members)

    def __contains__(self, iv):
        return tuple(iv) in self.members

    def __le__(self, other: "CoIdeal"):
        return self.members <= other.members

    def __eq__(self, other):
        if not isinstance(other, CoIdeal):
            return NotImplemented
        return self.members == other.members and self.poset == other.poset

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.poset, self.members))
        return self._hash

    def __repr__(self):
        return "CoIdeal{" + ",".join(repr(m) for m in self.sorted_members()) + "}"


def is_coideal(poset: Poset, members: Iterable) -> bool:
    members = frozenset(Interval(*m) for m in members)
    return all(
        iv in members
        for m in members
        for iv in poset.proper_intervals()
        if poset.interval_leq(m, iv)
    )


def is_normal(poset: Poset, sub: Poset) -> bool:
    """UT_sub is normal in UT_poset (``sub`` on the same atoms)."""
    check_subposet(poset, sub)
    if sub.atom_set != poset.atom_set:
        sub = poset.with_relations(sub.less)
    return is_coideal(poset, sub.less)


def meet_irreducible(poset: Poset, arc) -> CoIdeal:
    """Intervals not contained in ``arc``."""
    arc = poset.check_interval(arc)
    return CoIdeal(poset, (iv for iv in poset.proper_intervals() if not poset.interval_leq(iv, arc)), check=False)


def join_irreducible(poset: Poset, arc) -> CoIdeal:
    """Intervals containing ``arc``."""
    arc = poset.check_interval(arc)
    return CoIdeal(poset, (iv for iv in poset.proper_intervals() if poset.interval_leq(arc, iv)), check=False)


def ut_lower(lam: NNPartition) -> CoIdeal:
    """UT_lambda: intervals contained in no arc of ``lam``."""
    P = lam.poset
    return CoIdeal(
        P,
        (iv for iv in P.proper_intervals() if not any(P.interval_leq(iv, a) for a in lam.arcs)),
        check=False,
    )


def ut_upper(lam: NNPartition) -> CoIdeal:
    """UT^lambda: the upward closure of ``lam``."""
    return generated_coideal(lam.poset, lam.arcs)


def lower_exponent(lam: NNPartition) -> int:
    """``|ut_lower(lam)|`` without building the co-ideal, cached per partition."""
    P = lam.poset
    cache = P._cache.setdefault("lower_exp", {})
    e = cache.get(lam.arcs)
    if e is None:
        e = sum(1 for iv in P.proper_intervals() if not any(P.interval_leq(iv, a) for a in lam.arcs))
        cache[lam.arcs] = e
    return e


def lbl_cl(n: CoIdeal) -> NNPartition:
    """Minimal members of a co-ideal."""
    P = n.poset
    mins = [m for m in n.members if not any(o != m and P.interval_leq(o, m) for o in n.members)]
    return NNPartition(P, mins, check=False)


def lbl_ch_inverse(n: CoIdeal) -> NNPartition:
    """The partition ``lam`` with ``ut_lower(lam) == n``: maximal non-members."""
    P = n.poset
    out = [iv for iv in P.proper_intervals() if iv not in n.members]
    maxs = [m for m in out if not any(o != m and P.interval_leq(m, o) for o in out)]
    return NNPartition(P, maxs, check=False)


def _same(m: CoIdeal, n: CoIdeal) -> Poset:
    if m.poset != n.poset:
        raise MixedReferenceError("co-ideals live over different posets")
    return m.poset


def meet(m: CoIdeal, n: CoIdeal) -> CoIdeal:
    return CoIdeal(_same(m, n), m.members & n.members, check=False)


def join(m: CoIdeal, n: CoIdeal) -> CoIdeal:
    return CoIdeal(_same(m, n), m.members | n.members, check=False)


def covers(lam: NNPartition) -> list[tuple[Interval, CoIdeal]]:
    """The subgroups covering UT_lambda, one per arc."""
    base = ut_lower(lam)
    return [(a, CoIdeal(lam.poset, base.members | {a}, check=False)) for a in lam.sorted_arcs()]


def order_exponent(n: CoIdeal) -> int:
    return len(n.members)


def generated_coideal(poset: Poset, intervals: Iterable) -> CoIdeal:
    gens = [poset.check_interval(iv) for iv in intervals]
    return CoIdeal(
        poset,
        (iv for iv in poset.proper_intervals() if any(poset.interval_leq(g, iv) for g in gens)),
        check=False,
    )


def full_lattice(poset: Poset) -> list[CoIdeal]:
    """Every co-ideal, one per non-nesting partition (via upward closure)."""
    parts = enumerate_nn(poset)
    if len(parts) > get_caps().lattice:
        raise SizeCapError(f"lattice has more than {get_caps().lattice} elements")
    return [ut_upper(lam) for lam in parts]
