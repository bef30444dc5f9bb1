"""Non-nesting poset partitions: antichains of proper intervals."""

from __future__ import annotations

from typing import Iterable

from .config import get_caps
from .errors import MixedReferenceError, NestingError, NotSubposetError, SizeCapError
from .poset import Interval, Poset


class NNPartition:
    """An antichain ``arcs`` of proper intervals of ``poset``."""

    __slots__ = ("poset", "arcs", "_hash", "_key")

    def __init__(self, poset: Poset, arcs: Iterable = (), *, check: bool = True):
        arcs = frozenset(Interval(*a) for a in arcs)
        if check:
            for a in arcs:
                poset.check_interval(a)
            for a in arcs:
                for b in arcs:
                    if a != b and poset.interval_leq(a, b):
                        raise NestingError(f"arcs {a!r} and {b!r} are nested")
        self.poset = poset
        self.arcs = arcs
        self._hash = None
        self._key = None

    @classmethod
    def empty(cls, poset: Poset) -> "NNPartition":
        return cls(poset, (), check=False)

    def sorted_arcs(self) -> list[Interval]:
        return sorted(self.arcs, key=self.poset.interval_key)

    @property
    def key(self) -> tuple:
        """Canonical order: by number of arcs, then by sorted arc keys."""
        if self._key is None:
            ks = tuple(self.poset.interval_key(a) for a in self.sorted_arcs())
            self._key = (len(self.arcs), ks)
        return self._key

    def __len__(self):
        return len(self.arcs)

    def __iter__(self):
        return iter(self.sorted_arcs())

    def __contains__(self, arc):
        return tuple(arc) in self.arcs

    def __eq__(self, other):
        if not isinstance(other, NNPartition):
            return NotImplemented
        return self.arcs == other.arcs and self.poset == other.poset

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.poset, self.arcs))
        return self._hash

    def __lt__(self, other: "NNPartition"):
        return self.key < other.key

    def __repr__(self):
        return "{" + ",".join(repr(a) for a in self.sorted_arcs()) + "}"

    def __reduce__(self):
        return (_rebuild, (self.poset, tuple(self.arcs)))


def _rebuild(poset, arcs):
    return NNPartition(poset, arcs, check=False)


def same_reference(*parts: NNPartition) -> Poset:
    ref = parts[0].poset
    for p in parts[1:]:
        if p.poset != ref:
            raise MixedReferenceError("partitions live over different posets")
    return ref


def antichains(elements: list, leq, cap: int | None = None) -> list[frozenset]:
    """All antichains of a finite poset given by an element list and ``leq``."""
    n = len(elements)
    comp = [0] * n
    for i in range(n):
        for j in range(n):
            if i != j and (leq(elements[i], elements[j]) or leq(elements[j], elements[i])):
                comp[i] |= 1 << j
    out: list[frozenset] = []

    def rec(start: int, blocked: int, chosen: list):
        out.append(frozenset(elements[k] for k in chosen))
        if cap is not None and len(out) > cap:
            raise SizeCapError(f"more than {cap} antichains")
        for i in range(start, n):
            if not (blocked >> i) & 1:
                chosen.append(i)
                rec(i + 1, blocked | comp[i], chosen)
                chosen.pop()

    rec(0, 0, [])
    return out


def enumerate_nn(poset: Poset) -> list[NNPartition]:
    """All non-nesting partitions of ``poset`` in canonical order."""
    cached = poset._cache.get("nn")
    if cached is not None:
        return cached
    ivs = list(poset.proper_intervals())
    found = antichains(ivs, poset.interval_leq, get_caps().nn)
    parts = sorted((NNPartition(poset, s, check=False) for s in found), key=lambda p: p.key)
    poset._cache["nn"] = parts
    return parts


def is_nn(poset: Poset, arcs: Iterable) -> bool:
    arcs = [poset.check_interval(a) for a in arcs]
    return not any(a != b and poset.interval_leq(a, b) for a in arcs for b in arcs)


def check_subposet(big: Poset, small: Poset) -> None:
    """``small`` must use a subset of the atoms with relations implied by ``big``."""
    if not small.atom_set <= big.atom_set or not small.less <= big.less:
        raise NotSubposetError("not a subposet of the reference poset")


def restrict_nn(lam: NNPartition, sub: Poset) -> NNPartition:
    """Arcs of ``lam`` whose endpoints stay comparable in ``sub``."""
    check_subposet(lam.poset, sub)
    return NNPartition(sub, (a for a in lam.arcs if a in sub.less), check=False)


def int_lambda_mu(big: Poset, sub: Poset, lam: NNPartition, mu: NNPartition) -> Poset:
    """Intervals of ``sub`` outside every arc of ``mu`` but inside some arc of ``lam``.

    Returned as a poset whose atoms are intervals, ordered by inclusion in ``sub``.
    """
    check_subposet(big, sub)
    if lam.poset != big or mu.poset != sub:
        raise MixedReferenceError("partitions must live over the given posets")
    members = [
        iv for iv in sub.proper_intervals()
        if not any(sub.interval_leq(iv, m) for m in mu.arcs)
        and any(big.interval_leq(iv, a) for a in lam.arcs)
    ]
    pairs = [(a, b) for a in members for b in members if a != b and sub.interval_leq(a, b)]
    return Poset(members, pairs)


def res_compatible(lam: NNPartition, nu: NNPartition) -> bool:
    """Every arc of ``nu - lam`` lies inside some arc of ``lam - nu``."""
    ref = same_reference(lam, nu)
    extra = nu.arcs - lam.arcs
    missing = lam.arcs - nu.arcs
    return all(any(ref.interval_leq(a, b) for b in missing) for a in extra)
