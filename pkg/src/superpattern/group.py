"""Concrete pattern groups over a prime field, used as a brute-force oracle.

Elements are sparse maps from proper intervals to nonzero residues mod p; the
diagonal is implicitly 1.
"""

from __future__ import annotations

from itertools import product as cartesian
from typing import Iterable, Iterator

from .config import get_caps
from .errors import MixedReferenceError, NotComparableError, SizeCapError
from .lattice import ut_lower
from .nonnesting import NNPartition, check_subposet
from .poset import Interval, Poset


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def check_prime(p: int) -> int:
    if not isinstance(p, int) or not is_prime(p):
        raise ValueError(f"field size must be a prime, got {p!r}")
    return p


class GroupElement:
    __slots__ = ("poset", "p", "entries", "_hash")

    def __init__(self, poset: Poset, p: int, entries: dict | None = None):
        self.poset = poset
        self.p = p
        clean = {}
        for iv, v in (entries or {}).items():
            iv = poset.check_interval(iv)
            v %= p
            if v:
                clean[iv] = v
        self.entries = clean
        self._hash = None

    @classmethod
    def _raw(cls, poset, p, entries):
        obj = cls.__new__(cls)
        obj.poset, obj.p, obj.entries, obj._hash = poset, p, entries, None
        return obj

    @classmethod
    def identity(cls, poset: Poset, p: int) -> "GroupElement":
        return cls._raw(poset, p, {})

    def __getitem__(self, iv) -> int:
        return self.entries.get(tuple(iv), 0)

    def support(self) -> frozenset:
        return frozenset(self.entries)

    def is_identity(self) -> bool:
        return not self.entries

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        return multiply(self, other)

    def __eq__(self, other):
        if not isinstance(other, GroupElement):
            return NotImplemented
        return self.p == other.p and self.entries == other.entries and self.poset == other.poset

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.p, frozenset(self.entries.items())))
        return self._hash

    def to_dict(self) -> dict:
        return {f"[{iv.lo},{iv.hi}]": v for iv, v in sorted(self.entries.items(), key=lambda kv: self.poset.interval_key(kv[0]))}

    def __repr__(self):
        return f"GroupElement({self.to_dict()}, p={self.p})"


def _check_pair(u: GroupElement, v: GroupElement) -> None:
    if u.p != v.p or u.poset != v.poset:
        raise MixedReferenceError("elements belong to different groups")


def multiply(u: GroupElement, v: GroupElement) -> GroupElement:
    _check_pair(u, v)
    P, p = u.poset, u.p
    out = {}
    ue, ve = u.entries, v.entries
    for iv in P.proper_intervals():
        i, k = iv
        s = ue.get(iv, 0) + ve.get(iv, 0)
        for j in P.up(i) & P.down(k):
            a = ue.get((i, j))
            if a:
                b = ve.get((j, k))
                if b:
                    s += a * b
        s %= p
        if s:
            out[iv] = s
    return GroupElement._raw(P, p, out)


def inverse(u: GroupElement) -> GroupElement:
    P, p = u.poset, u.p
    w: dict = {}
    ue = u.entries
    # intervals come shortest first, so every w[j,k] used below is final
    for iv in P.proper_intervals():
        i, k = iv
        s = -ue.get(iv, 0)
        for j in P.up(i) & P.down(k):
            a = ue.get((i, j))
            if a:
                s -= a * w.get((j, k), 0)
        s %= p
        if s:
            w[iv] = s
    return GroupElement._raw(P, p, w)


def conjugate(h: GroupElement, g: GroupElement) -> GroupElement:
    """``h g h^-1``."""
    return multiply(multiply(h, g), inverse(h))


def generator(poset: Poset, a, b, t: int, p: int) -> GroupElement:
    if not poset.lt(a, b):
        raise NotComparableError(f"{a!r} is not below {b!r}")
    return GroupElement(poset, p, {Interval(a, b): t})


def group_exponent_check(n_intervals: int, p: int) -> None:
    cap = get_caps().group
    if p ** n_intervals > cap:
        raise SizeCapError(f"group of order {p}^{n_intervals} exceeds cap {cap}")


def enumerate_elements(poset: Poset, p: int, support: Iterable | None = None) -> Iterator[GroupElement]:
    """Every element of UT_poset (or of the pattern subgroup on ``support``)."""
    check_prime(p)
    ivs = list(poset.proper_intervals()) if support is None else sorted(support, key=poset.interval_key)
    group_exponent_check(len(ivs), p)
    for values in cartesian(range(p), repeat=len(ivs)):
        yield GroupElement._raw(poset, p, {iv: v for iv, v in zip(ivs, values) if v})


def superclass_of(g: GroupElement) -> NNPartition:
    """Minimal intervals of the support of ``g``."""
    P = g.poset
    supp = g.entries
    mins = [a for a in supp if not any(b != a and P.interval_leq(b, a) for b in supp)]
    return NNPartition(P, mins, check=False)


def in_cover_closure(g: GroupElement, lam: NNPartition) -> bool:
    """No arc of the superclass of ``g`` sits strictly inside an arc of ``lam``."""
    if g.poset != lam.poset:
        raise MixedReferenceError("element and partition live over different posets")
    P = g.poset
    mu = superclass_of(g)
    return not any(m != a and P.interval_leq(m, a) for m in mu.arcs for a in lam.arcs)


_closure_cache: dict = {}


def cover_closure_set(lam: NNPartition, p: int) -> frozenset:
    """The set UT_lambda * prod_{a in lam} e_a(t), built by multiplying elements."""
    key = (lam, p)
    hit = _closure_cache.get(key)
    if hit is not None:
        return hit
    P = lam.poset
    arcs = lam.sorted_arcs()
    gens = []
    for ts in cartesian(range(p), repeat=len(arcs)):
        h = GroupElement.identity(P, p)
        for a, t in zip(arcs, ts):
            h = multiply(h, GroupElement._raw(P, p, {a: t} if t else {}))
        gens.append(h)
    out = frozenset(multiply(u, h) for u in enumerate_elements(P, p, ut_lower(lam).members) for h in gens)
    if len(_closure_cache) > 4096:
        _closure_cache.clear()
    _closure_cache[key] = out
    return out


def in_cover_closure_direct(g: GroupElement, lam: NNPartition) -> bool:
    return g in cover_closure_set(lam, g.p)


def group_normality_check(poset: Poset, sub: Poset, p: int) -> bool:
    """UT_sub is closed under conjugation by the generators of UT_poset."""
    check_subposet(poset, sub)
    allowed = sub.less
    gens = [
        GroupElement._raw(poset, p, {Interval(a, b): t})
        for a, b in poset.covers()
        for t in range(1, p)
    ]
    for g in enumerate_elements(poset, p, allowed):
        for h in gens:
            if not conjugate(h, g).support() <= allowed:
                return False
    return True
