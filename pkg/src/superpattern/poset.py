"""Finite labelled posets and the constructions used throughout the package.

A :class:`Poset` is immutable.  Atoms are arbitrary hashable labels (strings,
small integers, or tuples of those); they are kept in a canonical order that
only serves to make output reproducible.
"""

from __future__ import annotations

from itertools import combinations
from typing import Hashable, Iterable, Iterator, NamedTuple

from .errors import CycleError, NotAnIntervalError, OverlapError, UnknownAtomError

Atom = Hashable


def atom_key(label) -> tuple:
    """Sort key for atoms: integers and digit strings numerically, then text."""
    if isinstance(label, bool):
        return (3, 0, repr(label))
    if isinstance(label, int):
        return (0, label, "")
    if isinstance(label, str):
        if label.isdigit():
            return (0, int(label), label)
        return (1, 0, label)
    if isinstance(label, tuple):
        return (2, tuple(atom_key(x) for x in label), "")
    return (3, 0, repr(label))


class Interval(NamedTuple):
    lo: Atom
    hi: Atom

    def __repr__(self):
        return f"[{self.lo},{self.hi}]"


class Poset:
    """A finite strict partial order.

    ``Poset(atoms, pairs)`` takes the transitive closure of ``pairs``, so
    Hasse-diagram data is enough.  Equality and hashing are structural.
    """

    __slots__ = ("atoms", "less", "_atom_set", "_up", "_down", "_hash", "_intervals", "_cache")

    def __init__(self, atoms: Iterable[Atom] = (), pairs: Iterable[tuple[Atom, Atom]] = ()):
        atom_list = list(atoms)
        atom_set = frozenset(atom_list)
        if len(atom_set) != len(atom_list):
            raise ValueError("atom labels must be distinct")
        up: dict = {a: set() for a in atom_set}
        for a, b in pairs:
            if a not in atom_set or b not in atom_set:
                bad = a if a not in atom_set else b
                raise UnknownAtomError(f"atom {bad!r} is not in the poset")
            if a == b:
                raise CycleError(f"relation {a!r} < {a!r} is reflexive")
            up[a].add(b)
        # Warshall closure on the adjacency sets
        for k in atom_set:
            for a in atom_set:
                if k in up[a]:
                    up[a] |= up[k]
        for a in atom_set:
            if a in up[a]:
                raise CycleError(f"relations force {a!r} < {a!r}")
        less = frozenset((a, b) for a in atom_set for b in up[a])
        self._init(atom_set, less)

    @classmethod
    def _from_closed(cls, atom_set: frozenset, less: frozenset) -> "Poset":
        obj = cls.__new__(cls)
        obj._init(atom_set, less)
        return obj

    def _init(self, atom_set, less):
        self._atom_set = atom_set
        self.atoms = tuple(sorted(atom_set, key=atom_key))
        self.less = less
        self._up = None
        self._down = None
        self._hash = None
        self._intervals = None
        self._cache = {}

    # constructors ---------------------------------------------------------
    @classmethod
    def chain(cls, labels: Iterable[Atom]) -> "Poset":
        labels = list(labels)
        return cls(labels, zip(labels, labels[1:]))

    @classmethod
    def antichain(cls, labels: Iterable[Atom]) -> "Poset":
        return cls(labels, ())

    @classmethod
    def empty(cls) -> "Poset":
        return cls((), ())

    # basic queries --------------------------------------------------------
    @property
    def atom_set(self) -> frozenset:
        return self._atom_set

    def __len__(self):
        return len(self.atoms)

    def __contains__(self, atom):
        return atom in self._atom_set

    def __iter__(self) -> Iterator[Atom]:
        return iter(self.atoms)

    def up(self, a: Atom) -> frozenset:
        """Atoms strictly above ``a``."""
        if self._up is None:
            up = {x: set() for x in self._atom_set}
            for x, y in self.less:
                up[x].add(y)
            self._up = {x: frozenset(s) for x, s in up.items()}
        return self._up[a]

    def down(self, a: Atom) -> frozenset:
        """Atoms strictly below ``a``."""
        if self._down is None:
            down = {x: set() for x in self._atom_set}
            for x, y in self.less:
                down[y].add(x)
            self._down = {x: frozenset(s) for x, s in down.items()}
        return self._down[a]

    def lt(self, a: Atom, b: Atom) -> bool:
        return (a, b) in self.less

    def leq(self, a: Atom, b: Atom) -> bool:
        return a == b or (a, b) in self.less

    def comparable(self, a: Atom, b: Atom) -> bool:
        return a == b or (a, b) in self.less or (b, a) in self.less

    def minimal(self, subset: Iterable[Atom] | None = None) -> frozenset:
        s = self._atom_set if subset is None else frozenset(subset)
        return frozenset(x for x in s if not (self.down(x) & s))

    def maximal(self, subset: Iterable[Atom] | None = None) -> frozenset:
        s = self._atom_set if subset is None else frozenset(subset)
        return frozenset(x for x in s if not (self.up(x) & s))

    def check_atoms(self, subset: Iterable[Atom]) -> frozenset:
        s = frozenset(subset)
        extra = s - self._atom_set
        if extra:
            raise UnknownAtomError(f"atoms {sorted(extra, key=atom_key)!r} are not in the poset")
        return s

    def covers(self) -> list[tuple[Atom, Atom]]:
        """Hasse diagram edges in canonical order."""
        out = []
        for a, b in self.less:
            if not any((a, c) in self.less and (c, b) in self.less for c in self._atom_set):
                out.append((a, b))
        return sorted(out, key=lambda e: (atom_key(e[0]), atom_key(e[1])))

    # intervals ------------------------------------------------------------
    def proper_intervals(self) -> tuple[Interval, ...]:
        """All ``[i,j]`` with ``i < j``, shortest first (then by endpoints)."""
        if self._intervals is None:
            ivs = [Interval(a, b) for a, b in self.less]
            ivs.sort(key=self.interval_key)
            self._intervals = tuple(ivs)
        return self._intervals

    def interval_size(self, iv) -> int:
        lo, hi = iv
        if lo == hi:
            return 1
        return 2 + len(self.up(lo) & self.down(hi))

    def interval_key(self, iv) -> tuple:
        return (self.interval_size(iv), atom_key(iv[0]), atom_key(iv[1]))

    def is_proper_interval(self, iv) -> bool:
        return tuple(iv) in self.less

    def check_interval(self, iv) -> Interval:
        iv = Interval(*iv)
        if iv not in self.less:
            raise NotAnIntervalError(f"{iv!r} is not a proper interval of the poset")
        return iv

    def interval_leq(self, a, b) -> bool:
        """``a`` is contained in ``b`` as an order interval."""
        return self.leq(b[0], a[0]) and self.leq(a[1], b[1])

    def interval_lt(self, a, b) -> bool:
        return a != b and self.interval_leq(a, b)

    def interval_comparable(self, a, b) -> bool:
        return self.interval_leq(a, b) or self.interval_leq(b, a)

    # constructions --------------------------------------------------------
    def restrict(self, subset: Iterable[Atom]) -> "Poset":
        s = self.check_atoms(subset)
        if s == self._atom_set:
            return self
        less = frozenset((a, b) for a, b in self.less if a in s and b in s)
        return Poset._from_closed(s, less)

    def concatenate(self, other: "Poset") -> "Poset":
        """Every atom of ``self`` placed below every atom of ``other``."""
        shared = self._atom_set & other._atom_set
        if shared:
            raise OverlapError(f"posets share atoms {sorted(shared, key=atom_key)!r}")
        cross = frozenset((a, b) for a in self._atom_set for b in other._atom_set)
        return Poset._from_closed(self._atom_set | other._atom_set, self.less | other.less | cross)

    def disjoint_union(self, other: "Poset") -> "Poset":
        shared = self._atom_set & other._atom_set
        if shared:
            raise OverlapError(f"posets share atoms {sorted(shared, key=atom_key)!r}")
        return Poset._from_closed(self._atom_set | other._atom_set, self.less | other.less)

    def with_relations(self, less: Iterable[tuple[Atom, Atom]]) -> "Poset":
        """Poset on the same atoms with the given (already closed) relation."""
        return Poset._from_closed(self._atom_set, frozenset(less))

    def is_subposet_of(self, other: "Poset") -> bool:
        """Same atoms and every relation of ``self`` holds in ``other``."""
        return self._atom_set == other._atom_set and self.less <= other.less

    def width(self) -> int:
        """Size of a largest antichain (Dilworth via bipartite matching)."""
        match: dict = {}

        def augment(a, seen):
            for b in self.up(a):
                if b in seen:
                    continue
                seen.add(b)
                if b not in match or augment(match[b], seen):
                    match[b] = a
                    return True
            return False

        matched = sum(1 for a in self.atoms if augment(a, set()))
        return len(self.atoms) - matched

    def is_convex(self, subset: Iterable[Atom]) -> bool:
        s = self.check_atoms(subset)
        for x in s:
            for z in s:
                if (x, z) in self.less and (self.up(x) & self.down(z)) - s:
                    return False
        return True

    def is_antichain(self) -> bool:
        return not self.less

    def is_chain(self) -> bool:
        return 2 * len(self.less) == len(self.atoms) * (len(self.atoms) - 1)

    def ordinal_blocks(self) -> list[frozenset]:
        """Finest decomposition ``P = P|B1 . P|B2 . ...`` into ordinal summands."""
        order = sorted(self.atoms, key=lambda a: (len(self.down(a)), atom_key(a)))
        blocks, current = [], []
        placed: set = set()
        for idx, a in enumerate(order):
            current.append(a)
            placed.add(a)
            rest = order[idx + 1:]
            if rest and all((x, y) in self.less for x in placed for y in rest):
                blocks.append(frozenset(current))
                current = []
                placed = set()
        if current:
            blocks.append(frozenset(current))
        return blocks

    def relabel(self, mapping: dict) -> "Poset":
        return Poset._from_closed(
            frozenset(mapping[a] for a in self._atom_set),
            frozenset((mapping[a], mapping[b]) for a, b in self.less),
        )

    def sort_key(self) -> tuple:
        rels = sorted((atom_key(a), atom_key(b)) for a, b in self.less)
        return (len(self.atoms), tuple(atom_key(a) for a in self.atoms), len(rels), tuple(rels))

    # dunder ---------------------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, Poset):
            return NotImplemented
        return self is other or (self._atom_set == other._atom_set and self.less == other.less)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._atom_set, self.less))
        return self._hash

    def __repr__(self):
        rels = ", ".join(f"{a}<{b}" for a, b in self.covers())
        atoms = ",".join(str(a) for a in self.atoms)
        return f"Poset({{{atoms}}}; {rels})" if rels else f"Poset({{{atoms}}})"

    def __reduce__(self):
        return (Poset._from_closed, (self._atom_set, self.less))


# module-level API -----------------------------------------------------------

def poset_from_relations(atoms: Iterable[Atom], pairs: Iterable[tuple[Atom, Atom]]) -> Poset:
    return Poset(atoms, pairs)


def restrict(poset: Poset, subset: Iterable[Atom]) -> Poset:
    return poset.restrict(subset)


def concatenate(*posets: Poset) -> Poset:
    out = Poset.empty()
    for p in posets:
        out = out.concatenate(p)
    return out


def proper_intervals(poset: Poset) -> tuple[Interval, ...]:
    return poset.proper_intervals()


def interval_leq(poset: Poset, a, b) -> bool:
    poset.check_interval(a)
    poset.check_interval(b)
    return poset.interval_leq(a, b)


def width(poset: Poset) -> int:
    return poset.width()


def is_convex(poset: Poset, subset: Iterable[Atom]) -> bool:
    return poset.is_convex(subset)


# enumeration ---------------------------------------------------------------

def all_posets(atoms: Iterable[Atom]) -> Iterator[Poset]:
    """Every labelled partial order on ``atoms``, each exactly once.

    Atoms are added one at a time; the new atom gets a down-set D (an order
    ideal) and an up-set U (a filter) with every element of D below every
    element of U.
    """
    atoms = sorted(set(atoms), key=atom_key)

    def grow(k, less):
        if k == len(atoms):
            yield Poset._from_closed(frozenset(atoms), frozenset(less))
            return
        old = atoms[:k]
        new = atoms[k]
        up = {a: {b for (x, b) in less if x == a} for a in old}
        down = {a: {x for (x, b) in less if b == a} for a in old}
        for d_size in range(len(old) + 1):
            for dset in combinations(old, d_size):
                dset = set(dset)
                if any(not down[a] <= dset for a in dset):
                    continue
                rest = [a for a in old if a not in dset]
                for u_size in range(len(rest) + 1):
                    for uset in combinations(rest, u_size):
                        uset = set(uset)
                        if any(not up[a] <= uset for a in uset):
                            continue
                        if any((d, u) not in less for d in dset for u in uset):
                            continue
                        new_less = set(less)
                        new_less |= {(d, new) for d in dset}
                        new_less |= {(new, u) for u in uset}
                        yield from grow(k + 1, new_less)

    yield from grow(0, set())


def subposets(poset: Poset) -> Iterator[Poset]:
    """All partial orders on the same atoms whose relations lie in ``poset``."""
    rels = sorted(poset.less, key=lambda e: (atom_key(e[0]), atom_key(e[1])))

    def rec(i, chosen: set):
        if i == len(rels):
            yield poset.with_relations(chosen)
            return
        a, b = rels[i]
        yield from rec(i + 1, chosen)
        chosen.add((a, b))
        yield from rec(i + 1, chosen)
        chosen.discard((a, b))

    for cand in rec(0, set()):
        less = cand.less
        if all((a, c) in less for a, b in less for (b2, c) in less if b2 == b):
            yield cand


def set_compositions(ground: Iterable[Atom]) -> Iterator[tuple[frozenset, ...]]:
    """Ordered set partitions of ``ground`` into nonempty blocks."""
    items = sorted(set(ground), key=atom_key)
    if not items:
        yield ()
        return

    def rec(remaining: tuple):
        if not remaining:
            yield ()
            return
        first, rest = remaining[0], remaining[1:]
        # choose the block containing the smallest remaining atom, then place it
        for r in range(len(rest) + 1):
            for others in combinations(rest, r):
                block = frozenset((first,) + others)
                left = tuple(x for x in rest if x not in block)
                for tail in rec(left):
                    for pos in range(len(tail) + 1):
                        yield tail[:pos] + (block,) + tail[pos:]

    yield from rec(tuple(items))


_interned: dict = {}


def intern(poset: Poset) -> Poset:
    """Return a shared instance equal to ``poset`` so per-poset caches are reused."""
    hit = _interned.get(poset)
    if hit is None:
        if len(_interned) > 200_000:
            _interned.clear()
        _interned[poset] = hit = poset
    return hit
