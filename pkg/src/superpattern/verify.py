"""Exhaustive cross-checks of the formulas against brute force.

Each suite walks every labelled poset on at most ``max_atoms`` atoms and
returns a list of :class:`Check` results.  Oracles work in the concrete group
UT_R(F_p) or with the raw Hopf operations; the formulas under test are the
closed forms.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Callable, Iterable

from . import _linalg
from .group import GroupElement, enumerate_elements, group_normality_check, superclass_of
from .lattice import (
    full_lattice,
    is_normal,
    join,
    lbl_cl,
    meet,
    ut_lower,
    ut_upper,
)
from .nonnesting import NNPartition, enumerate_nn
from .poset import Poset, all_posets, subposets
from .scalars import ONE, ZERO, RationalFunction
from .supercharacters import (
    Basis,
    ClassFunction,
    chi_degree,
    chi_value,
    convert,
    determinant_sign,
    group_order,
    inner_product,
    superclass_size,
    table,
)

SUITES = ("axioms", "bases", "restriction", "hopf", "antipode", "catalan")
CATALAN = [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862]


@dataclass
class Check:
    suite: str
    name: str
    ok: bool
    cases: int = 0
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        tail = f" ({self.detail})" if self.detail else ""
        return f"{status} {self.suite}.{self.name}: {self.cases} cases{tail}"


class _Tally:
    """Counts cases and remembers the first failure."""

    def __init__(self, suite: str, name: str):
        self.suite, self.name = suite, name
        self.cases = 0
        self.first_bad = None
        self.bad = 0

    def __call__(self, ok: bool, what=None) -> None:
        self.cases += 1
        if not ok:
            self.bad += 1
            if self.first_bad is None:
                self.first_bad = what

    def result(self) -> Check:
        detail = "" if not self.bad else f"{self.bad} failures, first: {self.first_bad}"
        return Check(self.suite, self.name, self.bad == 0, self.cases, detail)


def posets_upto(n: int, start: int = 1) -> Iterable[Poset]:
    for k in range(start, n + 1):
        yield from all_posets(range(1, k + 1))


def _normal_pairs(n: int):
    for R in posets_upto(n):
        for Q in subposets(R):
            if is_normal(R, Q):
                yield R, Q


# axioms ---------------------------------------------------------------------------

def _element_counts(R: Poset, p: int) -> dict:
    counts: dict = defaultdict(int)
    for g in enumerate_elements(R, p):
        counts[superclass_of(g)] += 1
    return counts


def suite_axioms(max_atoms: int = 4, primes=(2, 3)) -> list[Check]:
    orth = _Tally("axioms", "orthogonality")
    regular = _Tally("axioms", "sum_is_regular_character")
    sizes = _Tally("axioms", "superclass_sizes_sum")
    oracle = _Tally("axioms", "superclass_sizes_oracle")
    det = _Tally("axioms", "determinant")
    for R in posets_upto(max_atoms):
        parts = enumerate_nn(R)
        chis = [ClassFunction.basis_vector(lam, Basis.CHI) for lam in parts]
        for i, lam in enumerate(parts):
            for j, nu in enumerate(parts):
                want = chi_degree(lam) if i == j else ZERO
                orth(inner_product(chis[i], chis[j]) == want, (R, lam, nu))
        rows = table(R)
        order = group_order(R)
        for k, mu in enumerate(parts):
            total = sum((row[k] for row in rows), ZERO)
            regular(total == (order if not mu.arcs else ZERO), (R, mu))
        sizes(sum((superclass_size(mu) for mu in parts), ZERO) == order, R)
        for p in primes:
            counts = _element_counts(R, p)
            oracle(all(superclass_size(mu).evaluate(p) == counts.get(mu, 0) for mu in parts), (R, p))
        try:
            det(determinant_sign(R) in (1, -1), R)
        except ArithmeticError as exc:
            det(False, (R, str(exc)))
    return [t.result() for t in (orth, regular, sizes, oracle, det)]


# lattice and bases ------------------------------------------------------------------

def suite_bases(max_atoms: int = 4, primes=(2,)) -> list[Check]:
    normal = _Tally("bases", "normality_vs_conjugation")
    bij = _Tally("bases", "label_bijections")
    dist = _Tally("bases", "distributivity")
    conv = _Tally("bases", "basis_round_trip")
    for R in posets_upto(max_atoms):
        for Q in subposets(R):
            for p in primes:
                normal(is_normal(R, Q) == group_normality_check(R, Q, p), (R, Q, p))
        lattice = full_lattice(R)
        for lam in enumerate_nn(R):
            bij(lbl_cl(ut_upper(lam)) == lam, (R, lam))
        for N in lattice:
            bij(ut_upper(lbl_cl(N)) == N, (R, N))
        for a in lattice:
            for b in lattice:
                for c in lattice:
                    dist(meet(a, join(b, c)) == join(meet(a, b), meet(a, c)), (R, a, b, c))
        if len(R.atoms) <= 3:
            for lam in enumerate_nn(R):
                for src in Basis:
                    f = ClassFunction.basis_vector(lam, src)
                    for dst in Basis:
                        conv(convert(convert(f, dst), src) == f, (R, lam, src, dst))
    # a subposet that is normal in one chain and not in another on the same atoms
    Q = Poset(["♥", "♦", "♣", "♠"], [("♥", "♦"), ("♥", "♣"), ("♦", "♠")])
    for order, want in ((["♥", "♣", "♦", "♠"], False), (["♥", "♦", "♣", "♠"], True)):
        R = Poset.chain(order)
        for p in primes:
            normal(is_normal(R, Q) == group_normality_check(R, Q, p) == want, (R, Q, p))
    return [t.result() for t in (normal, bij, dist, conv)]


# restriction --------------------------------------------------------------------------

_INVERSE_CACHE: dict = {}


def _numeric_inverse(Q: Poset, p: int) -> list[list[RationalFunction]]:
    key = (Q, p)
    if key not in _INVERSE_CACHE:
        num = [[RationalFunction.constant(x.evaluate(p)) for x in row] for row in table(Q)]
        _INVERSE_CACHE[key] = _linalg.inverse(num)
    return _INVERSE_CACHE[key]


def class_pairs(R: Poset, Q: Poset, p: int) -> set:
    """(R-superclass, Q-superclass) of every element of UT_Q inside UT_R."""
    seen = set()
    for g in enumerate_elements(R, p, Q.less):
        seen.add((superclass_of(g), superclass_of(GroupElement._raw(Q, p, g.entries))))
    return seen


def restriction_oracle(R: Poset, Q: Poset, lam: NNPartition, p: int, pairs: set | None = None) -> dict | None:
    """Res of chi^lam to UT_Q at q = p, from the values on every element.

    Returns the chi-coefficients over Q, or ``None`` when the restricted
    values are not constant on the superclasses of UT_Q.
    """
    if pairs is None:
        pairs = class_pairs(R, Q, p)
    values: dict = {}
    for mu_r, mu_q in pairs:
        v = chi_value(lam, mu_r).evaluate(p)
        if values.setdefault(mu_q, v) != v:
            return None
    parts = enumerate_nn(Q)
    vec = [RationalFunction.constant(values[mu]) for mu in parts]
    coeffs = _linalg.vec_mat(vec, _numeric_inverse(Q, p))
    return {nu: c.constant_value() for nu, c in zip(parts, coeffs) if not c.is_zero()}


def suite_restriction(max_atoms: int = 4, primes=(2, 3)) -> list[Check]:
    from .hopf.species import restriction_general

    tally = _Tally("restriction", "formula_vs_group")
    for R in posets_upto(max_atoms):
        for Q in subposets(R):
            if Q.atom_set != R.atom_set:
                continue
            pairs = {p: class_pairs(R, Q, p) for p in primes}
            for lam in enumerate_nn(R):
                formula = restriction_general(R, Q, lam)
                for p in primes:
                    got = restriction_oracle(R, Q, lam, p, pairs[p])
                    want = {nu: c.evaluate(p) for nu, c in formula.coeffs.items()}
                    want = {k: v for k, v in want.items() if v != 0}
                    tally(got == want, (R, Q, lam, p))
    return [tally.result()]


# hopf ---------------------------------------------------------------------------------

def _labels_upto(n: int, basis: Basis):
    from .hopf.species import SpeciesElement

    for R in posets_upto(n):
        for lam in enumerate_nn(R):
            yield SpeciesElement.basis_vector(lam, basis)


def _tensor_product(x, y):
    """Factorwise product of two tensors of equal arity."""
    from .hopf.species import SpeciesElement, product_labels

    out: dict = {}
    for kx, cx in x.terms.items():
        for ky, cy in y.terms.items():
            partial = {(): cx * cy}
            for a, b in zip(kx, ky):
                nxt: dict = {}
                for k0, c0 in partial.items():
                    for lab, c1 in product_labels(x.basis, a, b):
                        nxt[k0 + (lab,)] = nxt.get(k0 + (lab,), ZERO) + c0 * c1
                partial = nxt
            for k, v in partial.items():
                out[k] = out.get(k, ZERO) + v
    return SpeciesElement(x.basis, out)


def _split_pairs(ground: frozenset):
    from .hopf.antipode import all_splits

    return list(all_splits(ground))


def _poset_labels_on(atoms):
    for P in all_posets(atoms):
        yield from enumerate_nn(P)


def suite_hopf(max_atoms: int = 3, primes=()) -> list[Check]:
    from .hopf.antipode import _takeuchi_label
    from .hopf.species import (
        EMPTY_LABEL,
        SpeciesElement,
        apply_at,
        coproduct,
        coproduct_at,
        multiply_tensor,
        product,
    )

    bialg = _Tally("hopf", "bialgebra_compatibility")
    coassoc = _Tally("hopf", "coassociativity")
    counit = _Tally("hopf", "counit")
    cross = _Tally("hopf", "cross_basis")
    axiom = _Tally("hopf", "antipode_axiom")
    for n in range(1, max_atoms + 1):
        ground = frozenset(range(1, n + 1))
        splits = _split_pairs(ground)
        for basis in Basis:
            # products of pairs of basis vectors over a fixed split of the ground
            for A, B in splits:
                if not A or not B:
                    continue
                for lx in _poset_labels_on(sorted(A)):
                    x = SpeciesElement.basis_vector(lx, basis)
                    for ly in _poset_labels_on(sorted(B)):
                        y = SpeciesElement.basis_vector(ly, basis)
                        xy = product(x, y)
                        for S, T in splits:
                            lhs = coproduct(xy, S, T)
                            rhs = _tensor_product(coproduct(x, S & A, T & A), coproduct(y, S & B, T & B))
                            bialg(lhs == rhs, (basis.value, lx, ly, sorted(S)))
                        if basis != Basis.DELTA:
                            conv = product(x.convert(Basis.DELTA), y.convert(Basis.DELTA))
                            cross(xy.convert(Basis.DELTA) == conv, (basis.value, lx, ly, "product"))
            for R in all_posets(sorted(ground)):
                for lam in enumerate_nn(R):
                    x = SpeciesElement.basis_vector(lam, basis)
                    counit(coproduct(x, ground, ()) == SpeciesElement(basis, {(lam, EMPTY_LABEL): ONE}), lam)
                    counit(coproduct(x, (), ground) == SpeciesElement(basis, {(EMPTY_LABEL, lam): ONE}), lam)
                    for S, rest in splits:
                        for T, U in _split_pairs(rest):
                            left = coproduct_at(coproduct(x, S | T, U), 0, S)
                            right = coproduct_at(coproduct(x, S, T | U), 1, T)
                            coassoc(left == right, (basis.value, lam, sorted(S), sorted(T)))
                        if basis != Basis.DELTA:
                            d1 = coproduct(x, S, rest).convert(Basis.DELTA)
                            d2 = coproduct(x.convert(Basis.DELTA), S, rest)
                            cross(d1 == d2, (basis.value, lam, sorted(S), "coproduct"))
                    total = SpeciesElement.zero(basis)
                    for S, T in splits:
                        parts = coproduct(x, S, T)
                        anti = apply_at(parts, 0, lambda lab: _takeuchi_label(basis, lab))
                        total = total + multiply_tensor(anti)
                    axiom(total.is_zero(), (basis.value, lam))
    return [t.result() for t in (bialg, coassoc, counit, cross, axiom)]


# antipode and primitives -------------------------------------------------------------------

def suite_antipode(max_atoms: int = 3, primes=()) -> list[Check]:
    from .hopf.antipode import (
        antipode_chi,
        antipode_delta_subgroup,
        antipode_takeuchi,
        antipode_trivial,
        delta_subgroup_forgotten,
    )
    from .hopf.primitives import (
        atomic_nn_count,
        is_atomic_pair,
        is_atomic_pair_scan,
        is_primitive,
        is_triangular,
        primitive_generator,
        primitive_projection,
    )
    from .hopf.species import SpeciesElement, subgroup_label

    own = _Tally("antipode", "delta_subgroup_ambient_Q")
    joint = _Tally("antipode", "delta_subgroup_ambient_R")
    forgot = _Tally("antipode", "delta_subgroup_forgetful")
    chi = _Tally("antipode", "chi_closed_form")
    trivial = _Tally("antipode", "trivial_character")
    atomic = _Tally("antipode", "atomic_pair_scan")
    prim = _Tally("antipode", "primitives")
    proj = _Tally("antipode", "primitive_projection")
    tri = _Tally("antipode", "triangularity")
    for R, Q in _normal_pairs(max_atoms):
        x = SpeciesElement.basis_vector(subgroup_label(R, Q), Basis.SUBGROUP_DELTA)
        t = antipode_takeuchi(x)
        if R == Q:
            own(t == antipode_delta_subgroup(Q), Q)
        else:
            joint(t == antipode_delta_subgroup(Q, R), (R, Q))
        forgot(t.forget() == delta_subgroup_forgotten(Q), (R, Q))
        atomic(is_atomic_pair(R, Q) == is_atomic_pair_scan(R, Q), (R, Q))
        tri(is_triangular(R, Q), (R, Q))
        if is_atomic_pair(R, Q):
            for a in R.atoms:
                g = primitive_generator(a, R, Q)
                ok = is_primitive(g) and g.coefficient(subgroup_label(R, Q)) == ONE
                prim(ok, (R, Q, a))
                proj(g == primitive_projection(a, x), (R, Q, a))
    for R in posets_upto(max_atoms):
        for lam in enumerate_nn(R):
            t = antipode_takeuchi(SpeciesElement.basis_vector(lam, Basis.CHI))
            chi(t == antipode_chi(R, lam), (R, lam))
            if not lam.arcs:
                trivial(t == antipode_trivial(R), R)
    count = _Tally("antipode", "atomic_catalan")
    for n in range(2, 8):
        count(atomic_nn_count(n) == CATALAN[n - 1], n)
    return [t.result() for t in (own, joint, forgot, chi, trivial, atomic, prim, proj, tri, count)]


# catalan and spot values ----------------------------------------------------------------

def suite_catalan(max_atoms: int = 8, primes=()) -> list[Check]:
    from .hopf.antipode import fac

    counts = _Tally("catalan", "chain_counts")
    for n in range(1, max(max_atoms, 1) + 1):
        counts(len(enumerate_nn(Poset.chain(range(1, n + 1)))) == CATALAN[n], n)
    dyck = _Tally("catalan", "dyck_identity")
    chain8 = Poset.chain(range(1, 9))
    lower = ut_lower(NNPartition(chain8, [(2, 4), (4, 7), (7, 8)]))
    upper = ut_upper(NNPartition(chain8, [(1, 2), (3, 5), (6, 8)]))
    dyck(lower == upper, "chain 8")
    diamond = _Tally("catalan", "diamond_factorizations")
    Q = Poset(["♥", "♦", "♣", "♠"], [("♥", "♦"), ("♥", "♣"), ("♦", "♠"), ("♣", "♠")])
    P = Poset.chain(["♥", "♦", "♣", "♠"])
    got = {tuple(tuple(sorted(b)) for b in c) for c in fac(Q, P)}
    want = {
        (("♥",), ("♦",), ("♣",), ("♠",)),
        (("♦", "♥"), ("♣",), ("♠",)),
        (("♥",), ("♦",), ("♠", "♣")),
        (("♦", "♥"), ("♠", "♣")),
    }
    diamond(got == {tuple(tuple(sorted(b)) for b in c) for c in want}, got)
    return [counts.result(), dyck.result(), diamond.result()]


RUNNERS: dict[str, Callable[..., list[Check]]] = {
    "axioms": suite_axioms,
    "bases": suite_bases,
    "restriction": suite_restriction,
    "hopf": suite_hopf,
    "antipode": suite_antipode,
    "catalan": suite_catalan,
}

DEFAULT_ATOMS = {"axioms": 4, "bases": 4, "restriction": 4, "hopf": 3, "antipode": 3, "catalan": 8}


def run_suites(names: Iterable[str], max_atoms: int | None = None, primes=(2, 3)) -> list[Check]:
    out = []
    for name in names:
        if name not in RUNNERS:
            raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
        n = DEFAULT_ATOMS[name] if max_atoms is None else max_atoms
        if name == "catalan" and max_atoms is not None:
            n = max(max_atoms, 1)
        out.extend(RUNNERS[name](n, tuple(primes)))
    return out
