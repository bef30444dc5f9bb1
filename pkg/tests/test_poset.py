import pytest
from hypothesis import given, settings, strategies as st

from superpattern.errors import CycleError, OverlapError, UnknownAtomError
from superpattern.poset import (
    Interval,
    Poset,
    all_posets,
    concatenate,
    interval_leq,
    is_convex,
    poset_from_relations,
    proper_intervals,
    restrict,
    set_compositions,
    subposets,
    width,
)

from conftest import CLUB, DIAMOND, HEART, SPADE, chain


def test_constructor_takes_transitive_closure():
    P = poset_from_relations({1, 2, 3}, [(1, 2), (2, 3)])
    assert P.less == {(1, 2), (2, 3), (1, 3)}


def test_cycle_and_unknown_atom():
    with pytest.raises(CycleError):
        poset_from_relations({1, 2}, [(1, 2), (2, 1)])
    with pytest.raises(UnknownAtomError):
        poset_from_relations({1, 2}, [(1, 3)])


def test_diamond(diamond):
    assert width(diamond) == 2
    assert set(proper_intervals(diamond)) == {
        (HEART, DIAMOND), (HEART, CLUB), (HEART, SPADE), (DIAMOND, SPADE), (CLUB, SPADE)
    }


def test_restrict_examples(diamond):
    assert restrict(chain(4), {1, 3}).less == {(1, 3)}
    assert restrict(diamond, {DIAMOND, CLUB}).less == frozenset()
    assert len(restrict(chain(3), set())) == 0
    with pytest.raises(UnknownAtomError):
        restrict(chain(2), {5})


def test_concatenate_examples():
    assert concatenate(chain(2), Poset.chain([3])) == chain(3)
    anti = Poset.antichain(["a", "b"])
    assert concatenate(anti, Poset.chain(["c"])).less == {("a", "c"), ("b", "c")}
    top = Poset.chain([CLUB, SPADE])
    assert concatenate(Poset.chain([HEART, DIAMOND]), top) == Poset.chain([HEART, DIAMOND, CLUB, SPADE])
    with pytest.raises(OverlapError):
        concatenate(chain(2), chain(2))


def test_proper_intervals_small():
    assert set(proper_intervals(chain(3))) == {(1, 2), (2, 3), (1, 3)}
    assert proper_intervals(Poset.antichain(range(4))) == ()


def test_interval_leq_examples():
    c = chain(3)
    assert interval_leq(c, Interval(2, 3), Interval(1, 3))
    assert not interval_leq(c, Interval(1, 2), Interval(2, 3))
    R = Poset.chain([HEART, CLUB, DIAMOND, SPADE])
    assert interval_leq(R, (DIAMOND, SPADE), (CLUB, SPADE))


def test_width_examples():
    for n in range(1, 9):
        assert width(chain(n)) == 1
        assert width(Poset.antichain(range(n))) == n


def test_is_convex_examples(diamond):
    assert is_convex(diamond, {HEART, DIAMOND})
    assert not is_convex(diamond, {HEART, SPADE})
    assert is_convex(diamond, diamond.atom_set)


def test_poset_counts():
    assert [sum(1 for _ in all_posets(range(n))) for n in range(5)] == [1, 1, 3, 19, 219]


def test_set_compositions_count():
    assert [sum(1 for _ in set_compositions(range(n))) for n in range(1, 5)] == [1, 3, 13, 75]


def test_subposets_are_subposets():
    R = chain(3)
    subs = list(subposets(R))
    assert len(subs) == len(set(subs))
    assert all(s.less <= R.less for s in subs)


def test_interval_order_is_partial_order():
    for n in range(1, 5):
        for P in all_posets(range(n)):
            ivs = proper_intervals(P)
            for a in ivs:
                assert interval_leq(P, a, a)
                for b in ivs:
                    if a != b and interval_leq(P, a, b):
                        assert not interval_leq(P, b, a)
                    for c in ivs:
                        if interval_leq(P, a, b) and interval_leq(P, b, c):
                            assert interval_leq(P, a, c)


posets3 = list(all_posets(range(3)))


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(posets3), st.sampled_from(posets3), st.sampled_from(posets3))
def test_concatenation_laws(p, q, s):
    q2 = q.relabel({a: a + 10 for a in q.atoms})
    s2 = s.relabel({a: a + 20 for a in s.atoms})
    pq = concatenate(p, q2)
    assert restrict(pq, p.atoms) == p
    assert restrict(pq, q2.atoms) == q2
    assert concatenate(pq, s2) == concatenate(p, concatenate(q2, s2))


def test_ordinal_blocks(diamond):
    assert diamond.ordinal_blocks() == [frozenset({HEART}), frozenset({DIAMOND, CLUB}), frozenset({SPADE})]


def test_equality_and_hash():
    a = Poset([1, 2], [(1, 2)])
    b = poset_from_relations([2, 1], [(1, 2)])
    assert a == b and hash(a) == hash(b)
