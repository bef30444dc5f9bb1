import pytest

from superpattern.errors import NotCoIdealError, NotSubposetError
from superpattern.lattice import (
    CoIdeal,
    covers,
    full_lattice,
    generated_coideal,
    is_normal,
    join,
    join_irreducible,
    lbl_ch_inverse,
    lbl_cl,
    meet,
    meet_irreducible,
    order_exponent,
    ut_lower,
    ut_upper,
)
from superpattern.nonnesting import NNPartition, enumerate_nn
from superpattern.poset import Poset, all_posets

from conftest import CLUB, DIAMOND, HEART, SPADE, chain

TWO_CHAIN_Q = Poset([HEART, DIAMOND, CLUB, SPADE], [(HEART, DIAMOND), (HEART, CLUB), (DIAMOND, SPADE)])


def members(n):
    return set(n.members)


def test_normality_two_chains():
    assert not is_normal(Poset.chain([HEART, CLUB, DIAMOND, SPADE]), TWO_CHAIN_Q)
    assert is_normal(Poset.chain([HEART, DIAMOND, CLUB, SPADE]), TWO_CHAIN_Q)
    assert is_normal(chain(3), chain(3))


def test_is_normal_needs_subposet():
    with pytest.raises(NotSubposetError):
        is_normal(chain(2), Poset.chain([2, 1]))


def test_irreducibles(chain2, chain3):
    assert members(meet_irreducible(chain2, (1, 2))) == set()
    assert members(meet_irreducible(chain3, (1, 2))) == {(2, 3), (1, 3)}
    assert members(join_irreducible(chain3, (1, 3))) == {(1, 3)}
    assert members(join_irreducible(chain3, (1, 2))) == {(1, 2), (1, 3)}


def test_ut_lower_upper(chain3):
    assert ut_lower(NNPartition.empty(chain3)) == CoIdeal.full(chain3)
    assert members(ut_lower(NNPartition(chain3, [(1, 3)]))) == set()
    assert members(ut_upper(NNPartition.empty(chain3))) == set()
    assert members(ut_upper(NNPartition(chain3, [(1, 2)]))) == {(1, 2), (1, 3)}


def test_dyck_identity():
    c8 = chain(8)
    lower = ut_lower(NNPartition(c8, [(2, 4), (4, 7), (7, 8)]))
    assert lower == ut_upper(NNPartition(c8, [(1, 2), (3, 5), (6, 8)]))


def test_lbl_cl(chain3):
    assert lbl_cl(CoIdeal.full(chain3)).arcs == {(1, 2), (2, 3)}
    assert lbl_cl(CoIdeal.trivial(chain3)).arcs == frozenset()


def test_lbl_ch_inverse_inverts_ut_lower(diamond):
    for lam in enumerate_nn(diamond):
        assert lbl_ch_inverse(ut_lower(lam)) == lam


def test_meet_join(chain3):
    m = meet(meet_irreducible(chain3, (1, 2)), meet_irreducible(chain3, (2, 3)))
    assert members(m) == {(1, 3)}
    j = join(join_irreducible(chain3, (1, 2)), join_irreducible(chain3, (2, 3)))
    assert members(j) == {(1, 2), (2, 3), (1, 3)}


def test_covers(chain3):
    assert covers(NNPartition.empty(chain3)) == []
    got = covers(NNPartition(chain3, [(1, 2), (2, 3)]))
    assert sorted(members(n) for _, n in got) == sorted([{(1, 2), (1, 3)}, {(2, 3), (1, 3)}])
    assert {a for a, _ in got} == {(1, 2), (2, 3)}


def test_order_exponent(chain3):
    for n in range(1, 7):
        assert order_exponent(CoIdeal.full(chain(n))) == n * (n - 1) // 2
    assert order_exponent(CoIdeal.trivial(chain3)) == 0
    assert order_exponent(ut_lower(NNPartition(chain3, [(1, 3)]))) == 0


def test_generated_coideal(chain3):
    assert members(generated_coideal(chain3, [])) == set()
    assert members(generated_coideal(chain3, [(1, 3)])) == {(1, 3)}
    assert members(generated_coideal(chain3, [(1, 2), (2, 3)])) == {(1, 2), (2, 3), (1, 3)}


def test_non_coideal_rejected(chain3):
    with pytest.raises(NotCoIdealError):
        CoIdeal(chain3, [(1, 2)])


def test_lattice_size_matches_pp_nn():
    for n in range(1, 5):
        for R in all_posets(range(n)):
            assert len(full_lattice(R)) == len(enumerate_nn(R))


def test_round_trips_small():
    for n in range(1, 4):
        for R in all_posets(range(n)):
            for lam in enumerate_nn(R):
                assert lbl_cl(ut_upper(lam)) == lam
            for N in full_lattice(R):
                assert ut_upper(lbl_cl(N)) == N
