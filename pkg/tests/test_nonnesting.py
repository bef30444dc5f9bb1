import pytest

from superpattern.errors import MixedReferenceError, NestingError, NotSubposetError
from superpattern.nonnesting import (
    NNPartition,
    enumerate_nn,
    int_lambda_mu,
    is_nn,
    res_compatible,
    restrict_nn,
)
from superpattern.poset import Poset

from conftest import chain

FIGURE = Poset(range(1, 7), [(1, 2), (2, 3), (2, 4), (3, 5), (4, 5), (5, 6)])
DYCK = [(2, 4), (4, 7), (7, 8)]


def test_enumerate_chain3(chain3):
    got = {frozenset(lam.arcs) for lam in enumerate_nn(chain3)}
    want = {frozenset(), frozenset({(1, 2)}), frozenset({(2, 3)}), frozenset({(1, 3)}),
            frozenset({(1, 2), (2, 3)})}
    assert got == want


def test_enumerate_counts():
    assert len(enumerate_nn(chain(4))) == 14
    assert enumerate_nn(Poset.antichain(range(5))) == [NNPartition.empty(Poset.antichain(range(5)))]


def test_enumeration_is_sorted_and_distinct(diamond):
    parts = enumerate_nn(diamond)
    assert parts == sorted(parts)
    assert len(set(parts)) == len(parts)


def test_is_nn_figures():
    assert is_nn(FIGURE, [(3, 6), (4, 5)])
    assert not is_nn(chain(6), [(3, 6), (4, 5)])
    assert is_nn(chain(3), [])


def test_nested_arcs_rejected():
    with pytest.raises(NestingError):
        NNPartition(chain(3), [(1, 3), (1, 2)])


def test_restrict_nn():
    lam = NNPartition(chain(8), DYCK)
    assert restrict_nn(lam, chain(6)).arcs == {(2, 4)}
    assert restrict_nn(NNPartition.empty(chain(8)), chain(6)).arcs == frozenset()
    assert restrict_nn(lam, chain(8)).arcs == lam.arcs
    with pytest.raises(NotSubposetError):
        restrict_nn(lam, Poset.chain([8, 1]))


def test_int_lambda_mu_dyck():
    # Only intervals of [1..6] sitting inside an arc of the chain-8 partition survive.
    R, Q = chain(8), chain(6)
    lam = NNPartition(R, DYCK)
    mu = restrict_nn(lam, Q)
    got = int_lambda_mu(R, Q, lam, mu)
    assert set(got.atoms) == {(4, 5), (4, 6), (5, 6)}
    assert got.less == {((4, 5), (4, 6)), ((5, 6), (4, 6))}


def test_int_lambda_mu_small():
    R, Q = chain(3), Poset([1, 2, 3], [(1, 2)])
    got = int_lambda_mu(R, Q, NNPartition(R, [(1, 3)]), NNPartition.empty(Q))
    assert set(got.atoms) == {(1, 2)}
    empty = int_lambda_mu(R, Q, NNPartition.empty(R), NNPartition.empty(Q))
    assert len(empty.atoms) == 0


def test_int_lambda_mu_reference_mismatch():
    R, Q = chain(3), Poset([1, 2, 3], [(1, 2)])
    with pytest.raises(MixedReferenceError):
        int_lambda_mu(R, Q, NNPartition.empty(R), NNPartition.empty(R))


def test_res_compatible(chain3):
    lam = NNPartition(chain3, [(1, 3)])
    assert res_compatible(lam, lam)
    assert res_compatible(lam, NNPartition(chain3, [(1, 2)]))
    assert not res_compatible(NNPartition(chain3, [(1, 2)]), NNPartition(chain3, [(2, 3)]))
    with pytest.raises(MixedReferenceError):
        res_compatible(lam, NNPartition.empty(chain(2)))
