import pytest

from superpattern.errors import OverlapError
from superpattern.hopf.species import (
    SpeciesElement,
    coproduct,
    product,
    restriction_general,
    subgroup_label,
    subgroup_poset,
)
from superpattern.nonnesting import NNPartition, enumerate_nn
from superpattern.poset import Poset
from superpattern.scalars import ONE, q
from superpattern.supercharacters import Basis, ClassFunction
from superpattern.verify import suite_hopf

from conftest import chain


def vec(R, arcs, basis):
    return SpeciesElement.basis_vector(NNPartition(R, arcs), basis)


def test_chi_product_unions_arcs(chain2):
    x = vec(chain2, [(1, 2)], Basis.CHI)
    y = vec(Poset.chain([3]), [], Basis.CHI)
    assert product(x, y) == vec(chain(3), [(1, 2)], Basis.CHI)


def test_delta_product_adds_cross_arcs(chain2):
    x = vec(chain2, [(1, 2)], Basis.DELTA)
    y = vec(Poset.chain([3]), [], Basis.DELTA)
    want = vec(chain(3), [(1, 2)], Basis.DELTA) + vec(chain(3), [(1, 2), (2, 3)], Basis.DELTA)
    assert product(x, y) == want


def test_subgroup_product_of_full_groups(chain2):
    x = vec(chain2, [], Basis.SUBGROUP_CHI)
    y = vec(Poset.chain([3]), [], Basis.SUBGROUP_CHI)
    assert product(x, y) == vec(chain(3), [], Basis.SUBGROUP_CHI)


def test_product_overlap(chain2):
    x = vec(chain2, [], Basis.CHI)
    with pytest.raises(OverlapError):
        product(x, x)


def test_delta_coproduct_kills_crossing_arc(chain3):
    x = vec(chain3, [(1, 3)], Basis.DELTA)
    assert coproduct(x, {1, 2}).is_zero()


def test_chi_coproduct_example(chain3):
    got = coproduct(vec(chain3, [(1, 3)], Basis.CHI), {1, 2})
    c2, c1 = chain(2), Poset.chain([3])
    empty1 = NNPartition.empty(c1)
    assert got.coefficient(NNPartition.empty(c2), empty1) == q * (q - 1)
    assert got.coefficient(NNPartition(c2, [(1, 2)]), empty1) == q * (q - 1)
    assert len(got.items()) == 2


def test_trivial_split_is_counit(diamond):
    for basis in Basis:
        for lam in enumerate_nn(diamond):
            x = SpeciesElement.basis_vector(lam, basis)
            got = coproduct(x, diamond.atom_set)
            assert got.items() == [((lam, NNPartition.empty(Poset.empty())), ONE)]


def test_restriction_examples(chain3):
    lam = NNPartition(chain3, [(1, 3)])
    same = restriction_general(chain3, chain3, lam)
    assert same == ClassFunction.basis_vector(lam, Basis.CHI)
    Q = Poset([1, 2, 3], [(1, 2)])
    got = restriction_general(chain3, Q, lam)
    want = ClassFunction(Q, Basis.CHI, {NNPartition.empty(Q): q * (q - 1), NNPartition(Q, [(1, 2)]): q * (q - 1)})
    assert got == want


def test_restriction_dyck_index_set():
    R, Q = chain(8), Poset(range(1, 9), [(i, j) for i in range(1, 7) for j in range(i + 1, 7)])
    lam = NNPartition(R, [(2, 4), (4, 7), (7, 8)])
    got = restriction_general(R, Q, lam)
    # antichains of the three-interval poset {[4,5] < [4,6] > [5,6]} give five labels
    assert {frozenset(nu.arcs) for nu, _ in got.items()} == {
        frozenset({(2, 4)}),
        frozenset({(2, 4), (4, 5)}),
        frozenset({(2, 4), (5, 6)}),
        frozenset({(2, 4), (4, 6)}),
        frozenset({(2, 4), (4, 5), (5, 6)}),
    }


def test_subgroup_labels_round_trip(diamond):
    for lam in enumerate_nn(diamond):
        Q = subgroup_poset(lam)
        assert subgroup_label(diamond, Q) == lam


def test_hopf_suite_two_atoms():
    for check in suite_hopf(2):
        assert check.ok, check.line()
