import pytest

from superpattern.errors import NotAtomicError, NotNormalError, NotSubposetError
from superpattern.hopf.primitives import (
    atomic_nn_count,
    decompose_atomic,
    generator_product,
    is_atomic_pair,
    is_atomic_pair_scan,
    is_primitive,
    is_triangular,
    primitive_generator,
    primitive_projection,
)
from superpattern.hopf.species import SpeciesElement, subgroup_label
from superpattern.lattice import is_normal
from superpattern.poset import Poset, all_posets, subposets
from superpattern.scalars import ONE
from superpattern.supercharacters import Basis

CATALAN = [1, 1, 2, 5, 14, 42, 132]


def delta(R, Q):
    return SpeciesElement.basis_vector(subgroup_label(R, Q), Basis.SUBGROUP_DELTA)


def atomic_pairs(n):
    for k in range(1, n + 1):
        for R in all_posets(range(1, k + 1)):
            for Q in subposets(R):
                if Q.atom_set == R.atom_set and is_normal(R, Q) and is_atomic_pair(R, Q):
                    yield R, Q


def test_atomic_pair_examples(chain2):
    one = Poset.chain([1])
    assert is_atomic_pair(one, one)
    assert is_atomic_pair(chain2, Poset.antichain([1, 2]))
    assert not is_atomic_pair(chain2, chain2)
    assert [set(b) for b in decompose_atomic(chain2, chain2)] == [{1}, {2}]
    with pytest.raises(NotSubposetError):
        is_atomic_pair(chain2, Poset.chain([1, 3]))


def test_atomic_pair_matches_scan():
    for R in all_posets(range(1, 4)):
        for Q in subposets(R):
            if Q.atom_set == R.atom_set:
                assert is_atomic_pair(R, Q) == is_atomic_pair_scan(R, Q)


def test_singleton_generator():
    one = Poset.chain([1])
    assert primitive_generator(1, one, one) == delta(one, one)


def test_two_atom_generator(chain2):
    P, Q = Poset.chain([2, 1]), Poset.antichain([1, 2])
    x = primitive_generator(1, P, Q)
    assert x.coefficient(subgroup_label(P, Q)) == ONE
    assert x.coefficient(subgroup_label(chain2, chain2)) == -ONE
    assert len(x.items()) == 2
    assert is_primitive(x)


def test_generator_rejects_non_atomic_pair():
    # the pair (2<1, 2<1) splits as a concatenation of singletons
    P = Poset.chain([2, 1])
    with pytest.raises(NotAtomicError):
        primitive_generator(1, P, P)


def test_generator_rejects_non_normal():
    from conftest import CLUB, DIAMOND, HEART, SPADE

    R = Poset.chain([HEART, CLUB, DIAMOND, SPADE])
    Q = Poset([HEART, DIAMOND, CLUB, SPADE], [(HEART, DIAMOND), (HEART, CLUB), (DIAMOND, SPADE)])
    with pytest.raises(NotNormalError):
        primitive_generator(HEART, R, Q)


def test_is_primitive_examples(chain2):
    one = Poset.chain([1])
    assert is_primitive(delta(one, one))
    assert not is_primitive(delta(chain2, chain2))


def test_generators_primitive_with_unit_lead():
    count = 0
    for R, Q in atomic_pairs(3):
        for a in R.atoms:
            x = primitive_generator(a, R, Q)
            assert is_primitive(x)
            assert x.coefficient(subgroup_label(R, Q)) == ONE
            assert primitive_projection(a, delta(R, Q)) == x
            count += 1
    assert count > 50


def test_triangular_reconstruction():
    for R in all_posets(range(1, 4)):
        for Q in subposets(R):
            if Q.atom_set == R.atom_set and is_normal(R, Q):
                assert is_triangular(R, Q)
    assert generator_product(Poset.chain([1]), Poset.chain([1])) == delta(Poset.chain([1]), Poset.chain([1]))


def test_atomic_catalan():
    assert [atomic_nn_count(n) for n in range(2, 8)] == CATALAN[1:7]
