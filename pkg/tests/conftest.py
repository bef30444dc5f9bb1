import pytest

from superpattern.poset import Poset

HEART, DIAMOND, CLUB, SPADE = "♥", "♦", "♣", "♠"


def chain(n):
    return Poset.chain(range(1, n + 1))


@pytest.fixture
def chain2():
    return chain(2)


@pytest.fixture
def chain3():
    return chain(3)


@pytest.fixture
def diamond():
    return Poset(
        [HEART, DIAMOND, CLUB, SPADE],
        [(HEART, DIAMOND), (HEART, CLUB), (DIAMOND, SPADE), (CLUB, SPADE)],
    )
