import random

import pytest

from ordercone.cone import ConeRep, build_space, orthant

V1, V2, V3, V4 = (1, 0, 1), (0, 1, 1), (-1, 0, 1), (0, -1, 1)


def example_space():
    return build_space(ConeRep(3, generators=(V1, V2, V3, V4)))


@pytest.fixture(scope="session")
def ex():
    return example_space()


@pytest.fixture(scope="session")
def orth2():
    return orthant(2)


@pytest.fixture(scope="session")
def orth3():
    return orthant(3)


@pytest.fixture
def rng():
    return random.Random(20240611)
