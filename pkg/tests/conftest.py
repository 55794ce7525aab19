import pytest
from helpers import EXAMPLE, SMALL

from forest_hopf import HopfAlgebra


@pytest.fixture(scope="session")
def example_hopf():
    return HopfAlgebra(EXAMPLE)


@pytest.fixture(scope="session")
def small_hopf():
    return HopfAlgebra(SMALL)
