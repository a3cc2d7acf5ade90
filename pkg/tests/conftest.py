import pytest

from helpers import example_2x4, example_3x3, example_equivalence


@pytest.fixture(scope="session")
def ex1():
    return example_2x4()


@pytest.fixture(scope="session")
def ex2():
    return example_3x3()


@pytest.fixture(scope="session")
def eq_ex():
    return example_equivalence()
