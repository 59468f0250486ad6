import random
from fractions import Fraction

import pytest
from hypothesis import settings

from qzero.orders import hurwitz_order, standard_order
from qzero.quaternion import Algebra

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

ALGEBRA_GRID = [(-1, -1), (-1, -3), (-2, -3), (-2, -5), (-3, -5)]


@pytest.fixture
def A():
    return Algebra(-1, -1)


@pytest.fixture
def OD(A):
    return standard_order(A)


@pytest.fixture
def hurwitz(A):
    return hurwitz_order(A)


@pytest.fixture
def rng():
    return random.Random(12345)


def rand_frac(rng, bound=5, den=3):
    return Fraction(rng.randint(-bound, bound), rng.randint(1, den))


def pytest_terminal_summary(terminalreporter):
    from . import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(test_acceptance.RESULTS):
            terminalreporter.write_line(test_acceptance.RESULTS[n])
