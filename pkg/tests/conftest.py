import random

import pytest

from trigonal.curve import Curve
from trigonal.field import QQ, PrimeField
from trigonal.sampling import random_curve

F7 = PrimeField(7)
F101 = PrimeField(101)
F10007 = PrimeField(10007)

# fixed curves used throughout; all verified nonsingular at construction
LAM34 = {12: 5, 9: 3, 8: 2, 1: 7, 4: 1}
LAM35 = {15: 5, 12: 3, 10: 2, 1: 7, 5: 1}
LAM34_F7 = {2: 3, 4: 2, 12: 6}


@pytest.fixture(scope="session")
def c34():
    return Curve("C1", 1, LAM34, F10007)


@pytest.fixture(scope="session")
def c35():
    return Curve("C2", 1, LAM35, F10007)


@pytest.fixture(scope="session")
def c37():
    return random_curve("C1", 2, F10007, random.Random(37))


@pytest.fixture(scope="session")
def c38():
    return random_curve("C2", 2, F10007, random.Random(38))


@pytest.fixture(scope="session")
def c34_101():
    return Curve("C1", 1, LAM34, F101)


@pytest.fixture(scope="session")
def census_curve():
    return Curve("C1", 1, LAM34_F7, F7)


@pytest.fixture(scope="session")
def y_curve():
    """y^3 = (x-1)(x-2)(x-3)(x-4) over F_10007: the function y vanishes exactly at the roots of P."""
    return Curve("C1", 1, {3: -10, 6: 35, 9: -50, 12: 24}, F10007)


@pytest.fixture(scope="session")
def all_curves(c34, c35, c37, c38):
    return {"C1m1": c34, "C2m1": c35, "C1m2": c37, "C2m2": c38}


@pytest.fixture
def rng():
    return random.Random(20240607)


def pytest_terminal_summary(terminalreporter):
    from helpers import ACCEPTANCE_LINES
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
