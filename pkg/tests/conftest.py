import os
import sys

import pytest

from hochschild.linalg import GF, QQ
from hochschild.algebras import dual_numbers

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
FIXTURES = os.path.join(ROOT, "fixtures")

sys.path.insert(0, os.path.join(os.path.dirname(os.path.abspath(__file__)), "oracles"))


@pytest.fixture(scope="session")
def gf2():
    return GF(2)


@pytest.fixture(scope="session")
def gf3():
    return GF(3)


@pytest.fixture(scope="session")
def gf5():
    return GF(5)


@pytest.fixture(scope="session")
def qq():
    return QQ


@pytest.fixture(scope="session")
def dual_gf2():
    return dual_numbers(GF(2))


@pytest.fixture(scope="session")
def dual_qq():
    return dual_numbers(QQ)


@pytest.fixture(scope="session")
def fixtures_dir():
    return FIXTURES
