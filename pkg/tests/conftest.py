import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from srlink import datasets  # noqa: E402
from srlink.algebra import MonomialIdeal  # noqa: E402
from srlink.simplicial import SimplicialComplex  # noqa: E402

# filled by test_acceptance; printed at the end of the session
ACCEPTANCE_LINES = {}


def _ideal(name):
    d = datasets.load(name)
    return MonomialIdeal.parse(d["n"], d["gens"])


@pytest.fixture(scope="session")
def rp2_ideal():
    return _ideal("rp2-ideal")


@pytest.fixture(scope="session")
def ex45_ideal():
    return _ideal("ex45-ideal")


@pytest.fixture(scope="session")
def rp2():
    return SimplicialComplex.from_dict(datasets.load("rp2"))


@pytest.fixture(scope="session")
def ex45():
    return SimplicialComplex.from_dict(datasets.load("ex45"))


@pytest.fixture
def square():
    return SimplicialComplex(4, [[1, 2], [2, 3], [3, 4], [1, 4]])


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[k])


@pytest.fixture(scope="session")
def rp2_deg1(rp2_ideal):
    from srlink.liaison.refute import GENERAL, refute_deg1

    return refute_deg1(rp2_ideal, mode=GENERAL)


@pytest.fixture(scope="session")
def rp2_deg2(rp2_ideal):
    from srlink.liaison.refute import GENERAL, refute_deg2

    return refute_deg2(rp2_ideal, mode=GENERAL)
