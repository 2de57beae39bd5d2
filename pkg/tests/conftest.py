import pytest

from f5gb.arith import GREVLEX, QQ, Ring
from f5gb.engine import run


@pytest.fixture(scope="session")
def toy_ring():
    return Ring(("x", "y", "z"), QQ, GREVLEX)


@pytest.fixture(scope="session")
def toy_system(toy_ring):
    x, y, z = toy_ring.gens()
    return [y**2 + y * z - x, y**2 - z**2 + z]


@pytest.fixture(scope="session")
def golden(toy_system):
    """The worked example: F5M, grevlex, POT, mindeg-maxpair."""
    return run(toy_system, algorithm="f5m", mode="POT", strategy="mindeg-maxpair", record_reductions=True)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
