import pytest

from genpos.families import Cycle, Kneser2, make_family
from genpos.graph import from_edge_list


@pytest.fixture
def petersen():
    return make_family(Kneser2(5))


@pytest.fixture
def c5():
    return make_family(Cycle(5))


@pytest.fixture
def paw():
    # Triangle 0-1-2 with pendant 3 on vertex 2.
    return from_edge_list(4, [(0, 1), (1, 2), (0, 2), (2, 3)])


def pytest_terminal_summary(terminalreporter):
    import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.RESULTS:
            terminalreporter.write_line(line)
