import pytest
from hypothesis import strategies as st

from cliquevalue import Graph, from_edge_list, generate
from oracles import PETERSEN_EDGES


@st.composite
def graphs(draw, max_n=8, min_n=0):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    mask = draw(st.integers(min_value=0, max_value=(1 << (n * (n - 1) // 2)) - 1))
    return Graph.from_mask(n, mask)


@pytest.fixture
def g1():
    # triangle 1-2-3 with pendant edge 3-4, given with 1-based labels
    return from_edge_list(4, [(1, 2), (1, 3), (2, 3), (3, 4)], one_based=True)


@pytest.fixture
def petersen():
    return from_edge_list(10, PETERSEN_EDGES)


@pytest.fixture
def book3():
    return generate("book", 3)


_ACCEPTANCE: list[tuple[str, str]] = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): acceptance criterion reported in the summary")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker and report.when == "call":
        _ACCEPTANCE.append((marker.args[0], "PASS" if report.passed else "FAIL"))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label, status in _ACCEPTANCE:
        terminalreporter.write_line(f"{status}  {label}")
