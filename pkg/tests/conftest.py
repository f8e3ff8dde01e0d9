import pytest
from hypothesis import strategies as st

from latinsq import CayleyTable, SampleConfig, random_latin

_acceptance_results: dict[str, str] = {}


def pytest_runtest_logreport(report):
    criterion = getattr(report, "acceptance_criterion", None)
    if criterion is None:
        return
    if report.when == "call" or report.failed:
        outcome = "PASS" if report.passed else "FAIL"
        if _acceptance_results.get(criterion) != "FAIL":
            _acceptance_results[criterion] = outcome


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    marker = item.get_closest_marker("acceptance")
    if marker is not None:
        outcome.get_result().acceptance_criterion = marker.args[0]


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_results:
        return
    terminalreporter.section("acceptance criteria")
    for criterion, outcome in _acceptance_results.items():
        terminalreporter.write_line(f"{outcome}  {criterion}")


def naive_product_table(rows):
    """Build a table from 1-based rows, the way the examples are printed."""
    return CayleyTable.from_rows([[x - 1 for x in row] for row in rows])


@st.composite
def latin_squares(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    seed = draw(st.integers(0, 2**64 - 1))
    steps = draw(st.integers(1, max(1, n**3)))
    return random_latin(SampleConfig(n, seed, steps))


@st.composite
def arbitrary_tables(draw, min_n=1, max_n=6):
    n = draw(st.integers(min_n, max_n))
    entries = draw(st.lists(st.integers(0, n - 1), min_size=n * n, max_size=n * n))
    return CayleyTable(n, tuple(entries))


@st.composite
def relabelings(draw, table_strategy):
    table = draw(table_strategy)
    perm = draw(st.permutations(list(range(table.n))))
    return table, perm
