import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from multitilde.tilde import Multitilde  # noqa: E402

_ACCEPTANCE = []


@st.composite
def tildes(draw, min_arity=1, max_arity=5):
    n = draw(st.integers(min_arity, max_arity))
    pairs = [(x, y) for x in range(1, n + 1) for y in range(x, n + 1)]
    chosen = draw(st.sets(st.sampled_from(pairs), max_size=len(pairs)))
    return Multitilde(n, tuple(chosen))


@pytest.fixture
def criterion(request):
    """Record one acceptance line per criterion; printed after the run."""
    marker = request.node.get_closest_marker("criterion")
    label = marker.args[0] if marker else request.node.name
    yield label
    report = getattr(request.node, "rep_call", None)
    ok = report is not None and report.passed
    _ACCEPTANCE.append((label, ok))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): acceptance criterion label")


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label, ok in sorted(_ACCEPTANCE, key=lambda r: int(r[0].split(".")[0])):
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {label}")
