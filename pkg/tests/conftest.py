import sys
from pathlib import Path

import pytest
from hypothesis import settings, strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from linkhomotopy.words import Word  # noqa: E402

settings.register_profile("default", max_examples=100, deadline=None)
settings.load_profile("default")


def letters(n, max_len):
    return st.lists(
        st.tuples(st.integers(1, n), st.sampled_from([1, -1])), max_size=max_len
    )


def words(n=4, max_len=8):
    return letters(n, max_len).map(Word)


ACCEPTANCE_RESULTS = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}")


@pytest.fixture
def criterion(request):
    """Record the enclosing acceptance test's outcome under a readable name."""
    names = []
    yield names.append
    failed = getattr(request.node, "rep_call", None)
    ok = failed is not None and failed.passed
    for name in names:
        ACCEPTANCE_RESULTS.append((name, ok))
        print(f"{'PASS' if ok else 'FAIL'}  {name}")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep
