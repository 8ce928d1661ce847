from fractions import Fraction

import pytest
from hypothesis import strategies as st

from arbiterlab import MagnitudeProfile, SymmetricGame

payoff_values = st.integers(-50, 50) | st.fractions(min_value=-20, max_value=20, max_denominator=12)


@st.composite
def games(draw):
    values = draw(st.lists(payoff_values, min_size=4, max_size=4, unique=True))
    return SymmetricGame(*values)


@st.composite
def symmetric_profiles(draw):
    """Profiles (i/T, j/2T, j/2T, k/T) with T = i + j + k > 0."""
    i, j, k = draw(st.tuples(*[st.integers(0, 40)] * 3).filter(lambda t: sum(t) > 0))
    total = i + j + k
    return MagnitudeProfile(Fraction(i, total), Fraction(j, 2 * total), Fraction(j, 2 * total), Fraction(k, total))


@st.composite
def profiles(draw):
    parts = draw(st.tuples(*[st.integers(0, 40)] * 4).filter(lambda t: sum(t) > 0))
    total = sum(parts)
    return MagnitudeProfile(*(Fraction(p, total) for p in parts))


# Acceptance criteria report: one line per criterion at the end of the run.

_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when != "call" and not report.failed:
        return
    number, title = marker.args
    prev = _criteria.get(number, (title, True))
    _criteria[number] = (title, prev[1] and not report.failed)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, ok = _criteria[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {title}")
