from fractions import Fraction

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from maxplus_pencil import BOTTOM, Matrix

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")

finite = st.fractions(min_value=-20, max_value=20, max_denominator=8)
ext_reals = st.one_of(st.just(BOTTOM), finite, finite)


@st.composite
def matrices(draw, rows=None, cols=None, elements=ext_reals):
    n = rows if rows is not None else draw(st.integers(1, 4))
    m = cols if cols is not None else draw(st.integers(1, 4))
    return Matrix([[draw(elements) for _ in range(m)] for _ in range(n)])


def vectors(n, elements=ext_reals):
    return st.lists(elements, min_size=n, max_size=n)


_ACCEPTANCE = []


@pytest.fixture
def criterion():
    """Record one pass/fail line per acceptance criterion."""

    def record(number, ok, detail=""):
        line = f"criterion {number}: {'PASS' if ok else 'FAIL'}  {detail}".rstrip()
        _ACCEPTANCE.append(line)
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE:
            terminalreporter.write_line(line)


F = Fraction
