import random
import sys
from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def positive_rationals(max_num=50, max_den=20):
    return st.builds(Fraction, st.integers(1, max_num), st.integers(1, max_den))


def rationals(max_abs=50, max_den=20):
    return st.builds(Fraction, st.integers(-max_abs, max_abs), st.integers(1, max_den))


def random_positive(rng: random.Random, max_num=40, max_den=15) -> Fraction:
    return Fraction(rng.randint(1, max_num), rng.randint(1, max_den))


@pytest.fixture
def rng():
    return random.Random(20261015)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.report_lines():
        terminalreporter.write_line(line)
