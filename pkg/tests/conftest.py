from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

ACCEPTANCE: dict[str, str] = {}


def rationals(bound: int = 20):
    return st.builds(
        Fraction,
        st.integers(-bound, bound),
        st.integers(1, bound),
    )


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE, key=lambda k: (int("".join(c for c in k if c.isdigit())), k)):
        terminalreporter.write_line(f"criterion {key}: {ACCEPTANCE[key]}")


@pytest.fixture
def acceptance():
    return ACCEPTANCE
