import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from qtri.scalar import Mode, Scalar


def R(text, mode=Mode.EXACT):
    return Scalar.parse(str(text), mode)


def F(text):
    return R(text, Mode.FLOAT)


def draw_unit(rng, lo=Fraction(0), hi=Fraction(1)):
    """a/b with 1 <= a < b <= 97, restricted to (lo, hi)."""
    while True:
        b = rng.randint(2, 97)
        x = Fraction(rng.randint(1, b - 1), b)
        if lo < x < hi:
            return x


def is_q_power(x, q, kmax=60):
    return any(x == q ** k for k in range(-kmax, kmax + 1))


def draw_q_beta(rng, lo=Fraction(0), hi=Fraction(1)):
    """(q, beta) with beta^2 != q^k and beta != q^k."""
    while True:
        q, b = draw_unit(rng, lo, hi), draw_unit(rng, lo, hi)
        if not is_q_power(b * b, q) and not is_q_power(b, q):
            return q, b


@pytest.fixture
def rng():
    return random.Random(20240607)


unit_fractions = st.builds(
    lambda b, a: Fraction(a % (b - 1) + 1, b),
    st.integers(min_value=2, max_value=97), st.integers(min_value=0, max_value=10_000))

signed_fractions = st.fractions(min_value=-5, max_value=5, max_denominator=50)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import LINES
    except ImportError:
        return
    if LINES:
        terminalreporter.section("acceptance criteria")
        for line in LINES:
            terminalreporter.write_line(line)
