from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qtri.errors import DegenerateCentral, InvalidParameters
from qtri.qracah import (RacahParams, Termination, racah_eval, racah_orthogonality_sum,
                         racah_series, racah_weight)
from qtri.qseries import is_balanced
from qtri.scalar import scalar_pow

from conftest import F, R, unit_fractions


def fpoch(a, q, n):
    out = Fraction(1)
    for j in range(n):
        out *= 1 - a * q ** j
    return out


def oracle_racah(n, x, a, b, g, d, q):
    """4phi3 summed straight from its definition with Fractions."""
    total = Fraction(0)
    for k in range(min(n, x) + 1):
        num = (fpoch(q ** -n, q, k) * fpoch(a * b * q ** (n + 1), q, k) * fpoch(q ** -x, q, k)
               * fpoch(g * d * q ** (x + 1), q, k))
        den = fpoch(a * q, q, k) * fpoch(b * d * q, q, k) * fpoch(g * q, q, k) * fpoch(q, q, k)
        total += num / den * q ** k
    return total


class TestParams:
    def test_termination_checked(self):
        q = R("1/2")
        with pytest.raises(InvalidParameters):
            RacahParams(R("1/3"), R(1), R("1/5"), R("1/7"), 2, q)

    def test_gamma_termination(self):
        q = R("1/2")
        p = RacahParams(R("1/3"), R("2/3"), scalar_pow(q, -3), R("1/7"), 2, q, Termination.GAMMA)
        assert p.termination is Termination.GAMMA

    def test_degenerate_shape(self):
        p = RacahParams.degenerate(R("2/7"), R("3/11"), 3, R("1/3"))
        assert p.is_degenerate() and p.alpha == R(3) ** 4

    def test_mu(self):
        p = RacahParams.degenerate(R("1/2"), R("1/2"), 2, R("1/2"))
        assert p.mu(1) == 2 + R("1/4") * R("1/4")


class TestEvaluation:
    def test_series_is_balanced(self):
        p = RacahParams.degenerate(R("2/7"), R("3/11"), 4, R("1/3"))
        for n in range(5):
            for x in range(5):
                assert is_balanced(racah_series(p, n, x))

    @settings(max_examples=25)
    @given(unit_fractions, unit_fractions, unit_fractions, st.integers(min_value=0, max_value=4))
    def test_against_oracle(self, g, d, q, N):
        p = RacahParams.degenerate(R(g), R(d), N, R(q))
        for n in range(N + 1):
            for x in range(N + 1):
                want = oracle_racah(n, x, q ** (-N - 1), Fraction(1), g, d, q)
                assert racah_eval(p, n, x).as_fraction() == want

    def test_symmetry_n_to_N_minus_n(self):
        p = RacahParams.degenerate(R("2/7"), R("3/11"), 5, R("2/5"))
        for n in range(6):
            for x in range(6):
                assert racah_eval(p, n, x) == racah_eval(p, 5 - n, x)

    def test_index_range(self):
        p = RacahParams.degenerate(R("2/7"), R("3/11"), 2, R("1/3"))
        with pytest.raises(InvalidParameters):
            racah_eval(p, 3, 0)


class TestOrthogonality:
    def test_N_zero_gives_one(self):
        p = RacahParams.degenerate(R("2/7"), R("3/11"), 0, R("1/3"))
        assert racah_orthogonality_sum(p, 0) == 1

    @settings(max_examples=15)
    @given(unit_fractions, unit_fractions, unit_fractions, st.integers(min_value=1, max_value=6))
    def test_vanishes_for_positive_N(self, g, d, q, N):
        p = RacahParams.degenerate(R(g), R(d), N, R(q))
        for m in range(N + 1):
            assert racah_orthogonality_sum(p, m) == 0

    def test_float_mode(self):
        p = RacahParams.degenerate(F("2/7"), F("3/11"), 4, F("1/3"))
        assert abs(float(racah_orthogonality_sum(p, 0))) < 1e-9

    def test_weight_total_is_zero(self):
        # m = 0: R_0 = 1, so the weights themselves sum to delta_{N,0}
        p = RacahParams.degenerate(R("1/5"), R("4/7"), 3, R("1/2"))
        assert sum((racah_weight(p, x) for x in range(4)), R(0)) == 0

    def test_degenerate_central(self):
        q = R("1/2")
        p = RacahParams.degenerate(R(4), R(1), 2, q)   # gamma delta q = 2, fine
        racah_weight(p, 0)
        p = RacahParams.degenerate(R(2), R(1), 2, q)   # gamma delta q = 1
        with pytest.raises(DegenerateCentral):
            racah_weight(p, 1)

    def test_excluded_gamma(self):
        q = R("1/2")
        p = RacahParams.degenerate(R(4), R("1/3"), 3, q)
        with pytest.raises(InvalidParameters):
            racah_orthogonality_sum(p, 0)
