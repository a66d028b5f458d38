import cmath
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qtri.errors import AsymmetricInput, MixedModeError, NonUnitConstantTerm
from qtri.scalar import Mode, Scalar, scalar_pow
from qtri.trigpoly import (TrigPoly, TruncSeries, cheb_to_tp, qpoch_pair_tseries,
                           qpoch_tseries, tp_eval, tp_mul, tp_to_cheb, ts_inv, ts_mul)

from conftest import F, R, signed_fractions


def tp(*coeffs, mode=Mode.EXACT):
    return TrigPoly([Scalar.parse(str(c), mode) for c in coeffs], mode)


def numeric(p, theta):
    return sum(complex(float(p.coeff(k))) * cmath.exp(1j * k * theta)
               for k in range(-p.degree, p.degree + 1))


def _frac_poly(cs):
    return TrigPoly([R(f"{c.numerator}/{c.denominator}") for c in cs])


# symmetric polynomials: mirror a random half around a unit constant term
polys = st.lists(signed_fractions, max_size=4).map(lambda cs: _frac_poly(cs + [Fraction(1)] + cs[::-1]))
raw_polys = st.integers(min_value=0, max_value=3).flatmap(
    lambda n: st.lists(signed_fractions, min_size=2 * n + 1, max_size=2 * n + 1)).map(_frac_poly)


class TestTrigPoly:
    def test_even_length_rejected(self):
        with pytest.raises(ValueError):
            TrigPoly([R(1), R(2)])

    def test_equality_pads(self):
        assert tp(0, 5, 0) == TrigPoly.constant(5)
        assert TrigPoly.zero(degree=3).is_zero()

    def test_coeff_outside_is_zero(self):
        assert tp(1, 2, 3).coeff(7) == 0

    def test_mixed_modes(self):
        with pytest.raises(MixedModeError):
            tp(1) + tp(1, mode=Mode.FLOAT)

    def test_mul_matches_convolution(self):
        # (e^{-i} + e^{i})^2 = e^{-2i} + 2 + e^{2i}
        x = tp(1, 0, 1)
        assert tp_mul(x, x) == tp(1, 0, 2, 0, 1)

    def test_symmetry_and_parity(self):
        p = tp(1, 0, 3, 0, 1)
        assert p.is_symmetric() and p.has_parity(2)
        assert not tp(1, 0, 2).is_symmetric()
        assert not tp(1, 1, 1).has_parity(2)

    def test_json_round_trip(self):
        p = tp("1/3", 0, "-2/7")
        data = p.to_json()
        assert data == {"degree": 1, "coeffs": ["1/3", "0", "-2/7"]}
        assert TrigPoly.from_json(data) == p

    def test_scalar_multiply_and_divide(self):
        assert tp(1, 2, 1) * R(2) == tp(2, 4, 2)
        assert tp(2, 4, 2) / R(2) == tp(1, 2, 1)

    @settings(max_examples=50)
    @given(raw_polys, raw_polys, st.floats(min_value=0, max_value=6.2))
    def test_mul_against_numeric(self, a, b, theta):
        got = numeric(tp_mul(a, b), theta)
        want = numeric(a, theta) * numeric(b, theta)
        assert abs(got - want) <= 1e-9 * max(1.0, abs(want))

    @given(raw_polys, raw_polys, raw_polys)
    def test_ring_laws(self, a, b, c):
        assert tp_mul(a, b) == tp_mul(b, a)
        assert tp_mul(a, b + c) == tp_mul(a, b) + tp_mul(a, c)


class TestChebyshev:
    def test_round_trip(self):
        p = tp("1/2", 0, 3, 0, "1/2")
        c = tp_to_cheb(p)
        assert [str(x) for x in c.coeffs] == ["3", "0", "1"]
        assert cheb_to_tp(c) == p

    def test_asymmetric_rejected(self):
        with pytest.raises(AsymmetricInput):
            tp_to_cheb(tp(1, 0, 2))

    def test_eval_cos(self):
        # 2 cos(2 theta) at theta = pi/3 is -1
        p = tp(1, 0, 0, 0, 1)
        assert math.isclose(float(tp_eval(p.to_float(), F(math.cos(math.pi / 3)))), -1.0)
        # exact: T_2(1/2) = -1/2, so 2 T_2 = -1
        assert tp_eval(p, R("1/2")) == -1

    @given(polys, st.floats(min_value=0, max_value=3.1))
    def test_eval_matches_numeric(self, p, theta):
        got = float(tp_eval(p.to_float(), F(math.cos(theta))))
        assert abs(got - numeric(p, theta).real) <= 1e-9 * max(1.0, abs(got))


class TestTruncSeries:
    def test_inverse(self):
        a = TruncSeries([TrigPoly.constant(1), tp(-1, 0, -1)], 6)
        assert ts_mul(a, ts_inv(a)) == TruncSeries.one(6, Mode.EXACT)

    def test_non_unit_constant(self):
        with pytest.raises(NonUnitConstantTerm):
            ts_inv(TruncSeries([tp(1, 0, 1)], 3))

    def test_order_truncation(self):
        s = TruncSeries([TrigPoly.constant(k) for k in range(10)], 3)
        assert s.order == 3 and len(s.coeffs) == 4

    def test_euler_matches_finite_product_in_the_limit(self):
        # the coefficient of t^j of the J-factor product converges to the infinite product
        q, a, T = R("1/2"), R("2/5"), 4
        exact = qpoch_tseries(a, 1, q, T)
        prev = None
        for J in (4, 8, 16, 32):
            err = max(float(abs(exact[j].coeff(j) - qpoch_tseries(a, 1, q, T, J)[j].coeff(j)))
                      for j in range(1, T + 1))
            if prev is not None:
                assert err < prev
            prev = err
        assert prev < 1e-8

    def test_finite_product_truncation_is_not_exact(self):
        # the t^1 coefficient of (t;q)_J is -(1-q^J)/(1-q), not -1/(1-q)
        q = R("1/2")
        s = qpoch_tseries(R(1), 0, q, 3, factors=3)
        assert s[1].coeff(0) == -(1 - scalar_pow(q, 3)) / (1 - q)
        assert qpoch_tseries(R(1), 0, q, 3)[1].coeff(0) == -1 / (1 - q)

    def test_pair_is_symmetric(self):
        s = qpoch_pair_tseries(R("1/3"), R("1/2"), 5)
        assert all(s[j].is_symmetric() for j in range(6))
