
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qtri.errors import InvalidParameters
from qtri.polyfamilies import c_hermite, c_hermite_qinv, c_ultra, gegenbauer
from qtri.scalar import Mode
from qtri.trigpoly import TrigPoly, tp_mul

from conftest import R, unit_fractions


def coeffs(p):
    return [str(c) for c in p.coeffs]


class TestUltraspherical:
    def test_frozen_degree_two(self):
        assert coeffs(c_ultra(2, R("1/4"), R("1/2"))) == ["7/4", "0", "9/4", "0", "7/4"]

    def test_degree_zero_and_one(self):
        assert c_ultra(0, R("1/3"), R("1/2")) == TrigPoly.constant(1)
        # C_1 = (1-beta)/(1-q) (e^{i theta} + e^{-i theta})
        assert coeffs(c_ultra(1, R("2/5"), R("1/2"))) == ["6/5", "0", "6/5"]

    def test_beta_equals_q_is_chebyshev_second_kind(self):
        # C_n(x; q | q) = U_n(x): all e^{i(n-2k)theta} coefficients are 1
        for n in range(6):
            assert all(c == 1 for c in c_ultra(n, R("1/3"), R("1/3")).coeffs[::2])

    def test_base_above_one(self):
        p = c_ultra(3, R("2/5"), R(3))
        assert p.is_symmetric() and p.has_parity(3)

    def test_bad_base(self):
        for q in ("0", "1", "-1"):
            with pytest.raises(InvalidParameters):
                c_ultra(2, R("1/2"), R(q))

    def test_three_term_recurrence(self):
        # 2x(1-beta q^n) C_n = (1-q^{n+1}) C_{n+1} + (1-beta^2 q^{n-1}) C_{n-1}
        beta, q = R("2/5"), R("1/3")
        two_x = TrigPoly([R(1), R(0), R(1)])
        for n in range(1, 7):
            lhs = tp_mul(two_x, c_ultra(n, beta, q)) * (1 - beta * q ** n)
            rhs = (c_ultra(n + 1, beta, q) * (1 - q ** (n + 1))
                   + c_ultra(n - 1, beta, q) * (1 - beta * beta * q ** (n - 1)))
            assert lhs == rhs

    @settings(max_examples=40)
    @given(unit_fractions, unit_fractions, st.integers(min_value=0, max_value=7))
    def test_symmetric_with_parity(self, beta, q, n):
        p = c_ultra(n, R(beta), R(q))
        assert p.is_symmetric() and p.has_parity(n)


class TestHermite:
    def test_frozen_degree_two(self):
        q = R("1/2")
        assert coeffs(c_hermite(2, q)) == ["1", "0", "3/2", "0", "1"]

    def test_beta_zero_limit_of_ultra(self):
        # C_n(x; 0 | q) = H_n(x|q) / (q;q)_n, with (q;q)_n the leading factor of H_n
        q = R("1/3")
        for n in range(6):
            h = c_hermite(n, q)
            assert c_ultra(n, R(0), q) * h.coeff(n) == h * c_ultra(n, R(0), q).coeff(n)

    def test_qinv_is_inverted_base(self):
        q = R("1/3")
        assert c_hermite_qinv(4, q) == c_hermite(4, R(3))

    def test_qinv_exact_rationals(self):
        p = c_hermite_qinv(3, R("2/7"))
        assert p.mode is Mode.EXACT
        assert p.coeff(1) == 1 + R("7/2") + R("49/4")


class TestGegenbauer:
    def test_degree_one_and_two(self):
        a = R("3/5")
        assert coeffs(gegenbauer(1, a)) == ["3/5", "0", "3/5"]
        p = gegenbauer(2, a)
        assert p.coeff(0) == a * a and p.coeff(2) == a * (a + 1) / 2

    def test_alpha_one_is_chebyshev_second_kind(self):
        assert all(c == 1 for c in gegenbauer(5, R(1)).coeffs[::2])

    def test_q_to_one_limit(self):
        # C_n(x; q^a | q) -> C_n^{(a)}(x) as q -> 1, checked at q = 1 - 1e-6 for a = 2
        n, q = 4, 1 - 1e-6
        approx = c_ultra(n, R(q * q).to_float(), R(q).to_float())
        exact = gegenbauer(n, R(2)).to_float()
        assert approx.close_to(exact, 1e-4)
