import json

import pytest
from hypothesis import given, settings

from qtri.errors import (ExcludedParameter, InvalidParameters, MixedModeError, NearSingular,
                         NonUnitDiagonal, WindowMismatch)
from qtri.matrices import (TriMatrix, band_product, build_example42, build_L, build_L0, build_M,
                           build_M0, conjugate_diagonal, dp_coefficients, example42_diagonal,
                           invert_unitriangular, lemma31_sum, lemma32_parameters, lemma32_sum)
from qtri.polyfamilies import c_ultra
from qtri.scalar import Mode, scalar_pow
from qtri.trigpoly import TrigPoly, tp_mul

from conftest import F, R, draw_q_beta, draw_unit, unit_fractions


def coeffs(p):
    return [str(c) for c in p.coeffs]


class TestTriMatrix:
    def test_identity(self):
        I = TriMatrix.identity(-2, 2)
        assert I.is_identity() and I.is_unitriangular() and I.size == 5

    def test_above_diagonal_is_zero(self):
        assert TriMatrix.identity(0, 3)[1, 3].is_zero()

    def test_out_of_window(self):
        with pytest.raises(IndexError):
            TriMatrix.identity(0, 3)[4, 0]

    def test_bad_window(self):
        with pytest.raises(InvalidParameters):
            TriMatrix.identity(3, 1)

    def test_json_round_trip(self):
        L = build_L(R("2/5"), R("1/2"), -1, 2)
        data = json.loads(json.dumps(L.to_json()))
        assert TriMatrix.from_json(data) == L

    def test_csv_rows(self):
        rows = list(build_L(R("2/5"), R("1/2"), 0, 1).csv_rows())
        assert rows == [(0, 0, 0, "1"), (1, 0, -1, "10/7"), (1, 0, 0, "0"), (1, 0, 1, "10/7"),
                        (1, 1, 0, "1")]

    def test_restrict(self):
        L = build_L(R("2/5"), R("1/2"), 0, 5)
        assert L.restrict(2, 4) == build_L(R("2/5"), R("1/2"), 2, 4)
        with pytest.raises(WindowMismatch):
            L.restrict(-1, 2)

    def test_window_mismatch(self):
        with pytest.raises(WindowMismatch):
            band_product(TriMatrix.identity(0, 2), TriMatrix.identity(0, 3))

    def test_mode_mismatch(self):
        with pytest.raises(MixedModeError):
            band_product(TriMatrix.identity(0, 2), TriMatrix.identity(0, 2, Mode.FLOAT))


class TestFamilies:
    def test_frozen_entries(self):
        beta, q = R("2/5"), R("1/2")
        L, M = build_L(beta, q, 0, 2), build_M(beta, q, 0, 2)
        assert coeffs(L[1, 0]) == ["10/7", "0", "10/7"]
        assert coeffs(M[1, 0]) == ["-10/7", "0", "-10/7"]
        assert L.is_unitriangular() and M.is_unitriangular()

    def test_inverse_on_negative_window(self):
        beta, q = R("2/5"), R("1/3")
        assert band_product(build_L(beta, q, -3, 3), build_M(beta, q, -3, 3)).is_identity()

    def test_banded_exactness(self):
        # a sub-window of the product equals the product of the sub-windows
        beta, q = R("3/7"), R("2/5")
        big = band_product(build_L(beta, q, 0, 6), build_L(beta, q, 0, 6))
        small = band_product(build_L(beta, q, 2, 5), build_L(beta, q, 2, 5))
        assert big.restrict(2, 5) == small

    def test_excluded_parameter(self):
        # beta^2 q^{2n} = 1 at n = 1 for beta = 2, q = 1/2
        with pytest.raises(ExcludedParameter) as info:
            build_L(R(2), R("1/2"), 0, 3)
        assert (info.value.m, info.value.n, info.value.j) == (2, 1, 0)

    def test_near_singular_warns(self):
        beta = F(2 * (1 + 1e-14))
        with pytest.warns(NearSingular):
            build_L(beta, F("1/2"), 0, 2)

    def test_zero_beta_rejected(self):
        with pytest.raises(InvalidParameters):
            build_L(R(0), R("1/2"), 0, 2)

    def test_oracle_inverse(self, rng):
        for _ in range(5):
            q, b = draw_q_beta(rng)
            L = build_L(R(b), R(q), 0, 5)
            assert invert_unitriangular(L) == build_M(R(b), R(q), 0, 5)

    def test_non_unit_diagonal(self):
        A = TriMatrix.build(0, 1, lambda m, n: TrigPoly.constant(2 if m == n else 0), Mode.EXACT)
        with pytest.raises(NonUnitDiagonal):
            invert_unitriangular(A)

    @settings(max_examples=20, deadline=None)
    @given(unit_fractions, unit_fractions)
    def test_inverse_property(self, q, b):
        if any(b * b == q ** k for k in range(1, 40)):
            return
        L, M = build_L(R(b), R(q), 0, 4), build_M(R(b), R(q), 0, 4)
        assert band_product(M, L).is_identity()


class TestHermiteLimit:
    @pytest.mark.parametrize("q", ["1/2", "1/3", "3/5"])
    def test_L0_M0(self, q):
        L0, M0 = build_L0(R(q), 0, 8), build_M0(R(q), 0, 8)
        assert band_product(L0, M0).is_identity() and band_product(M0, L0).is_identity()

    def test_q_range(self):
        with pytest.raises(InvalidParameters):
            build_L0(R(2), 0, 3)

    def test_entries_converge_linearly_in_beta(self):
        q = F("1/2")
        L0 = build_L0(q, 0, 5)
        prev = None
        for e in (10, 20, 30):
            beta = scalar_pow(q, e)
            res = max(float(build_L(beta, q, 0, 5).entries[k].residual(L0.entries[k]))
                      for k in L0.entries)
            assert res <= 10 * float(beta)
            if prev is not None:
                assert res < prev
            prev = res


class TestExample42:
    @pytest.mark.parametrize("q", ["1/2", "1/3"])
    def test_pair_inverts(self, q):
        L, Linv = build_example42(R(q), 4)
        assert band_product(L, Linv).is_identity() and band_product(Linv, L).is_identity()

    def test_conjugation(self):
        q = R("1/2")
        p = q * q
        L, Linv = build_example42(q, 5)
        d = example42_diagonal(q, 0, 5)
        assert conjugate_diagonal(build_L(p, p, 0, 5), d) == L
        assert conjugate_diagonal(build_M(p, p, 0, 5), d) == Linv


class TestLemmas:
    def test_lemma32_delta(self):
        beta, q = R("2/5"), R("1/3")
        for n in range(3):
            for m in range(n, n + 6):
                want = TrigPoly.constant(int(m == n))
                assert lemma32_sum(m, n, beta, q) == want

    def test_literal_parameter_beta_q_k_fails(self):
        # the same sum with C_{m-n-k}(x; beta q^k | q) is not delta_{m,n} once n != 0
        beta, q, m, n = R("2/5"), R("1/3"), 3, 1
        alphas, betas, cs = lemma32_parameters(m, n, beta, q)
        total = TrigPoly.zero()
        for k in range(m - n + 1):
            total = total + tp_mul(c_ultra(m - n - k, beta * q ** k, q), c_ultra(k, betas[k], q)) * cs[k]
        assert not total.is_zero()

    def test_lemma32_excluded(self):
        q = R("1/2")
        beta = R(2)   # beta^2 q^2 = 1
        with pytest.raises(ExcludedParameter):
            lemma32_sum(3, 1, beta, q)

    def test_dp_matches_direct_expansion(self, rng):
        q = R(draw_unit(rng))
        for n in range(6):
            alphas = [R(draw_unit(rng)) for _ in range(n + 1)]
            betas = [R(draw_unit(rng)) for _ in range(n + 1)]
            cs = [R(draw_unit(rng)) * rng.choice((-1, 1)) for _ in range(n + 1)]
            direct = lemma31_sum(n, alphas, betas, cs, q)
            d = dp_coefficients(n, alphas, betas, cs, q)
            assert [direct.coeff(n - 2 * p) for p in range(n + 1)] == d
            assert d == d[::-1]

    def test_dp_length_checked(self):
        with pytest.raises(InvalidParameters):
            dp_coefficients(2, [R(1)], [R(1)], [R(1)], R("1/2"))
