"""Verifiers for the auxiliary identities around the inversion theorem.

Each ``verify_*`` function evaluates both sides of an identity over its
parameter range and returns a :class:`VerificationReport`.  In Exact mode a
pass means coefficientwise equality; in Float mode it means closeness at
``rel_tol``.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from math import factorial

from .errors import ExcludedParameter, VanishingDenominatorFactor
from .matrices import (band_product, build_example42, build_L, build_L0, build_M, build_M0,
                       conjugate_diagonal, dp_coefficients, dp_first_series, dp_second_series,
                       example42_diagonal, invert_unitriangular, lemma31_sum, lemma32_parameters,
                       lemma32_sum)
from .polyfamilies import c_hermite, c_hermite_qinv, c_ultra, gegenbauer
from .qracah import RacahParams, racah_eval, racah_orthogonality_sum
from .qseries import PhiSeries, hyp_terminating, phi_terminating, poch, qpoch, qpoch_multi
from .scalar import (DEFAULT_REL_TOL, Mode, Scalar, common_mode, one, scalar_close, scalar_pow,
                     scaled_residual, zero)
from .trigpoly import (TrigPoly, TruncSeries, qpoch_pair_tseries, tp_mul, tp_to_cheb, ts_inv,
                       ts_mul)


@dataclass
class VerificationReport:
    identity: str
    params: dict
    mode: Mode
    passed: bool
    max_residual: Scalar
    elapsed_ms: float = 0.0
    values: dict = field(default_factory=dict)

    def to_json(self, timing: bool = True) -> dict:
        out = {
            "identity": self.identity,
            "params": {k: str(v) for k, v in self.params.items()},
            "mode": self.mode.value,
            "pass": self.passed,
            "max_residual": str(self.max_residual),
            "elapsed_ms": round(self.elapsed_ms, 3) if timing else 0,
        }
        if self.values:
            out["values"] = {k: str(v) for k, v in self.values.items()}
        return out


class _Tally:
    """Accumulates comparisons into a pass flag and a worst residual."""

    def __init__(self, mode: Mode, rel_tol: float):
        self.mode = mode
        self.rel_tol = rel_tol
        self.passed = True
        self.worst = zero(mode)

    def scalar(self, a: Scalar, b: Scalar):
        if not scalar_close(a, b, self.rel_tol):
            self.passed = False
        r = scaled_residual(a, b)
        if r > self.worst:
            self.worst = r

    def poly(self, a: TrigPoly, b: TrigPoly):
        if not a.close_to(b, self.rel_tol):
            self.passed = False
        r = a.residual(b)
        if r > self.worst:
            self.worst = r

    def flag(self, ok: bool):
        self.passed = self.passed and ok


def _run(name, params, mode, rel_tol, body) -> VerificationReport:
    start = time.perf_counter()
    tally = _Tally(mode, rel_tol)
    values = body(tally) or {}
    return VerificationReport(name, params, mode, tally.passed, tally.worst,
                              (time.perf_counter() - start) * 1000.0, values)


def _delta(mode: Mode, flag: bool) -> TrigPoly:
    return TrigPoly.constant(int(flag), mode)


# ---------------------------------------------------------------------------
# inversion theorem and lemmas


def verify_inverse(beta: Scalar, q: Scalar, lo: int, hi: int,
                   rel_tol: float = DEFAULT_REL_TOL) -> VerificationReport:
    """L M = I = M L on the window, plus agreement with forward substitution."""
    mode = common_mode(beta, q)

    def body(t: _Tally):
        L = build_L(beta, q, lo, hi)
        M = build_M(beta, q, lo, hi)
        for P in (band_product(L, M), band_product(M, L)):
            for (m, n), p in P.entries.items():
                t.poly(p, _delta(mode, m == n))
        oracle = invert_unitriangular(L)
        for key, p in M.entries.items():
            t.poly(p, oracle.entries[key])

    return _run("inverse", {"beta": beta, "q": q, "lo": lo, "hi": hi}, mode, rel_tol, body)


def verify_example42(q: Scalar, N: int,
                     rel_tol: float = DEFAULT_REL_TOL) -> VerificationReport:
    """The base-q^2 pair multiplies to I both ways and is D L(q^2, q^2) D^{-1}."""
    mode = q.mode

    def body(t: _Tally):
        L, Linv = build_example42(q, N)
        for P in (band_product(L, Linv), band_product(Linv, L)):
            for (m, n), p in P.entries.items():
                t.poly(p, _delta(mode, m == n))
        p2 = q * q
        d = example42_diagonal(q, 0, N)
        for ours, stated in ((conjugate_diagonal(build_L(p2, p2, 0, N), d), L),
                             (conjugate_diagonal(build_M(p2, p2, 0, N), d), Linv)):
            for key, p in stated.entries.items():
                t.poly(ours.entries[key], p)

    return _run("ex42", {"q": q, "N": N}, mode, rel_tol, body)


def verify_lemma32(m: int, n: int, beta: Scalar, q: Scalar,
                   rel_tol: float = DEFAULT_REL_TOL) -> VerificationReport:
    """lemma32_sum = delta_{m,n}, and its d(p) via the 4phi3 branches = delta_{p,0} delta_{m,n}."""
    mode = common_mode(beta, q)

    def body(t: _Tally):
        t.poly(lemma32_sum(m, n, beta, q), _delta(mode, m == n))
        alphas, betas, cs = lemma32_parameters(m, n, beta, q)
        for p, d in enumerate(dp_coefficients(m - n, alphas, betas, cs, q)):
            t.scalar(d, one(mode) * int(p == 0 and m == n))

    return _run("lemma32", {"m": m, "n": n, "beta": beta, "q": q}, mode, rel_tol, body)


def verify_dp(n: int, alphas, betas, cs, q: Scalar,
              rel_tol: float = DEFAULT_REL_TOL) -> VerificationReport:
    """The two-branch d(p) formula against direct expansion, and its Chebyshev form."""
    mode = common_mode(q, *alphas, *betas, *cs)

    def body(t: _Tally):
        direct = lemma31_sum(n, alphas, betas, cs, q)
        d = dp_coefficients(n, alphas, betas, cs, q)
        for p in range(n + 1):
            t.scalar(d[p], direct.coeff(n - 2 * p))
        cheb = tp_to_cheb(direct).coeffs
        for p in range(n // 2 + 1):
            t.scalar(cheb[n - 2 * p] if n - 2 * p < len(cheb) else zero(mode),
                     d[p] * (2 - int(n == 2 * p)))

    params = {"n": n, "q": q}
    for k in range(n + 1):
        params.update({f"alpha_{k}": alphas[k], f"beta_{k}": betas[k], f"c_{k}": cs[k]})
    return _run("dp", params, mode, rel_tol, body)


# ---------------------------------------------------------------------------
# q-Racah


def verify_racah_ortho(gamma: Scalar, delta: Scalar, N: int, q: Scalar,
                       rel_tol: float = DEFAULT_REL_TOL, m: int | None = None) -> VerificationReport:
    """Degenerate orthogonality for every m = 0..N (or just ``m``), and R_n = R_{N-n} pointwise."""
    mode = common_mode(gamma, delta, q)
    values = {}

    def body(t: _Tally):
        params = RacahParams.degenerate(gamma, delta, N, q)
        for mm in (range(N + 1) if m is None else (m,)):
            s = racah_orthogonality_sum(params, mm)
            values[f"sum_m{mm}"] = s
            t.scalar(s, one(mode) * int(mm == 0 and N == 0))
        for n in range(N + 1):
            for x in range(N + 1):
                t.scalar(racah_eval(params, n, x), racah_eval(params, N - n, x))
        return values

    params = {"gamma": gamma, "delta": delta, "N": N, "q": q}
    if m is not None:
        params["m"] = m
    return _run("racah-ortho", params, mode, rel_tol, body)


# ---------------------------------------------------------------------------
# Sears' transformations


def sears_sides(n: int, a: Scalar, b: Scalar, c: Scalar, d: Scalar, e: Scalar,
                q: Scalar) -> tuple[Scalar, Scalar, Scalar]:
    """Left side and both transformed right sides; f is forced by abc = def q^{n-1}."""
    f = a * b * c / (d * e * scalar_pow(q, n - 1))
    qn = scalar_pow(q, -n)
    lhs = phi_terminating(PhiSeries((qn, a, b, c), (d, e, f), q, q, n))
    pre1 = scalar_pow(a, n) * qpoch_multi((e / a, f / a), q, n) / qpoch_multi((e, f), q, n)
    s1 = phi_terminating(PhiSeries(
        (qn, a, d / b, d / c),
        (d, a * scalar_pow(q, 1 - n) / e, a * scalar_pow(q, 1 - n) / f), q, q, n))
    efab, efac, efabc = e * f / (a * b), e * f / (a * c), e * f / (a * b * c)
    pre2 = qpoch_multi((a, efab, efac), q, n) / qpoch_multi((e, f, efabc), q, n)
    s2 = phi_terminating(PhiSeries(
        (qn, e / a, f / a, efabc), (efab, efac, scalar_pow(q, 1 - n) / a), q, q, n))
    return lhs, pre1 * s1, pre2 * s2


def verify_sears(n: int, a: Scalar, b: Scalar, c: Scalar, d: Scalar, e: Scalar, q: Scalar,
                 rel_tol: float = DEFAULT_REL_TOL) -> VerificationReport:
    mode = common_mode(a, b, c, d, e, q)
    values = {}

    def body(t: _Tally):
        lhs, r1, r2 = sears_sides(n, a, b, c, d, e, q)
        values.update(lhs=lhs, first=r1, second=r2)
        t.scalar(lhs, r1)
        t.scalar(lhs, r2)
        t.scalar(r1, r2)
        return values

    return _run("sears", {"n": n, "a": a, "b": b, "c": c, "d": d, "e": e, "q": q}, mode,
                rel_tol, body)


def verify_dp_racah_rewrite(m: int, n: int, beta: Scalar, q: Scalar,
                            rel_tol: float = DEFAULT_REL_TOL) -> VerificationReport:
    """Both 4phi3 branches of the specialised d(p) equal a prefactor times
    R_p(mu(k); q^{n-m-1}, 1, beta q^{n-1}, beta q^{n-1}; q).
    """
    mode = common_mode(beta, q)

    def body(t: _Tally):
        N = m - n
        g = beta * scalar_pow(q, n - 1)
        racah = RacahParams.degenerate(g, g, N, q)
        alphas, betas, _ = lemma32_parameters(m, n, beta, q)
        binv = 1 / beta
        for p in range(N + 1):
            for k in range(N + 1):
                a, b = alphas[k], betas[k]
                r = racah_eval(racah, p, k)
                if k <= N - p:
                    series = phi_terminating(dp_first_series(N, p, k, a, b, q))
                    pre = (qpoch_multi((scalar_pow(q, 1 - n - k) * binv, scalar_pow(q, N - k + 1)), q, k)
                           / qpoch_multi((scalar_pow(q, 1 - n - k - p) * binv,
                                          scalar_pow(q, N - k - p + 1)), q, k)
                           * scalar_pow(q, -p * k))
                else:
                    series = phi_terminating(dp_second_series(N, p, k, a, b, q))
                    L = N - p
                    pre = (qpoch_multi((scalar_pow(q, 1 + p - m) * binv, scalar_pow(q, n - m),
                                        beta * scalar_pow(q, n)), q, L)
                           / qpoch_multi((beta * scalar_pow(q, 2 * n - m + k + p),
                                          scalar_pow(q, 1 - m) * binv, scalar_pow(q, -k)), q, L))
                t.scalar(series, pre * r)

    return _run("dp-racah", {"m": m, "n": n, "beta": beta, "q": q}, mode, rel_tol, body)


# ---------------------------------------------------------------------------
# generating functions


def _series_check(t: _Tally, series: TruncSeries, expected):
    for j in range(series.order + 1):
        t.poly(series[j], expected(j))


def ultra_genfunc_series(beta: Scalar, q: Scalar, T: int) -> TruncSeries:
    """(beta t e^{i theta}, beta t e^{-i theta}; q)_inf / (t e^{i theta}, t e^{-i theta}; q)_inf to order T."""
    num = qpoch_pair_tseries(beta, q, T)
    den = qpoch_pair_tseries(one(q.mode), q, T)
    return ts_mul(num, ts_inv(den))


def verify_genfunc_ultra(beta: Scalar, q: Scalar, T: int,
                         rel_tol: float = DEFAULT_REL_TOL) -> VerificationReport:
    """Coefficient of t^n in the product formula equals C_n(x; beta | q) for n <= T."""
    mode = common_mode(beta, q)

    def body(t: _Tally):
        _series_check(t, ultra_genfunc_series(beta, q, T), lambda j: c_ultra(j, beta, q))

    return _run("genfunc-ultra", {"beta": beta, "q": q, "T": T}, mode, rel_tol, body)


def verify_genfunc_hermite(q: Scalar, T: int,
                           rel_tol: float = DEFAULT_REL_TOL) -> VerificationReport:
    """1 / (t e^{i theta}, t e^{-i theta}; q)_inf = Sum H_n(x|q) t^n / (q;q)_n."""
    mode = q.mode

    def body(t: _Tally):
        series = ts_inv(qpoch_pair_tseries(one(mode), q, T))
        _series_check(t, series, lambda j: c_hermite(j, q) / qpoch(q, q, j))

    return _run("genfunc-hermite", {"q": q, "T": T}, mode, rel_tol, body)


def verify_genfunc_hermite_qinv(q: Scalar, T: int,
                                rel_tol: float = DEFAULT_REL_TOL) -> VerificationReport:
    """(t e^{i theta}, t e^{-i theta}; q)_inf = Sum (-1)^n q^{n(n-1)/2} H_n(x|q^{-1}) t^n / (q;q)_n."""
    mode = q.mode

    def body(t: _Tally):
        series = qpoch_pair_tseries(one(mode), q, T)

        def expected(j):
            c = scalar_pow(q, j * (j - 1) // 2) / qpoch(q, q, j)
            return c_hermite_qinv(j, q) * (-c if j % 2 else c)

        _series_check(t, series, expected)

    return _run("genfunc-hermite-qinv", {"q": q, "T": T}, mode, rel_tol, body)


def verify_genfunc_product_rule(alpha: Scalar, beta: Scalar, q: Scalar, n_max: int,
                                rel_tol: float = DEFAULT_REL_TOL) -> VerificationReport:
    """C_n(x; alpha beta | q) = Sum_k alpha^k C_{n-k}(x; alpha | q) C_k(x; beta | q)."""
    mode = common_mode(alpha, beta, q)

    def body(t: _Tally):
        for n in range(n_max + 1):
            rhs = TrigPoly.zero(mode)
            for k in range(n + 1):
                rhs = rhs + tp_mul(c_ultra(n - k, alpha, q), c_ultra(k, beta, q)) * scalar_pow(alpha, k)
            t.poly(c_ultra(n, alpha * beta, q), rhs)

    return _run("product-rule", {"alpha": alpha, "beta": beta, "q": q, "n_max": n_max}, mode,
                rel_tol, body)


# ---------------------------------------------------------------------------
# summation identities from the product rule at beta = 1/alpha


def ex43_p0_sum(alpha: Scalar, q: Scalar, n: int) -> Scalar:
    """Sum_k alpha^k (alpha;q)_{n-k}/(q;q)_{n-k} (alpha^{-1};q)_k/(q;q)_k."""
    ainv = 1 / alpha
    total = zero(q.mode)
    for k in range(n + 1):
        total = total + (scalar_pow(alpha, k) * qpoch(alpha, q, n - k) / qpoch(q, q, n - k)
                         * qpoch(ainv, q, k) / qpoch(q, q, k))
    return total


def ex43_p0_chu_vandermonde(alpha: Scalar, q: Scalar, n: int) -> tuple[Scalar, Scalar]:
    """The same sum as (alpha;q)_n/(q;q)_n 2phi1(q^{-n}, 1/alpha; q^{1-n}/alpha; q, q),
    together with the q-Chu-Vandermonde closed form (c/b;q)_n b^n / (c;q)_n.
    """
    b = 1 / alpha
    c = scalar_pow(q, 1 - n) / alpha
    pre = qpoch(alpha, q, n) / qpoch(q, q, n)
    series = phi_terminating(PhiSeries((scalar_pow(q, -n), b), (c,), q, q, n))
    closed = qpoch(c / b, q, n) * scalar_pow(b, n) / qpoch(c, q, n)
    return pre * series, pre * closed


def ex43_p1_sides(alpha: Scalar, q: Scalar, n: int) -> tuple[Scalar, Scalar]:
    ainv = 1 / alpha
    total = zero(q.mode)
    for k in range(n + 1):
        den = (1 - alpha * scalar_pow(q, 1 - k)) * (1 - scalar_pow(q, n + 1 - k))
        if den.is_zero():
            raise VanishingDenominatorFactor("(1 - alpha q^(1-k))(1 - q^(n+1-k))", k)
        bracket = 1 + (1 - alpha * scalar_pow(q, n - k)) * (1 - scalar_pow(q, k)) / den * scalar_pow(q, 1 - k)
        total = total + (scalar_pow(alpha, k) * qpoch(alpha, q, n - k) / qpoch(q, q, n - k)
                         * qpoch(ainv, q, k) / qpoch(q, q, k) * bracket)
    rhs = scalar_pow(alpha, n) * qpoch(ainv, q, n) / qpoch(q, q, n)
    return total, rhs


def verify_ex43_sums(alpha: Scalar, q: Scalar, n_max: int, n_max_p1: int | None = None,
                     rel_tol: float = DEFAULT_REL_TOL) -> VerificationReport:
    """p = 0 sum vanishes for 1 <= n <= n_max (direct, via 2phi1, and closed form);
    p = 1 identity holds for 0 <= n <= n_max_p1."""
    mode = common_mode(alpha, q)
    n_max_p1 = n_max if n_max_p1 is None else n_max_p1

    def body(t: _Tally):
        for n in range(1, n_max + 1):
            direct = ex43_p0_sum(alpha, q, n)
            via_phi, closed = ex43_p0_chu_vandermonde(alpha, q, n)
            t.scalar(direct, zero(mode))
            t.scalar(via_phi, direct)
            t.scalar(closed, direct)
        for n in range(n_max_p1 + 1):
            lhs, rhs = ex43_p1_sides(alpha, q, n)
            t.scalar(lhs, rhs)

    return _run("ex43", {"alpha": alpha, "q": q, "n_max": n_max, "n_max_p1": n_max_p1}, mode,
                rel_tol, body)


# ---------------------------------------------------------------------------
# classical limit


def gegenbauer_key_sum(m: int, n: int, alpha: Scalar) -> TrigPoly:
    """Sum_k (2n+2k+2a-1)/(2n+k+2a-1)_{m-n+1} C^{(a+k+n)}_{m-n-k} C^{(1-k-n-a)}_k, a = alpha.

    The Pochhammer factor j = k equals the numerator and is cancelled, so
    the excluded set is 2 alpha in {-2m+1, ..., -2n}.
    """
    mode = alpha.mode
    d = m - n
    total = TrigPoly.zero(mode)
    for k in range(d + 1):
        den = one(mode)
        base = 2 * alpha + (2 * n + k - 1)
        for j in range(d + 1):
            if j == k:
                continue
            f = base + j
            if f.is_zero():
                raise ExcludedParameter("(2n+k+2alpha-1)_(m-n+1)", m, n, j)
            den = den * f
        term = tp_mul(gegenbauer(d - k, alpha + (k + n)), gegenbauer(k, 1 - alpha - (k + n)))
        total = total + term / den
    return total


def classical_dp(n: int, alphas, betas, cs) -> list[Scalar]:
    """q -> 1 shadow of dp_coefficients, with terminating 4F3 series at argument 2 - a - b."""
    mode = common_mode(*alphas, *betas, *cs)

    def ratio(a, j):
        return poch(a, j) / factorial(j)

    out = []
    for p in range(n + 1):
        d = zero(mode)
        for k in range(n - p + 1):
            a, b = alphas[k], betas[k]
            z = 2 - a - b
            m = min(p, k)
            f = hyp_terminating([one(mode) * -p, a + (n - p - k), one(mode) * -k, b],
                                [1 - p - a, 1 - k - b, one(mode) * (n - p - k + 1)], z, m)
            d = d + cs[k] * ratio(a, p) * ratio(a, n - p - k) * ratio(b, k) * f
        for k in range(n - p + 1, n + 1):
            a, b = alphas[k], betas[k]
            z = 2 - a - b
            m = min(n - k, n - p)
            f = hyp_terminating([one(mode) * (k - n), one(mode) * (p - n), a, b + (k + p - n)],
                                [1 - n + k - a, one(mode) * (k + p - n + 1), 1 - n + p - b], z, m)
            d = d + cs[k] * ratio(a, n - k) * ratio(b, p - n + k) * ratio(b, n - p) * f
        out.append(d)
    return out


def verify_gegenbauer_key(m: int, n: int, alpha: Scalar,
                          rel_tol: float = DEFAULT_REL_TOL) -> VerificationReport:
    """Key sum = delta_{m,n}; its coefficients also match the classical d(p) formula."""
    mode = alpha.mode

    def body(t: _Tally):
        total = gegenbauer_key_sum(m, n, alpha)
        t.poly(total, _delta(mode, m == n))
        d = m - n
        alphas = [alpha + (k + n) for k in range(d + 1)]
        betas = [1 - alpha - (k + n) for k in range(d + 1)]
        cs = []
        for k in range(d + 1):
            den = one(mode)
            for j in range(d + 1):
                if j != k:
                    den = den * (2 * alpha + (2 * n + k - 1 + j))
            cs.append(1 / den)
        for p, v in enumerate(classical_dp(d, alphas, betas, cs)):
            t.scalar(v, total.coeff(d - 2 * p))

    return _run("gegenbauer", {"m": m, "n": n, "alpha": alpha}, mode, rel_tol, body)


# ---------------------------------------------------------------------------
# beta -> 0


def hermite_convolution(p: int, q: Scalar) -> TrigPoly:
    """Sum_k H_{p-k}(x|q)/(q;q)_{p-k} (-1)^k q^{k(k-1)/2} H_k(x|q^{-1})/(q;q)_k."""
    total = TrigPoly.zero(q.mode)
    for k in range(p + 1):
        c = scalar_pow(q, k * (k - 1) // 2) / (qpoch(q, q, p - k) * qpoch(q, q, k))
        if k % 2:
            c = -c
        total = total + tp_mul(c_hermite(p - k, q), c_hermite_qinv(k, q)) * c
    return total


def verify_hermite_convolution(q: Scalar, n_max: int,
                               rel_tol: float = DEFAULT_REL_TOL) -> VerificationReport:
    """Convolution = delta_{p,0} for p <= n_max, the q^{-1}-Hermite generating
    function to order n_max, and the product of both generating functions = 1."""
    mode = q.mode

    def body(t: _Tally):
        for p in range(n_max + 1):
            t.poly(hermite_convolution(p, q), _delta(mode, p == 0))
        inv_series = verify_genfunc_hermite_qinv(q, n_max, rel_tol)
        t.flag(inv_series.passed)
        h_series = ts_inv(qpoch_pair_tseries(one(mode), q, n_max))
        prod = ts_mul(h_series, qpoch_pair_tseries(one(mode), q, n_max))
        _series_check(t, prod, lambda j: _delta(mode, j == 0))

    return _run("hermite", {"q": q, "n_max": n_max}, mode, rel_tol, body)


def verify_beta_zero_limit(q: Scalar, N: int, beta: Scalar,
                           rel_tol: float = 1e-6) -> VerificationReport:
    """Entries of L^beta, M^beta at small beta against L^0, M^0 (Float-mode probe)."""
    mode = common_mode(q, beta)
    values = {}

    def body(t: _Tally):
        L, M = build_L(beta, q, 0, N), build_M(beta, q, 0, N)
        L0, M0 = build_L0(q, 0, N), build_M0(q, 0, N)
        for key in L.entries:
            t.poly(L.entries[key], L0.entries[key])
            t.poly(M.entries[key], M0.entries[key])
        return values

    return _run("beta-zero", {"q": q, "N": N, "beta": beta}, mode, rel_tol, body)


def verify_hermite_inverse(q: Scalar, lo: int, hi: int,
                           rel_tol: float = DEFAULT_REL_TOL) -> VerificationReport:
    """L^0 M^0 = I = M^0 L^0, and forward substitution on L^0 reproduces M^0."""
    mode = q.mode

    def body(t: _Tally):
        L0, M0 = build_L0(q, lo, hi), build_M0(q, lo, hi)
        for P in (band_product(L0, M0), band_product(M0, L0)):
            for (m, n), p in P.entries.items():
                t.poly(p, _delta(mode, m == n))
        oracle = invert_unitriangular(L0)
        for key, p in M0.entries.items():
            t.poly(p, oracle.entries[key])

    return _run("hermite-inverse", {"q": q, "lo": lo, "hi": hi}, mode, rel_tol, body)
