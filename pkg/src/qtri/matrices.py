"""Lower triangular matrices of q-ultraspherical polynomials and their inverses.

Matrices are finite windows [lo, hi] of doubly infinite lower triangular
matrices.  For lower triangular A, B the (m, n) entry of AB only involves
indices n <= k <= m, so a window product is exact on the whole window.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Callable, Iterator, Sequence

from .errors import (ExcludedParameter, InvalidParameters, MixedModeError, NearSingular,
                     NonUnitDiagonal, VanishingDenominatorFactor, WindowMismatch)
from .polyfamilies import c_hermite, c_hermite_qinv, c_ultra
from .qseries import PhiSeries, phi_terminating, qpoch
from .scalar import Mode, Scalar, common_mode, one, scalar_pow, zero
from .trigpoly import TrigPoly, tp_mul

NEAR_SINGULAR = 1e-12


@dataclass(frozen=True)
class TriMatrix:
    """Entries (m, n) with lo <= n <= m <= hi; above the diagonal is zero."""

    lo: int
    hi: int
    entries: dict
    mode: Mode

    def __post_init__(self):
        if self.hi < self.lo:
            raise InvalidParameters("window needs lo <= hi")
        for (m, n), p in self.entries.items():
            if not (self.lo <= n <= m <= self.hi):
                raise InvalidParameters(f"entry ({m}, {n}) outside the lower triangle of the window")
            if p.mode is not self.mode:
                raise MixedModeError("TriMatrix entries mix modes")

    @classmethod
    def build(cls, lo: int, hi: int, entry: Callable[[int, int], TrigPoly], mode: Mode) -> "TriMatrix":
        return cls(lo, hi, {(m, n): entry(m, n) for m in range(lo, hi + 1) for n in range(lo, m + 1)},
                   mode)

    @classmethod
    def identity(cls, lo: int, hi: int, mode: Mode = Mode.EXACT) -> "TriMatrix":
        return cls.build(lo, hi, lambda m, n: TrigPoly.constant(int(m == n), mode), mode)

    def __getitem__(self, index: tuple[int, int]) -> TrigPoly:
        m, n = index
        if not (self.lo <= n <= self.hi and self.lo <= m <= self.hi):
            raise IndexError(f"({m}, {n}) outside window [{self.lo}, {self.hi}]")
        if n > m:
            return TrigPoly.zero(self.mode)
        return self.entries[(m, n)]

    def indices(self) -> Iterator[tuple[int, int]]:
        for m in range(self.lo, self.hi + 1):
            for n in range(self.lo, m + 1):
                yield m, n

    @property
    def size(self) -> int:
        return self.hi - self.lo + 1

    def is_unitriangular(self) -> bool:
        one_ = TrigPoly.constant(1, self.mode)
        return all(self[m, m] == one_ for m in range(self.lo, self.hi + 1))

    def is_identity(self) -> bool:
        return all(p == TrigPoly.constant(int(m == n), self.mode) for (m, n), p in self.entries.items())

    def identity_residual(self) -> Scalar:
        """Largest coefficient residual against the identity."""
        worst = zero(self.mode)
        for (m, n), p in self.entries.items():
            r = p.residual(TrigPoly.constant(int(m == n), self.mode))
            if r > worst:
                worst = r
        return worst

    def restrict(self, lo: int, hi: int) -> "TriMatrix":
        if lo < self.lo or hi > self.hi:
            raise WindowMismatch("restriction must lie inside the window")
        return TriMatrix(lo, hi, {k: v for k, v in self.entries.items()
                                  if lo <= k[1] and k[0] <= hi}, self.mode)

    def to_float(self) -> "TriMatrix":
        return TriMatrix(self.lo, self.hi, {k: v.to_float() for k, v in self.entries.items()},
                         Mode.FLOAT)

    def __eq__(self, other):
        if not isinstance(other, TriMatrix):
            return NotImplemented
        return (self.lo, self.hi) == (other.lo, other.hi) and all(
            self.entries[k] == other.entries[k] for k in self.entries)

    __hash__ = None

    def to_json(self) -> dict:
        return {"lo": self.lo, "hi": self.hi,
                "entries": [{"m": m, "n": n, "poly": self.entries[(m, n)].to_json()}
                            for m, n in self.indices()]}

    @classmethod
    def from_json(cls, data: dict, mode: Mode | str = Mode.EXACT) -> "TriMatrix":
        mode = Mode.parse(mode)
        entries = {(e["m"], e["n"]): TrigPoly.from_json(e["poly"], mode) for e in data["entries"]}
        return cls(data["lo"], data["hi"], entries, mode)

    def csv_rows(self) -> Iterator[tuple[int, int, int, str]]:
        """(m, n, k, coefficient of e^{ik theta}) for every stored coefficient."""
        for m, n in self.indices():
            p = self.entries[(m, n)]
            for k in range(-p.degree, p.degree + 1):
                yield m, n, k, str(p.coeff(k))


# ---------------------------------------------------------------------------
# exclusion-checked denominators


def checked_qpoch(a: Scalar, q: Scalar, length: int, label: str, m: int, n: int) -> Scalar:
    """(a;q)_length that must not vanish.

    Exact zero (either mode) raises ExcludedParameter; in Float mode a factor
    smaller than 1e-12 in magnitude only warns with NearSingular.
    """
    out = one(q.mode)
    term = a
    for j in range(length):
        f = 1 - term
        if f.is_zero():
            raise ExcludedParameter(label, m, n, j)
        if f.mode is Mode.FLOAT and abs(f.value) < NEAR_SINGULAR:
            warnings.warn(f"{label}: factor j={j} at (m={m}, n={n}) is {f.value:.3e}",
                          NearSingular, stacklevel=3)
        out = out * f
        term = term * q
    return out


def _nonzero_beta(beta: Scalar):
    if beta.is_zero():
        raise InvalidParameters("beta must be nonzero")


# ---------------------------------------------------------------------------
# matrix families


def L_entry(m: int, n: int, beta: Scalar, q: Scalar) -> TrigPoly:
    """C_{m-n}(x; beta q^n | q) / (beta^2 q^{2n}; q)_{m-n}."""
    den = checked_qpoch(beta * beta * scalar_pow(q, 2 * n), q, m - n,
                        "(beta^2 q^(2n);q)_(m-n)", m, n)
    return c_ultra(m - n, beta * scalar_pow(q, n), q) / den


def M_entry(m: int, n: int, beta: Scalar, q: Scalar) -> TrigPoly:
    """beta^{m-n} q^{(m-1)(m-n)} C_{m-n}(x; beta^{-1} q^{1-m} | q) / (beta^2 q^{m+n-1}; q)_{m-n}."""
    den = checked_qpoch(beta * beta * scalar_pow(q, m + n - 1), q, m - n,
                        "(beta^2 q^(m+n-1);q)_(m-n)", m, n)
    pre = scalar_pow(beta, m - n) * scalar_pow(q, (m - 1) * (m - n))
    return c_ultra(m - n, scalar_pow(q, 1 - m) / beta, q) * (pre / den)


def build_L(beta: Scalar, q: Scalar, lo: int, hi: int) -> TriMatrix:
    mode = common_mode(beta, q)
    _nonzero_beta(beta)
    return TriMatrix.build(lo, hi, lambda m, n: L_entry(m, n, beta, q), mode)


def build_M(beta: Scalar, q: Scalar, lo: int, hi: int) -> TriMatrix:
    mode = common_mode(beta, q)
    _nonzero_beta(beta)
    return TriMatrix.build(lo, hi, lambda m, n: M_entry(m, n, beta, q), mode)


def L0_entry(d: int, q: Scalar) -> TrigPoly:
    """H_d(x|q) / (q;q)_d for d = m - n."""
    return c_hermite(d, q) / qpoch(q, q, d)


def M0_entry(d: int, q: Scalar) -> TrigPoly:
    """(-1)^d q^{d(d-1)/2} H_d(x|q^{-1}) / (q;q)_d."""
    pre = scalar_pow(q, d * (d - 1) // 2) / qpoch(q, q, d)
    if d % 2:
        pre = -pre
    return c_hermite_qinv(d, q) * pre


def _check_unit_interval(q: Scalar):
    if not (0 < q < 1):
        raise InvalidParameters(f"need 0 < q < 1, got {q}")


def build_L0(q: Scalar, lo: int, hi: int) -> TriMatrix:
    _check_unit_interval(q)
    cache = {}
    return TriMatrix.build(lo, hi, lambda m, n: cache.setdefault(m - n, L0_entry(m - n, q)), q.mode)


def build_M0(q: Scalar, lo: int, hi: int) -> TriMatrix:
    _check_unit_interval(q)
    cache = {}
    return TriMatrix.build(lo, hi, lambda m, n: cache.setdefault(m - n, M0_entry(m - n, q)), q.mode)


def build_example42(q: Scalar, N: int) -> tuple[TriMatrix, TriMatrix]:
    """The base-q^2 matrix L and its stated inverse on the window [0, N].

    L_{m,n} = q^{m-n} (q^2;q^2)_m (q^2;q^2)_{2n+1} / ((q^2;q^2)_{m+n+1} (q^2;q^2)_n)
              * C_{m-n}(x; q^{2n+2} | q^2)
    Linv_{m,n} = q^{(2m+1)(m-n)} (q^2;q^2)_m (q^2;q^2)_{m+n} / ((q^2;q^2)_{2m} (q^2;q^2)_n)
              * C_{m-n}(x; q^{-2m} | q^2)
    """
    _check_unit_interval(q)
    if N < 0:
        raise InvalidParameters("N must be >= 0")
    p = q * q
    pp = [qpoch(p, p, j) for j in range(2 * N + 2)]

    def left(m, n):
        pre = scalar_pow(q, m - n) * pp[m] * pp[2 * n + 1] / (pp[m + n + 1] * pp[n])
        return c_ultra(m - n, scalar_pow(q, 2 * n + 2), p) * pre

    def right(m, n):
        pre = scalar_pow(q, (2 * m + 1) * (m - n)) * pp[m] * pp[m + n] / (pp[2 * m] * pp[n])
        return c_ultra(m - n, scalar_pow(q, -2 * m), p) * pre

    return TriMatrix.build(0, N, left, q.mode), TriMatrix.build(0, N, right, q.mode)


def example42_diagonal(q: Scalar, lo: int, hi: int) -> dict[int, Scalar]:
    """D_n = q^n (q^2;q^2)_n, the conjugator relating the base-q^2 matrix to build_L(q^2, q^2).

    Read off from the prefactor ratio; together with conjugate_diagonal it
    rebuilds both matrices of build_example42 from build_L / build_M.
    """
    p = q * q
    return {n: scalar_pow(q, n) * qpoch(p, p, n) for n in range(lo, hi + 1)}


def conjugate_diagonal(A: TriMatrix, d: dict[int, Scalar]) -> TriMatrix:
    """D A D^{-1}: entry (m, n) scaled by d_m / d_n."""
    return TriMatrix(A.lo, A.hi, {(m, n): p * (d[m] / d[n]) for (m, n), p in A.entries.items()},
                     A.mode)


# ---------------------------------------------------------------------------
# products and inversion


def band_product(A: TriMatrix, B: TriMatrix) -> TriMatrix:
    """(AB)_{m,n} = Sum_{k=n}^{m} A_{m,k} B_{k,n}."""
    if A.mode is not B.mode:
        raise MixedModeError("band_product across modes")
    if (A.lo, A.hi) != (B.lo, B.hi):
        raise WindowMismatch(f"windows [{A.lo},{A.hi}] and [{B.lo},{B.hi}] differ")
    entries = {}
    for m, n in A.indices():
        acc = TrigPoly.zero(A.mode)
        for k in range(n, m + 1):
            acc = acc + tp_mul(A.entries[(m, k)], B.entries[(k, n)])
        entries[(m, n)] = acc
    return TriMatrix(A.lo, A.hi, entries, A.mode)


def invert_unitriangular(A: TriMatrix) -> TriMatrix:
    """Forward substitution: B_{m,n} = -Sum_{k=n}^{m-1} A_{m,k} B_{k,n}, B_{n,n} = 1.

    Needs no division at all, hence no polynomial division either.
    """
    if not A.is_unitriangular():
        raise NonUnitDiagonal("forward substitution here needs a unit diagonal")
    B = {}
    for n in range(A.lo, A.hi + 1):
        B[(n, n)] = TrigPoly.constant(1, A.mode)
        for m in range(n + 1, A.hi + 1):
            acc = TrigPoly.zero(A.mode)
            for k in range(n, m):
                acc = acc + tp_mul(A.entries[(m, k)], B[(k, n)])
            B[(m, n)] = -acc
    return TriMatrix(A.lo, A.hi, B, A.mode)


# ---------------------------------------------------------------------------
# the key lemmas


def lemma32_sum(m: int, n: int, beta: Scalar, q: Scalar) -> TrigPoly:
    """Sum_{k=0}^{m-n} (1 - b^2 q^{2n+2k-1}) / (b^2 q^{2n+k-1}; q)_{m-n+1}
    * b^k q^{k(k+n-1)} C_{m-n-k}(x; b q^{k+n} | q) C_k(x; b^{-1} q^{1-k-n} | q),  b = beta.

    The factor j = k of the denominator equals the numerator and is cancelled
    before dividing, so the excluded set is exactly
    beta^2 in {q^{-2m+1}, ..., q^{-2n}}.
    """
    if n > m:
        raise InvalidParameters("lemma needs n <= m")
    mode = common_mode(beta, q)
    _nonzero_beta(beta)
    b2 = beta * beta
    d = m - n
    total = TrigPoly.zero(mode)
    for k in range(d + 1):
        den = one(mode)
        base = b2 * scalar_pow(q, 2 * n + k - 1)
        for j in range(d + 1):
            if j == k:
                continue
            f = 1 - base * scalar_pow(q, j)
            if f.is_zero():
                raise ExcludedParameter("(beta^2 q^(2n+k-1);q)_(m-n+1)", m, n, j)
            den = den * f
        pre = scalar_pow(beta, k) * scalar_pow(q, k * (k + n - 1)) / den
        # parameter beta q^{k+n}: with beta q^k the sum is nonzero once n != 0
        left = c_ultra(d - k, beta * scalar_pow(q, k + n), q)
        right = c_ultra(k, scalar_pow(q, 1 - k - n) / beta, q)
        total = total + tp_mul(left, right) * pre
    return total


def lemma31_sum(n: int, alphas: Sequence[Scalar], betas: Sequence[Scalar],
                cs: Sequence[Scalar], q: Scalar) -> TrigPoly:
    """Sum_{k=0}^{n} c(k) C_{n-k}(x; alpha_k | q) C_k(x; beta_k | q), expanded directly."""
    if not len(alphas) == len(betas) == len(cs) == n + 1:
        raise InvalidParameters("need n+1 values of alpha_k, beta_k and c(k)")
    mode = common_mode(q, *alphas, *betas, *cs)
    total = TrigPoly.zero(mode)
    for k in range(n + 1):
        total = total + tp_mul(c_ultra(n - k, alphas[k], q), c_ultra(k, betas[k], q)) * cs[k]
    return total


def _ratio(a: Scalar, q: Scalar, j: int) -> Scalar:
    """(a;q)_j / (q;q)_j."""
    return qpoch(a, q, j) / qpoch(q, q, j)


def dp_first_series(n: int, p: int, k: int, a: Scalar, b: Scalar, q: Scalar) -> PhiSeries:
    """4phi3 of the branch 0 <= k <= n-p, argument q^2 / (a b)."""
    names = ("q^-p", "alpha q^(n-p-k)", "q^-k", "beta", "q^(1-p)/alpha", "q^(1-k)/beta",
             "q^(n-p-k+1)")
    upper = (scalar_pow(q, -p), a * scalar_pow(q, n - p - k), scalar_pow(q, -k), b)
    lower = (scalar_pow(q, 1 - p) / a, scalar_pow(q, 1 - k) / b, scalar_pow(q, n - p - k + 1))
    return PhiSeries(upper, lower, q, q * q / (a * b), min(p, k), names)


def dp_second_series(n: int, p: int, k: int, a: Scalar, b: Scalar, q: Scalar) -> PhiSeries:
    """4phi3 of the branch n-p < k <= n, argument q^2 / (a b)."""
    names = ("q^(k-n)", "q^(p-n)", "alpha", "beta q^(k+p-n)", "q^(1-n+k)/alpha",
             "q^(k+p-n+1)", "q^(1-n+p)/beta")
    upper = (scalar_pow(q, k - n), scalar_pow(q, p - n), a, b * scalar_pow(q, k + p - n))
    lower = (scalar_pow(q, 1 - n + k) / a, scalar_pow(q, k + p - n + 1),
             scalar_pow(q, 1 - n + p) / b)
    return PhiSeries(upper, lower, q, q * q / (a * b), min(n - k, n - p), names)


def dp_coefficients(n: int, alphas: Sequence[Scalar], betas: Sequence[Scalar],
                    cs: Sequence[Scalar], q: Scalar) -> list[Scalar]:
    """Coefficients d(0..n) of e^{i(n-2p) theta} in lemma31_sum, via the two-branch 4phi3 formula.

    Parameters must be generic: alpha_k, beta_k nonzero and the 4phi3
    lower parameters off q^{-j}; otherwise VanishingDenominatorFactor.
    """
    if not len(alphas) == len(betas) == len(cs) == n + 1:
        raise InvalidParameters("need n+1 values of alpha_k, beta_k and c(k)")
    mode = common_mode(q, *alphas, *betas, *cs)
    for k in range(n + 1):
        if alphas[k].is_zero() or betas[k].is_zero():
            raise VanishingDenominatorFactor(f"alpha_{k} * beta_{k} (argument q^2/(alpha beta))", k)
    out = []
    for p in range(n + 1):
        d = zero(mode)
        for k in range(n - p + 1):
            a, b = alphas[k], betas[k]
            pre = _ratio(a, q, p) * _ratio(a, q, n - p - k) * _ratio(b, q, k)
            d = d + cs[k] * pre * phi_terminating(dp_first_series(n, p, k, a, b, q))
        for k in range(n - p + 1, n + 1):
            a, b = alphas[k], betas[k]
            pre = _ratio(a, q, n - k) * _ratio(b, q, p - n + k) * _ratio(b, q, n - p)
            d = d + cs[k] * pre * phi_terminating(dp_second_series(n, p, k, a, b, q))
        out.append(d)
    return out


def lemma32_parameters(m: int, n: int, beta: Scalar, q: Scalar):
    """(alpha_k, beta_k, c(k)) that turn lemma31_sum of degree m-n into lemma32_sum."""
    d = m - n
    b2 = beta * beta
    alphas, betas, cs = [], [], []
    for k in range(d + 1):
        alphas.append(beta * scalar_pow(q, k + n))
        betas.append(scalar_pow(q, 1 - k - n) / beta)
        den = one(beta.mode)
        base = b2 * scalar_pow(q, 2 * n + k - 1)
        for j in range(d + 1):
            if j != k:
                f = 1 - base * scalar_pow(q, j)
                if f.is_zero():
                    raise ExcludedParameter("(beta^2 q^(2n+k-1);q)_(m-n+1)", m, n, j)
                den = den * f
        cs.append(scalar_pow(beta, k) * scalar_pow(q, k * (k + n - 1)) / den)
    return alphas, betas, cs
