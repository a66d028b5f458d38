"""Continuous q-ultraspherical, q-Hermite, q^{-1}-Hermite and Gegenbauer polynomials.

All four are built from their explicit e^{i(n-2k) theta} expansions.
"""

from __future__ import annotations

from .errors import InvalidParameters
from .qseries import qpoch
from .scalar import Scalar, common_mode, one, zero
from .trigpoly import TrigPoly


def _check_base(q: Scalar):
    # (q;q)_k vanishes only at roots of unity; for real rational q that means +-1
    if q.is_zero() or q == 1 or q == -1:
        raise InvalidParameters(f"base q={q} makes (q;q)_k vanish")


def _symmetric_expansion(n: int, weights) -> TrigPoly:
    """Place weights[k] on e^{i(n-2k) theta}."""
    mode = weights[0].mode
    coeffs = [zero(mode)] * (2 * n + 1)
    for k, w in enumerate(weights):
        coeffs[(n - 2 * k) + n] = w
    return TrigPoly(coeffs, mode)


def c_ultra(n: int, beta: Scalar, q: Scalar) -> TrigPoly:
    """C_n(x; beta | q) = Sum_k (beta;q)_k (beta;q)_{n-k} / ((q;q)_k (q;q)_{n-k}) e^{i(n-2k) theta}.

    Defined for every beta; q may be any real base other than 0 and +-1, so
    base 1/q > 1 works as well.
    """
    if n < 0:
        raise InvalidParameters("degree must be >= 0")
    common_mode(beta, q)
    _check_base(q)
    # ratios (beta;q)_k / (q;q)_k for k = 0..n
    ratio = [one(q.mode)]
    bq = beta
    qq = q
    for _ in range(n):
        ratio.append(ratio[-1] * (1 - bq) / (1 - qq))
        bq = bq * q
        qq = qq * q
    return _symmetric_expansion(n, [ratio[k] * ratio[n - k] for k in range(n + 1)])


def c_hermite(n: int, q: Scalar) -> TrigPoly:
    """H_n(x|q) = Sum_k (q;q)_n / ((q;q)_k (q;q)_{n-k}) e^{i(n-2k) theta}."""
    if n < 0:
        raise InvalidParameters("degree must be >= 0")
    _check_base(q)
    qq = [qpoch(q, q, k) for k in range(n + 1)]
    return _symmetric_expansion(n, [qq[n] / (qq[k] * qq[n - k]) for k in range(n + 1)])


def c_hermite_qinv(n: int, q: Scalar) -> TrigPoly:
    """H_n(x|q^{-1}): the q-Hermite sum with base 1/q.

    The base 1/q is formed once as an exact reciprocal, so in Exact mode
    every (1/q; 1/q)_k is an exact rational.
    """
    _check_base(q)
    return c_hermite(n, 1 / q)


def gegenbauer(n: int, alpha: Scalar) -> TrigPoly:
    """C_n^{(alpha)}(x) = Sum_k (alpha)_k (alpha)_{n-k} / (k! (n-k)!) e^{i(n-2k) theta}."""
    if n < 0:
        raise InvalidParameters("degree must be >= 0")
    ratio = [one(alpha.mode)]
    for k in range(1, n + 1):
        ratio.append(ratio[-1] * (alpha + (k - 1)) / k)
    return _symmetric_expansion(n, [ratio[k] * ratio[n - k] for k in range(n + 1)])

