"""q-Racah polynomials and the degenerate (beta = 1) orthogonality sum."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import DegenerateCentral, InvalidParameters, VanishingDenominatorFactor
from .qseries import PhiSeries, phi_terminating, qpoch_factors
from .scalar import Mode, Scalar, common_mode, one, scalar_close, scalar_pow, zero


class Termination(enum.Enum):
    """Which lower parameter equals q^{-N}."""

    ALPHA = "alpha"            # q alpha = q^{-N}
    BETA_DELTA = "beta_delta"  # beta delta q = q^{-N}
    GAMMA = "gamma"            # gamma q = q^{-N}


@dataclass(frozen=True)
class RacahParams:
    alpha: Scalar
    beta: Scalar
    gamma: Scalar
    delta: Scalar
    N: int
    q: Scalar
    termination: Termination = Termination.ALPHA

    def __post_init__(self):
        if self.N < 0:
            raise InvalidParameters("N must be >= 0")
        common_mode(self.alpha, self.beta, self.gamma, self.delta, self.q)
        target = scalar_pow(self.q, -self.N)
        value = {
            Termination.ALPHA: self.q * self.alpha,
            Termination.BETA_DELTA: self.beta * self.delta * self.q,
            Termination.GAMMA: self.gamma * self.q,
        }[self.termination]
        if not scalar_close(value, target, 1e-9):
            raise InvalidParameters(
                f"termination {self.termination.value} requires it to equal q^-{self.N}")

    @classmethod
    def degenerate(cls, gamma: Scalar, delta: Scalar, N: int, q: Scalar) -> "RacahParams":
        """alpha = q^{-N-1}, beta = 1: the non-positive weight system."""
        return cls(scalar_pow(q, -N - 1), one(q.mode), gamma, delta, N, q, Termination.ALPHA)

    @property
    def mode(self) -> Mode:
        return self.q.mode

    def is_degenerate(self) -> bool:
        return (self.termination is Termination.ALPHA and self.beta == 1)

    def mu(self, x: int) -> Scalar:
        """mu(x) = q^{-x} + gamma delta q^{x+1}."""
        return scalar_pow(self.q, -x) + self.gamma * self.delta * scalar_pow(self.q, x + 1)


def racah_series(params: RacahParams, n: int, x: int) -> PhiSeries:
    """The 4phi3 defining R_n(mu(x)), truncated at min(n, x)."""
    if not (0 <= n <= params.N and 0 <= x <= params.N):
        raise InvalidParameters(f"need 0 <= n, x <= N={params.N}, got n={n}, x={x}")
    a, b, g, d, q = params.alpha, params.beta, params.gamma, params.delta, params.q
    upper = (scalar_pow(q, -n), a * b * scalar_pow(q, n + 1), scalar_pow(q, -x),
             g * d * scalar_pow(q, x + 1))
    lower = (a * q, b * d * q, g * q)
    names = ("q^-n", "alpha beta q^(n+1)", "q^-x", "gamma delta q^(x+1)",
             "alpha q", "beta delta q", "gamma q")
    return PhiSeries(upper, lower, q, q, min(n, x), names)


def racah_eval(params: RacahParams, n: int, x: int) -> Scalar:
    """R_n(mu(x); alpha, beta, gamma, delta; q)."""
    return phi_terminating(racah_series(params, n, x))


def _checked_product(factors, label: str, x: int) -> Scalar:
    out = None
    for j, f in enumerate(factors):
        if f.is_zero():
            raise VanishingDenominatorFactor(f"{label} at x={x}", j)
        out = f if out is None else out * f
    return out


def racah_weight(params: RacahParams, x: int) -> Scalar:
    """Weight of the degenerate system at x.

    w(x) = (q^{-N}, gamma delta q; q)_x / (q, gamma delta q^{N+2}; q)_x
           * (1 - gamma delta q^{2x+1}) / (1 - gamma delta q) * q^{N x}
    """
    if not params.is_degenerate():
        raise InvalidParameters("weights are defined for alpha = q^{-N-1}, beta = 1 only")
    if not 0 <= x <= params.N:
        raise InvalidParameters(f"x must lie in 0..{params.N}")
    q, N = params.q, params.N
    gd = params.gamma * params.delta
    central = 1 - gd * q
    if central.is_zero():
        raise DegenerateCentral("1 - gamma delta q")
    mode = params.mode
    num = one(mode)
    for f in qpoch_factors(scalar_pow(q, -N), q, x) + qpoch_factors(gd * q, q, x):
        num = num * f
    den = one(mode)
    if x:
        den = _checked_product(qpoch_factors(q, q, x), "(q;q)_x", x)
        den = den * _checked_product(qpoch_factors(gd * scalar_pow(q, N + 2), q, x),
                                     "(gamma delta q^(N+2);q)_x", x)
    return num / den * (1 - gd * scalar_pow(q, 2 * x + 1)) / central * scalar_pow(q, N * x)


def racah_orthogonality_sum(params: RacahParams, m: int) -> Scalar:
    """Sum_{x=0}^{N} w(x) R_m(mu(x)); equals delta_{m,0} delta_{N,0} off the excluded gamma, delta."""
    if not params.is_degenerate():
        raise InvalidParameters("orthogonality sum needs the degenerate parameters")
    q = params.q
    for j in range(1, params.N + 1):
        qj = scalar_pow(q, -j)
        for name, value in (("gamma", params.gamma), ("delta", params.delta)):
            if value == qj:
                raise InvalidParameters(f"{name} = q^-{j} is excluded; h_0 is not determined there")
    total = zero(params.mode)
    for x in range(params.N + 1):
        total = total + racah_weight(params, x) * racah_eval(params, m, x)
    return total
