"""q-Pochhammer symbols and terminating (basic) hypergeometric series."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import InvalidParameters, NegativeIndex, VanishingDenominatorFactor
from .scalar import Mode, Scalar, common_mode, one, scalar_pow, zero


def qpoch(a: Scalar, q: Scalar, n: int) -> Scalar:
    """(a;q)_n = (1 - a)(1 - aq)...(1 - aq^{n-1})."""
    if n < 0:
        raise NegativeIndex(f"q-Pochhammer index must be >= 0, got {n}")
    mode = common_mode(a, q)
    out = one(mode)
    term = a if isinstance(a, Scalar) else Scalar(a, mode)
    for _ in range(n):
        out = out * (1 - term)
        term = term * q
    return out


def qpoch_multi(params: Sequence[Scalar], q: Scalar, n: int) -> Scalar:
    """(a_1, ..., a_r; q)_n as a product of single symbols."""
    out = one(common_mode(q, *params))
    for a in params:
        out = out * qpoch(a, q, n)
    return out


def qpoch_factors(a: Scalar, q: Scalar, n: int) -> list[Scalar]:
    """The individual factors 1 - a q^j, j = 0..n-1."""
    if n < 0:
        raise NegativeIndex(f"q-Pochhammer index must be >= 0, got {n}")
    out = []
    term = a
    for _ in range(n):
        out.append(1 - term)
        term = term * q
    return out


def poch(a: Scalar, n: int) -> Scalar:
    """Rising factorial (a)_n = a(a+1)...(a+n-1)."""
    if n < 0:
        raise NegativeIndex(f"Pochhammer index must be >= 0, got {n}")
    out = one(a.mode)
    for j in range(n):
        out = out * (a + j)
    return out


def qbinomial(n: int, k: int, q: Scalar) -> Scalar:
    """Gaussian binomial coefficient (q;q)_n / ((q;q)_k (q;q)_{n-k})."""
    if k < 0 or k > n:
        return zero(q.mode)
    return qpoch(q, q, n) / (qpoch(q, q, k) * qpoch(q, q, n - k))


@dataclass(frozen=True)
class PhiSeries:
    """A terminating r+1 phi r series.

    ``n`` is the termination index: the sum runs over k = 0..n.  It is given
    explicitly by the caller since recognising q^{-n} among rational
    parameters is ambiguous.
    """

    upper: tuple[Scalar, ...]
    lower: tuple[Scalar, ...]
    q: Scalar
    z: Scalar
    n: int
    names: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        object.__setattr__(self, "upper", tuple(self.upper))
        object.__setattr__(self, "lower", tuple(self.lower))
        if self.n < 0:
            raise NegativeIndex("termination index must be >= 0")
        common_mode(self.q, self.z, *self.upper, *self.lower)
        if self.n > 0 and not self.has_termination_certificate():
            raise InvalidParameters(f"no upper parameter equals q^-{self.n}")

    @property
    def mode(self) -> Mode:
        return self.q.mode

    def has_termination_certificate(self) -> bool:
        """True when some upper parameter equals q^{-n} (exactly, or closely in Float mode)."""
        target = scalar_pow(self.q, -self.n)
        for a in self.upper:
            if self.mode is Mode.EXACT:
                if a == target:
                    return True
            elif abs(float(a) - float(target)) <= 1e-9 * max(1.0, abs(float(target))):
                return True
        return False

    def lower_label(self, i: int) -> str:
        if self.names and len(self.names) == len(self.upper) + len(self.lower):
            return self.names[len(self.upper) + i]
        return f"lower[{i}]"


def phi_terminating(series: PhiSeries) -> Scalar:
    """Sum_{k=0}^{n} prod (a;q)_k / prod (b;q)_k * z^k / (q;q)_k.

    Terms are built by their ratio, so every factor is touched once.  A
    lower factor 1 - b q^{k-1} that vanishes for some k <= n raises
    VanishingDenominatorFactor naming the parameter.
    """
    q, z = series.q, series.z
    mode = series.mode
    term = one(mode)
    total = one(mode)
    qk = one(mode)  # q^{k-1} at the top of each step
    for k in range(1, series.n + 1):
        num = one(mode)
        for a in series.upper:
            num = num * (1 - a * qk)
        den = 1 - qk * q
        for i, b in enumerate(series.lower):
            f = 1 - b * qk
            if f.is_zero():
                raise VanishingDenominatorFactor(
                    f"({series.lower_label(i)};q)_{k} with {series.lower_label(i)}={b}", k - 1)
            den = den * f
        if den.is_zero():
            raise VanishingDenominatorFactor(f"(q;q)_{k}", k - 1)
        term = term * num * z / den
        total = total + term
        qk = qk * q
    return total


def phi_bruteforce(series: PhiSeries) -> Scalar:
    """Same sum computed term by term from full q-Pochhammer products.

    Kept separate from :func:`phi_terminating` so each can check the other.
    """
    total = zero(series.mode)
    for k in range(series.n + 1):
        num = qpoch_multi(series.upper, series.q, k) * scalar_pow(series.z, k)
        den = qpoch_multi(series.lower, series.q, k) * qpoch(series.q, series.q, k)
        if den.is_zero():
            raise VanishingDenominatorFactor(f"lower product at k={k}", k)
        total = total + num / den
    return total


def is_balanced(series: PhiSeries) -> bool:
    """Balanced (Saalschützian): z = q and q * prod(upper) = prod(lower), r+1 phi r shape."""
    if len(series.upper) != len(series.lower) + 1:
        return False
    up = series.q
    for a in series.upper:
        up = up * a
    low = one(series.mode)
    for b in series.lower:
        low = low * b
    if series.mode is Mode.EXACT:
        return series.z == series.q and up == low
    tol = 1e-10
    return (abs(float(series.z) - float(series.q)) <= tol
            and abs(float(up) - float(low)) <= tol * max(1.0, abs(float(low))))


def hyp_terminating(upper: Sequence[Scalar], lower: Sequence[Scalar], z: Scalar,
                    n: int) -> Scalar:
    """Classical terminating pFq: Sum_{k=0}^{n} prod (a)_k / prod (b)_k * z^k / k!."""
    if n < 0:
        raise NegativeIndex("termination index must be >= 0")
    mode = common_mode(z, *upper, *lower)
    if not any(a == -n for a in upper):
        raise InvalidParameters(f"no upper parameter equals -{n}")
    term = one(mode)
    total = one(mode)
    for k in range(1, n + 1):
        num = one(mode)
        for a in upper:
            num = num * (a + (k - 1))
        den = one(mode) * k
        for i, b in enumerate(lower):
            f = b + (k - 1)
            if f.is_zero():
                raise VanishingDenominatorFactor(f"(lower[{i}])_{k} with lower[{i}]={b}", k - 1)
            den = den * f
        term = term * num * z / den
        total = total + term
    return total
