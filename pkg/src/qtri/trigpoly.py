"""Laurent polynomials in e^{i theta}, Chebyshev views, truncated t-series.

Every polynomial family in this package is a :class:`TrigPoly`: a dense
coefficient vector over e^{ik theta}, k = -n..n.  Products are plain
convolutions.  The real polynomial in x = cos(theta) is recovered through
the Chebyshev view, T_p(cos theta) = (e^{ip theta} + e^{-ip theta}) / 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import AsymmetricInput, MixedModeError, NonUnitConstantTerm
from .scalar import Mode, Scalar, one, scalar, scalar_close, scaled_residual, zero


class TrigPoly:
    """Sum_{k=-n}^{n} c_k e^{ik theta} with Scalar coefficients.

    ``degree`` is the nominal degree (the length of the stored window); the
    zero polynomial may carry any degree.  Equality ignores the nominal
    degree and compares coefficients after zero padding.
    """

    __slots__ = ("degree", "coeffs", "mode")

    def __init__(self, coeffs: Sequence[Scalar], mode: Mode | None = None):
        coeffs = tuple(coeffs)
        if len(coeffs) % 2 != 1:
            raise ValueError("a TrigPoly needs 2n+1 coefficients")
        if mode is None:
            mode = coeffs[0].mode
        for c in coeffs:
            if not isinstance(c, Scalar):
                raise TypeError("TrigPoly coefficients must be Scalars")
            if c.mode is not mode:
                raise MixedModeError("TrigPoly coefficients mix modes")
        self.degree = (len(coeffs) - 1) // 2
        self.coeffs = coeffs
        self.mode = mode

    @classmethod
    def _from_raw(cls, raw: list, mode: Mode) -> "TrigPoly":
        obj = object.__new__(cls)
        obj.degree = (len(raw) - 1) // 2
        obj.coeffs = tuple(Scalar._wrap(v, mode) for v in raw)
        obj.mode = mode
        return obj

    @classmethod
    def constant(cls, c, mode: Mode = Mode.EXACT) -> "TrigPoly":
        return cls([scalar(c, mode)], mode)

    @classmethod
    def zero(cls, mode: Mode = Mode.EXACT, degree: int = 0) -> "TrigPoly":
        return cls([zero(mode)] * (2 * degree + 1), mode)

    @classmethod
    def from_dict(cls, terms: dict[int, Scalar], mode: Mode) -> "TrigPoly":
        """Build from {k: coefficient of e^{ik theta}}."""
        n = max((abs(k) for k in terms), default=0)
        coeffs = [zero(mode)] * (2 * n + 1)
        for k, c in terms.items():
            coeffs[k + n] = coeffs[k + n] + c
        return cls(coeffs, mode)

    @classmethod
    def monomial(cls, k: int, c: Scalar) -> "TrigPoly":
        """c * e^{ik theta} (not symmetric unless k = 0)."""
        return cls.from_dict({k: c}, c.mode)

    def coeff(self, k: int) -> Scalar:
        if abs(k) > self.degree:
            return zero(self.mode)
        return self.coeffs[k + self.degree]

    def _raw(self) -> list:
        return [c.value for c in self.coeffs]

    def padded(self, degree: int) -> "TrigPoly":
        if degree < self.degree:
            raise ValueError("cannot pad to a smaller degree")
        pad = [zero(self.mode)] * (degree - self.degree)
        return TrigPoly(pad + list(self.coeffs) + pad, self.mode)

    def trimmed(self) -> "TrigPoly":
        """Drop outer coefficient pairs that are both exactly zero."""
        n = self.degree
        while n > 0 and self.coeffs[self.degree - n].is_zero() and self.coeffs[self.degree + n].is_zero():
            n -= 1
        return TrigPoly(self.coeffs[self.degree - n:self.degree + n + 1], self.mode)

    # predicates ------------------------------------------------------

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def is_symmetric(self) -> bool:
        n = self.degree
        return all(self.coeffs[n + k] == self.coeffs[n - k] for k in range(1, n + 1))

    def has_parity(self, n: int | None = None) -> bool:
        """Coefficients vanish at every k with k != n (mod 2)."""
        n = self.degree if n is None else n
        return all(self.coeff(k).is_zero() for k in range(-self.degree, self.degree + 1)
                   if (k - n) % 2)

    def is_constant(self) -> bool:
        return all(self.coeff(k).is_zero() for k in range(-self.degree, self.degree + 1) if k)

    # arithmetic ------------------------------------------------------

    def _check(self, other: "TrigPoly"):
        if other.mode is not self.mode:
            raise MixedModeError("TrigPoly arithmetic across modes")

    def __add__(self, other):
        if not isinstance(other, TrigPoly):
            return NotImplemented
        self._check(other)
        n = max(self.degree, other.degree)
        out = [zero(self.mode).value] * (2 * n + 1)
        for i, c in enumerate(self._raw()):
            out[i + n - self.degree] += c
        for i, c in enumerate(other._raw()):
            out[i + n - other.degree] += c
        return TrigPoly._from_raw(out, self.mode)

    def __neg__(self):
        return TrigPoly([-c for c in self.coeffs], self.mode)

    def __sub__(self, other):
        if not isinstance(other, TrigPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, TrigPoly):
            return tp_mul(self, other)
        if isinstance(other, (Scalar, int)):
            if isinstance(other, Scalar) and other.mode is not self.mode:
                raise MixedModeError("scaling a TrigPoly by a scalar of another mode")
            return TrigPoly([c * other for c in self.coeffs], self.mode)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (Scalar, int)):
            return TrigPoly([c / other for c in self.coeffs], self.mode)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, TrigPoly):
            return NotImplemented
        self._check(other)
        n = max(self.degree, other.degree)
        return all(self.coeff(k) == other.coeff(k) for k in range(-n, n + 1))

    __hash__ = None

    def close_to(self, other: "TrigPoly", rel_tol: float) -> bool:
        self._check(other)
        n = max(self.degree, other.degree)
        return all(scalar_close(self.coeff(k), other.coeff(k), rel_tol) for k in range(-n, n + 1))

    def residual(self, other: "TrigPoly") -> Scalar:
        """Largest coefficientwise residual (exact gap, or scaled float gap)."""
        self._check(other)
        n = max(self.degree, other.degree)
        worst = zero(self.mode)
        for k in range(-n, n + 1):
            r = scaled_residual(self.coeff(k), other.coeff(k))
            if r > worst:
                worst = r
        return worst

    def to_float(self) -> "TrigPoly":
        return TrigPoly([c.to_float() for c in self.coeffs], Mode.FLOAT)

    def __repr__(self):
        return f"TrigPoly(degree={self.degree}, coeffs=[{', '.join(map(str, self.coeffs))}])"

    # serialization ---------------------------------------------------

    def to_json(self) -> dict:
        return {"degree": self.degree, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict, mode: Mode | str = Mode.EXACT) -> "TrigPoly":
        mode = Mode.parse(mode)
        coeffs = [Scalar.parse(c, mode) for c in data["coeffs"]]
        if len(coeffs) != 2 * data["degree"] + 1:
            raise ValueError("coefficient count does not match degree")
        return cls(coeffs, mode)


def tp_mul(a: TrigPoly, b: TrigPoly) -> TrigPoly:
    """Laurent product: degree is deg a + deg b."""
    if a.mode is not b.mode:
        raise MixedModeError("TrigPoly product across modes")
    ra, rb = a._raw(), b._raw()
    out = [zero(a.mode).value] * (len(ra) + len(rb) - 1)
    for i, x in enumerate(ra):
        if x == 0:
            continue
        for j, y in enumerate(rb):
            out[i + j] += x * y
    return TrigPoly._from_raw(out, a.mode)


def tp_sum(polys: Iterable[TrigPoly], mode: Mode) -> TrigPoly:
    total = TrigPoly.zero(mode)
    for p in polys:
        total = total + p
    return total


@dataclass(frozen=True)
class ChebSeries:
    """Sum_p coeffs[p] * T_p(x)."""

    coeffs: tuple[Scalar, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1


def tp_to_cheb(p: TrigPoly) -> ChebSeries:
    """Chebyshev coefficients: T_0 gets c_0, T_k gets 2 c_k."""
    if not p.is_symmetric():
        raise AsymmetricInput("only symmetric Laurent polynomials are real polynomials in x")
    out = [p.coeff(0)] + [p.coeff(k) * 2 for k in range(1, p.degree + 1)]
    return ChebSeries(tuple(out))


def cheb_to_tp(c: ChebSeries) -> TrigPoly:
    mode = c.coeffs[0].mode
    terms = {0: c.coeffs[0]}
    for k in range(1, len(c.coeffs)):
        half = c.coeffs[k] / 2
        terms[k] = half
        terms[-k] = half
    return TrigPoly.from_dict(terms, mode)


def tp_eval(p: TrigPoly, x: Scalar) -> Scalar:
    """Value at x = cos(theta) via the recurrence T_{k+1} = 2x T_k - T_{k-1}."""
    cheb = tp_to_cheb(p).coeffs
    t_prev, t_cur = one(x.mode), x
    total = cheb[0] * t_prev
    for k in range(1, len(cheb)):
        total = total + cheb[k] * t_cur
        t_prev, t_cur = t_cur, 2 * x * t_cur - t_prev
    return total


class TruncSeries:
    """Power series Sum_{j=0}^{T} coeffs[j] t^j with TrigPoly coefficients.

    All products discard t-orders above ``order``.
    """

    __slots__ = ("order", "coeffs", "mode")

    def __init__(self, coeffs: Sequence[TrigPoly], order: int, mode: Mode | None = None):
        coeffs = list(coeffs)[:order + 1]
        if mode is None:
            mode = coeffs[0].mode if coeffs else Mode.EXACT
        while len(coeffs) < order + 1:
            coeffs.append(TrigPoly.zero(mode))
        for c in coeffs:
            if c.mode is not mode:
                raise MixedModeError("TruncSeries coefficients mix modes")
        self.order = order
        self.coeffs = tuple(coeffs)
        self.mode = mode

    @classmethod
    def one(cls, order: int, mode: Mode) -> "TruncSeries":
        return cls([TrigPoly.constant(1, mode)], order, mode)

    def __getitem__(self, j: int) -> TrigPoly:
        return self.coeffs[j]

    def __add__(self, other: "TruncSeries") -> "TruncSeries":
        order = min(self.order, other.order)
        return TruncSeries([self.coeffs[j] + other.coeffs[j] for j in range(order + 1)], order, self.mode)

    def __sub__(self, other: "TruncSeries") -> "TruncSeries":
        order = min(self.order, other.order)
        return TruncSeries([self.coeffs[j] - other.coeffs[j] for j in range(order + 1)], order, self.mode)

    def __mul__(self, other):
        if isinstance(other, TruncSeries):
            return ts_mul(self, other)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        order = min(self.order, other.order)
        return all(self.coeffs[j] == other.coeffs[j] for j in range(order + 1))

    __hash__ = None

    def __repr__(self):
        return f"TruncSeries(order={self.order}, coeffs={list(self.coeffs)!r})"


def ts_mul(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    if a.mode is not b.mode:
        raise MixedModeError("TruncSeries product across modes")
    order = min(a.order, b.order)
    out = []
    for j in range(order + 1):
        acc = TrigPoly.zero(a.mode)
        for i in range(j + 1):
            acc = acc + tp_mul(a.coeffs[i], b.coeffs[j - i])
        out.append(acc)
    return TruncSeries(out, order, a.mode)


def ts_inv(a: TruncSeries) -> TruncSeries:
    """Reciprocal series; the t^0 coefficient must be a nonzero constant."""
    a0 = a.coeffs[0]
    if not a0.is_constant() or a0.coeff(0).is_zero():
        raise NonUnitConstantTerm("t^0 coefficient must be a nonzero constant")
    inv0 = 1 / a0.coeff(0)
    out = [TrigPoly.constant(inv0, a.mode)]
    for j in range(1, a.order + 1):
        acc = TrigPoly.zero(a.mode)
        for i in range(1, j + 1):
            acc = acc + tp_mul(a.coeffs[i], out[j - i])
        out.append(acc * (-inv0))
    return TruncSeries(out, a.order, a.mode)


def qpoch_tseries(a: Scalar, sign: int, q: Scalar, order: int,
                  factors: int | None = None) -> TruncSeries:
    """(a t e^{i sign theta}; q)_J as a series in t, truncated at ``order``.

    With ``factors=None`` the infinite product is expanded exactly through
    Euler's identity (x;q)_inf = Sum_n (-1)^n q^{n(n-1)/2} x^n / (q;q)_n.
    With an integer J the finite product of J factors is multiplied out
    literally, which is the slow, independent route.
    """
    if sign not in (1, -1, 0):
        raise ValueError("sign must be -1, 0 or 1")
    mode = q.mode
    if factors is None:
        coeffs = []
        qq = one(mode)
        qpow = one(mode)   # q^{n(n-1)/2}
        apow = one(mode)
        for n in range(order + 1):
            if n:
                qq = qq * (1 - q ** n)
                qpow = qpow * q ** (n - 1)
                apow = apow * a
            c = qpow * apow / qq
            if n % 2:
                c = -c
            coeffs.append(TrigPoly.monomial(sign * n, c))
        return TruncSeries(coeffs, order, mode)
    out = TruncSeries.one(order, mode)
    for j in range(factors):
        factor = TruncSeries([TrigPoly.constant(1, mode),
                              TrigPoly.monomial(sign, -(a * q ** j))], order, mode)
        out = ts_mul(out, factor)
    return out


def qpoch_pair_tseries(a: Scalar, q: Scalar, order: int, factors: int | None = None) -> TruncSeries:
    """(a t e^{i theta}, a t e^{-i theta}; q)_J, symmetric in theta."""
    return ts_mul(qpoch_tseries(a, 1, q, order, factors), qpoch_tseries(a, -1, q, order, factors))
