"""Dual-mode scalars: exact rationals or IEEE doubles.

A :class:`Scalar` is immutable and remembers its :class:`Mode`.  Arithmetic
between two scalars of different modes raises :class:`MixedModeError`;
plain Python integers are accepted on either side because they are exact in
both modes.  Exact values are backed by ``gmpy2.mpq``, which always stores
the fraction in lowest terms with a positive denominator.
"""

from __future__ import annotations

import enum
import math
import numbers
from fractions import Fraction

from gmpy2 import mpq

from .errors import MixedModeError, ScalarZeroDivision, ZeroToNegativePower

DEFAULT_REL_TOL = 1e-10


class Mode(enum.Enum):
    EXACT = "exact"
    FLOAT = "float"

    @classmethod
    def parse(cls, text: "str | Mode") -> "Mode":
        if isinstance(text, Mode):
            return text
        return cls(text.strip().lower())


def _raw(value, mode: Mode):
    if mode is Mode.EXACT:
        if isinstance(value, float):
            raise MixedModeError("float value given for an exact scalar")
        if isinstance(value, Fraction):
            return mpq(value.numerator, value.denominator)
        return mpq(value)
    return float(value)


class Scalar:
    __slots__ = ("value", "mode")

    def __init__(self, value, mode: Mode = Mode.EXACT):
        if isinstance(value, Scalar):
            if value.mode is not mode:
                raise MixedModeError(f"cannot reinterpret {value.mode.value} scalar as {mode.value}")
            value = value.value
        object.__setattr__(self, "mode", mode)
        object.__setattr__(self, "value", _raw(value, mode))

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    def __reduce__(self):
        return _restore, (self.value, self.mode)

    @classmethod
    def _wrap(cls, value, mode: Mode) -> "Scalar":
        # trusted constructor, value already has the right backing type
        obj = object.__new__(cls)
        object.__setattr__(obj, "value", value)
        object.__setattr__(obj, "mode", mode)
        return obj

    @classmethod
    def parse(cls, text: str, mode: "Mode | str" = Mode.EXACT) -> "Scalar":
        """Parse ``"p/q"``, an integer or a decimal literal.

        Decimals are read exactly in Exact mode (``"0.3"`` becomes 3/10).
        """
        mode = Mode.parse(mode)
        text = text.strip()
        try:
            frac = Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a number: {text!r}") from exc
        if mode is Mode.EXACT:
            return cls(frac, mode)
        return cls(float(frac), mode)

    # conversions -----------------------------------------------------

    def is_exact(self) -> bool:
        return self.mode is Mode.EXACT

    def is_zero(self) -> bool:
        return self.value == 0

    def to_float(self) -> "Scalar":
        return Scalar._wrap(float(self.value), Mode.FLOAT)

    def to_mode(self, mode: Mode) -> "Scalar":
        if mode is self.mode:
            return self
        if mode is Mode.FLOAT:
            return self.to_float()
        raise MixedModeError("a float scalar cannot be made exact")

    def __float__(self) -> float:
        return float(self.value)

    def as_fraction(self) -> Fraction:
        if self.mode is not Mode.EXACT:
            raise MixedModeError("float scalar has no exact fraction")
        return Fraction(int(self.value.numerator), int(self.value.denominator))

    def __str__(self) -> str:
        if self.mode is Mode.EXACT:
            return str(self.value)
        return repr(self.value)

    def __repr__(self) -> str:
        return f"Scalar({str(self)!r}, {self.mode.value})"

    # arithmetic ------------------------------------------------------

    def _other(self, other):
        if isinstance(other, Scalar):
            if other.mode is not self.mode:
                raise MixedModeError(
                    f"mixed-mode arithmetic: {self.mode.value} with {other.mode.value}")
            return other.value
        if isinstance(other, numbers.Integral) and not isinstance(other, bool):
            return other
        if isinstance(other, (float, Fraction, numbers.Number)):
            raise MixedModeError(f"refusing to coerce {type(other).__name__} into a Scalar")
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Scalar._wrap(self.value + o, self.mode)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Scalar._wrap(self.value - o, self.mode)

    def __rsub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Scalar._wrap(o - self.value, self.mode)

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Scalar._wrap(self.value * o, self.mode)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        if o == 0:
            raise ScalarZeroDivision(f"division of {self} by zero")
        return Scalar._wrap(self.value / o, self.mode)

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        if self.value == 0:
            raise ScalarZeroDivision(f"division of {other} by zero")
        if self.mode is Mode.EXACT:
            return Scalar._wrap(mpq(o) / self.value, self.mode)
        return Scalar._wrap(o / self.value, self.mode)

    def __neg__(self):
        return Scalar._wrap(-self.value, self.mode)

    def __pos__(self):
        return self

    def __abs__(self):
        return Scalar._wrap(abs(self.value), self.mode)

    def __pow__(self, exp):
        return scalar_pow(self, exp)

    def __eq__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self.value == o

    def __hash__(self):
        return hash(self.value)

    def __lt__(self, other):
        return self.value < self._other(other)

    def __le__(self, other):
        return self.value <= self._other(other)

    def __gt__(self, other):
        return self.value > self._other(other)

    def __ge__(self, other):
        return self.value >= self._other(other)

    def __bool__(self):
        return self.value != 0


def _restore(value, mode: Mode) -> Scalar:
    return Scalar._wrap(value, mode)


def scalar(value, mode: "Mode | str" = Mode.EXACT) -> Scalar:
    """Coerce ``value`` (Scalar, int, Fraction, float or string) to a Scalar."""
    mode = Mode.parse(mode)
    if isinstance(value, Scalar):
        return value.to_mode(mode)
    if isinstance(value, str):
        return Scalar.parse(value, mode)
    if mode is Mode.FLOAT:
        return Scalar(float(value), mode)
    return Scalar(value, mode)


def one(mode: Mode) -> Scalar:
    return Scalar._wrap(mpq(1) if mode is Mode.EXACT else 1.0, mode)


def zero(mode: Mode) -> Scalar:
    return Scalar._wrap(mpq(0) if mode is Mode.EXACT else 0.0, mode)


def common_mode(*values) -> Mode:
    """Return the shared mode of the Scalars in ``values``.

    Integers are ignored.  Raises MixedModeError on disagreement and
    defaults to EXACT when no Scalar is present.
    """
    mode = None
    for v in values:
        if isinstance(v, Scalar):
            if mode is None:
                mode = v.mode
            elif v.mode is not mode:
                raise MixedModeError("arguments mix exact and float scalars")
        elif isinstance(v, float):
            raise MixedModeError("raw float argument; wrap it in a Scalar")
    return mode or Mode.EXACT


def scalar_pow(base: Scalar, exp: int) -> Scalar:
    """Integer power; exact in Exact mode for arbitrarily large exponents."""
    if not isinstance(exp, numbers.Integral):
        raise TypeError("exponent must be an integer")
    if base.value == 0:
        if exp < 0:
            raise ZeroToNegativePower(f"0 raised to {exp}")
        if exp == 0:
            return one(base.mode)
    if base.mode is Mode.EXACT:
        return Scalar._wrap(base.value ** int(exp), base.mode)
    try:
        return Scalar._wrap(base.value ** int(exp), base.mode)
    except OverflowError:
        return Scalar._wrap(math.inf, base.mode)


def scalar_close(a: Scalar, b: Scalar, rel_tol: float = DEFAULT_REL_TOL) -> bool:
    """Exact equality in Exact mode, scaled closeness in Float mode.

    Float test: ``|a - b| <= rel_tol * max(1, |a|, |b|)``.
    """
    if not isinstance(a, Scalar) or not isinstance(b, Scalar):
        raise TypeError("scalar_close expects two Scalars")
    if a.mode is not b.mode:
        raise MixedModeError("scalar_close on mixed modes")
    if a.mode is Mode.EXACT:
        return a.value == b.value
    x, y = a.value, b.value
    return abs(x - y) <= rel_tol * max(1.0, abs(x), abs(y))


def scaled_residual(a: Scalar, b: Scalar) -> Scalar:
    """Residual used in reports: exact |a-b|, or the Float-mode scaled gap."""
    if a.mode is not b.mode:
        raise MixedModeError("residual on mixed modes")
    if a.mode is Mode.EXACT:
        return abs(a - b)
    x, y = a.value, b.value
    return Scalar._wrap(abs(x - y) / max(1.0, abs(x), abs(y)), Mode.FLOAT)
