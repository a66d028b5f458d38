"""Exception hierarchy shared by every qtri module.

Every error carries enough structure to be serialized as a JSON object,
which the command line front end prints on stderr.
"""

from __future__ import annotations


class QTriError(Exception):
    """Base class for all library errors."""

    def details(self) -> dict:
        return {}

    def to_json(self) -> dict:
        return {"error": type(self).__name__, "message": str(self), **self.details()}


class MixedModeError(QTriError, TypeError):
    """An operation combined an exact and a floating scalar."""


class ZeroToNegativePower(QTriError, ZeroDivisionError):
    pass


class ScalarZeroDivision(QTriError, ZeroDivisionError):
    pass


class NegativeIndex(QTriError, ValueError):
    pass


class VanishingDenominatorFactor(QTriError, ZeroDivisionError):
    """A factor sitting in a denominator evaluated to zero.

    ``name`` describes the offending sub-expression, ``index`` the
    position inside the product where it vanished.
    """

    def __init__(self, name: str, index: int | None = None, value=None):
        self.name = name
        self.index = index
        self.value = value
        msg = f"denominator factor vanished: {name}"
        if index is not None:
            msg += f" at index {index}"
        super().__init__(msg)

    def details(self) -> dict:
        out = {"factor": self.name}
        if self.index is not None:
            out["index"] = self.index
        if self.value is not None:
            out["value"] = str(self.value)
        return out


class ExcludedParameter(VanishingDenominatorFactor):
    """A matrix or lemma parameter hit one of the excluded values.

    ``m``/``n`` locate the entry (or lemma indices); ``j`` is the position
    of the vanishing factor inside its q-Pochhammer symbol.
    """

    def __init__(self, name: str, m: int | None = None, n: int | None = None,
                 j: int | None = None):
        self.m = m
        self.n = n
        self.j = j
        super().__init__(name, j)
        where = ", ".join(f"{k}={v}" for k, v in (("m", m), ("n", n), ("j", j))
                          if v is not None)
        self.args = (f"excluded parameter: {name} vanished ({where})",)

    def details(self) -> dict:
        return {"factor": self.name, "m": self.m, "n": self.n, "j": self.j}


class DegenerateCentral(VanishingDenominatorFactor):
    pass


class NonUnitConstantTerm(QTriError, ValueError):
    pass


class AsymmetricInput(QTriError, ValueError):
    pass


class NonUnitDiagonal(QTriError, ValueError):
    pass


class WindowMismatch(QTriError, ValueError):
    pass


class InvalidParameters(QTriError, ValueError):
    pass


class NearSingular(UserWarning):
    """Float-mode warning: a denominator factor is smaller than 1e-12."""
