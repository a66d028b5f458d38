"""Exact triangular matrices of continuous q-ultraspherical polynomials."""

from .errors import (AsymmetricInput, DegenerateCentral, ExcludedParameter, InvalidParameters,
                     MixedModeError, NearSingular, NegativeIndex, NonUnitConstantTerm,
                     NonUnitDiagonal, QTriError, ScalarZeroDivision, VanishingDenominatorFactor,
                     WindowMismatch, ZeroToNegativePower)
from .matrices import (TriMatrix, band_product, build_example42, build_L, build_L0, build_M,
                       build_M0, dp_coefficients, invert_unitriangular, lemma31_sum, lemma32_sum)
from .polyfamilies import c_hermite, c_hermite_qinv, c_ultra, gegenbauer
from .qracah import RacahParams, Termination, racah_eval, racah_orthogonality_sum, racah_weight
from .qseries import PhiSeries, is_balanced, phi_terminating, qbinomial, qpoch, qpoch_multi
from .scalar import Mode, Scalar, scalar
from .trigpoly import ChebSeries, TrigPoly, TruncSeries, tp_mul, tp_to_cheb

__version__ = "0.1.0"

__all__ = [
    "AsymmetricInput",
    "band_product",
    "build_example42",
    "build_L",
    "build_L0",
    "build_M",
    "build_M0",
    "c_hermite",
    "c_hermite_qinv",
    "c_ultra",
    "ChebSeries",
    "DegenerateCentral",
    "dp_coefficients",
    "ExcludedParameter",
    "gegenbauer",
    "InvalidParameters",
    "invert_unitriangular",
    "is_balanced",
    "lemma31_sum",
    "lemma32_sum",
    "MixedModeError",
    "Mode",
    "NearSingular",
    "NegativeIndex",
    "NonUnitConstantTerm",
    "NonUnitDiagonal",
    "phi_terminating",
    "PhiSeries",
    "qbinomial",
    "qpoch",
    "qpoch_multi",
    "QTriError",
    "racah_eval",
    "racah_orthogonality_sum",
    "racah_weight",
    "RacahParams",
    "scalar",
    "Scalar",
    "ScalarZeroDivision",
    "Termination",
    "tp_mul",
    "tp_to_cheb",
    "TrigPoly",
    "TriMatrix",
    "TruncSeries",
    "VanishingDenominatorFactor",
    "WindowMismatch",
    "ZeroToNegativePower",
]
