"""Truncated operator matrices and relations among quantization operators."""

from .matrix import (
    OperatorMatrix,
    TruncationSpec,
    adjoint_check,
    classify_symbol,
    commutator,
    compose,
    matrix_of_cosymbol,
    matrix_of_symbol,
)
from .ncpoly import NCPoly, associated_classical, check_relation, classify_relation, hbar_deform, parse_ncpoly

__all__ = [
    "OperatorMatrix",
    "TruncationSpec",
    "adjoint_check",
    "classify_symbol",
    "commutator",
    "compose",
    "matrix_of_cosymbol",
    "matrix_of_symbol",
    "NCPoly",
    "associated_classical",
    "check_relation",
    "classify_relation",
    "hbar_deform",
    "parse_ncpoly",
]
