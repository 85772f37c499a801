"""Exact computations in the relatively free algebra N_{3,d} with x^3 = 0.

Words are lists of 1-based letters; multidegrees are lists of counts.
Coefficients are passed and returned as strings ("1", "-2", "1/3").
"""

from ._nilcube import (
    B1d,
    C_formula,
    InvalidArgument,
    canonicalize,
    certify,
    composition_basis,
    dim,
    generators,
    membership,
    minimal_basis,
    nilpotency,
    table,
    word_count,
)

__all__ = [
    "B1d",
    "C_formula",
    "InvalidArgument",
    "canonicalize",
    "certify",
    "composition_basis",
    "dim",
    "generators",
    "membership",
    "minimal_basis",
    "nilpotency",
    "table",
    "word_count",
]
