"""Exact verification of the Chaundy-Bullard identity, its historical forms and relatives."""

from .errors import DomainError, PropertyFailure, ResourceError
from .exact import binomial, format_rational, parse_rational, pochhammer, rational_pow
from .identity import cb_polynomial_identity, cb_split
from .polyseries import Polynomial

__all__ = [
    "DomainError",
    "PropertyFailure",
    "ResourceError",
    "Polynomial",
    "binomial",
    "cb_polynomial_identity",
    "cb_split",
    "format_rational",
    "parse_rational",
    "pochhammer",
    "rational_pow",
]
