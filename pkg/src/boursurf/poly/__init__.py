"""Exact polynomial arithmetic over Q(i)."""

from .gcd import (
    InexactDivisionError,
    exact_div,
    gcd,
    normalize_primitive_integer,
    squarefree_decomposition,
    squarefree_part,
)
from .monomial import MonomialOrder, MonomialOverflowError
from .polynomial import GREVLEX, Polynomial, RegistryError
from .rational import ExactRational, GaussianRational, I
from .ratmap import RationalFunction, RationalMap
from .split import split_real_imag
from .textfmt import (
    PolyParseError,
    canonical_text,
    poly_file_text,
    poly_parse,
    read_poly,
    write_poly,
)

LEX = MonomialOrder("lex")

__all__ = [
    "ExactRational", "GaussianRational", "I", "GREVLEX", "LEX", "MonomialOrder",
    "MonomialOverflowError", "Polynomial", "RegistryError", "RationalFunction",
    "RationalMap", "InexactDivisionError", "exact_div", "gcd",
    "normalize_primitive_integer", "squarefree_part", "squarefree_decomposition",
    "split_real_imag", "PolyParseError", "canonical_text", "poly_parse",
    "poly_file_text", "read_poly", "write_poly",
]
