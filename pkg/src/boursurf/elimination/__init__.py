"""Gröbner bases, resultants and implicitization."""

from .buchberger import buchberger_reduced, normal_form
from .ideal import UNLIMITED, Budget, BudgetExceeded, CancelToken, GroebnerBasis, Ideal
from .implicit import (CertificateError, ImplicitResult, NonPrincipalError, eliminate,
                       implicitize_map, implicitize_profile, saturate,
                       substitution_certificate)
from .interpolate import interpolate_implicit, kernel_mod_p
from .modular import modular_groebner
from .resultant import resultant

__all__ = [
    "UNLIMITED", "Budget", "BudgetExceeded", "CancelToken", "CertificateError", "GroebnerBasis", "Ideal",
    "ImplicitResult", "NonPrincipalError", "buchberger_reduced", "eliminate",
    "implicitize_map", "implicitize_profile", "interpolate_implicit", "kernel_mod_p",
    "modular_groebner", "normal_form",
    "resultant", "saturate", "substitution_certificate",
]
