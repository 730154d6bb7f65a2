"""Integral-free form: a minimal curve from one polynomial phi(w) and its derivatives."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..poly import I, Polynomial
from .curves import ZETA, MinimalCurve
from .index import symbolic_m

W = "w"
WREG = (W,)


@dataclass(frozen=True)
class IntegralFreeData:
    phi: Polynomial
    f1: Polynomial
    f2: Polynomial
    f3: Polynomial

    def round_trip(self) -> Polynomial:
        """Recovered phi minus phi; zero for consistent data."""
        return phi_from_components(self.f1, self.f2, self.f3, self.phi.registry[0]) - self.phi

    def as_curve(self) -> MinimalCurve:
        """The components with w renamed to zeta."""
        var = self.phi.registry[0]
        return MinimalCurve(tuple(f.rename({var: ZETA}) for f in (self.f1, self.f2, self.f3)))


def _var(p: Polynomial) -> str:
    if len(p.registry) != 1:
        raise ValueError("phi must be a univariate polynomial")
    return p.registry[0]


def integral_free_components(phi: Polynomial) -> IntegralFreeData:
    w = _var(phi)
    x = Polynomial.var(phi.registry, w)
    d1 = phi.derivative(w)
    d2 = d1.derivative(w)
    f1 = (1 - x * x) * d2 + 2 * x * d1 - 2 * phi
    f2 = I * ((1 + x * x) * d2 - 2 * x * d1 + 2 * phi)
    f3 = 2 * (x * d2 - d1)
    return IntegralFreeData(phi, f1, f2, f3)


def phi_from_components(f1: Polynomial, f2: Polynomial, f3: Polynomial, var: str | None = None):
    var = var or _var(f1)
    x = Polynomial.var(f1.registry, var)
    return ((x * x - 1) * f1).scale(Fraction(1, 4)) \
        - (I * (x * x + 1) * f2).scale(Fraction(1, 4)) \
        - (x * f3).scale(Fraction(1, 2))


def phi_bour(m) -> Polynomial:
    """``w^(m+1) / ((m-1) m (m+1))``."""
    m = symbolic_m(m)
    return Polynomial(WREG, {(m + 1,): Fraction(1, (m - 1) * m * (m + 1))})
