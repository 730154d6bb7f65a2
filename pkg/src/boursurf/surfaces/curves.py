"""Minimal curves in C^3 and their Weierstrass data."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..poly import I, InexactDivisionError, Polynomial, exact_div
from .index import symbolic_m

ZETA = "zeta"
ZREG = (ZETA,)


def zeta_poly(terms: dict) -> Polynomial:
    """Univariate polynomial in zeta from ``{exponent: coefficient}``."""
    return Polynomial(ZREG, {(e,): c for e, c in terms.items()})


@dataclass(frozen=True)
class MinimalCurve:
    components: tuple[Polynomial, Polynomial, Polynomial]

    def __post_init__(self):
        comps = tuple(self.components)
        if len(comps) != 3:
            raise ValueError("a curve in C^3 has three components")
        object.__setattr__(self, "components", comps)

    @property
    def registry(self):
        return self.components[0].registry

    def derivative(self, var: str = ZETA) -> tuple[Polynomial, ...]:
        return tuple(c.derivative(var) for c in self.components)

    def __iter__(self):
        return iter(self.components)

    def __getitem__(self, i):
        return self.components[i]


@dataclass(frozen=True)
class WeierstrassData:
    F: Polynomial
    G: Polynomial

    def __post_init__(self):
        if self.F.is_zero():
            raise ValueError("Weierstrass data needs F not identically zero")


def bour_curve(m) -> MinimalCurve:
    m = symbolic_m(m)
    a = Fraction(1, m - 1)
    b = Fraction(1, m + 1)
    x = zeta_poly({m - 1: a, m + 1: -b})
    y = zeta_poly({m - 1: a, m + 1: b}) * I
    z = zeta_poly({m: Fraction(2, m)})
    return MinimalCurve((x, y, z))


def isotropy_certificate(curve: MinimalCurve, var: str = ZETA) -> Polynomial:
    """``Psi' . Psi'`` (no conjugation); zero iff the curve is isotropic."""
    d = curve.derivative(var)
    return d[0] * d[0] + d[1] * d[1] + d[2] * d[2]


def weierstrass_data_from_curve(curve: MinimalCurve, var: str = ZETA) -> WeierstrassData:
    p1, p2, p3 = curve.derivative(var)
    denom = p1 - I * p2
    if denom.is_zero():
        raise ZeroDivisionError("phi1 - i*phi2 vanishes identically; no Weierstrass data")
    F = denom.scale(Fraction(1, 2))
    try:
        G = exact_div(p3, denom)
    except InexactDivisionError:
        raise InexactDivisionError(
            "G = phi3 / (phi1 - i*phi2) is not a polynomial for this curve") from None
    return WeierstrassData(F, G)


def _antiderivative(p: Polynomial, var: str) -> Polynomial:
    j = p.registry.index(var)
    out = {}
    for exps, c in p.terms.items():
        e = list(exps)
        e[j] += 1
        out[tuple(e)] = c * Fraction(1, e[j])
    return Polynomial(p.registry, out)


def weierstrass_patch(data: WeierstrassData, var: str = ZETA) -> MinimalCurve:
    """Integrate ``(F(1-G^2), iF(1+G^2), 2FG)`` term by term, constant 0."""
    F, G = data.F, data.G
    G2 = G * G
    integrand = (F * (1 - G2), I * F * (1 + G2), 2 * F * G)
    return MinimalCurve(tuple(_antiderivative(c, var) for c in integrand))
