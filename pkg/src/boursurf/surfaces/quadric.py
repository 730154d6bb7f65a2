"""Circles |zeta| = r0 map onto a quadric of revolution; exact (c, s) certificate."""

from __future__ import annotations

from fractions import Fraction

from ..elimination import normal_form
from ..poly import LEX, Polynomial
from ..poly.rational import as_rational
from .index import symbolic_m

CS = ("c", "s")


def trig_expand(k: int, registry=CS):
    """``(cos k t, sin k t)`` as polynomials in ``c = cos t, s = sin t``."""
    if k < 0:
        raise ValueError("k must be >= 0")
    c, s = (Polynomial.var(registry, v) for v in registry[:2])
    re, im = Polynomial.const(registry, 1), Polynomial.zero(registry)
    for _ in range(k):
        re, im = re * c - im * s, re * s + im * c
    return re, im


def circle_image(m, r0, registry=CS):
    """``(x, y, z)`` of the Bour surface on ``|zeta| = r0`` as (c, s) polynomials."""
    m = symbolic_m(m)
    r0 = as_rational(r0)
    cm1, sm1 = trig_expand(m - 1, registry)
    cp1, sp1 = trig_expand(m + 1, registry)
    cm, _ = trig_expand(m, registry)
    a = r0 ** (m - 1) / (m - 1)
    b = r0 ** (m + 1) / (m + 1)
    x = cm1.scale(a) - cp1.scale(b)
    y = -(sm1.scale(a) + sp1.scale(b))
    z = cm.scale(2 * r0 ** m / Fraction(m))
    return x, y, z


def quadric_coefficient(m) -> Fraction:
    m = symbolic_m(m)
    return Fraction(m * m, m * m - 1)


def quadric_certificate(m, r0, coefficient=None) -> Polynomial:
    """Normal form of ``x^2 + y^2 + k z^2 - rho^2`` modulo ``c^2 + s^2 - 1``.

    ``k`` defaults to ``m^2 / (m^2 - 1)`` and ``rho`` is
    ``r0^(m-1)/(m-1) + r0^(m+1)/(m+1)``. Passing another ``coefficient``
    is the falsification hook: the residual is then nonzero.
    """
    m = symbolic_m(m)
    r0 = as_rational(r0)
    if r0 <= 0:
        raise ValueError("r0 must be positive")
    k = quadric_coefficient(m) if coefficient is None else as_rational(coefficient)
    x, y, z = circle_image(m, r0)
    rho = r0 ** (m - 1) / (m - 1) + r0 ** (m + 1) / (m + 1)
    residual = x * x + y * y + z * z * k - rho * rho
    c, s = Polynomial.variables(CS)
    return normal_form(residual, [c * c + s * s - 1], LEX)
