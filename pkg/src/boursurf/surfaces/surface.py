"""Real parametrizations, fundamental forms, minimality and the Gauss map."""

from __future__ import annotations

from dataclasses import dataclass

from ..poly import Polynomial, RationalMap, split_real_imag
from .curves import ZETA, MinimalCurve, bour_curve
from .index import symbolic_m

UV = ("u", "v")


@dataclass(frozen=True)
class RealParamSurface:
    x: Polynomial
    y: Polynomial
    z: Polynomial

    def __post_init__(self):
        if not (self.x.registry == self.y.registry == self.z.registry):
            raise ValueError("components must share a registry")
        for c in (self.x, self.y, self.z):
            if not c.is_real():
                raise ValueError("a real surface needs real components")

    @property
    def registry(self):
        return self.x.registry

    @property
    def components(self):
        return (self.x, self.y, self.z)

    def degrees(self):
        return tuple(c.total_degree() for c in self.components)

    def partial(self, var):
        return tuple(c.derivative(var) for c in self.components)

    def as_map(self) -> RationalMap:
        one = Polynomial.const(self.registry, 1)
        return RationalMap.from_pairs([(c, one) for c in self.components])


def real_part_surface(curve: MinimalCurve) -> RealParamSurface:
    return RealParamSurface(*(split_real_imag(c, UV, ZETA)[0] for c in curve))


def cartesian_surface(m) -> RealParamSurface:
    return real_part_surface(bour_curve(symbolic_m(m)))


def dot(a, b) -> Polynomial:
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def cross(a, b):
    return (a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0])


@dataclass(frozen=True)
class FundamentalForms:
    E: Polynomial
    F1: Polynomial
    G1: Polynomial
    e: Polynomial
    f: Polynomial
    g: Polynomial


def unnormalized_normal(S: RealParamSurface, params=UV):
    return cross(S.partial(params[0]), S.partial(params[1]))


def fundamental_forms(S: RealParamSurface, params=UV) -> FundamentalForms:
    """First form and the second form contracted with ``x_u x x_v`` (unnormalised)."""
    u, v = params
    xu, xv = S.partial(u), S.partial(v)
    xuu = tuple(c.derivative(u) for c in xu)
    xuv = tuple(c.derivative(v) for c in xu)
    xvv = tuple(c.derivative(v) for c in xv)
    n = cross(xu, xv)
    return FundamentalForms(dot(xu, xu), dot(xu, xv), dot(xv, xv),
                            dot(n, xuu), dot(n, xuv), dot(n, xvv))


def minimality_certificate(S: RealParamSurface, params=UV) -> Polynomial:
    """``E g - 2 F f + G e``: a positive multiple of the mean curvature."""
    ff = fundamental_forms(S, params)
    return ff.E * ff.g - 2 * ff.F1 * ff.f + ff.G1 * ff.e


def gauss_map(m=None) -> RationalMap:
    """``(2u, 2v, u^2+v^2-1) / (u^2+v^2+1)``: the same for every m since G = zeta."""
    if m is not None:
        symbolic_m(m)
    u, v = Polynomial.variables(UV)
    den = u * u + v * v + 1
    return RationalMap.from_pairs([(2 * u, den), (2 * v, den), (u * u + v * v - 1, den)])


def gauss_numerator():
    u, v = Polynomial.variables(UV)
    return (2 * u, 2 * v, u * u + v * v - 1)


def parallel_certificate(S: RealParamSurface):
    """Cross product of ``x_u x x_v`` with the Gauss-map numerator (zero vector
    iff they are parallel) and their dot product."""
    n = unnormalized_normal(S)
    g = gauss_numerator()
    return cross(n, g), dot(n, g)


def normal_at_origin(S: RealParamSurface):
    return tuple(c.constant_term() for c in unnormalized_normal(S))


def has_branch_point_at_origin(S: RealParamSurface) -> bool:
    return all(c == 0 for c in normal_at_origin(S))
