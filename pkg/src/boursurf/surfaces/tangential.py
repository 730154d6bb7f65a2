"""Support function, tangential coordinates, and the degree/class eliminations."""

from __future__ import annotations

from dataclasses import dataclass

from ..elimination import UNLIMITED, Budget, ImplicitResult, implicitize_map
from ..poly import Polynomial, RationalFunction, RationalMap
from .index import DEGREE_LIMIT_MESSAGE, InvalidIndex, symbolic_m
from .surface import UV, RealParamSurface, cartesian_surface, gauss_map

TANGENTIAL_VARS = ("ub", "vb", "wb")
CARTESIAN_VARS = ("x", "y", "z")


class DegreeLimitError(InvalidIndex):
    pass


def _support(n: RationalMap, S: RealParamSurface) -> RationalFunction:
    acc = RationalFunction(Polynomial.zero(S.registry))
    for comp, c in zip(n.components, S.components):
        acc = acc + comp * c
    return -acc


def support_function(m, surface: RealParamSurface | None = None,
                     normal: RationalMap | None = None) -> RationalMap:
    """``P = -n . x`` as a one-component reduced rational map.

    ``surface``/``normal`` override the Bour data (used for the plane test).
    """
    S = surface if surface is not None else cartesian_surface(symbolic_m(m))
    n = normal if normal is not None else gauss_map()
    return RationalMap((_support(n, S),))


def tangent_plane_identity(m) -> RationalFunction:
    """``n1 x + n2 y + n3 z + P``; identically zero."""
    S = cartesian_surface(m)
    n = gauss_map()
    acc = support_function(m)[0]
    for comp, c in zip(n.components, S.components):
        acc = acc + comp * c
    return acc


@dataclass(frozen=True)
class TangentialChart:
    n: RationalMap
    P: RationalMap
    ubar: RationalFunction
    vbar: RationalFunction
    wbar: RationalFunction

    def as_map(self) -> RationalMap:
        return RationalMap((self.ubar, self.vbar, self.wbar))

    def identities(self):
        """``(ubar P - n1, vbar P - n2, wbar P - n3)``: all zero."""
        P = self.P[0]
        return tuple(c * P - nc for c, nc in zip((self.ubar, self.vbar, self.wbar),
                                                 self.n.components))


def tangential_chart(m) -> TangentialChart:
    m = symbolic_m(m)
    n = gauss_map()
    P = support_function(m)
    if P[0].num.is_zero():
        raise ArithmeticError("support function vanishes identically")
    comps = tuple(c / P[0] for c in n.components)
    return TangentialChart(n, P, *comps)


def surface_degree(m, *, allow_long: bool = False, budget: Budget = UNLIMITED,
                   method: str = "groebner", backend: str | None = None) -> ImplicitResult:
    """Implicit equation of the Bour surface; its total degree is deg(B_m)."""
    m = symbolic_m(m)
    if m >= 5:
        raise DegreeLimitError(DEGREE_LIMIT_MESSAGE)
    if m == 4 and not allow_long:
        raise DegreeLimitError("m = 4 is a long-running computation; pass allow_long=True "
                               "(CLI: --allow-long)")
    return implicitize_map(cartesian_surface(m).as_map(), CARTESIAN_VARS, budget, method,
                          backend)


def surface_class(m, *, allow_large: bool = False, budget: Budget = UNLIMITED,
                  method: str = "groebner", backend: str | None = None) -> ImplicitResult:
    """Implicit equation in tangential coordinates; its total degree is cl(B_m)."""
    m = symbolic_m(m)
    if m > 4 and not allow_large:
        raise DegreeLimitError("class computations beyond m = 4 need allow_large=True")
    return implicitize_map(tangential_chart(m).as_map(), TANGENTIAL_VARS, budget, method,
                          backend)


__all__ = ["TANGENTIAL_VARS", "CARTESIAN_VARS", "DegreeLimitError", "TangentialChart",
           "support_function", "tangent_plane_identity", "tangential_chart",
           "surface_degree", "surface_class", "UV"]
