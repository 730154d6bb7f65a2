"""Plane sections and symmetries: profile curve, boundary deltoid, and the
threefold self-intersection structure of B_3."""

from __future__ import annotations

from fractions import Fraction

from ..elimination import (UNLIMITED, Budget, Ideal, ImplicitResult, NonPrincipalError,
                           eliminate, implicitize_profile, normal_form)
from ..poly import LEX, MonomialOrder, Polynomial, normalize_primitive_integer
from .index import symbolic_m
from .quadric import CS, circle_image
from .surface import UV, cartesian_surface

R = "r"


def profile_components(m):
    """``x(r), z(r)`` of the section theta = 0 (where y vanishes)."""
    m = symbolic_m(m)
    reg = (R,)
    x = Polynomial(reg, {(m - 1,): Fraction(1, m - 1), (m + 1,): Fraction(-1, m + 1)})
    z = Polynomial(reg, {(m,): Fraction(2, m)})
    return x, z


def profile_curve(m=3) -> ImplicitResult:
    x, z = profile_components(m)
    return implicitize_profile(x, z, R, ("x", "z"))


def deltoid_curve(m=3, budget: Budget = UNLIMITED):
    """Implicit xy-curve traced by the circle |zeta| = 1, eliminating (c, s)
    against ``c^2 + s^2 - 1``. Returns ``(polynomial, certificate)`` where the
    certificate is the normal form of the substituted polynomial modulo the
    circle relation (zero for a correct result)."""
    m = symbolic_m(m)
    reg = CS + ("x", "y")
    X, Y, _ = (p.to_registry(reg) for p in circle_image(m, 1))
    c, s, x, y = Polynomial.variables(reg)
    gens = (x - X, y - Y, c * c + s * s - 1)
    out = eliminate(Ideal(gens), CS, budget)
    if len(out) != 1:
        raise NonPrincipalError(out)
    f = normalize_primitive_integer(out[0].to_registry(("x", "y")))
    return f, deltoid_certificate(f, m)


def deltoid_certificate(f: Polynomial, m=3) -> Polynomial:
    X, Y, _ = circle_image(m, 1)
    sub = f.substitute({"x": X, "y": Y}, CS)
    c, s = Polynomial.variables(CS)
    return normal_form(sub, [c * c + s * s - 1], LEX)


def rational_circle_point(t: Fraction):
    """``(cos, sin)`` of a rational point on the unit circle."""
    t = Fraction(t)
    d = 1 + t * t
    return (1 - t * t) / d, 2 * t / d


def deltoid_sample_values(f: Polynomial, m=3, n: int = 12):
    """``f`` evaluated exactly at ``n`` rational points of the boundary circle
    (t = k/3 in the rational parametrization of the circle)."""
    X, Y, _ = circle_image(m, 1)
    out = []
    for k in range(-(n // 2), n - n // 2):
        cs = rational_circle_point(Fraction(k, 3))
        out.append(f.eval((X.eval(cs), Y.eval(cs))))
    return out


def self_intersection_identities(m=3):
    """``(x(0,v) - x(0,-v), y(0,v), z(0,v))`` for the section u = 0."""
    S = cartesian_surface(m)
    v = Polynomial.var(UV, "v")
    zero = Polynomial.zero(UV)
    on_axis = [c.substitute({"u": zero}, UV) for c in S.components]
    x_neg = S.x.substitute({"u": zero, "v": -v}, UV)
    return on_axis[0] - x_neg, on_axis[1], on_axis[2]


def rotation_identities(m=3):
    """Residuals of the 2*pi/3 equivariance of B_3, computed exactly.

    ``q`` stands for sqrt(3) and everything is reduced modulo ``q^2 - 3``.
    Rotating (u, v) by 2*pi/3 must rotate (x, y) by 2*pi/3 and fix z.
    """
    if symbolic_m(m) != 3:
        raise ValueError("the threefold symmetry belongs to m = 3")
    reg = ("u", "v", "q")
    u, v, q = Polynomial.variables(reg)
    half = Fraction(1, 2)
    ru = (-u - q * v).scale(half)
    rv = (q * u - v).scale(half)
    S = cartesian_surface(3)
    x, y, z = (c.to_registry(reg) for c in S.components)
    rx, ry, rz = (c.substitute({"u": ru, "v": rv}, reg) for c in S.components)
    want = ((-x - q * y).scale(half), (q * x - y).scale(half), z)
    order = MonomialOrder.block(("q",), "grevlex")
    rel = [q * q - 3]
    return tuple(normal_form(a - b, rel, order) for a, b in zip((rx, ry, rz), want))


def branch_point_report(m) -> str:
    from .surface import has_branch_point_at_origin
    S = cartesian_surface(m)
    return "branch point at 0" if has_branch_point_at_origin(S) else "no branch point"
