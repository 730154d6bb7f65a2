import math
from fractions import Fraction

import numpy as np
import pytest
from conftest import nonzero_fracs
from hypothesis import given
from hypothesis import strategies as st

from boursurf.poly import I, InexactDivisionError, Polynomial, poly_parse
from boursurf.surfaces import (UV, InvalidIndex, MinimalCurve, RealParamSurface,
                               SurfaceIndex, WeierstrassData, bour_curve, cartesian_surface,
                               circle_image, deltoid_curve, deltoid_sample_values,
                               fundamental_forms, gauss_map, integral_free_components,
                               isotropy_certificate, minimality_certificate, normal_at_origin,
                               parse_m, phi_bour, phi_from_components, polar_eval, polar_grid,
                               profile_curve, quadric_certificate, quadric_coefficient,
                               ribaucour_class, ribaucour_degree, rotation_identities,
                               self_intersection_identities, support_function,
                               tangent_plane_identity, tangential_chart,
                               total_curvature_closed_form, total_curvature_numeric,
                               trig_expand, weierstrass_data_from_curve, weierstrass_patch)
from boursurf.surfaces.curves import ZREG, zeta_poly
from boursurf.surfaces.integral_free import WREG
from boursurf.surfaces import DegreeLimitError, surface_class, surface_degree
from boursurf.surfaces.reference import (PROFILE_DERIVED, PROFILE_PRINTED, compare_class,
                                        compare_degree, compare_degree_rescaled,
                                        rescale_coordinates)
from boursurf.surfaces.sections import profile_components
from boursurf.surfaces.surface import parallel_certificate

zeta = Polynomial.var(ZREG, "zeta")
u, v = Polynomial.variables(UV)
h = Fraction(1, 2)


def PU(text):
    return poly_parse(text, UV)


# ---------------------------------------------------------------- index

def test_parse_m_forms():
    assert parse_m("3") == 3
    assert parse_m("1/2") == Fraction(1, 2)
    assert parse_m("2.5") == 2.5
    for bad in ("1", "0", "-1", "2/2", "abc", "inf"):
        with pytest.raises(InvalidIndex):
            parse_m(bad)


def test_surface_index_keeps_alpha():
    idx = SurfaceIndex("3", 0.5)
    assert idx.m == 3 and idx.alpha == 0.5 and idx.is_integer
    assert not SurfaceIndex("5/2").is_integer


@pytest.mark.parametrize("bad", [1, 0, -1, Fraction(5, 2), 2.5])
def test_symbolic_paths_need_integer_m(bad):
    with pytest.raises(InvalidIndex):
        bour_curve(bad)


# ---------------------------------------------------------------- curves

def test_bour_curve_examples():
    c3 = bour_curve(3)
    assert c3[0] == (zeta ** 2).scale(h) - (zeta ** 4).scale(Fraction(1, 4))
    assert c3[1] == ((zeta ** 2).scale(h) + (zeta ** 4).scale(Fraction(1, 4))).scale(I)
    assert c3[2] == (zeta ** 3).scale(Fraction(2, 3))
    c2 = bour_curve(2)
    assert c2[0] == zeta - (zeta ** 3).scale(Fraction(1, 3))
    assert c2[1] == (zeta + (zeta ** 3).scale(Fraction(1, 3))).scale(I)
    assert c2[2] == zeta ** 2


@pytest.mark.parametrize("m", range(2, 11))
def test_isotropy(m):
    assert isotropy_certificate(bour_curve(m)).is_zero()


def test_isotropy_counterexamples():
    assert isotropy_certificate(MinimalCurve((zeta, zeta, zeta))) == Polynomial.const(ZREG, 3)
    assert isotropy_certificate(MinimalCurve((zeta, I * zeta, Polynomial.zero(ZREG)))).is_zero()


@pytest.mark.parametrize("m", range(2, 9))
def test_weierstrass_data_and_patch(m):
    data = weierstrass_data_from_curve(bour_curve(m))
    assert data.F == zeta_poly({m - 2: 1})
    assert data.G == zeta
    assert weierstrass_patch(data) == bour_curve(m)


def test_weierstrass_degenerate_cases():
    with pytest.raises(ZeroDivisionError):
        weierstrass_data_from_curve(MinimalCurve((I * zeta, zeta, zeta)))
    with pytest.raises(InexactDivisionError):
        weierstrass_data_from_curve(MinimalCurve((zeta ** 2, Polynomial.zero(ZREG), zeta)))
    with pytest.raises(ValueError):
        WeierstrassData(Polynomial.zero(ZREG), zeta)


def test_patch_of_constant_data_is_a_plane():
    c = weierstrass_patch(WeierstrassData(Polynomial.const(ZREG, 1), Polynomial.zero(ZREG)))
    assert c.components == (zeta, I * zeta, Polynomial.zero(ZREG))


@given(st.lists(nonzero_fracs, min_size=1, max_size=3), st.lists(nonzero_fracs, min_size=1, max_size=3))
def test_patch_is_always_isotropic(fc, gc):
    F = Polynomial(ZREG, {(j,): c for j, c in enumerate(fc)})
    G = Polynomial(ZREG, {(j,): c for j, c in enumerate(gc)})
    assert isotropy_certificate(weierstrass_patch(WeierstrassData(F, G))).is_zero()


# ---------------------------------------------------------------- real parametrization

def test_cartesian_examples():
    S3 = cartesian_surface(3)
    assert S3.x == PU("-1/4*u^4 - 1/4*v^4 + 3/2*u^2*v^2 + 1/2*u^2 - 1/2*v^2")
    assert S3.y == PU("-u^3*v + u*v^3 - u*v")
    assert S3.z == PU("2/3*u^3 - 2*u*v^2")
    S4 = cartesian_surface(4)
    assert S4.x == PU("1/3*u^3 - u*v^2 - 1/5*u^5 + 2*u^3*v^2 - u*v^4")


@pytest.mark.parametrize("m", range(2, 9))
def test_cartesian_degrees(m):
    assert cartesian_surface(m).degrees() == (m + 1, m + 1, m)


def test_real_surface_validation():
    with pytest.raises(ValueError):
        RealParamSurface(u.scale(I), v, u)


# ---------------------------------------------------------------- polar evaluation

def test_polar_examples():
    assert np.allclose(polar_eval(3, 1.0, 0.0), (0.25, 0.0, 2 / 3), atol=0, rtol=1e-15)
    for t in np.linspace(0, 2 * np.pi, 7):
        assert np.array_equal(polar_eval(3, 0.0, t), np.zeros(3))


@given(st.floats(0, 1.5), st.floats(0, 2 * math.pi), st.integers(2, 6))
def test_polar_agrees_with_polynomials(r, t, m):
    S = cartesian_surface(m)
    pt = (r * math.cos(t), r * math.sin(t))
    want = [c.eval(pt) for c in S.components]
    assert np.allclose(polar_eval(m, r, t), want, rtol=1e-12, atol=1e-12)


def test_polar_specific_point():
    S = cartesian_surface(3)
    pt = (0.5 * math.cos(math.pi / 3), 0.5 * math.sin(math.pi / 3))
    want = [c.eval(pt) for c in S.components]
    assert np.allclose(polar_eval(3, 0.5, math.pi / 3), want, rtol=0, atol=1e-12)


def test_associated_family():
    a = polar_eval(2, 0.7, 0.3, alpha=0.0)
    b = polar_eval(2, 0.7, 0.3, alpha=math.pi / 2)
    c = polar_eval(2, 0.7, 0.3, alpha=0.4)
    assert not np.allclose(a, b)
    assert np.allclose(c, math.cos(0.4) * a + math.sin(0.4) * b)


def test_polar_grid_layout_and_fractional_m():
    g = polar_grid(SurfaceIndex("5/2"), [0.5, 1.0], [0.0, 1.0, 2.0])
    assert g.shape == (2, 3, 3)
    assert np.allclose(g[1, 2], polar_eval(2.5, 1.0, 2.0))
    assert np.all(np.isfinite(g))
    with pytest.raises(InvalidIndex):
        polar_eval(1, 1.0, 0.0)


# ---------------------------------------------------------------- Gauss map and forms

def test_gauss_map_formula():
    n = gauss_map(3)
    den = u * u + v * v + 1
    assert [(c.num, c.den) for c in n.components] == [(2 * u, den), (2 * v, den),
                                                       (u * u + v * v - 1, den)]
    norm = n[0] * n[0] + n[1] * n[1] + n[2] * n[2] - 1
    assert norm.num.is_zero()


@pytest.mark.parametrize("m", range(2, 7))
def test_normal_parallel_to_gauss_map(m):
    cr, dt = parallel_certificate(cartesian_surface(m))
    assert all(c.is_zero() for c in cr)
    assert dt.eval((1, 1)) > 0


def test_fundamental_forms_plane():
    plane = RealParamSurface(u, v, Polynomial.zero(UV))
    ff = fundamental_forms(plane)
    one = Polynomial.const(UV, 1)
    assert (ff.E, ff.F1, ff.G1) == (one, Polynomial.zero(UV), one)
    assert ff.e.is_zero() and ff.f.is_zero() and ff.g.is_zero()
    assert minimality_certificate(plane).is_zero()


@pytest.mark.parametrize("m", range(2, 7))
def test_conformal_and_minimal(m):
    S = cartesian_surface(m)
    ff = fundamental_forms(S)
    assert (ff.E - ff.G1).is_zero() and ff.F1.is_zero()
    assert minimality_certificate(S).is_zero()


@given(st.floats(-2, 2), st.floats(-2, 2))
def test_first_form_nonnegative(a, b):
    ff = fundamental_forms(cartesian_surface(3))
    E, F1, G1 = (p.eval((a, b)) for p in (ff.E, ff.F1, ff.G1))
    assert E >= 0 and G1 >= 0 and E * G1 - F1 * F1 >= -1e-9 * (1 + E * G1)


def test_paraboloid_is_not_minimal():
    assert not minimality_certificate(RealParamSurface(u, v, u * u + v * v)).is_zero()


def test_branch_point():
    assert all(c == 0 for c in normal_at_origin(cartesian_surface(3)))
    assert any(c != 0 for c in normal_at_origin(cartesian_surface(2)))


# ---------------------------------------------------------------- support function and tangential chart

def test_support_function_examples():
    P3 = support_function(3)[0]
    want = (PU("u^2 + v^2 + 2") * PU("3*u*v^2 - u^3"))
    assert P3.num * PU("6*u^2 + 6*v^2 + 6") == want * P3.den
    # the quartic factor is -Re((u+iv)^4); the reference prints +v^4 instead of -v^4
    P4 = support_function(4)[0]
    want4 = PU("3*u^2 + 3*v^2 + 5") * PU("-v^4 + 6*u^2*v^2 - u^4")
    assert P4.num * PU("30*u^2 + 30*v^2 + 30") == want4 * P4.den
    printed = PU("3*u^2 + 3*v^2 + 5") * PU("v^4 + 6*u^2*v^2 - u^4")
    assert P4.num * PU("30*u^2 + 30*v^2 + 30") != printed * P4.den


def test_support_function_of_plane_is_zero():
    from boursurf.poly import RationalMap
    plane = RealParamSurface(u, v, Polynomial.zero(UV))
    one = Polynomial.const(UV, 1)
    up = RationalMap.from_pairs([(Polynomial.zero(UV), one), (Polynomial.zero(UV), one),
                                 (one, one)])
    assert support_function(2, surface=plane, normal=up)[0].num.is_zero()


@pytest.mark.parametrize("m", [2, 3, 4])
def test_tangent_plane_and_chart_identities(m):
    assert tangent_plane_identity(m).num.is_zero()
    ch = tangential_chart(m)
    assert all(r.num.is_zero() for r in ch.identities())


def test_tangential_chart_examples():
    ch3 = tangential_chart(3)
    d3 = PU("u^2 + v^2 + 2") * PU("3*u*v^2 - u^3")
    assert ch3.ubar.num * d3 == 12 * u * ch3.ubar.den
    ch4 = tangential_chart(4)
    d4 = PU("3*u^2 + 3*v^2 + 5") * PU("-v^4 + 6*u^2*v^2 - u^4")
    assert ch4.wbar.num * d4 == PU("30*u^2 + 30*v^2 - 30") * ch4.wbar.den


# ---------------------------------------------------------------- formulas

def test_ribaucour_formulas():
    assert [ribaucour_class(p, 1) for p in (2, 3, 4)] == [6, 8, 10]
    assert ribaucour_class(1, 2) == 12
    assert [ribaucour_degree(m) for m in range(2, 11)] == [(m + 1) ** 2 for m in range(2, 11)]
    with pytest.raises(InvalidIndex):
        ribaucour_class(2, 4)
    with pytest.raises(InvalidIndex):
        ribaucour_class(-3, 3)
    with pytest.raises(InvalidIndex):
        ribaucour_degree(1)


# ---------------------------------------------------------------- quadric

def test_trig_expand_examples():
    c, s = Polynomial.variables(("c", "s"))
    assert trig_expand(0) == (Polynomial.const(("c", "s"), 1), Polynomial.zero(("c", "s")))
    assert trig_expand(3) == (c ** 3 - 3 * c * s * s, 3 * c * c * s - s ** 3)


@pytest.mark.parametrize("k", range(13))
def test_trig_expand_numeric(k):
    t = 0.7
    re, im = trig_expand(k)
    pt = (math.cos(t), math.sin(t))
    assert abs(re.eval(pt) - math.cos(k * t)) < 1e-12
    assert abs(im.eval(pt) - math.sin(k * t)) < 1e-12


@pytest.mark.parametrize("m", range(2, 7))
@pytest.mark.parametrize("r0", [Fraction(1, 2), 1, 2])
def test_quadric_membership(m, r0):
    assert quadric_certificate(m, r0).is_zero()


def test_quadric_perturbation_is_detected():
    k = quadric_coefficient(3)
    assert k == Fraction(9, 8)
    assert not quadric_certificate(3, 1, coefficient=k + 1).is_zero()
    with pytest.raises(ValueError):
        quadric_certificate(3, 0)


def test_circle_image_matches_polar():
    x, y, z = circle_image(3, Fraction(1, 2))
    t = 1.1
    pt = (math.cos(t), math.sin(t))
    assert np.allclose([x.eval(pt), y.eval(pt), z.eval(pt)], polar_eval(3, 0.5, t))


# ---------------------------------------------------------------- integral-free form

def test_integral_free_examples():
    w = Polynomial.var(WREG, "w")
    d = integral_free_components((w ** 4).scale(Fraction(1, 24)))
    assert d.f1 == (w ** 2).scale(h) - (w ** 4).scale(Fraction(1, 4))
    assert d.f2 == ((w ** 2).scale(h) + (w ** 4).scale(Fraction(1, 4))).scale(I)
    assert d.f3 == (w ** 3).scale(Fraction(2, 3))
    assert integral_free_components((w ** 3).scale(Fraction(1, 6))).as_curve() == bour_curve(2)
    zero = integral_free_components(Polynomial.zero(WREG))
    assert all(f.is_zero() for f in (zero.f1, zero.f2, zero.f3))
    z0 = Polynomial.zero(WREG)
    assert phi_from_components(z0, z0, z0, "w").is_zero()


def test_phi_bour_values():
    w = Polynomial.var(WREG, "w")
    assert phi_bour(3) == (w ** 4).scale(Fraction(1, 24))
    assert phi_bour(4) == (w ** 5).scale(Fraction(1, 60))
    assert phi_bour(5) == (w ** 6).scale(Fraction(1, 120))


@pytest.mark.parametrize("m", range(2, 11))
def test_integral_free_reproduces_curve(m):
    d = integral_free_components(phi_bour(m))
    assert d.as_curve() == bour_curve(m)
    assert d.round_trip().is_zero()
    assert (phi_bour(m) ** 2).total_degree() == 2 * m + 2


@given(st.lists(st.builds(Fraction, st.integers(-9, 9), st.integers(1, 9)), min_size=4, max_size=4))
def test_integral_free_round_trip_random_cubic(cs):
    phi = Polynomial(WREG, {(j,): c for j, c in enumerate(cs)})
    assert integral_free_components(phi).round_trip().is_zero()


# ---------------------------------------------------------------- total curvature

@pytest.mark.parametrize("m", [2, 3])
def test_total_curvature(m):
    K = total_curvature_numeric(m, 1000.0)
    assert abs(K + 4 * math.pi) / (4 * math.pi) < 1e-3


@pytest.mark.parametrize("R", [0.5, 1.0, 3.0, 20.0])
def test_total_curvature_partial_disk(R):
    assert math.isclose(total_curvature_numeric(3, R, grid=(256, 16)),
                        total_curvature_closed_form(R), rel_tol=1e-10)


def test_total_curvature_validation():
    with pytest.raises(ValueError):
        total_curvature_numeric(3, -1.0)
    with pytest.raises(ValueError):
        total_curvature_numeric(3, 1.0, grid=(8, 64))


# ---------------------------------------------------------------- sections and symmetry

def test_profile_curve():
    res = profile_curve(3)
    assert res.total_degree == 4
    assert res.polynomial == poly_parse(PROFILE_DERIVED, ("x", "z"))
    for k in range(1, 21):
        r = Fraction(k, 7)
        assert res.polynomial.eval((r ** 2 / 2 - r ** 4 / 4, Fraction(2, 3) * r ** 3)) == 0
    printed = poly_parse(PROFILE_PRINTED, ("x", "z"))
    assert printed.eval((Fraction(1, 4), Fraction(2, 3))) != 0


def test_profile_components_and_enneper():
    xr, zr = profile_components(3)
    assert xr.eval((1,)) == Fraction(1, 4) and zr.eval((1,)) == Fraction(2, 3)
    res = profile_curve(2)
    assert res.certificate.is_zero() and res.total_degree == 3


def test_deltoid():
    f, cert = deltoid_curve(3)
    assert f.total_degree() == 4 and cert.is_zero()
    vals = deltoid_sample_values(f, 3)
    assert len(vals) == 12 and all(val == 0 for val in vals)


def test_self_intersection_and_rotation():
    assert all(p.is_zero() for p in self_intersection_identities(3))
    assert all(p.is_zero() for p in rotation_identities(3))
    with pytest.raises(ValueError):
        rotation_identities(4)


def test_rotation_identity_detects_wrong_angle():
    # rotating (u, v) by pi/2 does not act as a rotation of B_3 about the z-axis
    S = cartesian_surface(3)
    rz = S.z.substitute({"u": -v, "v": u}, UV)
    assert rz != S.z


# ---------------------------------------------------------------- implicit degree and class

def test_classes(classes):
    assert {m: r.total_degree for m, r in classes.items()} == {2: 6, 3: 8, 4: 10}
    for m, r in classes.items():
        assert r.certified and r.total_degree == ribaucour_class(m, 1)


def test_class_b3_matches_reference(classes):
    diff = compare_class(3, classes[3].polynomial)
    assert diff.agrees, diff.report()


def test_class_b4_reference_differences(classes):
    # two sign flips and one extra printed term; the computed generator is certified
    diff = compare_class(4, classes[4].polynomial)
    assert diff.matched == 26 and len(diff.mismatched) == 2 and len(diff.missing) == 1
    assert not diff.extra
    assert "differs" in diff.report()


def test_degree_b2():
    res = surface_degree(2)
    assert res.total_degree == 9 and res.certified


def test_degree_b3(b3_degree):
    assert b3_degree.total_degree == 16
    diff = compare_degree(3, b3_degree.polynomial)
    assert diff.agrees, diff.report()
    p = b3_degree.polynomial
    for r, t in [(0.5, 0.3), (0.9, 2.0), (1.3, 4.1)]:
        x, y, z = polar_eval(3, r, t)
        scale = sum(abs(float(c)) * abs(x) ** e[0] * abs(y) ** e[1] * abs(z) ** e[2]
                    for e, c in p.real_coefficients().items())
        assert abs(p.eval((x, y, z))) <= 1e-9 * scale


def test_degree_limits():
    with pytest.raises(DegreeLimitError):
        surface_degree(5)
    with pytest.raises(DegreeLimitError):
        surface_degree(4)
    with pytest.raises(DegreeLimitError):
        surface_class(5)


def test_degree_b4(b4_degree):
    assert b4_degree.total_degree == 25 and b4_degree.certified
    assert len(b4_degree.polynomial) == 237
    assert not compare_degree(4, b4_degree.polynomial).agrees
    assert compare_degree_rescaled(4, b4_degree.polynomial).agrees


def test_rescale_coordinates():
    f = poly_parse("x^2 + y^2 - z", ("x", "y", "z"))
    assert rescale_coordinates(f, 2) == poly_parse("4*x^2 + 4*y^2 - 2*z", ("x", "y", "z")).scale(h)
