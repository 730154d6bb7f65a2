from fractions import Fraction

import numpy as np
import pytest
from conftest import XYZ, nonzero, polys
from hypothesis import given
from hypothesis import strategies as st

from boursurf.elimination import (Budget, BudgetExceeded, CancelToken, Ideal, ImplicitResult,
                                  NonPrincipalError, buchberger_reduced, eliminate,
                                  implicitize_map, implicitize_profile, modular_groebner,
                                  normal_form, resultant, saturate, substitution_certificate)
from boursurf.elimination import interpolate_implicit, kernel_mod_p, kernels
from boursurf.elimination.implicit import CertificateError
from boursurf.elimination.interpolate import ECHELON
from boursurf.elimination.modular import (groebner_mod_p, primes_descending,
                                          rational_reconstruction)
from boursurf.elimination.resultant import sylvester_matrix
from boursurf.poly import (GREVLEX, LEX, I, MonomialOrder, Polynomial, RationalMap,
                           normalize_primitive_integer, poly_parse, read_poly)
from boursurf.poly.monomial import divides

x, y, z = Polynomial.variables(XYZ)


def P(text, reg):
    return poly_parse(text, reg)


def same(a, b) -> bool:
    """Equal up to a nonzero scalar."""
    return normalize_primitive_integer(a) == normalize_primitive_integer(b)


def is_reduced(gb) -> bool:
    leads = gb.leading_monomials()
    for i, g in enumerate(gb.elements):
        if g.leading_term(gb.order)[1] != 1:
            return False
        for j, lm in enumerate(leads):
            if i != j and any(divides(lm, e) for e in g.terms):
                return False
    return True


small_ideals = st.lists(nonzero(polys(max_terms=3, max_deg=2)), min_size=1, max_size=3)


# ---------------------------------------------------------------- normal form

def test_normal_form_examples():
    X = ("x", "y")
    xx, yy = Polynomial.variables(X)
    assert normal_form(xx * xx, [xx], LEX).is_zero()
    assert normal_form(xx * xx + yy, [xx - yy], LEX) == yy * yy + yy


@given(polys(), small_ideals)
def test_normal_form_idempotent_and_irreducible(q, gens):
    gb = buchberger_reduced(Ideal(tuple(gens)))
    r = normal_form(q, gb.elements, gb.order)
    assert normal_form(r, gb.elements, gb.order) == r
    for lm in gb.leading_monomials():
        assert not any(divides(lm, e) for e in r.terms)
    # q - r lies in the ideal
    assert normal_form(q - r, gb.elements, gb.order).is_zero()


# ---------------------------------------------------------------- Buchberger

def test_buchberger_examples():
    T = ("t", "x", "y")
    t, tx, ty = Polynomial.variables(T)
    gb = buchberger_reduced(Ideal((tx - t, ty - t * t), MonomialOrder.block(("t",))))
    assert any(same(g, ty - tx * tx) for g in gb)

    gb = buchberger_reduced(Ideal((x * x + y * y - 1, x), LEX))
    assert set(gb.elements) == {x, y * y - 1}


def test_circle_by_half_angle_with_saturation():
    R = ("t", "q", "x", "y")
    t, q, cx, cy = Polynomial.variables(R)
    d = 1 + t * t
    gens = (cx * d - (1 - t * t), cy * d - 2 * t, q * d - 1)
    out = eliminate(Ideal(gens), ("t", "q"))
    assert [normalize_primitive_integer(g.to_registry(("x", "y"))) for g in out] == \
        [P("x^2 + y^2 - 1", ("x", "y"))]


@given(small_ideals)
def test_basis_is_reduced_and_contains_generators(gens):
    gb = buchberger_reduced(Ideal(tuple(gens)))
    assert is_reduced(gb)
    for g in gens:
        assert normal_form(g, gb.elements, gb.order).is_zero()


@given(small_ideals, st.randoms(use_true_random=False))
def test_basis_is_canonical(gens, rnd):
    a = buchberger_reduced(Ideal(tuple(gens)))
    shuffled = list(gens)
    rnd.shuffle(shuffled)
    # adding an ideal member must not change the reduced basis either
    extra = shuffled + [gens[0] * (x + 2)]
    b = buchberger_reduced(Ideal(tuple(extra)))
    assert a.elements == b.elements


def test_ideal_validation():
    with pytest.raises(ValueError):
        Ideal(())
    with pytest.raises(ValueError):
        Ideal((Polynomial.zero(XYZ),))
    with pytest.raises(ValueError):
        Ideal((x, Polynomial.var(("a",), "a")))
    with pytest.raises(ValueError):
        Ideal((x.scale(I),))


# ---------------------------------------------------------------- budgets

def _cyclic4():
    R = ("a", "b", "c", "d")
    a, b, c, d = Polynomial.variables(R)
    return Ideal((a + b + c + d, a * b + b * c + c * d + d * a,
                  a * b * c + b * c * d + c * d * a + d * a * b, a * b * c * d - 1))


def test_pair_budget_reports_partial_stats():
    with pytest.raises(BudgetExceeded) as err:
        buchberger_reduced(_cyclic4(), Budget(max_pairs=3))
    assert err.value.stats["pairs_reduced"] >= 3
    assert "max_degree" in err.value.stats


def test_degree_budget():
    with pytest.raises(BudgetExceeded):
        buchberger_reduced(_cyclic4(), Budget(max_degree=3))


def test_cancel_token():
    tok = CancelToken()
    tok.cancel()
    with pytest.raises(BudgetExceeded) as err:
        buchberger_reduced(_cyclic4(), Budget(cancel=tok))
    assert "cancel" in err.value.reason


def test_time_budget():
    from boursurf.surfaces import surface_degree
    with pytest.raises(BudgetExceeded):
        surface_degree(3, budget=Budget(max_seconds=0.2))


# ---------------------------------------------------------------- modular path

@pytest.mark.parametrize("a,m", [(Fraction(3, 7), 10007), (Fraction(-22, 15), 1000003),
                                 (Fraction(0), 97)])
def test_rational_reconstruction_examples(a, m):
    img = a.numerator * pow(a.denominator, -1, m) % m
    assert rational_reconstruction(img, m) == a


@given(st.integers(-300, 300), st.integers(1, 300))
def test_rational_reconstruction_property(n, d):
    m = 2147483647
    q = Fraction(n, d)
    img = q.numerator * pow(q.denominator, -1, m) % m
    assert rational_reconstruction(img, m) == q


def test_primes_descending():
    ps = [p for _, p in zip(range(4), primes_descending())]
    assert ps[0] == 2147483647 and ps == sorted(ps, reverse=True)


@given(small_ideals)
def test_modular_matches_exact(gens):
    ideal = Ideal(tuple(gens))
    assert modular_groebner(ideal).elements == buchberger_reduced(ideal).elements


@pytest.mark.parametrize("order", [GREVLEX, LEX, MonomialOrder.block(("x",))])
def test_backends_agree_mod_p(order):
    gens = (P("x^2*y - 3*z + 1", XYZ), P("y^2 - x*z + 2", XYZ), P("x*y*z - 5", XYZ))
    ideal = Ideal(gens, order)
    p = 2147483629
    a = groebner_mod_p(ideal, p, backend="numba")
    b = groebner_mod_p(ideal, p, backend="numpy")
    assert a == b


def test_kernel_layout():
    assert kernels.layout(5) == (12, 11, 511)
    assert kernels.layout(7) == (9, 8, 63)
    e = (3, 0, 511, 7, 1)
    assert kernels.unpack_exps(kernels.pack_exps(e), 5) == e
    with pytest.raises(OverflowError):
        kernels.pack_exps((512, 0, 0, 0, 0))


@given(small_ideals, st.sampled_from([GREVLEX, LEX]))
def test_backends_agree_on_random_ideals(gens, order):
    ideal = Ideal(tuple(gens), order)
    p = 1000003
    assert groebner_mod_p(ideal, p, backend="numba") == groebner_mod_p(ideal, p, backend="numpy")


# ---------------------------------------------------------------- eliminate / saturate

def test_eliminate_examples():
    T = ("t", "x", "y")
    t, tx, ty = Polynomial.variables(T)
    (g,) = eliminate(Ideal((tx - t, ty - t * t)), ("t",))
    assert same(g, ty - tx * tx)
    R = ("u", "v", "x", "y")
    u, v, rx, ry = Polynomial.variables(R)
    out = eliminate(Ideal((u * u + v * v - 1, rx - u, ry - v)), ("u", "v"))
    assert len(out) == 1 and same(out[0], rx * rx + ry * ry - 1)


def test_saturate_examples():
    X = ("x", "y")
    xx, yy = Polynomial.variables(X)
    sat = saturate(Ideal((xx * yy,)), xx)
    assert sat.registry[0] == "t"
    out = eliminate(sat, ("t",))
    assert [g.to_registry(X) for g in out] == [yy]
    sat = saturate(Ideal((xx,)), yy)
    assert [g.to_registry(X) for g in eliminate(sat, ("t",))] == [xx]


def test_saturation_removes_spurious_component():
    U = ("u", "v")
    u, v = Polynomial.variables(U)
    rm = RationalMap.from_pairs([(u, v), (u * u, v), (u ** 3, v)])
    res = implicitize_map(rm, XYZ)
    assert res.polynomial == P("y^2 - x*z", XYZ)
    # without saturation the component {u = v = 0} swallows the image
    reg = U + XYZ
    uu, vv, rx, ry, rz = Polynomial.variables(reg)
    bare = eliminate(Ideal((rx * vv - uu, ry * vv - uu * uu, rz * vv - uu ** 3)), U)
    assert bare == []


# ---------------------------------------------------------------- resultants

def test_resultant_examples():
    R = ("x", "a", "b")
    rx, a, b = Polynomial.variables(R)
    assert resultant(rx - a, rx - b, "x") == a - b
    X = ("x",)
    t = Polynomial.var(X, "x")
    assert resultant(t * t, t - 1, "x") == Polynomial.const(X, 1)
    with pytest.raises(ValueError):
        resultant(Polynomial.const(X, 3), t, "x")


@given(st.lists(st.integers(-5, 5), min_size=1, max_size=3),
       st.lists(st.integers(-5, 5), min_size=1, max_size=3))
def test_resultant_root_product_oracle(ra, rb):
    """Res(prod (x-a_i), prod (x-b_j)) = prod (a_i - b_j) for monic inputs."""
    X = ("x",)
    t = Polynomial.var(X, "x")
    p = Polynomial.const(X, 1)
    q = Polynomial.const(X, 1)
    for r in ra:
        p = p * (t - r)
    for r in rb:
        q = q * (t - r)
    want = 1
    for a in ra:
        for b in rb:
            want *= a - b
    assert resultant(p, q, "x") == Polynomial.const(X, want)


def test_sylvester_shape():
    X = ("x",)
    t = Polynomial.var(X, "x")
    rows = sylvester_matrix(t ** 3 + 1, t ** 2 - t, "x")
    assert len(rows) == 5 and all(len(r) == 5 for r in rows)


def test_profile_resultant_matches_sample_points():
    R = ("r", "x", "z")
    r, rx, rz = Polynomial.variables(R)
    res = resultant(r ** 4 - 2 * r * r + 4 * rx, 2 * r ** 3 - 3 * rz, "r")
    f = normalize_primitive_integer(res.to_registry(("x", "z")))
    assert f == P("1024*x^3 + 864*x*z^2 - 288*z^2 + 81*z^4", ("x", "z"))
    for k in range(1, 21):
        s = Fraction(k, 7)
        xs = s ** 2 / 2 - s ** 4 / 4
        zs = Fraction(2, 3) * s ** 3
        assert f.eval((xs, zs)) == 0


# ---------------------------------------------------------------- implicitization

def test_implicitize_profile_examples():
    Rr = ("r",)
    r = Polynomial.var(Rr, "r")
    res = implicitize_profile(r * r, r ** 4)
    # canonical sign: positive grevlex leading coefficient
    assert res.polynomial == P("x^2 - z", ("x", "z")) and res.total_degree == 2
    res = implicitize_profile(r, r)
    assert same(res.polynomial, P("z - x", ("x", "z")))
    res = implicitize_profile(r * r * Fraction(1, 2) - r ** 4 * Fraction(1, 4),
                              r ** 3 * Fraction(2, 3))
    assert res.polynomial == P("1024*x^3 + 864*x*z^2 - 288*z^2 + 81*z^4", ("x", "z"))
    assert res.method == "resultant" and res.certificate.is_zero()
    with pytest.raises(ValueError):
        implicitize_profile(Polynomial.const(Rr, 1), r)


@pytest.mark.parametrize("method", ["groebner", "groebner-modular", "interpolation", "resultant"])
def test_map_and_profile_agree_on_curves(method):
    Rr = ("r",)
    r = Polynomial.var(Rr, "r")
    xr = r * r * Fraction(1, 2) - r ** 4 * Fraction(1, 4)
    zr = r ** 3 * Fraction(2, 3)
    one = Polynomial.const(Rr, 1)
    via_map = implicitize_map(RationalMap.from_pairs([(xr, one), (zr, one)]), ("x", "z"),
                              method=method)
    assert via_map.polynomial == implicitize_profile(xr, zr).polynomial


# ---------------------------------------------------------------- interpolation

P31 = (1 << 31) - 1


@given(st.integers(1, 12), st.integers(1, 12), st.integers(0, 10 ** 6))
def test_kernel_mod_p(n, m, seed):
    rng = np.random.default_rng(seed)
    # rank-deficient on purpose: a product of two thin factors
    k = int(rng.integers(1, min(n, m) + 1))
    A = (rng.integers(0, P31, (n, k)).astype(object) @ rng.integers(0, P31, (k, m)).astype(object))
    A = np.array(A % P31, dtype=np.int64)
    outs = [kernel_mod_p(A, P31, b) for b in ECHELON]
    assert np.array_equal(outs[0], outs[1])
    K = outs[0]
    assert K.shape[0] >= m - k
    for vec in K:
        assert not ((A.astype(object) @ vec.astype(object)) % P31).any()


def test_kernel_mod_p_small_prime():
    A = np.array([[1, 2, 3], [2, 4, 6]])
    K = kernel_mod_p(A, 7)
    assert K.shape == (2, 3)
    assert not ((A @ K.T) % 7).any()


def test_interpolation_needs_no_elimination_variables():
    U = ("u", "v")
    u, v = Polynomial.variables(U)
    one = Polynomial.const(U, 1)
    f, stats = interpolate_implicit(RationalMap.from_pairs([(u, one), (v, one), (u * v, one)]), XYZ)
    assert same(f, P("z - x*y", XYZ)) and stats["degree"] == 2
    with pytest.raises(ArithmeticError):
        interpolate_implicit(RationalMap.from_pairs([(u, one), (v, one), (u ** 3 * v, one)]), XYZ,
                             max_degree=3)
    with pytest.raises(BudgetExceeded):
        interpolate_implicit(RationalMap.from_pairs([(u, one), (v, one), (u ** 3 * v, one)]), XYZ,
                             Budget(max_degree=2))


def test_interpolation_matches_groebner_on_rational_surface():
    U = ("u", "v")
    u, v = Polynomial.variables(U)
    d = 1 + u * u + v * v
    sphere = RationalMap.from_pairs([(2 * u, d), (2 * v, d), (u * u + v * v - 1, d)])
    a = implicitize_map(sphere, XYZ, method="interpolation")
    b = implicitize_map(sphere, XYZ)
    assert a.polynomial == b.polynomial == P("x^2 + y^2 + z^2 - 1", XYZ)


def test_parabola_and_rational_curve():
    Rr = ("t",)
    t = Polynomial.var(Rr, "t")
    one = Polynomial.const(Rr, 1)
    res = implicitize_map(RationalMap.from_pairs([(t, one), (t * t, one)]), ("x", "y"))
    assert res.total_degree == 2
    d = 1 + t * t
    res = implicitize_map(RationalMap.from_pairs([(1 - t * t, d), (2 * t, d)]), ("x", "y"))
    assert res.polynomial == P("x^2 + y^2 - 1", ("x", "y"))


def test_non_principal_is_an_error():
    U = ("u", "v")
    u, v = Polynomial.variables(U)
    one = Polynomial.const(U, 1)
    with pytest.raises(NonPrincipalError) as err:
        implicitize_map(RationalMap.from_pairs([(u, one), (u, one), (u, one)]), XYZ)
    assert len(err.value.generators) == 2


def test_certificate_is_enforced():
    U = ("u", "v")
    u, v = Polynomial.variables(U)
    one = Polynomial.const(U, 1)
    rm = RationalMap.from_pairs([(u, one), (v, one), (u * v, one)])
    good = P("z - x*y", XYZ)
    assert substitution_certificate(good, rm, XYZ).is_zero()
    bad = P("z - x*y - 1", XYZ)
    assert not substitution_certificate(bad, rm, XYZ).is_zero()
    with pytest.raises(CertificateError):
        ImplicitResult(bad, 2, "groebner", 0.0, substitution_certificate(bad, rm, XYZ), {})


def test_result_files(tmp_path):
    U = ("u", "v")
    u, v = Polynomial.variables(U)
    one = Polynomial.const(U, 1)
    res = implicitize_map(RationalMap.from_pairs([(u, one), (v, one), (u * u + v, one)]), XYZ)
    path = tmp_path / "s.poly"
    res.write(path)
    assert read_poly(path) == res.polynomial
    meta = (tmp_path / "s.poly.meta").read_text().splitlines()
    assert meta[0] == "degree: 2" and meta[1] == "method: groebner"
    assert meta[2].startswith("elapsed_s: ")
