"""Exact division, multivariate gcd (subresultant PRS) and normal forms of scalars."""

from __future__ import annotations

from fractions import Fraction
from math import gcd as igcd
from math import lcm as ilcm

from .monomial import MonomialOrder, guard_mask, pack, unpack
from .polynomial import GREVLEX, Polynomial, RegistryError
from .rational import GaussianRational


class InexactDivisionError(ArithmeticError):
    pass


def _coeff_map(p: Polynomial) -> dict:
    """Packed monomial -> Fraction (real) or GaussianRational."""
    if p.is_real():
        return dict(p._re)
    zero = Fraction(0)
    return {k: GaussianRational(p._re.get(k, zero), p._im.get(k, zero)) for k in p._keys()}


def _from_coeff_map(registry, d: dict) -> Polynomial:
    re, im = {}, {}
    for k, v in d.items():
        if isinstance(v, GaussianRational):
            if v.re:
                re[k] = v.re
            if v.im:
                im[k] = v.im
        elif v:
            re[k] = v
    return Polynomial._raw(registry, re, im)


def exact_div(a: Polynomial, b: Polynomial) -> Polynomial:
    """Quotient ``a / b``; raises InexactDivisionError when ``b`` does not divide ``a``."""
    if a.registry != b.registry:
        raise RegistryError(f"registry mismatch: {a.registry} vs {b.registry}")
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    # Packed-int order is lex with the last registry variable most significant.
    guard = guard_mask(a.nvars)
    r = _coeff_map(a)
    bd = _coeff_map(b)
    kb = max(bd)
    cb = bd[kb]
    tail = [(k, v) for k, v in bd.items() if k != kb]
    q = {}
    while r:
        kr = max(r)
        shift = kr - kb
        if shift < 0 or shift & guard:
            raise InexactDivisionError("divisor does not divide dividend")
        c = r.pop(kr) / cb
        q[shift] = c
        for k, v in tail:
            kk = k + shift
            s = r.get(kk, 0) - c * v
            if s:
                r[kk] = s
            else:
                r.pop(kk, None)
    return _from_coeff_map(a.registry, q)


def divides(b: Polynomial, a: Polynomial) -> bool:
    try:
        exact_div(a, b)
    except InexactDivisionError:
        return False
    return True


# univariate views ----------------------------------------------------------

def coeffs_in(p: Polynomial, var: str) -> dict[int, Polynomial]:
    """Coefficients of ``p`` as a polynomial in ``var`` (same registry, var-free)."""
    j = p.registry.index(var)
    n = p.nvars
    unit = pack([1 if t == j else 0 for t in range(n)])
    re: dict = {}
    im: dict = {}
    for k, v in p._re.items():
        e = unpack(k, n)[j]
        re.setdefault(e, {})[k - e * unit] = v
    for k, v in p._im.items():
        e = unpack(k, n)[j]
        im.setdefault(e, {})[k - e * unit] = v
    return {e: Polynomial._raw(p.registry, re.get(e, {}), im.get(e, {}))
            for e in sorted(set(re) | set(im))}


def from_coeffs(coeffs: dict[int, Polynomial], var: str, registry) -> Polynomial:
    x = Polynomial.var(registry, var)
    out = Polynomial.zero(registry)
    for e, c in coeffs.items():
        out = out + c * x ** e
    return out


def leading_coeff_in(p: Polynomial, var: str) -> Polynomial:
    cs = coeffs_in(p, var)
    return cs[max(cs)]


def prem(a: Polynomial, b: Polynomial, var: str) -> Polynomial:
    """Pseudo-remainder of ``a`` by ``b`` in ``var``."""
    db = b.degree(var)
    if db < 0:
        raise ZeroDivisionError("pseudo-division by zero")
    x = Polynomial.var(a.registry, var)
    lb = leading_coeff_in(b, var)
    r = a
    steps = max(a.degree(var) - db + 1, 0)
    while not r.is_zero() and r.degree(var) >= db:
        dr = r.degree(var)
        lr = leading_coeff_in(r, var)
        r = r * lb - lr * b * x ** (dr - db)
        steps -= 1
    if steps > 0:
        r = r * lb ** steps
    return r


# gcd -----------------------------------------------------------------------

def normalize_primitive_integer(p: Polynomial, order: MonomialOrder = GREVLEX) -> Polynomial:
    """Scale by a positive rational to coprime integers, then fix the sign so the
    leading coefficient under ``order`` is positive."""
    if p.is_zero():
        return p
    if not p.is_real():
        raise ValueError("normalize_primitive_integer needs real coefficients")
    den = 1
    for v in p._re.values():
        den = ilcm(den, v.denominator)
    nums = [v.numerator * (den // v.denominator) for v in p._re.values()]
    g = 0
    for v in nums:
        g = igcd(g, v)
    _, lc = p.leading_term(order)
    sign = -1 if lc.re < 0 else 1
    f = Fraction(den * sign, g)
    return p.scale(f)


def _canon(p: Polynomial) -> Polynomial:
    if p.is_constant():
        return Polynomial.const(p.registry, 1)
    return normalize_primitive_integer(p)


def content_in(p: Polynomial, var: str) -> Polynomial:
    out = Polynomial.zero(p.registry)
    for c in coeffs_in(p, var).values():
        out = gcd(out, c) if not out.is_zero() else _canon(c)
        if out.is_constant():
            return Polynomial.const(p.registry, 1)
    return out


def gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Greatest common divisor over Q, returned primitive with positive leading
    coefficient (grevlex). Recurses on the present variable of lowest maximal
    degree using the subresultant polynomial remainder sequence."""
    if a.registry != b.registry:
        raise RegistryError(f"registry mismatch: {a.registry} vs {b.registry}")
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    if not a.is_real() or not b.is_real():
        raise ValueError("gcd is implemented for real (rational) coefficients only")
    if a.is_zero():
        return _canon(b)
    if b.is_zero():
        return _canon(a)
    va, vb = set(a.variables_present()), set(b.variables_present())
    if not va or not vb:
        return Polynomial.const(a.registry, 1)
    present = [v for v in a.registry if v in va | vb]
    var = min(present, key=lambda v: (max(a.degree(v), b.degree(v)), a.registry.index(v)))
    if var not in va:
        return gcd(a, content_in(b, var))
    if var not in vb:
        return gcd(content_in(a, var), b)
    ca, cb = content_in(a, var), content_in(b, var)
    c = gcd(ca, cb)
    A, B = exact_div(a, ca), exact_div(b, cb)
    if A.degree(var) < B.degree(var):
        A, B = B, A
    g = Polynomial.const(a.registry, 1)
    h = Polynomial.const(a.registry, 1)
    while True:
        delta = A.degree(var) - B.degree(var)
        R = prem(A, B, var)
        if R.is_zero():
            break
        if R.degree(var) == 0:
            B = Polynomial.const(a.registry, 1)
            break
        A, B = B, exact_div(R, g * h ** delta)
        g = leading_coeff_in(A, var)
        if delta:
            h = exact_div(g ** delta, h ** (delta - 1)) if delta > 1 else g
    if B.is_constant():
        return _canon(c)
    B = exact_div(B, content_in(B, var))
    return _canon(c * B)


def squarefree_part(p: Polynomial) -> Polynomial:
    """``p / gcd(p, dp/dx_1, ..., dp/dx_n)`` over the variables present."""
    if p.is_zero():
        raise ValueError("squarefree part of zero")
    present = p.variables_present()
    if not present:
        return Polynomial.const(p.registry, 1)
    g = p
    for v in present:
        g = gcd(g, p.derivative(v))
        if g.is_constant():
            break
    return _canon(exact_div(p, g))


def squarefree_decomposition(p: Polynomial) -> list[tuple[Polynomial, int]]:
    """Pieces ``(A_k, k)``: ``A_k`` is the product of irreducible factors of
    multiplicity exactly ``k`` (canonically normalised, non-constant only)."""
    out = []
    k = 1
    cur = p
    while cur.variables_present():
        s = squarefree_part(cur)
        present = cur.variables_present()
        rest = cur
        for v in present:
            rest = gcd(rest, cur.derivative(v))
            if rest.is_constant():
                break
        s_next = squarefree_part(rest) if rest.variables_present() else Polynomial.const(p.registry, 1)
        piece = exact_div(s, s_next)
        if piece.variables_present():
            out.append((_canon(piece), k))
        cur = rest
        k += 1
    return out
