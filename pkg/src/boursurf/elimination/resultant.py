"""Sylvester resultants with fraction-free (Bareiss) elimination."""

from __future__ import annotations

from ..poly import Polynomial, RegistryError, exact_div
from ..poly.gcd import coeffs_in


def sylvester_matrix(p: Polynomial, q: Polynomial, var: str):
    """Rows of ``p`` coefficients first (deg q of them), then ``q`` rows."""
    m, n = p.degree(var), q.degree(var)
    cp, cq = coeffs_in(p, var), coeffs_in(q, var)
    zero = Polynomial.zero(p.registry)
    size = m + n
    rows = []
    for i in range(n):
        row = [zero] * size
        for e, c in cp.items():
            row[i + m - e] = c
        rows.append(row)
    for i in range(m):
        row = [zero] * size
        for e, c in cq.items():
            row[i + n - e] = c
        rows.append(row)
    return rows


def bareiss_det(rows) -> Polynomial:
    """Determinant of a square matrix of polynomials by Bareiss elimination."""
    a = [list(r) for r in rows]
    n = len(a)
    if n == 0:
        raise ValueError("empty matrix")
    reg = a[0][0].registry
    sign = 1
    prev = Polynomial.const(reg, 1)
    for k in range(n - 1):
        if a[k][k].is_zero():
            for r in range(k + 1, n):
                if not a[r][k].is_zero():
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return Polynomial.zero(reg)
        piv = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = exact_div(piv * a[i][j] - a[i][k] * a[k][j], prev)
        prev = piv
    det = a[n - 1][n - 1]
    return -det if sign < 0 else det


def resultant(p: Polynomial, q: Polynomial, var: str) -> Polynomial:
    """Sylvester resultant of ``p`` and ``q`` with respect to ``var``.

    Convention: the determinant of the Sylvester matrix whose first rows hold
    the coefficients of ``p``; e.g. ``resultant(x - a, x - b, x) == a - b``.
    """
    if p.registry != q.registry:
        raise RegistryError(f"registry mismatch: {p.registry} vs {q.registry}")
    if var not in p.registry:
        raise RegistryError(f"unknown variable {var!r}")
    if p.degree(var) < 1 or q.degree(var) < 1:
        raise ValueError(f"both polynomials need positive degree in {var!r}")
    return bareiss_det(sylvester_matrix(p, q, var))
