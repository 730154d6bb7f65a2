"""Floating-point evaluation in polar coordinates and the total curvature."""

from __future__ import annotations

import numpy as np

from .index import SurfaceIndex


def _as_index(idx, alpha=None) -> SurfaceIndex:
    if isinstance(idx, SurfaceIndex):
        return idx if alpha is None else SurfaceIndex(idx.m, alpha)
    return SurfaceIndex(idx, 0.0 if alpha is None else alpha)


def _zpow(zeta, k: float):
    if float(k).is_integer():
        return zeta ** int(k)
    with np.errstate(invalid="ignore", divide="ignore"):
        out = np.power(zeta, k)
    return np.where(zeta == 0, 0.0 if k > 0 else np.inf, out)


def polar_eval(idx, r, theta, alpha: float | None = None):
    """Point(s) ``Re(e^{-i alpha} B_m(r e^{i theta}))`` as an array ``(..., 3)``.

    ``idx`` is a SurfaceIndex or any m accepted by it (int, "p/q", float).
    Negative r is allowed (it is the point at angle theta + pi). Non-integer
    powers use the principal branch of the complex power.
    """
    ix = _as_index(idx, alpha)
    m = float(ix.m)
    r = np.asarray(r, dtype=float)
    theta = np.asarray(theta, dtype=float)
    zeta = r * np.exp(1j * theta)
    a = _zpow(zeta, m - 1) / (m - 1)
    b = _zpow(zeta, m + 1) / (m + 1)
    curve = np.stack([a - b, 1j * (a + b), 2.0 * _zpow(zeta, m) / m], axis=-1)
    return np.real(np.exp(-1j * ix.alpha) * curve)


def polar_grid(idx, r_values, theta_values, alpha: float | None = None):
    """Row-major grid: ``out[i, j] = polar_eval(r_values[i], theta_values[j])``."""
    R, T = np.meshgrid(np.asarray(r_values, float), np.asarray(theta_values, float),
                       indexing="ij")
    return polar_eval(idx, R, T, alpha)


def _np_eval(p, u, v):
    out = np.zeros_like(u)
    for (a, b), c in p.real_coefficients().items():
        out += float(c) * u ** a * v ** b
    return out


def _gauss_curvature_density(m):
    """``(e g - f^2) / E^3`` with the unnormalised second form of the conformal patch.

    Since E = G and F = 0, ``K dA = (e g - f^2) / E^3 du dv`` where e, f, g
    are contracted with ``x_u x x_v`` rather than the unit normal.
    """
    from .surface import cartesian_surface, fundamental_forms
    ff = fundamental_forms(cartesian_surface(m))
    return ff.e * ff.g - ff.f * ff.f, ff.E


def total_curvature_numeric(m, R: float, grid=(256, 64)) -> float:
    """Integral of ``K dA`` over the parameter disk ``|zeta| <= R``.

    The integrand comes from the fundamental forms of the m-th surface.
    Radial Gauss-Legendre after ``r = tan(s)`` (smooth on [0, atan R]),
    periodic trapezoid rule in theta.
    """
    SurfaceIndex(m)
    nr, nt = grid
    if R <= 0:
        raise ValueError("R must be positive")
    if nr < 16 or nt < 16:
        raise ValueError("grid sizes must be at least 16")
    num, E = _gauss_curvature_density(m)
    x, w = np.polynomial.legendre.leggauss(nr)
    smax = np.arctan(R)
    s = 0.5 * smax * (x + 1.0)
    ws = 0.5 * smax * w
    r = np.tan(s)
    dr = 1.0 / np.cos(s) ** 2
    theta = 2.0 * np.pi * np.arange(nt) / nt
    uu = r[:, None] * np.cos(theta)[None, :]
    vv = r[:, None] * np.sin(theta)[None, :]
    K_dA = _np_eval(num, uu, vv) / _np_eval(E, uu, vv) ** 3 * r[:, None]
    radial = (K_dA * (ws * dr)[:, None]).sum(axis=0)
    return float(radial.sum() * 2.0 * np.pi / nt)


def total_curvature_closed_form(R: float) -> float:
    return -4.0 * np.pi * R * R / (1.0 + R * R)
