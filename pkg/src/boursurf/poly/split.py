"""Real and imaginary parts of a holomorphic polynomial under ``zeta = u + i*v``."""

from __future__ import annotations

from .polynomial import Polynomial, RegistryError
from .rational import GaussianRational


def split_real_imag(p: Polynomial, realvars=("u", "v"), var: str | None = None):
    """Return ``(Re p(u+iv), Im p(u+iv))`` as real polynomials over ``realvars``.

    ``p`` must be univariate: at most one registry variable may occur (``var``
    picks it explicitly; otherwise the single variable present, or the only
    registry entry, is used).
    """
    present = p.variables_present()
    if var is None:
        if len(present) > 1:
            raise RegistryError(f"expected a univariate polynomial, found variables {present}")
        if present:
            var = present[0]
        elif len(p.registry) == 1:
            var = p.registry[0]
        else:
            var = None
    elif any(v != var for v in present):
        raise RegistryError(f"expected a polynomial in {var!r} only, found {present}")
    realvars = tuple(realvars)
    if len(realvars) != 2:
        raise ValueError("realvars must name exactly two variables")
    u, v = Polynomial.variables(realvars)
    if var is None:
        c = p.constant_term()
        return Polynomial.const(realvars, c.re), Polynomial.const(realvars, c.im)
    z = u + v.scale(GaussianRational(0, 1))
    img = p.substitute({var: z}, registry=realvars)
    re = img.real_part()
    im = img.imag_part()
    return re, im
