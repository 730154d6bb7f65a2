"""Elimination, saturation and implicitization with exact certificates."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from pathlib import Path

from ..poly import (GREVLEX, MonomialOrder, Polynomial, RationalMap, RegistryError,
                    exact_div, gcd, normalize_primitive_integer, poly_file_text,
                    squarefree_decomposition, squarefree_part)
from .buchberger import buchberger_reduced
from .ideal import UNLIMITED, Budget, Ideal
from .interpolate import interpolate_implicit
from .modular import modular_groebner
from .resultant import resultant

METHODS = ("groebner", "groebner-modular", "interpolation", "resultant")


class NonPrincipalError(ArithmeticError):
    """The elimination ideal has more than one (or no) generator."""

    def __init__(self, generators):
        self.generators = list(generators)
        listing = "; ".join(str(g) for g in self.generators) or "<none>"
        super().__init__(f"elimination ideal is not principal: {listing}")


class CertificateError(ArithmeticError):
    pass


def _fresh(name: str, taken) -> str:
    out, k = name, 0
    while out in taken:
        k += 1
        out = f"{name}{k}"
    return out


def _elim_free(p: Polynomial, elim) -> bool:
    return not set(p.variables_present()) & set(elim)


def eliminate(ideal: Ideal, elim_vars, budget: Budget = UNLIMITED, method: str = "groebner"):
    """Generators of the elimination ideal ``ideal ∩ Q[remaining variables]``.

    Computed as the reduced-basis elements free of ``elim_vars`` under the
    block order with ``elim_vars`` in the outer block (grevlex in each block).
    The returned polynomials keep the ideal's registry.
    """
    return _eliminate(ideal, elim_vars, budget, method)[0]


def _eliminate(ideal, elim_vars, budget, method, backend=None):
    elim = tuple(v for v in ideal.registry if v in set(elim_vars))
    missing = set(elim_vars) - set(ideal.registry)
    if missing:
        raise RegistryError(f"elimination variables {sorted(missing)} not in registry")
    order = MonomialOrder.block(elim) if elim else GREVLEX
    work = ideal.with_order(order)
    if method == "groebner":
        gb = buchberger_reduced(work, budget)
        elements = gb.elements
    elif method == "groebner-modular":
        idx = [j for j, v in enumerate(ideal.registry) if v in elim]
        gb = modular_groebner(work, budget, keep=lambda e: all(e[j] == 0 for j in idx),
                              backend=backend)
        elements = gb.elements
    else:
        raise ValueError(f"unknown elimination method {method!r}")
    return [g for g in elements if _elim_free(g, elim)], gb.stats


def saturate(ideal: Ideal, f: Polynomial, var: str = "t") -> Ideal:
    """Rabinowitsch trick: add a fresh variable ``t`` and the generator ``t*f - 1``.

    The fresh variable is placed first in the registry; eliminating it gives
    the saturation ``I : f^∞``.
    """
    if f.is_zero():
        raise ValueError("cannot saturate by the zero polynomial")
    if f.registry != ideal.registry:
        raise RegistryError(f"registry mismatch: {f.registry} vs {ideal.registry}")
    t = _fresh(var, ideal.registry)
    reg = (t,) + ideal.registry
    gens = tuple(g.to_registry(reg) for g in ideal.generators)
    tf = Polynomial.var(reg, t) * f.to_registry(reg) - 1
    return Ideal(gens + (tf,), ideal.order)


@dataclass
class ImplicitResult:
    polynomial: Polynomial
    total_degree: int
    method: str
    elapsed: float
    certificate: Polynomial
    stats: dict = field(default_factory=dict)

    def __post_init__(self):
        if not self.certificate.is_zero():
            raise CertificateError("exact substitution certificate is nonzero")
        if self.total_degree != self.polynomial.total_degree():
            raise ValueError("total_degree does not match the polynomial")

    @property
    def certified(self) -> bool:
        return self.certificate.is_zero()

    def poly_text(self) -> str:
        return poly_file_text(self.polynomial)

    def sidecar_text(self) -> str:
        return (f"degree: {self.total_degree}\nmethod: {self.method}\n"
                f"elapsed_s: {self.elapsed:.3f}\n")

    def write(self, path) -> Path:
        """Write ``path`` (.poly) and ``path + '.meta'`` (degree/method/timing)."""
        path = Path(path)
        path.write_text(self.poly_text(), encoding="utf-8")
        meta = path.with_name(path.name + ".meta")
        meta.write_text(self.sidecar_text(), encoding="utf-8")
        return meta


def substitution_certificate(f: Polynomial, rmap: RationalMap, targets) -> Polynomial:
    """``f(num_1/den_1, ...)`` times ``prod den_i^{deg_i f}``: a polynomial in the
    parameters that is zero iff ``f`` vanishes on the image of the map."""
    targets = tuple(targets)
    reg = rmap.registry
    degs = [f.degree(t) for t in targets]
    pows_n, pows_d = [], []
    for comp, d in zip(rmap.components, degs):
        pn = [Polynomial.const(reg, 1)]
        pd = [Polynomial.const(reg, 1)]
        for _ in range(max(d, 0)):
            pn.append(pn[-1] * comp.num)
            pd.append(pd[-1] * comp.den)
        pows_n.append(pn)
        pows_d.append(pd)
    idx = [f.registry.index(t) for t in targets]
    others = [v for v in f.variables_present() if v not in targets]
    if others:
        raise RegistryError(f"implicit polynomial uses non-target variables {others}")
    total = Polynomial.zero(reg)
    for exps, c in f.terms.items():
        term = Polynomial.const(reg, c)
        for k, j in enumerate(idx):
            e = exps[j]
            term = term * pows_n[k][e] * pows_d[k][degs[k] - e]
        total = total + term
    return total


def _canonical(p: Polynomial, targets) -> Polynomial:
    return normalize_primitive_integer(p.to_registry(tuple(targets)))


def implicitize_map(rmap: RationalMap, target_vars, budget: Budget = UNLIMITED,
                    method: str = "groebner", backend: str | None = None) -> ImplicitResult:
    """Implicit equation of the image of a rational curve (1 parameter, 2
    components) or surface (2 parameters, 3 components).

    Generators ``target_i * den_i - num_i``, saturated by the product of the
    distinct non-constant denominators (via its squarefree lcm), with the
    parameters eliminated. The single elimination generator is returned in
    canonical primitive form together with its exact substitution certificate.
    ``backend`` picks the modular kernels (numba/numpy) for groebner-modular
    and interpolation. The interpolation method solves for the kernel of the
    evaluated monomials instead of eliminating (see ``interpolate``); it
    honours the time, degree and cancel parts of the budget.
    """
    t0 = time.perf_counter()
    params = rmap.registry
    targets = tuple(target_vars)
    if len(targets) != len(rmap):
        raise ValueError("one target variable per component is required")
    if len(rmap) != len(params) + 1:
        raise ValueError(f"need {len(params) + 1} components for {len(params)} parameters")
    if set(targets) & set(params):
        raise RegistryError("target variables must differ from the parameters")
    if method == "resultant":
        if len(params) != 1:
            raise ValueError("the resultant method handles plane curves only")
        comps = rmap.components
        res = _profile(comps[0].num, comps[0].den, comps[1].num, comps[1].den,
                       params[0], targets, rmap)
        res.elapsed = time.perf_counter() - t0
        return res
    if method == "interpolation":
        f, stats = interpolate_implicit(rmap, targets, budget, backend)
        f = _canonical(f, targets)
        cert = substitution_certificate(f, rmap, targets)
        if not cert.is_zero():
            raise CertificateError("interpolated result does not vanish on the parametrization")
        return ImplicitResult(f, f.total_degree(), method, time.perf_counter() - t0, cert, stats)
    reg = params + targets
    gens = []
    dens = []
    for comp, tv in zip(rmap.components, targets):
        num, den = comp.num.to_registry(reg), comp.den.to_registry(reg)
        gens.append(Polynomial.var(reg, tv) * den - num)
        if not den.is_constant() and not any(den == d for d in dens):
            dens.append(den)
    ideal = Ideal(tuple(gens), GREVLEX)
    elim = params
    if dens:
        # I : (d1 d2 ...)^inf only depends on the radical of the product, so the
        # squarefree lcm of the denominators gives the same ideal more cheaply
        acc = dens[0]
        for d in dens[1:]:
            acc = exact_div(acc * d, gcd(acc, d))
        ideal = saturate(ideal, squarefree_part(acc))
        elim = (ideal.registry[0],) + params
    gens_out, stats = _eliminate(ideal, elim, budget, method, backend)
    if len(gens_out) != 1:
        raise NonPrincipalError([_canonical(g, targets) for g in gens_out])
    f = _canonical(gens_out[0], targets)
    cert = substitution_certificate(f, rmap, targets)
    if not cert.is_zero():
        raise CertificateError(f"{method} result does not vanish on the parametrization")
    return ImplicitResult(f, f.total_degree(), method, time.perf_counter() - t0, cert, stats)


def _profile(xn, xd, zn, zd, var, targets, rmap):
    reg = (var,) + tuple(targets)
    X = Polynomial.var(reg, targets[0])
    Z = Polynomial.var(reg, targets[1])
    p = X * xd.to_registry(reg) - xn.to_registry(reg)
    q = Z * zd.to_registry(reg) - zn.to_registry(reg)
    if p.degree(var) < 1 or q.degree(var) < 1:
        raise ValueError("constant parametrization component")
    res = resultant(p, q, var)
    if res.is_zero():
        raise ArithmeticError("resultant vanishes identically (common factor in the parameter)")
    kept = []
    for piece, _ in squarefree_decomposition(res):
        piece = _canonical(piece, targets)
        if substitution_certificate(piece, rmap, targets).is_zero():
            kept.append(piece)
    if len(kept) != 1:
        raise NonPrincipalError(kept)
    f = kept[0]
    cert = substitution_certificate(f, rmap, targets)
    return ImplicitResult(f, f.total_degree(), "resultant", 0.0, cert,
                          {"resultant_degree": res.total_degree()})


def implicitize_profile(x_of_r: Polynomial, z_of_r: Polynomial, var: str | None = None,
                        targets=("x", "z")) -> ImplicitResult:
    """Implicit plane curve of ``(x(r), z(r))`` by a resultant in ``r``,
    squarefree decomposition and certificate filtering of the pieces."""
    t0 = time.perf_counter()
    if x_of_r.registry != z_of_r.registry:
        raise RegistryError("both components need the same registry")
    present = set(x_of_r.variables_present()) | set(z_of_r.variables_present())
    if var is None:
        if len(present) != 1:
            raise ValueError("components must be univariate in one common variable")
        var = present.pop()
    if not x_of_r.variables_present() or not z_of_r.variables_present():
        raise ValueError("constant parametrization component")
    reg = (var,)
    xr, zr = x_of_r.to_registry(reg), z_of_r.to_registry(reg)
    one = Polynomial.const(reg, 1)
    rmap = RationalMap.from_pairs([(xr, one), (zr, one)])
    res = _profile(xr, one, zr, one, var, targets, rmap)
    res.elapsed = time.perf_counter() - t0
    return res
