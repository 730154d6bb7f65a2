"""The certificate suite behind ``boursurf verify``."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .poly import canonical_text
from .surfaces import (bour_curve, cartesian_surface, deltoid_curve, deltoid_sample_values,
                       fundamental_forms, gauss_map, has_branch_point_at_origin, integral_free_components,
                       isotropy_certificate, minimality_certificate, parallel_certificate,
                       phi_bour, profile_curve, quadric_certificate, quadric_coefficient,
                       ribaucour_class, rotation_identities,
                       self_intersection_identities, tangent_plane_identity,
                       total_curvature_numeric, weierstrass_data_from_curve, weierstrass_patch)
from .surfaces.curves import zeta_poly

DEFAULT_M_LIST = (2, 3, 4, 5, 6)
QUADRIC_RADII = (Fraction(1, 2), Fraction(1), Fraction(2))


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    witness: str

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.name}: {self.witness}"


@dataclass
class VerifyReport:
    checks: list = field(default_factory=list)

    def add(self, name: str, passed: bool, witness: str = "") -> None:
        self.checks.append(Check(name, bool(passed), witness))

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def exit_code(self) -> int:
        return 0 if self.ok else 1

    def failed(self):
        return [c for c in self.checks if not c.passed]

    def text(self) -> str:
        lines = [c.line() for c in self.checks]
        n_fail = len(self.failed())
        lines.append(f"{len(self.checks) - n_fail}/{len(self.checks)} checks passed")
        return "\n".join(lines)


def _zero(*polys) -> bool:
    return all(p.is_zero() for p in polys)


def _nonzero_witness(*polys) -> str:
    bad = [p for p in polys if not p.is_zero()]
    return "identically zero" if not bad else f"residual with {len(bad[0])} terms"


def _per_m(report: VerifyReport, m: int, quadric_perturb) -> None:
    curve = bour_curve(m)
    iso = isotropy_certificate(curve)
    report.add(f"isotropy m={m}", iso.is_zero(), _nonzero_witness(iso))

    data = weierstrass_data_from_curve(curve)
    F_ok = data.F == zeta_poly({m - 2: 1}) and data.G == zeta_poly({1: 1})
    report.add(f"weierstrass data m={m}", F_ok,
               f"F = {data.F}, G = {data.G}".replace("Polynomial", ""))
    report.add(f"weierstrass patch m={m}", weierstrass_patch(data) == curve,
               "patch reproduces the curve" if weierstrass_patch(data) == curve else "mismatch")

    S = cartesian_surface(m)
    ff = fundamental_forms(S)
    conf = (ff.E - ff.G1, ff.F1)
    report.add(f"conformality m={m}", _zero(*conf), _nonzero_witness(*conf))
    mc = minimality_certificate(S)
    report.add(f"minimality m={m}", mc.is_zero(), _nonzero_witness(mc))

    cr, dt = parallel_certificate(S)
    sign = dt.eval((1, 1))
    report.add(f"gauss map parallel m={m}", _zero(*cr) and sign > 0,
               f"cross product zero, dot(1,1) = {sign}" if _zero(*cr) else _nonzero_witness(*cr))

    branch = has_branch_point_at_origin(S)
    report.add(f"branch point m={m}", branch == (m >= 3),
               "branch point at 0" if branch else "no branch point")

    tp = tangent_plane_identity(m)
    report.add(f"tangent plane m={m}", tp.num.is_zero(), _nonzero_witness(tp.num))

    for r0 in QUADRIC_RADII:
        k = quadric_coefficient(m)
        if quadric_perturb is not None:
            k = quadric_perturb(k)
        res = quadric_certificate(m, r0, coefficient=k)
        report.add(f"quadric m={m} r0={r0}", res.is_zero(), _nonzero_witness(res))

    ifd = integral_free_components(phi_bour(m))
    same = ifd.as_curve() == curve
    report.add(f"integral-free m={m}", same and ifd.round_trip().is_zero(),
               "components equal the curve, round trip exact" if same else "components differ")
    dphi = (phi_bour(m) ** 2).total_degree()
    report.add(f"deg(phi^2) m={m}", dphi == 2 * m + 2 == ribaucour_class(m, 1),
               f"deg(phi^2) = {dphi}, 2q(p+q) = {ribaucour_class(m, 1)}")


def _global(report: VerifyReport, m_list) -> None:
    n = gauss_map()
    norm = sum((c * c for c in n.components[1:]), n.components[0] * n.components[0]) - 1
    report.add("gauss map unit length", norm.num.is_zero(), _nonzero_witness(norm.num))

    if 3 in m_list:
        si = self_intersection_identities(3)
        report.add("self-intersection u=0 m=3", _zero(*si), _nonzero_witness(*si))
        rot = rotation_identities(3)
        report.add("2pi/3 equivariance m=3", _zero(*rot), _nonzero_witness(*rot))

        prof = profile_curve(3)
        report.add("profile curve m=3", prof.total_degree == 4,
                   f"degree {prof.total_degree}: {canonical_text(prof.polynomial)}")
        f, cert = deltoid_curve(3)
        vals = deltoid_sample_values(f, 3)
        report.add("deltoid m=3", f.total_degree() == 4 and cert.is_zero()
                   and all(v == 0 for v in vals),
                   f"degree {f.total_degree()}, vanishes at {len(vals)} rational angles")

    for m in sorted({2, 3} & set(m_list)):
        K = total_curvature_numeric(m, 1000.0)
        rel = abs(K + 4 * math.pi) / (4 * math.pi)
        report.add(f"total curvature m={m}", rel < 1e-3, f"{K:.9f} (rel. err {rel:.2e})")


def run_verify(m_list=DEFAULT_M_LIST,
               quadric_perturb: Callable[[Fraction], Fraction] | None = None) -> VerifyReport:
    """Run every exact certificate for each m; ``quadric_perturb`` is a
    falsification hook applied to the quadric coefficient."""
    report = VerifyReport()
    for m in m_list:
        _per_m(report, int(m), quadric_perturb)
    _global(report, tuple(m_list))
    return report


__all__ = ["Check", "VerifyReport", "run_verify", "DEFAULT_M_LIST"]
