"""Published reference values and a term-level comparison report.

The printed equations are not ground truth: comparisons are informational,
and pass/fail is decided by the exact substitution certificates.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..poly import Polynomial, canonical_text, normalize_primitive_integer, poly_parse
from .tangential import CARTESIAN_VARS, TANGENTIAL_VARS

# Quoted subsets of the Cartesian implicit equations (remaining terms omitted in print).
DEGREE_QUOTED = {
    3: ("43046721*z^16 - 859963392*x^4*z^6 - 764411904*x^4*y^2*z^4"
        " - 1719926784*x^2*y^2*z^6 + 509607936*x^2*y^4*z^4", 74),
    4: ("48466299163780426235904*z^25 - 147907407116029132800000*x^4*z^20"
        " + 887444442696174796800000*x^2*y^2*z^20 - 147907407116029132800000*y^4*z^20"
        " - 2640558873378816000000000*x^8*z^15", 238),
}

# The quoted m = 4 terms belong to the primitive equation of f(2x, 2y, 2z),
# i.e. of the surface scaled by 1/2; the m = 3 terms need no rescaling.
DEGREE_QUOTED_SCALE = {3: 1, 4: 2}

# Full printed tangential equations.
CLASS_PRINTED = {
    3: ("9*ub^8 + 72*ub^7 + 144*ub^6 + 288*ub^5*wb^2 + 192*ub^3*wb^4 + 8*ub^6*wb^2"
        " - 48*ub^4*vb^2*wb^2 - 576*ub*vb^2*wb^4 + 81*ub^2*vb^6 + 432*ub^4*vb^2"
        " - 45*ub^6*vb^2 - 72*ub^5*vb^2 + 432*ub^2*vb^4 - 360*ub^3*vb^4 - 216*ub*vb^6"
        " + 27*ub^4*vb^4 + 144*vb^6 - 576*ub^3*vb^2*wb^2 + 72*ub^2*vb^4*wb^2"
        " - 864*ub*vb^4*wb^2"),
    4: ("900*ub^8*wb + 15*ub^8*wb^2 + 15*vb^8*wb^2 - 180*ub^2*wb^2 - 180*ub^2*vb^6*wb^2"
        " + 3600*ub^2*vb^6*wb + 416*ub^4*vb^6 - 3600*ub^2*vb^6 - 3600*ub^6*vb^2"
        " + 8640*ub^2*vb^2*wb^5 - 176*ub^2*vb^8 - 5400*ub^4*vb^4 + 416*ub^6*vb^4"
        " - 900*vb^8*wb - 900*vb^8 + 16*vb^10 + 16*ub^10 - 900*ub^8 - 1440*vb^4*wb^5"
        " - 1440*ub^4*wb^5 - 2400*vb^6*wb^3 + 12000*ub^4*vb^2*wb^3 + 3600*ub^6*vb^2*wb"
        " - 180*ub^6*vb^2*wb^2 - 176*ub^8*vb^2 - 2400*ub^6*wb^3 - 9000*ub^4*vb^4*wb"
        " + 12000*ub^2*vb^4*wb^3 + 570*ub^4*vb^4*wb^2"),
}

# Printed profile quartic for m = 3. The first exponent is a misprint:
# the resultant gives 1024*x^3 (the printed x^2 fails the substitution check).
PROFILE_PRINTED = "1024*x^2 + 864*x*z^2 - 288*z^2 + 81*z^4"
PROFILE_DERIVED = "1024*x^3 + 864*x*z^2 - 288*z^2 + 81*z^4"

DEGREES = {2: 9, 3: 16, 4: 25}
CLASSES = {2: 6, 3: 8, 4: 10}


def degree_reference(m: int) -> Polynomial:
    return poly_parse(DEGREE_QUOTED[m][0], CARTESIAN_VARS)


def class_reference(m: int) -> Polynomial:
    return poly_parse(CLASS_PRINTED[m], TANGENTIAL_VARS)


@dataclass
class TermDiff:
    """Term-level comparison of a computed polynomial against a printed one."""
    sign: int
    matched: int
    mismatched: list = field(default_factory=list)   # (exps, computed, printed)
    missing: list = field(default_factory=list)      # printed terms absent from computed
    extra: list = field(default_factory=list)        # computed terms absent from print
    subset: bool = False
    registry: tuple = ()

    @property
    def agrees(self) -> bool:
        if self.subset:
            return not self.mismatched and not self.missing
        return not (self.mismatched or self.missing or self.extra)

    def _mono(self, exps) -> str:
        return canonical_text(Polynomial.monomial(self.registry, exps)) if self.registry else str(exps)

    def report(self) -> str:
        kind = "quoted subset" if self.subset else "full equation"
        lines = [f"comparison ({kind}): {self.matched} matching terms, "
                 f"{len(self.mismatched)} coefficient mismatches, "
                 f"{len(self.missing)} printed-only, "
                 + ("" if self.subset else f"{len(self.extra)} computed-only, ")
                 + f"global sign {self.sign:+d}"]
        for e, a, b in self.mismatched:
            lines.append(f"  mismatch {self._mono(e)}: computed {a}, printed {b}")
        for e, b in self.missing:
            lines.append(f"  printed only {self._mono(e)}: {b}")
        if not self.subset:
            for e, a in self.extra:
                lines.append(f"  computed only {self._mono(e)}: {a}")
        lines.append("status: " + ("agrees" if self.agrees else "differs (informational)"))
        return "\n".join(lines)


def _int_terms(p: Polynomial) -> dict:
    return {e: int(c) for e, c in p.real_coefficients().items()}


def compare_terms(computed: Polynomial, printed: Polynomial, subset: bool = False) -> TermDiff:
    """Diff after primitive integer normalization, allowing one global sign.

    With ``subset`` the printed polynomial lists only some terms; then the
    computed polynomial keeps its own content (the quoted coefficients are
    those of the primitive equation) and extra computed terms are ignored.
    """
    printed = printed.to_registry(computed.registry)
    a = _int_terms(normalize_primitive_integer(computed))
    b = _int_terms(printed if subset else normalize_primitive_integer(printed))
    best = None
    for sign in (1, -1):
        hits = sum(1 for e, c in b.items() if a.get(e) == sign * c)
        if best is None or hits > best[1]:
            best = (sign, hits)
    sign = best[0]
    diff = TermDiff(sign=sign, matched=0, subset=subset, registry=computed.registry)
    for e, c in sorted(b.items(), reverse=True):
        if e not in a:
            diff.missing.append((e, c))
        elif a[e] == sign * c:
            diff.matched += 1
        else:
            diff.mismatched.append((e, a[e], sign * c))
    diff.extra = [(e, a[e]) for e in sorted(a, reverse=True) if e not in b]
    return diff


def compare_degree(m: int, computed: Polynomial) -> TermDiff:
    return compare_terms(computed, degree_reference(m), subset=True)


def compare_class(m: int, computed: Polynomial) -> TermDiff:
    return compare_terms(computed, class_reference(m))



def rescale_coordinates(f: Polynomial, s) -> Polynomial:
    """Primitive form of ``f(s*x, s*y, ...)``: the equation of the image scaled by 1/s."""
    subs = {v: Polynomial.var(f.registry, v).scale(s) for v in f.registry}
    return normalize_primitive_integer(f.substitute(subs, f.registry))


def compare_degree_rescaled(m: int, computed: Polynomial) -> TermDiff:
    """Quoted-subset comparison after the coordinate rescaling of DEGREE_QUOTED_SCALE."""
    return compare_degree(m, rescale_coordinates(computed, DEGREE_QUOTED_SCALE[m]))
