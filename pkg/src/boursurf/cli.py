"""Command-line front end.

Exit codes: 0 success, 1 verification or certificate failure, 2 invalid
input, 3 resource budget exceeded.
"""

from __future__ import annotations

import argparse
import math
import sys
from pathlib import Path

import numpy as np

from .elimination import Budget, BudgetExceeded, CertificateError, NonPrincipalError
from .elimination.implicit import METHODS
from .meshio import write_csv, write_obj
from .poly import canonical_text, poly_file_text
from .surfaces import (InvalidIndex, SurfaceIndex, deltoid_curve, deltoid_sample_values,
                       integral_free_components, parse_m, phi_bour, polar_grid, profile_curve,
                       ribaucour_class, ribaucour_degree, surface_class,
                       surface_degree, symbolic_m)
from .surfaces.reference import compare_class, compare_degree, compare_degree_rescaled

EXIT_OK, EXIT_FAIL, EXIT_INVALID, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _out(text: str = "") -> None:
    print(text)


def _m_symbolic(text) -> int:
    try:
        return symbolic_m(text)
    except InvalidIndex as exc:
        raise UsageError(str(exc)) from None


def _budget(args) -> Budget:
    return Budget(max_seconds=args.budget_seconds, max_pairs=args.max_pairs)


def _write_text(path, text: str) -> None:
    try:
        Path(path).write_text(text, encoding="utf-8", newline="\n")
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc}") from None


# ---------------------------------------------------------------- generate

def _domain(args):
    if args.paper_domain:
        r0, r1, t0, t1, closed = -1.0, 1.0, 0.0, math.pi, True
    else:
        r0, r1, t0, t1, closed = 0.0, 1.0, 0.0, 2 * math.pi, False
    if args.r0 is not None:
        r0 = args.r0
    if args.r1 is not None:
        r1 = args.r1
    if args.nr < 2 or args.ntheta < 2:
        raise UsageError("grid must be at least 2 x 2")
    if not r1 > r0:
        raise UsageError("need r1 > r0")
    r = np.linspace(r0, r1, args.nr)
    theta = np.linspace(t0, t1, args.ntheta, endpoint=closed)
    return r, theta


def cmd_generate(args) -> int:
    try:
        idx = SurfaceIndex(args.m, args.alpha)
    except InvalidIndex as exc:
        raise UsageError(str(exc)) from None
    r, theta = _domain(args)
    if not idx.is_integer and r.min() < 0:
        raise UsageError("non-integer m needs r >= 0 (real powers of negative radii)")
    if idx.m < 1 and r.min() <= 0 <= r.max():
        raise UsageError("m < 1 has a pole at zeta = 0; choose an r-range that avoids 0")
    pts = polar_grid(idx, r, theta)
    fmt = args.format or ("csv" if str(args.output).endswith(".csv") else "obj")
    try:
        if fmt == "csv":
            write_csv(args.output, r, theta, pts)
        else:
            write_obj(args.output, pts, comment=f"Bour surface m={args.m} alpha={args.alpha!r}"
                      f" grid {args.nr}x{args.ntheta}")
    except OSError as exc:
        raise UsageError(f"cannot write {args.output}: {exc}") from None
    _out(f"wrote {args.output} ({fmt}, {args.nr * args.ntheta} vertices)")
    return EXIT_OK


# ---------------------------------------------------------------- implicitize / class

def _report_implicit(kind, res, formula, args) -> None:
    _out(f"{kind}: {res.total_degree}")
    _out(f"method: {res.method}")
    _out(f"elapsed: {res.elapsed:.3f} s")
    _out(f"terms: {len(res.polynomial)}")
    _out("certificate: exact substitution gives 0")
    _out(f"closed form: {formula} ({'agrees' if formula == res.total_degree else 'DIFFERS'})")
    if args.output:
        res.write(args.output)
        _out(f"wrote {args.output} and {args.output}.meta")


def _run_implicit(job, args, kind, formula, compare) -> int:
    m = _m_symbolic(args.m)
    try:
        res = job(m, args)
    except InvalidIndex as exc:
        raise UsageError(str(exc)) from None
    except BudgetExceeded as exc:
        _out(f"budget exceeded: {exc.reason}")
        for k, v in sorted(exc.stats.items()):
            _out(f"  {k}: {v}")
        return EXIT_BUDGET
    except (CertificateError, NonPrincipalError) as exc:
        _out(f"FAILED: {type(exc).__name__}: {exc}")
        return EXIT_FAIL
    _report_implicit(kind, res, formula(m), args)
    if compare is not None and m in (3, 4):
        _out(compare(m, res.polynomial))
    return EXIT_OK if res.total_degree == formula(m) else EXIT_FAIL


def cmd_implicitize(args) -> int:
    if args.method == "resultant":
        raise UsageError("the resultant method applies to plane curves; use the curve command")

    def job(m, a):
        # plain Buchberger is impractical for m = 4; interpolation is the default there
        method = a.method or ("interpolation" if m == 4 else "groebner")
        return surface_degree(m, allow_long=a.allow_long, budget=_budget(a), method=method)

    def compare(m, f):
        diff = compare_degree(m, f)
        if m == 4 and not diff.agrees:
            return (diff.report() + "\nafter scaling coordinates by 2 (quoted terms belong to "
                    "the half-size surface):\n" + compare_degree_rescaled(m, f).report())
        return diff.report()

    return _run_implicit(job, args, "degree", ribaucour_degree, compare)


def cmd_class(args) -> int:
    if args.method == "resultant":
        raise UsageError("the resultant method applies to plane curves; use the curve command")

    def job(m, a):
        return surface_class(m, allow_large=a.allow_large, budget=_budget(a),
                             method=a.method or "groebner")

    return _run_implicit(job, args, "class", lambda m: ribaucour_class(m, 1),
                         lambda m, f: compare_class(m, f).report())


# ---------------------------------------------------------------- verify

def _m_list(text: str):
    try:
        vals = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise UsageError(f"--m-list expects comma-separated integers, got {text!r}") from None
    if not vals:
        raise UsageError("--m-list is empty")
    for v in vals:
        _m_symbolic(v)
    return tuple(vals)


def cmd_verify(args) -> int:
    from .verify import run_verify
    perturb = (lambda k: -k) if args.inject_quadric_flip else None
    report = run_verify(_m_list(args.m_list), quadric_perturb=perturb)
    _out(report.text())
    return report.exit_code


# ---------------------------------------------------------------- curve

def cmd_curve(args) -> int:
    m = _m_symbolic(args.m)
    if args.mode == "profile":
        res = profile_curve(m)
        text = res.poly_text()
        _out(f"profile curve (theta = 0) of m={m}: degree {res.total_degree}")
        _out(canonical_text(res.polynomial))
        _out("certificate: exact substitution gives 0")
    else:
        try:
            f, cert = deltoid_curve(m, _budget(args))
        except BudgetExceeded as exc:
            _out(f"budget exceeded: {exc.reason}")
            return EXIT_BUDGET
        vals = deltoid_sample_values(f, m)
        ok = cert.is_zero() and all(v == 0 for v in vals)
        text = poly_file_text(f)
        _out(f"boundary curve (r = 1, xy-projection) of m={m}: degree {f.total_degree()}")
        _out(canonical_text(f))
        _out(f"vanishes at {sum(v == 0 for v in vals)}/{len(vals)} exact sample angles; "
             f"circle certificate {'0' if cert.is_zero() else 'NONZERO'}")
        if not ok:
            return EXIT_FAIL
    if args.output:
        _write_text(args.output, text)
        _out(f"wrote {args.output}")
    return EXIT_OK


# ---------------------------------------------------------------- integral-free / formulas

def cmd_integral_free(args) -> int:
    m = _m_symbolic(args.m)
    phi = phi_bour(m)
    data = integral_free_components(phi)
    _out(f"phi = {canonical_text(phi)}")
    for name, f in (("f1", data.f1), ("f2", data.f2), ("f3", data.f3)):
        _out(f"{name} = {canonical_text(f)}")
    ok = data.round_trip().is_zero()
    _out(f"round trip: {'OK' if ok else 'FAILED'}")
    d = (phi * phi).total_degree()
    cl = ribaucour_class(m, 1)
    _out(f"deg(phi^2) = {d}, 2m+2 = {2 * m + 2}, class formula 2q(p+q) = {cl}")
    return EXIT_OK if ok and d == cl else EXIT_FAIL


def cmd_formulas(args) -> int:
    try:
        val = parse_m(args.m)
    except InvalidIndex as exc:
        raise UsageError(str(exc)) from None
    if isinstance(val, float):
        raise UsageError("the class formula needs a rational m = p/q")
    if "/" in args.m and args.m.replace(" ", "") != f"{val.numerator}/{val.denominator}":
        raise UsageError(f"{args.m} is not in lowest terms (p/q with q >= 2 and gcd(p, q) = 1)")
    try:
        cl = ribaucour_class(val.numerator, val.denominator)
    except InvalidIndex as exc:
        raise UsageError(str(exc)) from None
    deg = ribaucour_degree(int(val)) if val.denominator == 1 and val >= 2 else None
    _out(f"m = {val}: cl {cl}, deg {deg if deg is not None else 'n/a'}")
    return EXIT_OK


# ---------------------------------------------------------------- bench

def cmd_bench(args) -> int:
    from .bench import format_row, run_suite, speedups
    try:
        rows = run_suite(args.suite, args.repeat, progress=lambda r: _out(format_row(r)))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    for label, ratio in sorted(speedups(rows).items()):
        _out(f"{label}: numba is {ratio:.1f}x faster than numpy")
    return EXIT_OK


# ---------------------------------------------------------------- parser

def _add_budget(p) -> None:
    p.add_argument("--budget-seconds", type=float, default=None, help="wall-clock limit")
    p.add_argument("--max-pairs", type=int, default=None, help="S-pair reduction limit")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="boursurf",
                                 description="Bour minimal surfaces: meshes, exact "
                                             "certificates and implicit equations.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="sample the surface on a polar grid (OBJ or CSV)")
    p.add_argument("--m", required=True, help="index: integer, p/q or real")
    p.add_argument("--alpha", type=float, default=0.0, help="associated-family phase (rad)")
    p.add_argument("--r0", type=float, default=None)
    p.add_argument("--r1", type=float, default=None)
    p.add_argument("--nr", type=int, default=32)
    p.add_argument("--ntheta", type=int, default=64)
    p.add_argument("--paper-domain", action="store_true",
                   help="sample r in [-1, 1], theta in [0, pi] instead of the full disk")
    p.add_argument("--format", choices=("obj", "csv"), default=None)
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_generate)

    for name, func, flag, help_ in (
            ("implicitize", cmd_implicitize, "--allow-long", "Cartesian implicit equation"),
            ("class", cmd_class, "--allow-large", "implicit equation in tangential coordinates")):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--m", required=True)
        p.add_argument("--method", choices=METHODS, default=None,
                       help="default: groebner (interpolation for implicitize --m 4)")
        p.add_argument(flag, action="store_true", dest=flag[2:].replace("-", "_"))
        _add_budget(p)
        p.add_argument("-o", "--output", default=None)
        p.set_defaults(func=func)

    p = sub.add_parser("verify", help="run the exact certificate suite")
    p.add_argument("--m-list", default="2,3,4,5,6")
    p.add_argument("--inject-quadric-flip", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("curve", help="plane sections: profile (theta = 0) or boundary deltoid")
    p.add_argument("--m", default="3")
    p.add_argument("--mode", choices=("profile", "deltoid"), default="profile")
    _add_budget(p)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_curve)

    p = sub.add_parser("integral-free", help="integral-free Weierstrass data")
    p.add_argument("--m", required=True)
    p.set_defaults(func=cmd_integral_free)

    p = sub.add_parser("formulas", help="closed-form class and degree")
    p.add_argument("--m", required=True, help="integer or p/q")
    p.set_defaults(func=cmd_formulas)

    p = sub.add_parser("bench", help="time the elimination pipeline on both backends")
    p.add_argument("--suite", default="implicitize")
    p.add_argument("--repeat", type=int, default=3)
    p.set_defaults(func=cmd_bench)
    return ap


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on bad usage already
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
