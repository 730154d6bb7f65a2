#!/usr/bin/env python3
"""Compare the numba and numpy modular kernels on the implicitization jobs.

Usage: python benchmarks/bench_backends.py [--suite implicitize|degree3] [--repeat N]

The exact (fraction-free integer) Buchberger runs are listed too as a baseline.
The first call per backend is a warmup (JIT compilation or cache load) and is
not timed.
"""

import argparse
import json
import platform
import sys

from boursurf import _accel
from boursurf.bench import SUITES, format_row, run_suite, speedups


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--suite", choices=sorted(SUITES), default="implicitize")
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--json", help="also write the timings to this file")
    args = ap.parse_args(argv)

    print(f"python {platform.python_version()}, numba available: {_accel.HAVE_NUMBA}")
    print(f"suite {args.suite}, {args.repeat} repeats\n")
    rows = run_suite(args.suite, args.repeat, progress=lambda r: print(format_row(r), flush=True))
    print()
    ratios = speedups(rows)
    for label, ratio in sorted(ratios.items()):
        print(f"{label}: numba {ratio:.1f}x faster than numpy")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump({"suite": args.suite,
                       "rows": [{"label": r.label, "method": r.method, "backend": r.backend,
                                 "degree": r.degree, "times": r.times} for r in rows],
                       "speedup": ratios}, fh, indent=2)
    return 0


if __name__ == "__main__":
    sys.exit(main())
