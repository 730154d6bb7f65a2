"""Timing harness for the elimination pipeline and the two kernel backends."""

from __future__ import annotations

import statistics
import time
from dataclasses import dataclass

from ._accel import HAVE_NUMBA
from .surfaces import surface_class, surface_degree

# (label, job, m, method, backend)
SUITES = {
    "implicitize": [
        ("degree m=2", surface_degree, 2, "groebner", None),
        ("class m=2", surface_class, 2, "groebner", None),
        ("class m=3", surface_class, 3, "groebner", None),
        ("degree m=2", surface_degree, 2, "groebner-modular", "numba"),
        ("degree m=2", surface_degree, 2, "groebner-modular", "numpy"),
        ("class m=3", surface_class, 3, "groebner-modular", "numba"),
        ("class m=3", surface_class, 3, "groebner-modular", "numpy"),
        ("degree m=3", surface_degree, 3, "interpolation", "numba"),
        ("degree m=3", surface_degree, 3, "interpolation", "numpy"),
    ],
    "degree3": [
        ("degree m=3", surface_degree, 3, "groebner", None),
        ("degree m=3", surface_degree, 3, "groebner-modular", "numba"),
        ("degree m=3", surface_degree, 3, "groebner-modular", "numpy"),
        ("degree m=3", surface_degree, 3, "interpolation", "numba"),
        ("degree m=3", surface_degree, 3, "interpolation", "numpy"),
    ],
}


@dataclass
class BenchRow:
    label: str
    method: str
    backend: str
    times: list
    degree: int

    @property
    def best(self) -> float:
        return min(self.times)

    @property
    def median(self) -> float:
        return statistics.median(self.times)


def run_suite(name: str = "implicitize", repeat: int = 3, progress=None):
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    rows = []
    warmed = set()
    for label, job, m, method, backend in SUITES[name]:
        if backend == "numba" and not HAVE_NUMBA:
            continue
        if backend is not None and (method, backend) not in warmed:
            # first call pays for JIT compilation (or cache load); keep it out of the numbers
            surface_class(2, method=method, backend=backend)
            warmed.add((method, backend))
        times = []
        degree = -1
        for _ in range(repeat):
            t0 = time.perf_counter()
            res = job(m, method=method, backend=backend)
            times.append(time.perf_counter() - t0)
            degree = res.total_degree
        row = BenchRow(label, method, backend or "-", times, degree)
        rows.append(row)
        if progress is not None:
            progress(row)
    return rows


def format_row(row: BenchRow) -> str:
    return (f"{row.label:<12} {row.method:<17} {row.backend:<6} deg={row.degree:<3} "
            f"best={row.best:8.3f}s median={row.median:8.3f}s")


def speedups(rows):
    """numpy/numba time ratios for rows that ran on both backends."""
    by_key = {(f"{r.label} {r.method}", r.backend): r for r in rows if r.backend != "-"}
    out = {}
    for (label, backend), r in by_key.items():
        if backend == "numba" and (label, "numpy") in by_key:
            out[label] = by_key[(label, "numpy")].best / r.best
    return out
