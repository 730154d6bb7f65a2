import pytest

from boursurf.bench import SUITES, BenchRow, format_row, run_suite, speedups
from boursurf.cli import main


def test_speedups_pair_backends():
    rows = [BenchRow("class m=3", "groebner-modular", "numba", [1.0, 2.0], 8),
            BenchRow("class m=3", "groebner-modular", "numpy", [3.0], 8),
            BenchRow("class m=3", "groebner", "-", [5.0], 8),
            BenchRow("degree m=3", "interpolation", "numba", [2.0], 16)]
    assert speedups(rows) == {"class m=3 groebner-modular": 3.0}
    assert "best=   1.000s" in format_row(rows[0])


def test_suites_cover_both_backends():
    for rows in SUITES.values():
        for method in {r[3] for r in rows if r[4] is not None}:
            assert {r[4] for r in rows if r[3] == method} == {"numba", "numpy"}


def test_unknown_suite():
    with pytest.raises(ValueError):
        run_suite("nope")
    assert main(["bench", "--suite", "nope"]) == 2


def test_run_small_suite(monkeypatch):
    from boursurf import bench
    from boursurf.surfaces import surface_class
    monkeypatch.setitem(bench.SUITES, "tiny", [
        ("class m=2", surface_class, 2, "groebner-modular", "numba"),
        ("class m=2", surface_class, 2, "groebner-modular", "numpy")])
    seen = []
    rows = run_suite("tiny", repeat=1, progress=seen.append)
    assert [r.degree for r in rows] == [6, 6] and seen == rows
