import hashlib
import subprocess
import sys

import numpy as np
import pytest

from boursurf.cli import EXIT_BUDGET, EXIT_FAIL, EXIT_INVALID, EXIT_OK, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def obj_vertices(path):
    rows = [ln.split()[1:] for ln in path.read_text().splitlines() if ln.startswith("v ")]
    return np.array(rows, dtype=float)


def digest(path):
    return hashlib.sha256(path.read_bytes()).hexdigest()


# ---------------------------------------------------------------- generate

def test_generate_default_vertex(tmp_path, capsys):
    out = tmp_path / "b3.obj"
    code, _, _ = run(capsys, "generate", "--m", "3", "-o", str(out))
    assert code == EXIT_OK
    lines = out.read_text().splitlines()
    # grid is r-major: (r = 1, theta = 0) is the first vertex of the last ring
    verts = [ln for ln in lines if ln.startswith("v ")]
    assert len(verts) == 32 * 64
    assert verts[31 * 64] == "v 0.25 0 0.666666667"


def test_generate_associated_family_differs(tmp_path, capsys):
    a, b = tmp_path / "a.obj", tmp_path / "b.obj"
    assert run(capsys, "generate", "--m", "2", "-o", str(a))[0] == EXIT_OK
    assert run(capsys, "generate", "--m", "2", "--alpha", "1.5707963267948966", "-o", str(b))[0] == 0
    va, vb = obj_vertices(a), obj_vertices(b)
    assert va.shape == vb.shape and not np.allclose(va, vb)


@pytest.mark.parametrize("fmt", ["obj", "csv"])
def test_generate_is_byte_deterministic(tmp_path, capsys, fmt):
    paths = [tmp_path / f"run{k}.{fmt}" for k in range(2)]
    for p in paths:
        assert run(capsys, "generate", "--m", "5/2", "--alpha", "0.3", "--nr", "9",
                   "--ntheta", "11", "-o", str(p))[0] == EXIT_OK
    assert digest(paths[0]) == digest(paths[1])


def test_generate_small_grid_and_csv(tmp_path, capsys):
    obj = tmp_path / "g.obj"
    run(capsys, "generate", "--m", "3", "--nr", "2", "--ntheta", "2", "--r0", "0.5", "-o", str(obj))
    lines = obj.read_text().splitlines()
    assert sum(ln.startswith("v ") for ln in lines) == 4
    assert sum(ln.startswith("f ") for ln in lines) == 1
    csv = tmp_path / "g.csv"
    assert run(capsys, "generate", "--m", "3", "--nr", "3", "--ntheta", "4", "-o", str(csv))[0] == 0
    rows = csv.read_text().splitlines()
    assert rows[0] == "r,theta,x,y,z" and len(rows) == 13


def test_generate_figure_domain(tmp_path, capsys):
    out = tmp_path / "p.csv"
    run(capsys, "generate", "--m", "3", "--paper-domain", "--nr", "3", "--ntheta", "3",
        "-o", str(out))
    data = np.loadtxt(out, delimiter=",", skiprows=1)
    assert data[:, 0].min() == -1 and data[:, 0].max() == 1
    assert data[:, 1].max() == pytest.approx(np.pi)


@pytest.mark.parametrize("argv", [
    ("generate", "--m", "1", "-o", "x.obj"),
    ("generate", "--m", "0", "-o", "x.obj"),
    ("generate", "--m", "2.5", "--paper-domain", "-o", "x.obj"),
    ("generate", "--m", "1/2", "-o", "x.obj"),
    ("generate", "--m", "3", "--nr", "1", "-o", "x.obj"),
])
def test_generate_rejects(tmp_path, capsys, monkeypatch, argv):
    monkeypatch.chdir(tmp_path)
    code, _, err = run(capsys, *argv)
    assert code == EXIT_INVALID and err.startswith("error:")
    assert not (tmp_path / "x.obj").exists()


def test_generate_unwritable_path(capsys):
    code, _, err = run(capsys, "generate", "--m", "3", "-o", "/nonexistent/dir/x.obj")
    assert code == EXIT_INVALID and "error" in err


# ---------------------------------------------------------------- implicitize / class

def test_implicitize_m2(tmp_path, capsys):
    out = tmp_path / "b2.poly"
    code, text, _ = run(capsys, "implicitize", "--m", "2", "-o", str(out))
    assert code == EXIT_OK
    assert "degree: 9" in text and "closed form: 9 (agrees)" in text
    assert out.exists() and (tmp_path / "b2.poly.meta").exists()


def test_implicitize_rejections(capsys):
    code, _, err = run(capsys, "implicitize", "--m", "5")
    assert code == EXIT_INVALID and "time" in err
    code, _, err = run(capsys, "implicitize", "--m", "4")
    assert code == EXIT_INVALID and "--allow-long" in err
    assert run(capsys, "implicitize", "--m", "3", "--method", "resultant")[0] == EXIT_INVALID
    assert run(capsys, "implicitize", "--m", "2/3")[0] == EXIT_INVALID


def test_implicitize_budget(capsys):
    code, text, _ = run(capsys, "implicitize", "--m", "3", "--max-pairs", "3")
    assert code == EXIT_BUDGET
    assert text.startswith("budget exceeded")


@pytest.mark.parametrize("m,cl", [(2, 6), (3, 8)])
def test_class_command(capsys, m, cl):
    code, text, _ = run(capsys, "class", "--m", str(m))
    assert code == EXIT_OK and f"class: {cl}" in text
    if m == 3:
        assert "status: agrees" in text


def test_class_m5_needs_flag(capsys):
    assert run(capsys, "class", "--m", "5")[0] == EXIT_INVALID


# ---------------------------------------------------------------- verify

def test_verify_small_list(capsys):
    code, text, _ = run(capsys, "verify", "--m-list", "2,3")
    assert code == EXIT_OK
    assert "no branch point" in text and "branch point at 0" in text
    assert "[FAIL]" not in text


def test_verify_injected_flip_fails(capsys):
    code, text, _ = run(capsys, "verify", "--m-list", "2,3", "--inject-quadric-flip")
    assert code == EXIT_FAIL
    failed = [ln for ln in text.splitlines() if ln.startswith("[FAIL]")]
    assert failed and all("quadric" in ln for ln in failed)


@pytest.mark.parametrize("bad", ["1,2", "x", ""])
def test_verify_bad_list(capsys, bad):
    assert run(capsys, "verify", "--m-list", bad)[0] == EXIT_INVALID


# ---------------------------------------------------------------- curve / integral-free / formulas

def test_curve_profile(tmp_path, capsys):
    out = tmp_path / "prof.poly"
    code, text, _ = run(capsys, "curve", "--m", "3", "--mode", "profile", "-o", str(out))
    assert code == EXIT_OK and "degree 4" in text
    assert "1024*x^3" in text
    assert run(capsys, "curve", "--m", "2", "--mode", "profile")[0] == EXIT_OK


def test_curve_deltoid(capsys):
    code, text, _ = run(capsys, "curve", "--m", "3", "--mode", "deltoid")
    assert code == EXIT_OK
    assert "degree 4" in text and "12/12" in text


@pytest.mark.parametrize("m,phi,d", [(3, "1/24*w^4", 8), (4, "1/60*w^5", 10), (10, "1/990*w^11", 22)])
def test_integral_free_command(capsys, m, phi, d):
    code, text, _ = run(capsys, "integral-free", "--m", str(m))
    assert code == EXIT_OK
    assert f"phi = {phi}" in text and "round trip: OK" in text
    assert f"deg(phi^2) = {d}" in text


@pytest.mark.parametrize("m,line", [("3", "m = 3: cl 8, deg 16"), ("1/2", "m = 1/2: cl 12, deg n/a"),
                                    ("7", "m = 7: cl 16, deg 64"), ("2", "m = 2: cl 6, deg 9")])
def test_formulas(capsys, m, line):
    code, text, _ = run(capsys, "formulas", "--m", m)
    assert code == EXIT_OK and text.strip() == line


@pytest.mark.parametrize("m", ["2/4", "1", "0", "1.5"])
def test_formulas_invalid(capsys, m):
    assert run(capsys, "formulas", "--m", m)[0] == EXIT_INVALID


def test_unknown_command(capsys):
    assert run(capsys, "nope")[0] == 2


def test_module_entry_point(tmp_path):
    proc = subprocess.run([sys.executable, "-m", "boursurf", "formulas", "--m", "4"],
                          capture_output=True, text=True, cwd=tmp_path)
    assert proc.returncode == 0 and proc.stdout.strip() == "m = 4: cl 10, deg 25"
