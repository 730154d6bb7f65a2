import os
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from boursurf.poly import GaussianRational, Polynomial

settings.register_profile(
    "default", deadline=None, max_examples=40, derandomize=True,
    suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", deadline=None, max_examples=400)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

LONG = os.environ.get("BOURSURF_LONG") == "1"

XYZ = ("x", "y", "z")

small_fracs = st.builds(Fraction, st.integers(-9, 9), st.integers(1, 5))
nonzero_fracs = small_fracs.filter(lambda q: q != 0)


@st.composite
def polys(draw, registry=XYZ, max_terms=4, max_deg=3, gaussian=False):
    n = len(registry)
    exps = st.tuples(*[st.integers(0, max_deg)] * n)
    terms = draw(st.dictionaries(exps, small_fracs, max_size=max_terms))
    if gaussian:
        ims = draw(st.lists(small_fracs, min_size=len(terms), max_size=len(terms)))
        terms = {e: GaussianRational(c, d) for (e, c), d in zip(terms.items(), ims)}
    return Polynomial(registry, terms)


def nonzero(strategy):
    return strategy.filter(lambda p: not p.is_zero())


@pytest.fixture(scope="session")
def b3_degree():
    """The m = 3 Cartesian implicit equation (shared: it takes several seconds)."""
    from boursurf.surfaces import surface_degree
    return surface_degree(3)


@pytest.fixture(scope="session")
def b4_degree():
    """The m = 4 Cartesian implicit equation by modular interpolation (minutes)."""
    if not LONG:
        pytest.skip("long elimination; set BOURSURF_LONG=1")
    from boursurf.surfaces import surface_degree
    return surface_degree(4, allow_long=True, method="interpolation")


@pytest.fixture(scope="session")
def classes():
    from boursurf.surfaces import surface_class
    return {m: surface_class(m) for m in (2, 3, 4)}


# ---------------------------------------------------------------- acceptance summary

_CRITERIA: dict = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    rep = outcome.get_result()
    n, title = mark.args
    entry = _CRITERIA.setdefault(n, {"title": title, "outcomes": []})
    if hasattr(rep, "wasxfail"):
        entry["outcomes"].append("xfail")
    elif rep.skipped:
        entry["outcomes"].append("skip")
    elif rep.failed:
        entry["outcomes"].append("fail")
    elif call.when == "call":
        entry["outcomes"].append("pass")


def _status(outcomes):
    if "fail" in outcomes:
        return "FAIL"
    if "xfail" in outcomes:
        return "FAIL (known reference discrepancy, see README)"
    if "pass" in outcomes:
        return "PASS" + (" (long part skipped)" if "skip" in outcomes else "")
    return "SKIP"


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        entry = _CRITERIA[n]
        terminalreporter.write_line(f"criterion {n:2d} [{_status(entry['outcomes'])}] {entry['title']}")
