"""Implicitization by modular interpolation.

The implicit polynomial of a parametrized curve or surface spans the kernel of
the matrix whose rows are the monomials of degree <= d evaluated at points of
the image. Over GF(p) the points are images of random parameter values; a
kernel that is zero mod p is zero over Q as well, so scanning d upward finds
the minimal degree. The kernel vector at that degree is lifted to Q by CRT and
rational reconstruction and must then pass the exact substitution certificate.

Row echelon forms over GF(p) are the hot loop and come in a numba and a numpy
version, as for the Gröbner kernels.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations_with_replacement

import numpy as np

from .._accel import USE_NUMBA, njit
from ..poly import Polynomial, RationalMap
from .ideal import UNLIMITED, Budget
from .modular import _crt, primes_descending, rational_reconstruction


class UnluckyPoints(ArithmeticError):
    """The sample points or the prime produced a degenerate system."""


# row echelon over GF(p) ------------------------------------------------------

@njit
def _echelon_nb(A, p):
    n, m = A.shape
    pivots = np.full(min(n, m), -1, dtype=np.int64)
    r = 0
    for c in range(m):
        piv = -1
        for i in range(r, n):
            if A[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(c, m):
                t = A[r, j]
                A[r, j] = A[piv, j]
                A[piv, j] = t
        # inverse by Fermat
        inv, b, e = 1, A[r, c], p - 2
        while e:
            if e & 1:
                inv = inv * b % p
            b = b * b % p
            e >>= 1
        for j in range(c, m):
            A[r, j] = A[r, j] * inv % p
        for i in range(r + 1, n):
            f = A[i, c]
            if f != 0:
                for j in range(c, m):
                    A[i, j] = (A[i, j] - f * A[r, j]) % p
        pivots[r] = c
        r += 1
        if r == n:
            break
    return r, pivots


def _echelon_np(A, p):
    n, m = A.shape
    pivots = np.full(min(n, m), -1, dtype=np.int64)
    r = 0
    for c in range(m):
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            A[[r, piv], c:] = A[[piv, r], c:]
        inv = pow(int(A[r, c]), p - 2, p)
        A[r, c:] = A[r, c:] * inv % p
        rows = r + 1 + np.flatnonzero(A[r + 1:, c])
        if rows.size:
            A[rows, c:] = (A[rows, c:] - np.outer(A[rows, c], A[r, c:]) % p) % p
        pivots[r] = c
        r += 1
        if r == n:
            break
    return r, pivots


ECHELON = {"numba": _echelon_nb, "numpy": _echelon_np}


def kernel_mod_p(A, p: int, backend: str | None = None):
    """Basis of the right kernel of ``A`` over GF(p), one row per vector.

    Each vector has a 1 at its free column and zeros at the other free columns.
    """
    name = backend or ("numba" if USE_NUMBA else "numpy")
    A = np.array(A, dtype=np.int64) % p
    rank, pivots = ECHELON[name](A, p)
    m = A.shape[1]
    pivots = [int(c) for c in pivots[:rank]]
    pivset = set(pivots)
    free = [c for c in range(m) if c not in pivset]
    out = np.zeros((len(free), m), dtype=np.int64)
    for k, fc in enumerate(free):
        vec = out[k]
        vec[fc] = 1
        for i in range(rank - 1, -1, -1):
            c = pivots[i]
            vec[c] = (-_dotmod(A[i, c + 1:], vec[c + 1:], p)) % p
    return out


def _dotmod(a, b, p: int) -> int:
    """``a . b mod p`` for residues below 2**31 without int64 overflow."""
    lo, hi = b & 0xFFFF, b >> 16
    return (int(a @ lo) % p + (int(a @ hi) % p << 16)) % p


# evaluation mod p ------------------------------------------------------------

def _monomials(nvars: int, d: int):
    """Exponent tuples of total degree <= d, by decreasing degree then lex."""
    out = []
    for deg in range(d, -1, -1):
        block = set()
        for combo in combinations_with_replacement(range(nvars), deg):
            e = [0] * nvars
            for j in combo:
                e[j] += 1
            block.add(tuple(e))
        out.extend(sorted(block, reverse=True))
    return out


def _mod(c: Fraction, p: int) -> int:
    den = c.denominator % p
    if den == 0:
        raise UnluckyPoints(f"coefficient denominator divisible by {p}")
    return c.numerator * pow(den, -1, p) % p


def _eval_mod_p(poly: Polynomial, pts, p: int):
    """Vectorised evaluation at integer points (rows of ``pts``) modulo p."""
    out = np.zeros(pts.shape[0], dtype=np.int64)
    for exps, c in poly.real_coefficients().items():
        term = np.full(pts.shape[0], _mod(c, p), dtype=np.int64)
        for j, e in enumerate(exps):
            if e:
                term = term * _powmod(pts[:, j], e, p) % p
        out = (out + term) % p
    return out


def _powmod(x, e: int, p: int):
    out = np.ones_like(x)
    b = x % p
    while e:
        if e & 1:
            out = out * b % p
        b = b * b % p
        e >>= 1
    return out


def _image_points(rmap: RationalMap, n: int, p: int, rng):
    """``n`` image points mod p of random parameter values (denominators != 0)."""
    k = len(rmap.registry)
    rows, cols = [], None
    while sum(len(r) for r in rows) < n:
        pts = rng.integers(1, p, size=(2 * n, k), dtype=np.int64)
        vals, ok = [], np.ones(pts.shape[0], dtype=bool)
        for comp in rmap.components:
            num = _eval_mod_p(comp.num, pts, p)
            den = _eval_mod_p(comp.den, pts, p)
            ok &= den != 0
            vals.append((num, den))
        good = np.flatnonzero(ok)
        cols = [num[good] * _powmod(den[good], p - 2, p) % p for num, den in vals]
        rows.append(np.stack(cols, axis=1))
    return np.concatenate(rows)[:n]


def _design(points, monos, p: int):
    """Rows: the monomials evaluated at the points, modulo p."""
    d = max(sum(e) for e in monos)
    pw = [np.stack([_powmod(points[:, j], a, p) for a in range(d + 1)], axis=1)
          for j in range(points.shape[1])]
    M = np.ones((points.shape[0], len(monos)), dtype=np.int64)
    for j in range(points.shape[1]):
        idx = np.array([e[j] for e in monos], dtype=np.int64)
        M = M * pw[j][:, idx] % p
    return M


# driver ----------------------------------------------------------------------

def _kernel_at_degree(rmap, d, p, rng, backend, extra=8):
    monos = _monomials(len(rmap), d)
    pts = _image_points(rmap, len(monos) + extra, p, rng)
    return monos, kernel_mod_p(_design(pts, monos, p), p, backend)


def interpolate_implicit(rmap: RationalMap, targets, budget: Budget = UNLIMITED,
                         backend: str | None = None, max_degree: int = 40,
                         seed: int = 0, max_primes: int = 64):
    """Implicit polynomial of the image of ``rmap`` (in ``targets``) with stats.

    The result is not certified here; callers run the substitution check.
    """
    meter = budget.start()
    rng = np.random.default_rng(seed)
    primes = primes_descending()
    p0 = next(primes)
    for d in range(1, max_degree + 1):
        meter.check(d)
        monos, ker = _kernel_at_degree(rmap, d, p0, rng, backend)
        if len(ker):
            break
    else:
        raise ArithmeticError(f"no implicit equation of degree <= {max_degree}")
    if len(ker) != 1:
        raise UnluckyPoints(f"kernel of dimension {len(ker)} at the minimal degree {d}")
    # normalise on the first monomial with a nonzero coefficient
    lead = int(np.flatnonzero(ker[0])[0])
    images = [(p0, ker[0] * pow(int(ker[0][lead]), p0 - 2, p0) % p0)]
    meter.stats["degree"] = d
    meter.stats["unknowns"] = len(monos)
    previous = None
    while True:
        plist = [q for q, _ in images]
        acc, M = _crt([{j: int(v[j]) for j in range(len(monos))} for _, v in images], plist)
        rec = {}
        for j, a in acc.items():
            q = rational_reconstruction(a, M)
            if q is None:
                rec = None
                break
            if q:
                rec[monos[j]] = q
        if rec is not None and rec == previous:
            break
        previous = rec
        if len(images) >= max_primes:
            raise ArithmeticError(f"reconstruction did not stabilise within {max_primes} primes")
        meter.check(d)
        p = next(primes)
        _, ker = _kernel_at_degree(rmap, d, p, rng, backend)
        if len(ker) != 1 or ker[0][lead] == 0:
            continue
        inv = pow(int(ker[0][lead]), p - 2, p)
        images.append((p, ker[0] * inv % p))
    registry = tuple(targets)
    stats = meter.snapshot()
    stats["primes"] = len(images)
    return Polynomial(registry, rec), stats
