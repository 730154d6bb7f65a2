"""Multi-modular Gröbner bases: GF(p) Buchberger + CRT + rational reconstruction.

Each prime runs the same generic driver as the exact backend, with the sparse
reduction delegated to ``kernels``. Primes whose leading-monomial signature
disagrees with the majority are discarded as unlucky. Reconstruction stops
once two consecutive prime counts give the same rational basis; callers that
need certainty verify the result independently (implicitization uses the
exact substitution certificate).
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt

import numpy as np

from .._accel import backend_name
from ..poly import Polynomial, RegistryError
from ..poly.monomial import MonomialOrder, OrderPacker
from . import kernels
from .buchberger import run_buchberger
from .ideal import UNLIMITED, Budget, GroebnerBasis, Ideal


class UnluckyPrime(ArithmeticError):
    pass


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11):  # deterministic below 2.15e12
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_descending(start: int = (1 << 31) - 1):
    n = start
    while n > 2:
        if _is_prime(n):
            yield n
        n -= 1


class _MP:
    """Monic polynomial over GF(p) as three int64 arrays."""

    __slots__ = ("k", "e", "c", "lead")

    def __init__(self, k, e, c, lead):
        self.k, self.e, self.c, self.lead = k, e, c, lead


class ModularRing:
    def __init__(self, registry, order: MonomialOrder, p: int, backend: str | None = None):
        self.registry = tuple(registry)
        self.n = len(self.registry)
        if self.n > kernels.MAX_VARS:
            raise ValueError(f"modular kernels support at most {kernels.MAX_VARS} variables")
        self.order = order
        self.p = p
        key_bits, _, max_exp = kernels.layout(self.n)
        self.packer = OrderPacker(order, self.registry, bits=key_bits, max_exp=max_exp)
        self.div_mask, self.ovf_mask = kernels.exp_masks(self.n)
        name = backend or backend_name()
        self._spoly, self._nf, self._scale = kernels.KERNELS[name]
        self._cache_ids = None
        self._cache = None

    # conversion -------------------------------------------------------------
    def from_poly(self, f: Polynomial):
        if f.registry != self.registry:
            raise RegistryError(f"registry mismatch: {f.registry} vs {self.registry}")
        p = self.p
        items = []
        for exps, c in f.real_coefficients().items():
            if c.denominator % p == 0:
                raise UnluckyPrime(f"denominator divisible by {p}")
            v = c.numerator * pow(c.denominator, -1, p) % p
            if v:
                items.append((self.packer.pack(exps), kernels.pack_exps(exps), v))
        if not items:
            return None
        items.sort(reverse=True)
        arr = np.array(items, dtype=np.int64).reshape(-1, 3)
        return self._monic(arr[:, 0].copy(), arr[:, 1].copy(), arr[:, 2].copy())

    def _monic(self, k, e, c):
        if k.shape[0] == 0:
            return None
        inv = pow(int(c[0]), -1, self.p)
        if inv != 1:
            c = self._scale(c, np.int64(inv), np.int64(self.p))
        return _MP(k, e, c, self.packer.unpack(int(k[0])))

    def to_dict(self, h: _MP) -> dict:
        n = self.n
        return {kernels.unpack_exps(w, n): int(c) for w, c in zip(h.e, h.c)}

    # driver interface ------------------------------------------------------
    def lead(self, h):
        return h.lead

    def order_key(self, exps) -> int:
        return self.packer.pack(exps)

    def spoly(self, f: _MP, g: _MP, L):
        lk = np.int64(self.packer.pack(L))
        le = np.int64(kernels.pack_exps(L))
        k, e, c, status = self._spoly(f.k, f.e, f.c, g.k, g.e, g.c, lk, le,
                                      np.int64(self.p), self.ovf_mask)
        if status != kernels.OK:
            raise OverflowError("exponent overflow in modular kernel (raise the exponent bound)")
        return (k, e, c) if k.shape[0] else None

    def _reducer_arrays(self, reducers):
        ids = tuple(id(h) for h in reducers)
        if ids != self._cache_ids:
            ks = [h.k for h in reducers]
            off = np.zeros(len(reducers) + 1, dtype=np.int64)
            off[1:] = np.cumsum([x.shape[0] for x in ks])
            self._cache = (np.concatenate(ks), np.concatenate([h.e for h in reducers]),
                           np.concatenate([h.c for h in reducers]), off)
            self._cache_ids = ids
        return self._cache

    def reduce(self, f, reducers):
        if isinstance(f, _MP):
            f = (f.k, f.e, f.c)
        if not reducers:
            return self._monic(*f)
        bk, be, bc, off = self._reducer_arrays(reducers)
        k, e, c, status = self._nf(f[0], f[1], f[2], bk, be, bc, off, np.int64(self.p),
                                   self.div_mask, self.ovf_mask)
        if status != kernels.OK:
            raise OverflowError("exponent overflow in modular kernel (raise the exponent bound)")
        return self._monic(k, e, c)


def groebner_mod_p(ideal: Ideal, p: int, budget: Budget = UNLIMITED, backend=None, meter=None):
    """Reduced Gröbner basis of ``ideal`` over GF(p) as (lead, {exps: coeff}) pairs."""
    ring = ModularRing(ideal.registry, ideal.order, p, backend)
    meter = meter or budget.start()
    handles = [ring.from_poly(g) for g in ideal.generators]
    basis = run_buchberger(ring, [h for h in handles if h is not None], meter)
    return [(h.lead, ring.to_dict(h)) for h in basis]


# reconstruction -------------------------------------------------------------

def rational_reconstruction(a: int, m: int) -> Fraction | None:
    """Fraction n/d with n = a*d mod m, |n|, d <= sqrt(m/2); None if none exists."""
    a %= m
    bound = isqrt(m // 2)
    r0, r1 = m, a
    s0, s1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if s1 == 0 or abs(s1) > bound:
        return None
    f = Fraction(r1, s1)
    if (f.numerator - a * f.denominator) % m:
        return None
    return f


def _crt(images, primes):
    """Combine per-prime residue dicts (identical supports) into one modulus."""
    M = 1
    acc = {mono: 0 for mono in images[0]}
    for img, p in zip(images, primes):
        inv = pow(M, -1, p)
        for mono in acc:
            r = img.get(mono, 0)
            t = (r - acc[mono]) * inv % p
            acc[mono] += M * t
        M *= p
    return acc, M


def _reconstruct(group, keep):
    primes = [p for p, _ in group]
    out = []
    nelem = len(group[0][1])
    for idx in range(nelem):
        if keep is not None and not keep(group[0][1][idx][0]):
            continue
        supports = set()
        for _, basis in group:
            supports |= set(basis[idx][1])
        images = [{mono: basis[idx][1].get(mono, 0) for mono in supports} for _, basis in group]
        acc, M = _crt(images, primes)
        terms = {}
        for mono, a in acc.items():
            q = rational_reconstruction(a, M)
            if q is None:
                return None
            if q:
                terms[mono] = q
        out.append(terms)
    return out


def modular_groebner(ideal: Ideal, budget: Budget = UNLIMITED, *, keep=None,
                     backend=None, max_primes: int = 64, start_prime: int = (1 << 31) - 1):
    """Reduced Gröbner basis over Q by multi-modular reconstruction.

    ``keep`` filters basis elements (by leading exponent tuple) before the
    reconstruction, e.g. to reconstruct only elimination-ideal elements.
    """
    meter = budget.start()
    groups: dict[tuple, list] = {}
    previous = None
    used = 0
    for p in primes_descending(start_prime):
        if used >= max_primes:
            break
        try:
            basis = groebner_mod_p(ideal, p, budget, backend, meter)
        except UnluckyPrime:
            continue
        used += 1
        sig = tuple(lead for lead, _ in basis)
        groups.setdefault(sig, []).append((p, basis))
        best = max(groups.values(), key=len)
        rec = _reconstruct(best, keep)
        if rec is not None and rec == previous:
            stats = meter.snapshot()
            stats["primes"] = len(best)
            stats["primes_tried"] = used
            elements = tuple(Polynomial(ideal.registry, t) for t in rec)
            return GroebnerBasis(elements, ideal.order, ideal.registry, stats)
        previous = rec
    raise ArithmeticError(f"modular reconstruction did not stabilise within {max_primes} primes")
