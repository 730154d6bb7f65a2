"""Buchberger's algorithm with the Gebauer–Möller criteria.

The driver is generic over a coefficient *ring backend* (exact integers here,
GF(p) in ``modular``). A backend owns its own polynomial handles and has to
provide

* ``lead(h)`` leading exponent tuple, ``order_key(exps)`` an int whose
  natural order is the monomial order;
* ``spoly(f, g, lcm)`` the S-polynomial of two handles;
* ``reduce(h, reducers)`` full reduction, ``None`` for zero, result
  normalised (primitive integer or monic);
* ``to_poly(h)`` monic ``Polynomial``.

Pairs are selected by the normal strategy: smallest lcm total degree, ties
by the monomial order on the lcm, then by indices. The reduced basis is
unique, so neither the strategy nor the backend changes the output.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from math import gcd as igcd
from math import lcm as ilcm

from ..poly import I, Polynomial, RegistryError
from ..poly.monomial import (MonomialOrder, MonomialOverflowError, OrderPacker, divides,
                             guard_mask, lcm, pack, unpack)
from .ideal import UNLIMITED, Budget, GroebnerBasis, Ideal


class _EP:
    """Primitive integer polynomial: terms sorted by decreasing order key."""

    __slots__ = ("lk", "lw", "lc", "lead", "tail", "maxw")

    def __init__(self, terms, packer):
        # terms: list of (key, word, coeff), decreasing key
        self.lk, self.lw, self.lc = terms[0]
        self.lead = packer.unpack(self.lk)
        self.tail = terms[1:]
        n = packer.n
        mx = [0] * n
        for _, w, _ in terms:
            for j, e in enumerate(unpack(w, n)):
                if e > mx[j]:
                    mx[j] = e
        self.maxw = pack(mx)

    def terms(self):
        yield self.lk, self.lw, self.lc
        yield from self.tail


class ExactRing:
    """Integer (fraction-free) backend: every handle is primitive with a
    positive leading coefficient."""

    name = "exact"

    def __init__(self, registry, order: MonomialOrder):
        self.registry = tuple(registry)
        self.order = order
        self.packer = OrderPacker(order, self.registry)
        self.n = len(self.registry)
        self.guard = guard_mask(self.n)
        self.words: dict[int, int] = {}

    # conversion -------------------------------------------------------------
    def _integer_terms(self, p: Polynomial):
        if p.registry != self.registry:
            raise RegistryError(f"registry mismatch: {p.registry} vs {self.registry}")
        if not p.is_real():
            raise ValueError("Gröbner computations need real coefficients")
        coeffs = p.real_coefficients()
        den = 1
        for c in coeffs.values():
            den = ilcm(den, c.denominator)
        out = {}
        for exps, c in coeffs.items():
            k = self.packer.pack(exps)
            self.words.setdefault(k, pack(exps))
            out[k] = c.numerator * (den // c.denominator)
        return out, den

    def from_poly(self, p: Polynomial):
        terms, _ = self._integer_terms(p)
        return self._make(terms) if terms else None

    def _make(self, f: dict):
        g = igcd(*f.values())
        top = max(f)
        if f[top] < 0:
            g = -g
        W = self.words
        return _EP([(k, W[k], f[k] // g) for k in sorted(f, reverse=True)], self.packer)

    def to_poly(self, h: _EP) -> Polynomial:
        lc = h.lc
        terms = {self.packer.unpack(k): Fraction(c, lc) for k, _, c in h.terms()}
        return Polynomial(self.registry, terms)

    # driver interface ------------------------------------------------------
    def lead(self, h: _EP):
        return h.lead

    def order_key(self, exps) -> int:
        return self.packer.pack(exps)

    def spoly(self, f: _EP, g: _EP, L):
        lk = self.packer.pack(L)
        lw = pack(L)
        q = igcd(f.lc, g.lc)
        a, b = g.lc // q, f.lc // q
        W = self.words
        out: dict[int, int] = {}
        for h, s in ((f, a), (g, -b)):
            dk = lk - h.lk
            dw = lw - h.lw
            for tk, tw, tc in h.tail:
                kk = tk + dk
                if kk not in W:
                    W[kk] = tw + dw
                v = out.get(kk, 0) + s * tc
                if v:
                    out[kk] = v
                else:
                    del out[kk]
        return out

    def reduce(self, f, reducers):
        if isinstance(f, _EP):
            f = {k: c for k, _, c in f.terms()}
        rem, _ = self._reduce(dict(f), reducers)
        if not rem:
            return None
        return self._make(dict(rem))

    def _reduce(self, f: dict, reducers):
        """Full reduction with integer pre-multiplication.

        Returns ``(remainder, A)`` with ``A * f_in - remainder`` in the ideal
        and ``remainder / A`` the normal form over Q.
        """
        W = self.words
        guard = self.guard
        rem = []
        A = 1
        while f:
            k = max(f)
            c = f.pop(k)
            w = W[k]
            for g in reducers:
                if not (w - g.lw) & guard:
                    break
            else:
                rem.append([k, c])
                continue
            dw = w - g.lw
            if (g.maxw + dw) & guard:
                raise MonomialOverflowError("exponent overflow during reduction")
            q = igcd(c, g.lc)
            a = g.lc // q
            b = c // q
            if a != 1:
                A *= a
                for kk in f:
                    f[kk] *= a
                for r in rem:
                    r[1] *= a
            dk = k - g.lk
            for tk, tw, tc in g.tail:
                kk = tk + dk
                if kk not in W:
                    W[kk] = tw + dw
                v = f.get(kk, 0) - b * tc
                if v:
                    f[kk] = v
                else:
                    del f[kk]
        return rem, A


# ---------------------------------------------------------------------------
# generic driver
# ---------------------------------------------------------------------------

def _degree(e) -> int:
    return sum(e)


def run_buchberger(ring, handles, meter):
    """Reduced Gröbner basis (as backend handles, decreasing leads)."""
    polys: list = []
    leads: list = []
    active: list[int] = []
    pairs: dict[tuple[int, int], tuple] = {}
    heap: list = []
    stats = meter.stats

    def push(i, j, L):
        pairs[(i, j)] = L
        heapq.heappush(heap, (_degree(L), ring.order_key(L), i, j))

    def update(h):
        k = len(polys)
        polys.append(h)
        hk = ring.lead(h)
        leads.append(hk)
        cand = [(i, lcm(leads[i], hk)) for i in active]
        coprime = {i: all(a == 0 or b == 0 for a, b in zip(leads[i], hk)) for i in active}
        # chain criterion among the new pairs
        kept = []
        for pos, (i, L) in enumerate(cand):
            if coprime[i]:
                kept.append((i, L))
                continue
            others = [M for _, M in cand[pos + 1:]] + [M for _, M in kept]
            if any(divides(M, L) for M in others):
                stats["pairs_skipped"] += 1
                continue
            kept.append((i, L))
        # product criterion
        new = []
        for i, L in kept:
            if coprime[i]:
                stats["pairs_skipped"] += 1
            else:
                new.append((i, L))
        # prune old pairs
        for (i, j), L in list(pairs.items()):
            if divides(hk, L) and lcm(leads[i], hk) != L and lcm(leads[j], hk) != L:
                del pairs[(i, j)]
                stats["pairs_skipped"] += 1
        for i, L in new:
            push(i, k, L)
        active[:] = [i for i in active if not divides(hk, leads[i])] + [k]
        stats["basis_size"] = len(active)

    def reducers():
        return [polys[i] for i in active]

    for h in handles:
        r = ring.reduce(h, reducers()) if active else h
        if r is not None:
            update(r)

    while pairs:
        _, _, i, j = heapq.heappop(heap)
        L = pairs.pop((i, j), None)
        if L is None:
            continue
        meter.check(_degree(L))
        stats["pairs_reduced"] += 1
        s = ring.spoly(polys[i], polys[j], L)
        r = ring.reduce(s, reducers()) if s else None
        if r is None:
            stats["zero_reductions"] += 1
            continue
        update(r)

    # interreduce the minimal basis
    out = []
    for i in active:
        others = [polys[j] for j in active if j != i]
        out.append(ring.reduce(polys[i], others))
    out.sort(key=lambda h: ring.order_key(ring.lead(h)), reverse=True)
    stats["basis_size"] = len(out)
    return out


def buchberger_reduced(ideal: Ideal, budget: Budget = UNLIMITED) -> GroebnerBasis:
    """Reduced Gröbner basis over Q of ``ideal`` under ``ideal.order``."""
    ring = ExactRing(ideal.registry, ideal.order)
    meter = budget.start()
    handles = [ring.from_poly(g) for g in ideal.generators]
    basis = run_buchberger(ring, handles, meter)
    return GroebnerBasis(tuple(ring.to_poly(h) for h in basis), ideal.order,
                         ideal.registry, meter.snapshot())


def normal_form(p: Polynomial, basis, order: MonomialOrder) -> Polynomial:
    """Remainder of ``p`` under full reduction by ``basis`` (in list order).

    No term of the result is divisible by a leading monomial of ``basis``.
    """
    basis = [b for b in basis if not b.is_zero()]
    if p.is_zero() or not basis:
        return p
    for b in basis:
        if b.registry != p.registry:
            raise RegistryError(f"registry mismatch: {b.registry} vs {p.registry}")
    ring = ExactRing(p.registry, order)
    reducers = [ring.from_poly(b) for b in basis]
    if p.is_real():
        return _nf_real(ring, p, reducers)
    return _nf_real(ring, p.real_part(), reducers) + \
        _nf_real(ring, p.imag_part(), reducers) * Polynomial.const(p.registry, I)


def _nf_real(ring, p, reducers):
    if p.is_zero():
        return p
    f, den = ring._integer_terms(p)
    rem, A = ring._reduce(f, reducers)
    scale = Fraction(1, A * den)
    terms = {ring.packer.unpack(k): c * scale for k, c in rem}
    return Polynomial(p.registry, terms)

