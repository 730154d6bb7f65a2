"""Sparse polynomial kernels over GF(p).

A polynomial is three int64 arrays sorted by strictly decreasing ``keys``:

* ``keys``  order-preserving packed monomials (``OrderPacker`` rows);
* ``exps``  exponents packed into fixed-width fields, used for divisibility;
* ``coefs`` coefficients in ``[0, p)``.

Monomial multiplication is addition of both packed words. Field widths are
chosen per variable count by ``layout``: an exponent field of ``F`` bits
holds values below ``2**(F-2)``; its top bit catches failed divisibility
(borrow) and the top two bits catch overflow after multiplication.

Each kernel exists as a numba loop and as a vectorised numpy routine; the
module-level names point at whichever backend ``boursurf._accel`` selects.
"""

import numpy as np

from .._accel import USE_NUMBA, njit

MAX_VARS = 7

OK = 0
OVERFLOW = 1


def layout(nvars):
    """``(key_bits, exp_bits, max_exp)`` for ``nvars`` variables in 63 bits."""
    if not 1 <= nvars <= MAX_VARS:
        raise ValueError(f"modular kernels support 1..{MAX_VARS} variables, got {nvars}")
    key_bits = 63 // nvars
    exp_bits = key_bits
    while nvars * ((1 << (exp_bits - 2)) - 1) >= (1 << key_bits):
        exp_bits -= 1
    return key_bits, exp_bits, (1 << (exp_bits - 2)) - 1


def exp_masks(nvars):
    _, bits, _ = layout(nvars)
    div_mask = 0
    ovf_mask = 0
    top = 1 << (bits - 1)
    for j in range(nvars):
        div_mask |= top << (bits * j)
        ovf_mask |= (top | top >> 1) << (bits * j)
    return np.int64(div_mask), np.int64(ovf_mask)


def pack_exps(exps):
    _, bits, max_exp = layout(len(exps))
    out = 0
    for j, e in enumerate(exps):
        if e > max_exp:
            raise OverflowError(f"exponent {e} exceeds kernel bound {max_exp}")
        out |= e << (bits * j)
    return out


def unpack_exps(word, nvars):
    _, bits, _ = layout(nvars)
    mask = (1 << bits) - 1
    return tuple((int(word) >> (bits * j)) & mask for j in range(nvars))


# --------------------------------------------------------------------------
# numba versions
# --------------------------------------------------------------------------

@njit
def _grow(arr, need):
    if need <= arr.shape[0]:
        return arr
    cap = arr.shape[0] * 2
    while cap < need:
        cap *= 2
    out = np.empty(cap, dtype=np.int64)
    out[:arr.shape[0]] = arr
    return out


@njit
def _spoly_nb(fk, fe, fc, gk, ge, gc, lk, le, p, ovf_mask):
    """lcm/lm(f) * f - lcm/lm(g) * g for monic f, g (leading terms cancel)."""
    dfk = lk - fk[0]
    dfe = le - fe[0]
    dgk = lk - gk[0]
    dge = le - ge[0]
    nf = fk.shape[0]
    ng = gk.shape[0]
    cap = nf + ng
    rk = np.empty(cap, dtype=np.int64)
    re = np.empty(cap, dtype=np.int64)
    rc = np.empty(cap, dtype=np.int64)
    i = 1
    t = 1
    m = 0
    while i < nf or t < ng:
        if t >= ng or (i < nf and fk[i] + dfk > gk[t] + dgk):
            rk[m] = fk[i] + dfk
            re[m] = fe[i] + dfe
            rc[m] = fc[i]
            i += 1
            m += 1
        elif i >= nf or fk[i] + dfk < gk[t] + dgk:
            rk[m] = gk[t] + dgk
            re[m] = ge[t] + dge
            rc[m] = (p - gc[t]) % p
            t += 1
            m += 1
        else:
            v = (fc[i] - gc[t]) % p
            if v != 0:
                rk[m] = fk[i] + dfk
                re[m] = fe[i] + dfe
                rc[m] = v
                m += 1
            i += 1
            t += 1
    for q in range(m):
        if re[q] & ovf_mask:
            return rk[:0], re[:0], rc[:0], OVERFLOW
    return rk[:m], re[:m], rc[:m], OK


@njit
def _nf_nb(fk, fe, fc, bk, be, bc, boff, p, div_mask, ovf_mask):
    """Full reduction of f modulo the monic polynomials stored in (bk, be, bc)."""
    nb = boff.shape[0] - 1
    n = fk.shape[0]
    cap = max(2 * n, 64)
    ak = np.empty(cap, dtype=np.int64)
    ae = np.empty(cap, dtype=np.int64)
    ac = np.empty(cap, dtype=np.int64)
    ak[:n] = fk
    ae[:n] = fe
    ac[:n] = fc
    tk = np.empty(cap, dtype=np.int64)
    te = np.empty(cap, dtype=np.int64)
    tc = np.empty(cap, dtype=np.int64)
    rk = np.empty(max(n, 16), dtype=np.int64)
    re = np.empty(max(n, 16), dtype=np.int64)
    rc = np.empty(max(n, 16), dtype=np.int64)
    rn = 0
    s = 0
    while s < n:
        e = ae[s]
        j = -1
        for t in range(nb):
            if ((e - be[boff[t]]) & div_mask) == 0:
                j = t
                break
        if j < 0:
            rk = _grow(rk, rn + 1)
            re = _grow(re, rn + 1)
            rc = _grow(rc, rn + 1)
            rk[rn] = ak[s]
            re[rn] = e
            rc[rn] = ac[s]
            rn += 1
            s += 1
            continue
        c = ac[s]
        g0 = boff[j]
        g1 = boff[j + 1]
        dk = ak[s] - bk[g0]
        de = e - be[g0]
        mc = p - c
        need = (n - s - 1) + (g1 - g0 - 1)
        tk = _grow(tk, need)
        te = _grow(te, need)
        tc = _grow(tc, need)
        i = s + 1
        t = g0 + 1
        m = 0
        while i < n or t < g1:
            if t >= g1 or (i < n and ak[i] > bk[t] + dk):
                tk[m] = ak[i]
                te[m] = ae[i]
                tc[m] = ac[i]
                i += 1
                m += 1
            elif i >= n or ak[i] < bk[t] + dk:
                ee = be[t] + de
                if ee & ovf_mask:
                    return rk[:0], re[:0], rc[:0], OVERFLOW
                tk[m] = bk[t] + dk
                te[m] = ee
                tc[m] = (mc * bc[t]) % p
                t += 1
                m += 1
            else:
                v = (ac[i] + mc * bc[t]) % p
                if v != 0:
                    tk[m] = ak[i]
                    te[m] = ae[i]
                    tc[m] = v
                    m += 1
                i += 1
                t += 1
        ak, tk = tk, ak
        ae, te = te, ae
        ac, tc = tc, ac
        n = m
        s = 0
    return rk[:rn].copy(), re[:rn].copy(), rc[:rn].copy(), OK


@njit
def _scale_nb(c, s, p):
    out = np.empty(c.shape[0], dtype=np.int64)
    for q in range(c.shape[0]):
        out[q] = (c[q] * s) % p
    return out


# --------------------------------------------------------------------------
# numpy versions
# --------------------------------------------------------------------------

def _combine_sorted(keys, exps, coefs, p):
    """Sort by decreasing key and merge equal keys, dropping zero coefficients."""
    order = np.argsort(-keys, kind="stable")
    keys = keys[order]
    exps = exps[order]
    coefs = coefs[order]
    if keys.shape[0] == 0:
        return keys, exps, coefs
    starts = np.concatenate(([0], np.flatnonzero(np.diff(keys)) + 1))
    coefs = np.add.reduceat(coefs, starts) % p
    keys = keys[starts]
    exps = exps[starts]
    nz = coefs != 0
    return keys[nz], exps[nz], coefs[nz]


def _spoly_np(fk, fe, fc, gk, ge, gc, lk, le, p, ovf_mask):
    keys = np.concatenate((fk[1:] + (lk - fk[0]), gk[1:] + (lk - gk[0])))
    exps = np.concatenate((fe[1:] + (le - fe[0]), ge[1:] + (le - ge[0])))
    coefs = np.concatenate((fc[1:], (p - gc[1:]) % p))
    if exps.shape[0] and np.any(exps & ovf_mask):
        empty = np.empty(0, dtype=np.int64)
        return empty, empty, empty, OVERFLOW
    k, e, c = _combine_sorted(keys, exps, coefs, p)
    return k, e, c, OK


_CHUNK = 64


def _nf_np(fk, fe, fc, bk, be, bc, boff, p, div_mask, ovf_mask):
    lead_e = be[boff[:-1]]
    out_k, out_e, out_c = [], [], []
    ak, ae, ac = fk, fe, fc
    while ak.shape[0]:
        s = -1
        lo = 0
        while lo < ak.shape[0]:
            hi = min(lo + _CHUNK, ak.shape[0])
            hit = ((ae[lo:hi, None] - lead_e[None, :]) & div_mask) == 0
            rows = np.flatnonzero(hit.any(axis=1))
            if rows.shape[0]:
                s = lo + int(rows[0])
                j = int(np.argmax(hit[rows[0]]))
                break
            lo = hi
        if s < 0:
            out_k.append(ak)
            out_e.append(ae)
            out_c.append(ac)
            break
        out_k.append(ak[:s])
        out_e.append(ae[:s])
        out_c.append(ac[:s])
        g0, g1 = boff[j], boff[j + 1]
        ge = be[g0 + 1:g1] + (ae[s] - be[g0])
        if ge.shape[0] and np.any(ge & ovf_mask):
            empty = np.empty(0, dtype=np.int64)
            return empty, empty, empty, OVERFLOW
        gk = bk[g0 + 1:g1] + (ak[s] - bk[g0])
        gc = ((p - ac[s]) * bc[g0 + 1:g1]) % p
        ak, ae, ac = _combine_sorted(np.concatenate((ak[s + 1:], gk)),
                                     np.concatenate((ae[s + 1:], ge)),
                                     np.concatenate((ac[s + 1:], gc)), p)
    if out_k:
        return np.concatenate(out_k), np.concatenate(out_e), np.concatenate(out_c), OK
    empty = np.empty(0, dtype=np.int64)
    return empty, empty, empty, OK


def _scale_np(c, s, p):
    return (c * s) % p


# backend selection ---------------------------------------------------------

if USE_NUMBA:
    spoly_kernel = _spoly_nb
    nf_kernel = _nf_nb
    scale_kernel = _scale_nb
else:
    spoly_kernel = _spoly_np
    nf_kernel = _nf_np
    scale_kernel = _scale_np

KERNELS = {
    "numba": (_spoly_nb, _nf_nb, _scale_nb),
    "numpy": (_spoly_np, _nf_np, _scale_np),
}
