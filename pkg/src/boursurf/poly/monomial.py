"""Monomials, variable registries and monomial orders.

A monomial over a registry of ``n`` variables is an exponent vector. Inside
polynomials it is stored packed into one Python int, 16 bits per variable
(variable ``j`` in bits ``16j .. 16j+15``). Exponents are capped at
``MAX_EXP``; bit 15 of every field is a guard that detects overflow after
monomial multiplication (which is plain integer addition of packed words).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

FIELD = 16
MAX_EXP = (1 << (FIELD - 1)) - 1
_FIELD_MASK = (1 << FIELD) - 1

RESERVED_NAMES = frozenset({"i"})


class MonomialOverflowError(OverflowError):
    pass


def check_registry(registry) -> tuple[str, ...]:
    reg = tuple(registry)
    if len(set(reg)) != len(reg):
        raise ValueError(f"duplicate variable names in registry {reg}")
    for name in reg:
        if not isinstance(name, str) or not name.isidentifier():
            raise ValueError(f"invalid variable name {name!r}")
        if name in RESERVED_NAMES:
            raise ValueError(f"{name!r} is reserved for the imaginary unit")
    return reg


@lru_cache(maxsize=64)
def guard_mask(n: int) -> int:
    return sum(1 << (FIELD * j + FIELD - 1) for j in range(n))


def pack(exps) -> int:
    key = 0
    for j, e in enumerate(exps):
        if e < 0:
            raise ValueError("negative exponent")
        if e > MAX_EXP:
            raise MonomialOverflowError(f"exponent {e} exceeds {MAX_EXP}")
        key |= e << (FIELD * j)
    return key


def unpack(key: int, n: int) -> tuple[int, ...]:
    return tuple((key >> (FIELD * j)) & _FIELD_MASK for j in range(n))


def check_overflow(keys, n: int) -> None:
    g = guard_mask(n)
    for k in keys:
        if k & g:
            raise MonomialOverflowError(f"monomial exponent overflow (> {MAX_EXP})")


def divides(a: tuple, b: tuple) -> bool:
    return all(x <= y for x, y in zip(a, b))


def lcm(a: tuple, b: tuple) -> tuple:
    return tuple(max(x, y) for x, y in zip(a, b))


def quotient(a: tuple, b: tuple) -> tuple:
    return tuple(x - y for x, y in zip(a, b))


def product(a: tuple, b: tuple) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


@dataclass(frozen=True)
class MonomialOrder:
    """``lex``, ``grevlex`` or ``block`` (elimination variables first).

    Variables are ranked in registry order. A block order compares the
    exponents of ``elim`` variables first (using ``inner``) and only on a
    tie the remaining variables (again with ``inner``), so any monomial that
    contains an elimination variable beats every monomial that does not.
    """

    kind: str = "grevlex"
    elim: tuple[str, ...] = ()
    inner: str = "grevlex"

    def __post_init__(self):
        if self.kind not in ("lex", "grevlex", "block"):
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if self.inner not in ("lex", "grevlex"):
            raise ValueError(f"unknown inner order {self.inner!r}")
        if self.kind == "block" and not self.elim:
            raise ValueError("block order needs at least one elimination variable")
        object.__setattr__(self, "elim", tuple(self.elim))

    @classmethod
    def block(cls, elim, inner="grevlex") -> "MonomialOrder":
        return cls("block", tuple(elim), inner)

    def blocks(self, registry) -> list[tuple[tuple[int, ...], str]]:
        reg = tuple(registry)
        if self.kind != "block":
            return [(tuple(range(len(reg))), self.kind)]
        unknown = [v for v in self.elim if v not in reg]
        if unknown:
            raise ValueError(f"elimination variables {unknown} not in registry {reg}")
        first = tuple(j for j, v in enumerate(reg) if v in self.elim)
        rest = tuple(j for j, v in enumerate(reg) if v not in self.elim)
        out = [(first, self.inner)]
        if rest:
            out.append((rest, self.inner))
        return out

    def key_function(self, registry):
        """Map an exponent tuple to a tuple; larger tuple = larger monomial."""
        return _key_function(self, tuple(registry))

    def __str__(self):
        if self.kind == "block":
            return f"block({','.join(self.elim)};{self.inner})"
        return self.kind


@lru_cache(maxsize=256)
def _key_function(order: MonomialOrder, registry: tuple):
    rows = _rows(order.blocks(registry))

    def key(exps):
        out = []
        for kind, idx in rows:
            if kind == "deg":
                out.append(sum(exps[j] for j in idx))
            elif kind == "var":
                out.append(exps[idx])
            else:
                out.append(-exps[idx])
        return tuple(out)

    return key


def _rows(blocks):
    """Weight rows of an order: ('deg', idx) | ('var', j) | ('rev', j)."""
    rows = []
    for idx, kind in blocks:
        if kind == "lex":
            rows.extend(("var", j) for j in idx)
        else:
            rows.append(("deg", idx))
            rows.extend(("rev", j) for j in reversed(idx[1:]))
    return rows


class OrderPacker:
    """Pack exponent vectors into ints whose natural order is a monomial order.

    Each weight row of the order occupies ``bits`` bits, most significant row
    first; reversed rows store ``max_exp - e``. The encoding is affine, so
    ``key(a*b) == key(a) + key(b) - offset`` whenever every exponent of the
    product stays ``<= max_exp``.
    """

    def __init__(self, order: MonomialOrder, registry, bits: int = 24, max_exp: int = MAX_EXP):
        self.order = order
        self.registry = tuple(registry)
        self.n = len(self.registry)
        self.bits = bits
        self.max_exp = max_exp
        self.rows = _rows(order.blocks(self.registry))
        if self.n * max_exp >= (1 << bits):
            raise ValueError("field width too small for the exponent bound")
        self.nrows = len(self.rows)
        self.offset = 0
        for r, (kind, _) in enumerate(self.rows):
            if kind == "rev":
                self.offset += max_exp << self._shift(r)

    def _shift(self, r: int) -> int:
        return self.bits * (self.nrows - 1 - r)

    def pack(self, exps) -> int:
        key = 0
        for r, (kind, idx) in enumerate(self.rows):
            if kind == "deg":
                val = sum(exps[j] for j in idx)
            elif kind == "var":
                val = exps[idx]
            else:
                val = self.max_exp - exps[idx]
            key |= val << self._shift(r)
        return key

    def unpack(self, key: int) -> tuple[int, ...]:
        mask = (1 << self.bits) - 1
        exps = [0] * self.n
        degs = []
        for r, (kind, idx) in enumerate(self.rows):
            val = (key >> self._shift(r)) & mask
            if kind == "deg":
                degs.append((idx, val))
            elif kind == "var":
                exps[idx] = val
            else:
                exps[idx] = self.max_exp - val
        for idx, total in degs:
            exps[idx[0]] = total - sum(exps[j] for j in idx[1:])
        return tuple(exps)
