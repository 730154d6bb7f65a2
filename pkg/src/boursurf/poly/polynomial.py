"""Sparse multivariate polynomials over Q(i) with an explicit variable registry."""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

from .monomial import (
    MAX_EXP,
    MonomialOrder,
    MonomialOverflowError,
    check_overflow,
    check_registry,
    guard_mask,
    pack,
    unpack,
)
from .rational import GaussianRational, as_rational

GREVLEX = MonomialOrder("grevlex")
_GUARD_ALL = guard_mask(64)


class RegistryError(ValueError):
    """Operands live over different variable registries or name unknown variables."""


def _split_coeff(c):
    if isinstance(c, GaussianRational):
        return c.re, c.im
    if isinstance(c, complex):
        raise TypeError("floating-point coefficients are not allowed")
    return as_rational(c), Fraction(0)


class _ZPoly:
    """Working form for heavy arithmetic: integer numerators over one denominator.

    ``re``/``im`` map packed monomials to ints; the value is ``(re + i*im) / den``.
    """

    __slots__ = ("re", "im", "den")

    def __init__(self, re, im, den):
        self.re, self.im, self.den = re, im, den

    @classmethod
    def from_poly(cls, p: "Polynomial") -> "_ZPoly":
        den = 1
        for v in p._re.values():
            den = lcm(den, v.denominator)
        for v in p._im.values():
            den = lcm(den, v.denominator)
        re = {k: v.numerator * (den // v.denominator) for k, v in p._re.items()}
        im = {k: v.numerator * (den // v.denominator) for k, v in p._im.items()}
        return cls(re, im, den)

    @classmethod
    def const(cls, c: int = 1) -> "_ZPoly":
        return cls({0: c} if c else {}, {}, 1)

    def to_poly(self, registry) -> "Polynomial":
        d = self.den
        re = {k: Fraction(v, d) for k, v in self.re.items() if v}
        im = {k: Fraction(v, d) for k, v in self.im.items() if v}
        return Polynomial._raw(registry, re, im)

    def normalize(self) -> "_ZPoly":
        g = self.den
        for v in self.re.values():
            if g == 1:
                break
            g = gcd(g, v)
        for v in self.im.values():
            if g == 1:
                break
            g = gcd(g, v)
        if g > 1:
            self.re = {k: v // g for k, v in self.re.items()}
            self.im = {k: v // g for k, v in self.im.items()}
            self.den //= g
        return self

    def __add__(self, other: "_ZPoly") -> "_ZPoly":
        L = lcm(self.den, other.den)
        fa, fb = L // self.den, L // other.den
        return _ZPoly(_lincomb(self.re, fa, other.re, fb),
                      _lincomb(self.im, fa, other.im, fb), L)

    def __mul__(self, other: "_ZPoly") -> "_ZPoly":
        re = _mul_int(self.re, other.re)
        im = {}
        if self.im and other.im:
            re = _lincomb(re, 1, _mul_int(self.im, other.im), -1)
        if self.im or other.im:
            im = _lincomb(_mul_int(self.re, other.im), 1, _mul_int(self.im, other.re), 1)
        for k in re:
            if k & _GUARD_ALL:
                raise MonomialOverflowError(f"monomial exponent overflow (> {MAX_EXP})")
        for k in im:
            if k & _GUARD_ALL:
                raise MonomialOverflowError(f"monomial exponent overflow (> {MAX_EXP})")
        return _ZPoly(re, im, self.den * other.den)


def _lincomb(a: dict, fa: int, b: dict, fb: int) -> dict:
    if fa == 1:
        out = dict(a)
    else:
        out = {k: v * fa for k, v in a.items()}
    get = out.get
    for k, v in b.items():
        s = get(k, 0) + v * fb
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def _mul_int(a: dict, b: dict) -> dict:
    if len(a) < len(b):
        a, b = b, a
    out: dict = {}
    get = out.get
    bi = list(b.items())
    for ka, ca in a.items():
        for kb, cb in bi:
            k = ka + kb
            out[k] = get(k, 0) + ca * cb
    return {k: v for k, v in out.items() if v}


class Polynomial:
    """Immutable sparse polynomial with Gaussian-rational coefficients.

    ``registry`` is the ordered tuple of variable names. Terms are kept as two
    maps from packed monomials to Fractions (real and imaginary parts); no zero
    coefficient is ever stored.
    """

    __slots__ = ("registry", "_re", "_im", "_hash")

    def __init__(self, registry, terms=None):
        self.registry = check_registry(registry)
        n = len(self.registry)
        re: dict = {}
        im: dict = {}
        for exps, c in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != n:
                raise RegistryError(f"monomial {exps} does not match registry {self.registry}")
            k = pack(exps)
            a, b = _split_coeff(c)
            if a:
                re[k] = re.get(k, 0) + a
            if b:
                im[k] = im.get(k, 0) + b
        self._re = {k: v for k, v in re.items() if v}
        self._im = {k: v for k, v in im.items() if v}
        self._hash = None

    @classmethod
    def _raw(cls, registry, re, im) -> "Polynomial":
        p = object.__new__(cls)
        p.registry = registry
        p._re = re
        p._im = im
        p._hash = None
        return p

    # constructors -----------------------------------------------------
    @classmethod
    def zero(cls, registry) -> "Polynomial":
        return cls._raw(check_registry(registry), {}, {})

    @classmethod
    def const(cls, registry, c) -> "Polynomial":
        reg = check_registry(registry)
        a, b = _split_coeff(c)
        return cls._raw(reg, {0: a} if a else {}, {0: b} if b else {})

    @classmethod
    def var(cls, registry, name: str) -> "Polynomial":
        reg = check_registry(registry)
        if name not in reg:
            raise RegistryError(f"unknown variable {name!r} (registry {reg})")
        exps = [0] * len(reg)
        exps[reg.index(name)] = 1
        return cls._raw(reg, {pack(exps): Fraction(1)}, {})

    @classmethod
    def variables(cls, registry) -> tuple["Polynomial", ...]:
        reg = check_registry(registry)
        return tuple(cls.var(reg, v) for v in reg)

    @classmethod
    def monomial(cls, registry, exps, c=1) -> "Polynomial":
        return cls(registry, {tuple(exps): c})

    # basic views ------------------------------------------------------
    @property
    def nvars(self) -> int:
        return len(self.registry)

    def _keys(self):
        if not self._im:
            return self._re.keys()
        return self._re.keys() | self._im.keys()

    @property
    def terms(self) -> dict[tuple[int, ...], GaussianRational]:
        n = self.nvars
        zero = Fraction(0)
        return {unpack(k, n): GaussianRational(self._re.get(k, zero), self._im.get(k, zero))
                for k in self._keys()}

    def coefficient(self, exps) -> GaussianRational:
        k = pack(exps)
        return GaussianRational(self._re.get(k, 0), self._im.get(k, 0))

    def __len__(self):
        return len(self._keys())

    def is_zero(self) -> bool:
        return not self._re and not self._im

    def __bool__(self):
        return not self.is_zero()

    def is_real(self) -> bool:
        return not self._im

    def is_constant(self) -> bool:
        return all(k == 0 for k in self._keys())

    def constant_term(self) -> GaussianRational:
        return GaussianRational(self._re.get(0, 0), self._im.get(0, 0))

    def real_coefficients(self) -> dict[tuple[int, ...], Fraction]:
        """Exponent -> Fraction map; raises if any coefficient is non-real."""
        if self._im:
            raise ValueError("polynomial has non-real coefficients")
        n = self.nvars
        return {unpack(k, n): v for k, v in self._re.items()}

    def total_degree(self) -> int:
        if self.is_zero():
            return -1
        n = self.nvars
        return max(sum(unpack(k, n)) for k in self._keys())

    def degree(self, var: str) -> int:
        j = self._index(var)
        if self.is_zero():
            return -1
        n = self.nvars
        return max(unpack(k, n)[j] for k in self._keys())

    def variables_present(self) -> tuple[str, ...]:
        n = self.nvars
        seen = [False] * n
        for k in self._keys():
            for j, e in enumerate(unpack(k, n)):
                if e:
                    seen[j] = True
        return tuple(v for v, s in zip(self.registry, seen) if s)

    def _index(self, var: str) -> int:
        try:
            return self.registry.index(var)
        except ValueError:
            raise RegistryError(f"unknown variable {var!r} (registry {self.registry})") from None

    def sorted_terms(self, order: MonomialOrder = GREVLEX):
        """(exponents, coefficient) pairs in strictly descending ``order``."""
        key = order.key_function(self.registry)
        items = list(self.terms.items())
        items.sort(key=lambda t: key(t[0]), reverse=True)
        return items

    def leading_term(self, order: MonomialOrder = GREVLEX):
        if self.is_zero():
            raise ValueError("zero polynomial has no leading term")
        key = order.key_function(self.registry)
        n = self.nvars
        k = max(self._keys(), key=lambda k: key(unpack(k, n)))
        return unpack(k, n), GaussianRational(self._re.get(k, 0), self._im.get(k, 0))

    # coercion ---------------------------------------------------------
    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.registry != self.registry:
                raise RegistryError(
                    f"registry mismatch: {self.registry} vs {other.registry}")
            return other
        return Polynomial.const(self.registry, other)

    # ring operations --------------------------------------------------
    def __neg__(self):
        return Polynomial._raw(self.registry, {k: -v for k, v in self._re.items()},
                               {k: -v for k, v in self._im.items()})

    def __pos__(self):
        return self

    def __add__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return Polynomial._raw(self.registry, _add_frac(self._re, o._re, 1),
                               _add_frac(self._im, o._im, 1))

    __radd__ = __add__

    def __sub__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return Polynomial._raw(self.registry, _add_frac(self._re, o._re, -1),
                               _add_frac(self._im, o._im, -1))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, c) -> "Polynomial":
        a, b = _split_coeff(c)
        if not a and not b:
            return Polynomial.zero(self.registry)
        if not b:
            return Polynomial._raw(self.registry, {k: v * a for k, v in self._re.items()},
                                   {k: v * a for k, v in self._im.items()})
        re = _add_frac({k: v * a for k, v in self._re.items() if a},
                       {k: v * b for k, v in self._im.items()}, -1)
        im = _add_frac({k: v * b for k, v in self._re.items()},
                       {k: v * a for k, v in self._im.items() if a}, 1)
        return Polynomial._raw(self.registry, re, im)

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            o = self._coerce(other)
            if self.is_zero() or o.is_zero():
                return Polynomial.zero(self.registry)
            z = _ZPoly.from_poly(self) * _ZPoly.from_poly(o)
            check_overflow(z.re, self.nvars)
            check_overflow(z.im, self.nvars)
            return z.to_poly(self.registry)
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        z = _zpow(_ZPoly.from_poly(self), k)
        check_overflow(z.re, self.nvars)
        return z.to_poly(self.registry)

    def __truediv__(self, other):
        if isinstance(other, Polynomial):
            return NotImplemented
        a, b = _split_coeff(other)
        return self.scale(GaussianRational(a, b).inverse())

    def conjugate(self) -> "Polynomial":
        return Polynomial._raw(self.registry, dict(self._re), {k: -v for k, v in self._im.items()})

    def real_part(self) -> "Polynomial":
        """Coefficient-wise real part (not the real part as a function)."""
        return Polynomial._raw(self.registry, dict(self._re), {})

    def imag_part(self) -> "Polynomial":
        return Polynomial._raw(self.registry, dict(self._im), {})

    # equality ---------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return (self.registry == other.registry and self._re == other._re
                    and self._im == other._im)
        try:
            return self == Polynomial.const(self.registry, other)
        except TypeError:
            return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.registry, frozenset(self._re.items()),
                               frozenset(self._im.items())))
        return self._hash

    # calculus and composition -----------------------------------------
    def derivative(self, var: str) -> "Polynomial":
        j = self._index(var)
        n = self.nvars
        step = pack([1 if t == j else 0 for t in range(n)])

        def diff(d):
            out = {}
            for k, v in d.items():
                e = unpack(k, n)[j]
                if e:
                    out[k - step] = v * e
            return out

        return Polynomial._raw(self.registry, diff(self._re), diff(self._im))

    def substitute(self, bindings: dict, registry=None) -> "Polynomial":
        """Compose: replace variables by polynomials over a common registry.

        Unbound variables must also exist in the target registry, where they
        are kept as themselves.
        """
        images = dict(bindings)
        for name in images:
            self._index(name)
        if registry is None:
            regs = {p.registry for p in images.values() if isinstance(p, Polynomial)}
            if len(regs) > 1:
                raise RegistryError(f"substitution images use different registries: {regs}")
            registry = regs.pop() if regs else self.registry
        registry = check_registry(registry)
        zimgs = []
        for name in self.registry:
            if name in images:
                img = images[name]
                img = img if isinstance(img, Polynomial) else Polynomial.const(registry, img)
                if img.registry != registry:
                    raise RegistryError(
                        f"image of {name!r} lives over {img.registry}, expected {registry}")
            elif name in registry:
                img = Polynomial.var(registry, name)
            else:
                raise RegistryError(f"variable {name!r} is unbound and absent from {registry}")
            zimgs.append(_ZPoly.from_poly(img))
        if self.is_zero():
            return Polynomial.zero(registry)
        n = self.nvars
        terms = [(unpack(k, n), k) for k in self._keys()]
        z = _horner(terms, self._re, self._im, zimgs, 0)
        z.normalize()
        check_overflow(z.re, len(registry))
        check_overflow(z.im, len(registry))
        return z.to_poly(registry)

    def to_registry(self, registry) -> "Polynomial":
        """Re-express over another registry containing every present variable."""
        registry = check_registry(registry)
        n = self.nvars
        pos = []
        for v in self.registry:
            pos.append(registry.index(v) if v in registry else None)
        m = len(registry)

        def move(d):
            out = {}
            for k, c in d.items():
                exps = unpack(k, n)
                new = [0] * m
                for j, e in enumerate(exps):
                    if e:
                        if pos[j] is None:
                            raise RegistryError(
                                f"variable {self.registry[j]!r} missing from {registry}")
                        new[pos[j]] = e
                out[pack(new)] = c
            return out

        return Polynomial._raw(registry, move(self._re), move(self._im))

    def rename(self, mapping: dict) -> "Polynomial":
        reg = tuple(mapping.get(v, v) for v in self.registry)
        return Polynomial._raw(check_registry(reg), dict(self._re), dict(self._im))

    def eval(self, point):
        """Evaluate at a point (one value per registry variable).

        Exact inputs (int, Fraction, GaussianRational) give an exact result:
        a Fraction when the value is real, otherwise a GaussianRational. Any
        float/complex input switches to double precision, which is not exact.
        """
        point = list(point)
        if len(point) != self.nvars:
            raise RegistryError(
                f"point has {len(point)} coordinates, registry has {self.nvars}")
        n = self.nvars
        if any(isinstance(x, (float, complex)) for x in point):
            vals = [complex(x) if isinstance(x, (complex, GaussianRational)) else float(x)
                    for x in point]
            total = 0.0
            for k in self._keys():
                c = float(self._re.get(k, 0))
                if self._im:
                    c = complex(c, float(self._im.get(k, 0)))
                term = c
                for x, e in zip(vals, unpack(k, n)):
                    if e:
                        term *= x ** e
                total += term
            if isinstance(total, complex) and total.imag == 0 and self.is_real():
                return total.real
            return total
        if all(not isinstance(x, GaussianRational) or x.is_real() for x in point) and not self._im:
            vals = [as_rational(x) for x in point]
            total = Fraction(0)
            for k, c in self._re.items():
                term = c
                for x, e in zip(vals, unpack(k, n)):
                    if e:
                        term *= x ** e
                total += term
            return total
        vals = [GaussianRational.coerce(x if not isinstance(x, int) else Fraction(x)) for x in point]
        total = GaussianRational(0)
        for exps, c in self.terms.items():
            term = c
            for x, e in zip(vals, exps):
                if e:
                    term = term * x ** e
            total = total + term
        return total.re if total.is_real() else total

    def __call__(self, *point):
        return self.eval(point)

    def __repr__(self):
        from .textfmt import canonical_text
        return f"Polynomial({canonical_text(self)!r}, vars={','.join(self.registry)})"

    def __str__(self):
        from .textfmt import canonical_text
        return canonical_text(self)


def _add_frac(a: dict, b: dict, sign: int) -> dict:
    out = dict(a)
    get = out.get
    for k, v in b.items():
        s = get(k, 0) + (v if sign > 0 else -v)
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def _zpow(z: _ZPoly, k: int) -> _ZPoly:
    out = _ZPoly.const(1)
    base = z
    while k:
        if k & 1:
            out = (out * base).normalize()
        k >>= 1
        if k:
            base = (base * base).normalize()
    return out


def _horner(terms, re, im, zimgs, j) -> _ZPoly:
    """Substitute variables ``j..`` of the given terms by Horner in variable ``j``."""
    n = len(zimgs)
    if j == n:
        # terms all share exponent prefix; only the coefficient is left
        (exps, k), = terms
        c_re = re.get(k, Fraction(0))
        c_im = im.get(k, Fraction(0))
        den = lcm(c_re.denominator, c_im.denominator)
        out_re = {0: c_re.numerator * (den // c_re.denominator)} if c_re else {}
        out_im = {0: c_im.numerator * (den // c_im.denominator)} if c_im else {}
        return _ZPoly(out_re, out_im, den)
    groups: dict[int, list] = {}
    for t in terms:
        groups.setdefault(t[0][j], []).append(t)
    img = zimgs[j]
    top = max(groups)
    acc = None
    for e in range(top, -1, -1):
        if acc is not None:
            acc = (acc * img).normalize()
        if e in groups:
            part = _horner(groups[e], re, im, zimgs, j + 1)
            acc = part if acc is None else (acc + part)
    return acc
