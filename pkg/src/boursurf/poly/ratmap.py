"""Rational functions and component-wise rational maps."""

from __future__ import annotations

from dataclasses import dataclass

from .gcd import _canon, exact_div, gcd, normalize_primitive_integer
from .polynomial import Polynomial, RegistryError


class RationalFunction:
    """``num / den`` kept reduced: gcd(num, den) constant, den primitive with a
    positive grevlex leading coefficient (den = 1 for polynomials)."""

    __slots__ = ("num", "den")

    def __init__(self, num: Polynomial, den: Polynomial | None = None, *, reduce: bool = True):
        if den is None:
            den = Polynomial.const(num.registry, 1)
        if num.registry != den.registry:
            raise RegistryError(f"registry mismatch: {num.registry} vs {den.registry}")
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if reduce:
            num, den = _reduce(num, den)
        self.num = num
        self.den = den

    @property
    def registry(self):
        return self.num.registry

    def is_polynomial(self) -> bool:
        return self.den.is_constant()

    def __add__(self, other):
        o = _lift(other, self.registry)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den, reduce=False)

    def __sub__(self, other):
        return self + (-_lift(other, self.registry))

    def __rsub__(self, other):
        return _lift(other, self.registry) - self

    def __mul__(self, other):
        o = _lift(other, self.registry)
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _lift(other, self.registry)
        if o.num.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return _lift(other, self.registry) / self

    def __eq__(self, other):
        try:
            o = _lift(other, self.registry)
        except (TypeError, RegistryError):
            return NotImplemented
        return (self.num * o.den - o.num * self.den).is_zero()

    def __hash__(self):
        return hash((self.num, self.den))

    def eval(self, point):
        d = self.den.eval(point)
        if d == 0:
            raise ZeroDivisionError("denominator vanishes at the evaluation point")
        return self.num.eval(point) / d

    def __repr__(self):
        return f"RationalFunction(({self.num}) / ({self.den}))"


def _lift(x, registry) -> RationalFunction:
    if isinstance(x, RationalFunction):
        if x.registry != registry:
            raise RegistryError(f"registry mismatch: {x.registry} vs {registry}")
        return x
    if isinstance(x, Polynomial):
        if x.registry != registry:
            raise RegistryError(f"registry mismatch: {x.registry} vs {registry}")
        return RationalFunction(x)
    return RationalFunction(Polynomial.const(registry, x))


def _reduce(num: Polynomial, den: Polynomial):
    reg = num.registry
    if num.is_zero():
        return num, Polynomial.const(reg, 1)
    if den.is_constant():
        return num.scale(1 / den.constant_term()), Polynomial.const(reg, 1)
    if num.is_real() and den.is_real():
        g = gcd(num, den)
        if not g.is_constant():
            num, den = exact_div(num, g), exact_div(den, g)
    if den.is_constant():
        return num.scale(1 / den.constant_term()), Polynomial.const(reg, 1)
    canon = normalize_primitive_integer(den) if den.is_real() else _canon(den)
    # canon = den * f for a nonzero rational f
    f = canon.leading_term()[1] / den.leading_term()[1]
    return num.scale(f), canon


@dataclass(frozen=True)
class RationalMap:
    """Ordered rational components over one registry."""

    components: tuple[RationalFunction, ...]

    def __post_init__(self):
        comps = tuple(self.components)
        if not comps:
            raise ValueError("rational map needs at least one component")
        regs = {c.registry for c in comps}
        if len(regs) != 1:
            raise RegistryError(f"components use different registries: {regs}")
        object.__setattr__(self, "components", comps)

    @classmethod
    def from_pairs(cls, pairs) -> "RationalMap":
        return cls(tuple(RationalFunction(n, d) for n, d in pairs))

    @property
    def registry(self):
        return self.components[0].registry

    def __len__(self):
        return len(self.components)

    def __getitem__(self, i) -> RationalFunction:
        return self.components[i]

    def __iter__(self):
        return iter(self.components)

    def pairs(self):
        return [(c.num, c.den) for c in self.components]

    def eval(self, point):
        return tuple(c.eval(point) for c in self.components)

    def __eq__(self, other):
        if not isinstance(other, RationalMap) or len(other) != len(self):
            return NotImplemented
        return all(a == b for a, b in zip(self.components, other.components))

    def __hash__(self):
        return hash(self.components)
