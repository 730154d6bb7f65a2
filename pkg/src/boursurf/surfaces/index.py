"""Surface index ``m`` (integer, rational or real), the associated-family
phase and the closed-form class/degree formulas."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

EXCLUDED = (-1, 0, 1)
EXCLUSION_MESSAGE = "m must not be -1, 0 or 1 (the curve components divide by m-1, m, m+1)"
DEGREE_LIMIT_MESSAGE = (
    "surface degree is computed symbolically for m = 2, 3 (and m = 4 with the "
    "long-run flag); for m >= 5 the symbolic computation grows beyond any practical "
    "time budget, so it is refused. The closed form (m+1)^2 is available from "
    "ribaucour_degree.")


class InvalidIndex(ValueError):
    pass


def parse_m(text) -> Fraction | float:
    """``"3"`` -> Fraction(3), ``"1/2"`` -> Fraction(1, 2), ``"2.5"`` -> 2.5."""
    if isinstance(text, (int, Fraction)):
        val = Fraction(text)
    elif isinstance(text, float):
        val = text
    else:
        s = str(text).strip()
        try:
            if "/" in s:
                p, q = s.split("/")
                val = Fraction(int(p), int(q))
            else:
                val = Fraction(int(s))
        except (ValueError, ZeroDivisionError):
            try:
                val = float(s)
            except ValueError:
                raise InvalidIndex(f"cannot parse m from {text!r}") from None
    if isinstance(val, float) and not math.isfinite(val):
        raise InvalidIndex("m must be finite")
    if val in EXCLUDED:
        raise InvalidIndex(EXCLUSION_MESSAGE)
    return val


def symbolic_m(m) -> int:
    """Validate an index for the exact machinery: integer m >= 2."""
    val = parse_m(m)
    if isinstance(val, float) or val.denominator != 1:
        raise InvalidIndex(f"symbolic operations need an integer m >= 2, got {m}")
    if val < 2:
        raise InvalidIndex(f"symbolic operations need m >= 2, got {m}")
    return int(val)


@dataclass(frozen=True)
class SurfaceIndex:
    m: Fraction | float
    alpha: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "m", parse_m(self.m))

    @property
    def is_integer(self) -> bool:
        return not isinstance(self.m, float) and self.m.denominator == 1


def ribaucour_class(p: int, q: int = 1) -> int:
    """Class ``2q(p+q)`` of the surface with ``m = p/q`` in lowest terms."""
    if q < 1:
        raise InvalidIndex("q must be >= 1")
    if gcd(p, q) != 1:
        raise InvalidIndex(f"{p}/{q} is not in lowest terms")
    if Fraction(p, q) in EXCLUDED:
        raise InvalidIndex(EXCLUSION_MESSAGE)
    return 2 * q * (p + q)


def ribaucour_degree(m: int) -> int:
    """Degree ``(m+1)^2`` for integer ``m >= 2``."""
    return (symbolic_m(m) + 1) ** 2
