"""Ideals, Gröbner bases and the resource budget for eliminations."""

from __future__ import annotations

import threading
import time
from dataclasses import dataclass, field

from ..poly import GREVLEX, MonomialOrder, Polynomial, RegistryError


class BudgetExceeded(RuntimeError):
    """An elimination hit its time, pair or degree ceiling (or was cancelled).

    ``stats`` holds the partial statistics at the moment of the stop.
    """

    def __init__(self, reason: str, stats: dict):
        self.reason = reason
        self.stats = dict(stats)
        detail = ", ".join(f"{k}={v}" for k, v in sorted(self.stats.items()))
        super().__init__(f"elimination budget exceeded ({reason}); {detail}")


class CancelToken:
    """Cooperative cancellation, checked between S-pair reductions."""

    def __init__(self):
        self._event = threading.Event()

    def cancel(self):
        self._event.set()

    @property
    def cancelled(self) -> bool:
        return self._event.is_set()


@dataclass
class Budget:
    max_seconds: float | None = None
    max_pairs: int | None = None
    max_degree: int | None = None
    cancel: CancelToken | None = None

    def start(self) -> "_Meter":
        return _Meter(self)


class _Meter:
    def __init__(self, budget: Budget):
        self.budget = budget
        self.t0 = time.perf_counter()
        self.stats = {"pairs_reduced": 0, "zero_reductions": 0, "pairs_skipped": 0,
                      "basis_size": 0, "max_degree": 0}

    def elapsed(self) -> float:
        return time.perf_counter() - self.t0

    def snapshot(self) -> dict:
        out = dict(self.stats)
        out["elapsed_s"] = round(self.elapsed(), 3)
        return out

    def check(self, degree: int) -> None:
        b = self.budget
        self.stats["max_degree"] = max(self.stats["max_degree"], degree)
        if b.cancel is not None and b.cancel.cancelled:
            raise BudgetExceeded("cancelled", self.snapshot())
        if b.max_seconds is not None and self.elapsed() > b.max_seconds:
            raise BudgetExceeded(f"time limit {b.max_seconds}s", self.snapshot())
        if b.max_pairs is not None and self.stats["pairs_reduced"] >= b.max_pairs:
            raise BudgetExceeded(f"S-pair limit {b.max_pairs}", self.snapshot())
        if b.max_degree is not None and degree > b.max_degree:
            raise BudgetExceeded(f"degree limit {b.max_degree}", self.snapshot())


UNLIMITED = Budget()


@dataclass(frozen=True)
class Ideal:
    generators: tuple[Polynomial, ...]
    order: MonomialOrder = GREVLEX

    def __post_init__(self):
        gens = tuple(self.generators)
        if not gens:
            raise ValueError("an ideal needs at least one generator")
        regs = {g.registry for g in gens}
        if len(regs) != 1:
            raise RegistryError(f"generators use different registries: {sorted(regs)}")
        for g in gens:
            if g.is_zero():
                raise ValueError("zero generator")
            if not g.is_real():
                raise ValueError("ideal generators must have real coefficients")
        self.order.blocks(gens[0].registry)  # validates elimination variables
        object.__setattr__(self, "generators", gens)

    @property
    def registry(self):
        return self.generators[0].registry

    def with_order(self, order: MonomialOrder) -> "Ideal":
        return Ideal(self.generators, order)


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced Gröbner basis: monic elements sorted by decreasing leading monomial."""

    elements: tuple[Polynomial, ...]
    order: MonomialOrder
    registry: tuple[str, ...]
    stats: dict = field(default_factory=dict, compare=False, hash=False)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __getitem__(self, i):
        return self.elements[i]

    def leading_monomials(self):
        return [g.leading_term(self.order)[0] for g in self.elements]
