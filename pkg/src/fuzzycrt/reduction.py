"""Directed Diophantine approximation (rounding down) and its embedding as a bounded mixing set."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from .core import Constraint, FscInstance
from .errors import PreconditionError
from .oracle import oracle_min_s

__all__ = ["DdaInstance", "dda_scale", "dda_to_bms", "oracle_dda", "reduction_roundtrip"]


@dataclass(frozen=True)
class DdaInstance:
    """Is there ``Q in 1..N`` with every ``Q*alpha_i - floor(Q*alpha_i) <= eps``?"""

    alphas: Tuple[Fraction, ...]
    N: int
    eps: Fraction

    def __post_init__(self):
        object.__setattr__(self, "alphas", tuple(Fraction(a) for a in self.alphas))
        object.__setattr__(self, "eps", Fraction(self.eps))
        if any(a < 0 for a in self.alphas):
            raise PreconditionError("alphas must be nonnegative")
        if self.N < 1:
            raise PreconditionError("N must be >= 1")
        if not 0 < self.eps < 1:
            raise PreconditionError("eps must lie strictly between 0 and 1")


def dda_scale(d: DdaInstance) -> int:
    """``lambda``: the product of the alpha numerators."""
    return math.prod(a.numerator for a in d.alphas)


def dda_to_bms(d: DdaInstance) -> FscInstance:
    """Build the bounded mixing set whose solutions are ``s = lambda*Q``.

    Rows, in order: ``0 <= s - (lambda/alpha_i) y_i <= floor((lambda/alpha_i) eps)``
    for each ``i``; ``lambda <= s <= lambda*N`` (capacity 0);
    ``s = lambda * y`` (capacity ``lambda``).  Variables ``y`` appear with the
    opposite sign as BMS multipliers, which leaves the capacities as listed.
    """
    lam = dda_scale(d)
    if lam == 0:
        raise PreconditionError("an alpha equal to 0 makes lambda = 0")
    rows = []
    for a in d.alphas:
        cap = (lam // a.numerator) * a.denominator
        rows.append(Constraint(cap, 0, cap * d.eps.numerator // d.eps.denominator))
    rows.append(Constraint(0, lam, lam * d.N))
    rows.append(Constraint(lam, 0, 0))
    return FscInstance(tuple(rows))


def oracle_dda(d: DdaInstance) -> Optional[int]:
    """Least qualifying ``Q`` by exhaustive search over ``1..N``."""
    for q in range(1, d.N + 1):
        if all(q * a - math.floor(q * a) <= d.eps for a in d.alphas):
            return q
    return None


def reduction_roundtrip(d: DdaInstance, limit: int = 10**7) -> bool:
    """True iff the embedded instance and the original agree on feasibility."""
    return (oracle_min_s(dda_to_bms(d), limit) is None) == (oracle_dda(d) is None)
