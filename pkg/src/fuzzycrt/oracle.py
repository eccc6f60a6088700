"""
Brute-force ground truth for small instances.

Nothing here goes through normalisation or the interval machinery: every
candidate ``s`` is tested against the raw rows, using the fact that
``lower <= s + a*x <= upper`` has an integer solution ``x`` iff
``(s - lower) mod |a| <= upper - lower``.
"""
from __future__ import annotations

import math
from typing import Optional, Tuple

import numpy as np

from .core import FscInstance
from .errors import ResourceLimitError

__all__ = ["oracle_window", "oracle_feasible_values", "oracle_min_s", "oracle_max_s"]

_INT64_SAFE = 1 << 62


def oracle_window(inst: FscInstance) -> Tuple[int, Optional[int], int]:
    """``(lo, hi, period)``: admissible range of ``s`` and the lcm of nonzero capacities."""
    lo, hi = 0, None
    if inst.s_domain is not None:
        lo, hi = max(lo, inst.s_domain.lo), inst.s_domain.hi
    period = 1
    for c in inst.constraints:
        if c.a == 0:
            lo = max(lo, c.lower)
            hi = c.upper if hi is None else min(hi, c.upper)
        else:
            period = math.lcm(period, abs(c.a))
    return lo, hi, period


def _mask(inst: FscInstance, start: int, stop: int) -> np.ndarray:
    values = [start, stop, *(v for c in inst.constraints for v in (c.a, c.lower, c.upper))]
    if max(abs(v) for v in values) < _INT64_SAFE:
        s = np.arange(start, stop + 1, dtype=np.int64)
        ok = np.ones(s.shape, dtype=bool)
        for c in inst.constraints:
            if c.a == 0:
                ok &= (s >= c.lower) & (s <= c.upper)
            elif c.upper - c.lower < abs(c.a) - 1:
                ok &= (s - c.lower) % abs(c.a) <= c.upper - c.lower
        return ok
    out = []
    for s in range(start, stop + 1):
        good = True
        for c in inst.constraints:
            if c.a == 0:
                good = c.lower <= s <= c.upper
            else:
                good = (s - c.lower) % abs(c.a) <= c.upper - c.lower
            if not good:
                break
        out.append(good)
    return np.array(out, dtype=bool)


def _span(inst: FscInstance, limit: int, from_top: bool):
    if limit < 1:
        raise ValueError("limit must be >= 1")
    lo, hi, period = oracle_window(inst)
    if hi is not None and hi < lo:
        return None
    if hi is None:
        start, stop = lo, lo + period - 1
    elif from_top:
        start, stop = max(lo, hi - period + 1), hi
    else:
        start, stop = lo, min(hi, lo + period - 1)
    if stop - start + 1 > limit:
        raise ResourceLimitError(
            f"would enumerate {stop - start + 1} values of s (period {period}), limit is {limit}"
        )
    return start, stop


def oracle_feasible_values(inst: FscInstance, limit: int, from_top: bool = False) -> np.ndarray:
    """Every feasible ``s`` in one full period of the admissible range.

    The window starts at the lowest admissible ``s`` (or ends at the highest
    one with ``from_top``) and spans ``lcm`` of the capacities, which is
    enough to see every residue pattern once.
    """
    span = _span(inst, limit, from_top)
    if span is None:
        return np.zeros(0, dtype=object)
    start, stop = span
    mask = _mask(inst, start, stop)
    return np.array([start + int(k) for k in np.flatnonzero(mask)], dtype=object)


def oracle_min_s(inst: FscInstance, limit: int = 10**7) -> Optional[int]:
    """Least feasible ``s`` by enumeration; raises instead of truncating.

    Raises:
        ResourceLimitError: the enumeration window is larger than ``limit``.
    """
    vals = oracle_feasible_values(inst, limit)
    return int(vals[0]) if len(vals) else None


def oracle_max_s(inst: FscInstance, limit: int = 10**7) -> Optional[int]:
    """Greatest feasible ``s`` below the period (or inside a bounded domain)."""
    vals = oracle_feasible_values(inst, limit, from_top=True)
    return int(vals[-1]) if len(vals) else None
