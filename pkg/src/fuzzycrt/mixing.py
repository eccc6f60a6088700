"""Smallest ``s`` for the unbounded mixing set ``s + a_i*x_i >= b_i``."""
from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence, Tuple

from .core import ceil_div

__all__ = ["MixingInstance", "mixing_min_s"]


@dataclass(frozen=True)
class MixingInstance:
    a: Tuple[int, ...]
    b: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(self.a))
        object.__setattr__(self, "b", tuple(self.b))
        if len(self.a) != len(self.b):
            raise ValueError("capacity and bound lists differ in length")


def mixing_min_s(a: Sequence[int], b: Sequence[int]) -> Tuple[int, List[int]]:
    """Return ``(s*, x*)`` with ``s*`` minimal over ``s >= 0``.

    Only zero-capacity rows can push ``s`` up, so ``s* = max({0} | {b_i : a_i = 0})``.
    Rows already met by ``s*`` (and all zero rows) get ``x_i = 0``; the rest
    round ``(b_i - s*)/a_i`` away from the infeasible side.
    """
    if len(a) != len(b):
        raise ValueError("capacity and bound lists differ in length")
    s = max([0] + [bi for ai, bi in zip(a, b) if ai == 0])
    x = []
    for ai, bi in zip(a, b):
        if s >= bi:
            x.append(0)
        elif ai > 0:
            x.append(ceil_div(bi - s, ai))
        else:
            x.append((bi - s) // ai)
    return s, x
