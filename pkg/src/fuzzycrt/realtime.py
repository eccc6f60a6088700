"""
Response-time variable for harmonic tasks with release jitter.

Tasks are indexed ``1..n`` as in the scheduling literature; task ``n`` is
the one under analysis and periods divide in the *decreasing* direction
(``T_i`` is a multiple of ``T_{i+1}``).  The system solved is::

    J_i + T_i*x_i <= J_n + T_n*x_n <= J_i + T_i*x_i + c_i    (i < n)

with ``x_1 = 1`` and ``c_i = C_{i+1} + ... + C_{n-1}``; the goal is ``x_n``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .core import Constraint, FscInstance, NormalizedInstance, ceil_div, normalize
from .errors import InconsistencyError, PreconditionError
from .intervals import Interval

__all__ = ["Task", "TaskSet", "reveal", "bounds_lu", "to_bms", "response_solution"]


@dataclass(frozen=True)
class Task:
    C: int
    T: int
    J: int = 0

    def __post_init__(self):
        if self.T < 1:
            raise PreconditionError(f"period must be >= 1, got {self.T}")
        if self.C < 0 or self.J < 0:
            raise PreconditionError("processing time and jitter must be nonnegative")


@dataclass(frozen=True)
class TaskSet:
    tasks: Tuple[Task, ...]

    def __post_init__(self):
        object.__setattr__(self, "tasks", tuple(self.tasks))
        ts = self.tasks
        if not ts:
            raise PreconditionError("a task set needs at least one task")
        for i in range(len(ts) - 1):
            if ts[i].T % ts[i + 1].T:
                raise PreconditionError(
                    f"periods not harmonic: T_{i + 1}={ts[i].T} is not a multiple of "
                    f"T_{i + 2}={ts[i + 1].T}"
                )
        if self.utilization >= 1:
            raise PreconditionError(f"utilization of tasks 1..n-1 is {self.utilization} >= 1")
        n = len(ts)
        tails = [0] * (n + 1)
        for i in range(n - 2, 0, -1):
            # tails[i] = C_{i+1} + ... + C_{n-1}, 1-based
            tails[i] = tails[i + 1] + ts[i].C
        object.__setattr__(self, "_tails", tuple(tails))

    @classmethod
    def of(cls, rows: Sequence[Tuple[int, int, int]]) -> "TaskSet":
        return cls(tuple(Task(*r) for r in rows))

    @property
    def n(self) -> int:
        return len(self.tasks)

    @property
    def utilization(self) -> Fraction:
        """Exact ``sum C_t/T_t`` over the interfering tasks ``1..n-1``."""
        return sum((Fraction(t.C, t.T) for t in self.tasks[:-1]), Fraction(0))

    def task(self, i: int) -> Task:
        return self.tasks[i - 1]

    def c(self, i: int) -> int:
        return self._tails[i]


def bounds_lu(ts: TaskSet, i: int, j: int, z: int) -> Tuple[int, int]:
    """Range ``[l, u]`` of ``x_j`` forced by ``x_i = z`` (1-based, ``i < j``).

    Empty when ``l > u``; a single value whenever ``c_i + c_j < T_j``.
    """
    if not 1 <= i < j <= ts.n:
        raise IndexError(f"need 1 <= i < j <= {ts.n}, got i={i}, j={j}")
    ti, tj = ts.task(i), ts.task(j)
    base = (ti.T // tj.T) * z
    lo = base + ceil_div(ti.J - tj.J - ts.c(j), tj.T)
    hi = base + (ti.J - tj.J + ts.c(i)) // tj.T
    return lo, hi


def _x_range(ts: TaskSet, j: int, xn: int) -> Tuple[int, int]:
    tn, tj = ts.task(ts.n), ts.task(j)
    v = tn.J - tj.J + tn.T * xn
    return ceil_div(v - ts.c(j), tj.T), v // tj.T


def reveal(ts: TaskSet) -> Optional[int]:
    """Return ``x_n`` for ``x_1 = 1``, or None when the system has no solution.

    Walks the last index of each block of equal periods, each step pinning
    the next value, then confirms every other ``x_j`` has a feasible value.
    Linear in ``n``.
    """
    n = ts.n
    x = {1: 1}
    k = 1
    while k < n:
        i = k
        period = ts.task(i + 1).T
        k = i + 1
        while k < n and ts.task(k + 1).T == period:
            k += 1
        if ts.c(i) + ts.c(k) >= ts.task(k).T:
            raise InconsistencyError(
                f"uniqueness hypothesis fails at i={i}, k={k}: "
                f"c_i + c_k = {ts.c(i) + ts.c(k)} >= T_k = {ts.task(k).T}"
            )
        lo, hi = bounds_lu(ts, i, k, x[i])
        if lo != hi:
            return None
        x[k] = lo
    xn = x[n]
    for j in range(1, n):
        lo, hi = _x_range(ts, j, xn)
        if lo > hi:
            return None
    return xn


def response_solution(ts: TaskSet, x_n: int) -> List[int]:
    """Full vector ``x_1..x_n`` for a given ``x_n`` (lowest value of each range)."""
    out = []
    for j in range(1, ts.n):
        lo, hi = _x_range(ts, j, x_n)
        if lo > hi:
            raise InconsistencyError(f"no feasible x_{j} for x_n={x_n}")
        out.append(lo)
    out.append(x_n)
    return out


def to_bms(ts: TaskSet) -> NormalizedInstance:
    """Bounded-mixing-set form with ``s = x_n``.

    Constraint ``i`` reads ``ceil((J_i-J_n)/T_n) <= s - (T_i/T_n)*x_i <=
    floor((J_i-J_n+c_i)/T_n)``; rows are listed from ``i = n-1`` down to 1 so
    capacities ascend.  ``x_1 = 1`` also turns row 1 into fixed bounds on
    ``s``; they are added as a zero-capacity row, which normalisation folds
    into ``s_domain`` (clipped to ``s >= 0``).
    """
    n = ts.n
    tn = ts.task(n)
    rows = []
    for i in range(n - 1, 0, -1):
        ti = ts.task(i)
        lo = ceil_div(ti.J - tn.J, tn.T)
        hi = (ti.J - tn.J + ts.c(i)) // tn.T
        if lo > hi:
            # no multiple of T_n fits between the two bounds
            return NormalizedInstance((), None, (), None, infeasible=True)
        rows.append(Constraint(ti.T // tn.T, lo, hi))
    if n == 1:
        return normalize(FscInstance((), Interval(1, 1)))
    first = rows[-1]
    pin = Constraint(0, first.a + first.lower, first.a + first.upper)
    return normalize(FscInstance(tuple(rows) + (pin,)))
