"""
Seeded random instances.

All randomness comes from SplitMix64 (Steele, Lea & Flood 2014) so that a
seed reproduces the same instance in any language: the state advances by
0x9E3779B97F4A7C15 and the output mixer uses the published constants
0xBF58476D1CE4E5B9 / 0x94D049BB133111EB with shifts 30, 27, 31.  A draw
from ``[lo, hi]`` takes ``k = bit_length(hi - lo)//64 + 1`` outputs,
concatenates them big-endian and reduces modulo ``hi - lo + 1``.
"""
from __future__ import annotations

from fractions import Fraction

from .core import Constraint, FscInstance
from .errors import PreconditionError
from .realtime import Task, TaskSet
from .reduction import DdaInstance

__all__ = ["SplitMix64", "gen_random_harmonic", "gen_random_taskset", "gen_random_dda"]

_MASK = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def split(self) -> "SplitMix64":
        return SplitMix64(self.next_u64())

    def randint(self, lo: int, hi: int) -> int:
        """Uniform-ish integer in ``[lo, hi]`` (modulo bias is accepted)."""
        if hi < lo:
            raise ValueError(f"empty range [{lo}, {hi}]")
        span = hi - lo + 1
        v = 0
        for _ in range((span - 1).bit_length() // 64 + 1):
            v = (v << 64) | self.next_u64()
        return lo + v % span

    def choice(self, seq):
        return seq[self.randint(0, len(seq) - 1)]


def gen_random_harmonic(n: int, max_ratio: int, seed: int, plant: bool = False) -> FscInstance:
    """Harmonic instance with ``a_1`` and every ratio drawn from ``[1, max_ratio]``.

    Remainder intervals are tight whenever the capacity allows it (a capacity
    of 1 always yields a redundant row).  With ``plant`` a target ``s* < a_n``
    is drawn first and every interval contains a value congruent to it.
    """
    if n < 1 or max_ratio < 1:
        raise PreconditionError("need n >= 1 and max_ratio >= 1")
    rng = SplitMix64(seed)
    caps = [rng.randint(1, max_ratio)]
    for _ in range(n - 1):
        caps.append(caps[-1] * rng.randint(1, max_ratio))
    target = rng.randint(0, caps[-1] - 1) if plant else None
    rows = []
    for a in caps:
        width = 1 if a == 1 else rng.randint(1, a - 1)
        if target is not None:
            anchor = target % a + a * rng.randint(-1, 1)
            lo = anchor - rng.randint(0, width - 1)
        else:
            lo = rng.randint(-a, a - 1)
        rows.append(Constraint(a, lo, lo + width - 1))
    return FscInstance(tuple(rows))


def planted_target(n: int, max_ratio: int, seed: int) -> int:
    """The ``s*`` that :func:`gen_random_harmonic` plants for these arguments."""
    rng = SplitMix64(seed)
    top = rng.randint(1, max_ratio)
    for _ in range(n - 1):
        top *= rng.randint(1, max_ratio)
    return rng.randint(0, top - 1)


def gen_random_taskset(n: int, max_period: int, seed: int, max_ratio: int = 3, plant: bool = False) -> TaskSet:
    """Harmonic task set (periods non-increasing) with interfering utilization < 1.

    Jitter of the analysed task stays below its period.  Without ``plant``
    the other tasks get jitter up to twice their period, which makes most
    larger sets infeasible; with ``plant`` a response point
    ``R = J_n + T_n*x_n`` is fixed first and every other jitter is chosen so
    that ``R`` falls inside that task's window.
    """
    if n < 1 or max_period < 1:
        raise PreconditionError("need n >= 1 and max_period >= 1")
    rng = SplitMix64(seed)
    periods = [rng.randint(1, max_period)]
    for _ in range(n - 1):
        periods.append(periods[-1] * rng.randint(1, max_ratio))
    periods.reverse()
    while True:
        costs = [rng.randint(0, t) for t in periods]
        if sum(Fraction(c, t) for c, t in zip(costs[:-1], periods[:-1])) < 1:
            break
    tn = periods[-1]
    jn = rng.randint(0, tn - 1)
    if not plant:
        jitter = [rng.randint(0, 2 * t) for t in periods[:-1]] + [jn]
        return TaskSet(tuple(Task(c, t, j) for c, t, j in zip(costs, periods, jitter)))
    tails = [sum(costs[i + 1:n - 1]) for i in range(n)]
    xn = -(-(periods[0] + tails[0]) // tn) + rng.randint(0, 2)
    r = jn + tn * xn
    jitter = []
    for i in range(n - 1):
        d = rng.randint(0, tails[i])
        if i == 0:
            jitter.append(r - periods[0] - d)
        else:
            jitter.append((r - d) % periods[i])
    jitter.append(jn)
    return TaskSet(tuple(Task(c, t, j) for c, t, j in zip(costs, periods, jitter)))


def gen_random_dda(n: int, max_den: int, max_N: int, seed: int) -> DdaInstance:
    """Random instance with positive numerators and denominators up to ``max_den``."""
    rng = SplitMix64(seed)
    alphas = tuple(Fraction(rng.randint(1, max_den), rng.randint(1, max_den)) for _ in range(n))
    eps_den = rng.randint(2, max_den + 1)
    eps = Fraction(rng.randint(1, eps_den - 1), eps_den)
    return DdaInstance(alphas, rng.randint(1, max_N), eps)
