"""
Instances, normalisation, guess checking and the harmonic feasibility sweep.

A constraint ``lower <= s + a*x <= upper`` is the bounded-mixing-set view of
the congruence ``s = r (mod a)`` for some ``r`` in ``[lower, upper]``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple, Union

from .errors import NotHarmonicError
from .intervals import Interval, ModSet, intersect_one_many, merge_arcs, rep

__all__ = [
    "Constraint",
    "FscInstance",
    "NormalizedInstance",
    "Solution",
    "normalize",
    "as_normalized",
    "check_guess",
    "feasible",
    "feasibility_sweep",
    "is_feasible",
    "require_harmonic",
    "sweep_constraints",
    "solution_upper_bound",
    "with_domain_constraint",
    "ceil_div",
]


def ceil_div(p: int, q: int) -> int:
    return -((-p) // q)


@dataclass(frozen=True, slots=True)
class Constraint:
    a: int
    lower: int
    upper: int

    def __post_init__(self):
        if self.lower > self.upper:
            raise ValueError(f"empty remainder interval [{self.lower}, {self.upper}]")

    @property
    def remainders(self) -> Interval:
        return Interval(self.lower, self.upper)

    @property
    def tight(self) -> bool:
        return self.upper - self.lower + 1 < self.a


@dataclass(frozen=True)
class FscInstance:
    """Raw instance: any integer capacities, optional interval of admissible ``s``."""

    constraints: Tuple[Constraint, ...]
    s_domain: Optional[Interval] = None

    def __post_init__(self):
        object.__setattr__(self, "constraints", tuple(self.constraints))
        if self.s_domain is not None and self.s_domain.lo < 0:
            raise ValueError("s_domain must lie in the nonnegative integers")

    @classmethod
    def from_lists(cls, capacities, lower, upper, s_domain=None) -> "FscInstance":
        if not (len(capacities) == len(lower) == len(upper)):
            raise ValueError("capacities, lower and upper must have equal length")
        return cls(
            tuple(Constraint(a, b, B) for a, b, B in zip(capacities, lower, upper)),
            s_domain,
        )

    @property
    def capacities(self) -> Tuple[int, ...]:
        return tuple(c.a for c in self.constraints)


@dataclass(frozen=True)
class NormalizedInstance:
    """Positive, tight, ascending capacities.

    ``provenance[k]`` is ``(original_index, flipped)`` for normalised
    constraint ``k``; ``original_index`` is None for constraints added by the
    solver itself.  ``infeasible`` is set when the admissible range of ``s``
    is already empty after folding zero-capacity rows.
    """

    constraints: Tuple[Constraint, ...]
    s_domain: Optional[Interval] = None
    provenance: Tuple[Tuple[Optional[int], bool], ...] = ()
    original: Optional[FscInstance] = field(default=None, repr=False, compare=False)
    infeasible: bool = False

    def __post_init__(self):
        object.__setattr__(self, "constraints", tuple(self.constraints))
        if not self.provenance:
            object.__setattr__(
                self, "provenance", tuple((k, False) for k in range(len(self.constraints)))
            )
        if len(self.provenance) != len(self.constraints):
            raise ValueError("provenance must have one entry per constraint")
        prev = 0
        for c in self.constraints:
            if c.a < 1:
                raise ValueError(f"normalized capacity must be >= 1, got {c.a}")
            if not c.tight:
                raise ValueError(f"constraint {c} is not tight")
            if c.a < prev:
                raise ValueError("capacities must be sorted ascending")
            prev = c.a

    @property
    def n(self) -> int:
        return len(self.constraints)

    @property
    def capacities(self) -> Tuple[int, ...]:
        return tuple(c.a for c in self.constraints)

    @property
    def harmonic(self) -> bool:
        return _first_non_harmonic(self.constraints) is None

    def replace(self, constraints, provenance=None, s_domain=...) -> "NormalizedInstance":
        """Copy with a new constraint list (and optionally a new domain)."""
        if provenance is None:
            old = list(self.provenance)
            provenance = old[: len(constraints)] + [(None, False)] * (len(constraints) - len(old))
        return NormalizedInstance(
            tuple(constraints),
            self.s_domain if s_domain is ... else s_domain,
            tuple(provenance),
            self.original,
            self.infeasible,
        )


@dataclass(frozen=True)
class Solution:
    s: int
    x: Tuple[int, ...]


def _first_non_harmonic(constraints: Sequence[Constraint]):
    for i in range(len(constraints) - 1):
        if constraints[i + 1].a % constraints[i].a:
            return i
    return None


def normalize(inst: FscInstance) -> NormalizedInstance:
    """Flip negative capacities, drop wide rows, fold zero-capacity rows into the domain."""
    lo, hi = (inst.s_domain.lo, inst.s_domain.hi) if inst.s_domain else (0, None)
    kept = []
    for idx, con in enumerate(inst.constraints):
        if con.a == 0:
            lo = max(lo, con.lower)
            hi = con.upper if hi is None else min(hi, con.upper)
            continue
        a = abs(con.a)
        if con.upper - con.lower + 1 >= a:
            continue
        kept.append((Constraint(a, con.lower, con.upper), (idx, con.a < 0)))
    kept.sort(key=lambda item: item[0].a)

    infeasible = hi is not None and lo > hi
    if hi is None or infeasible:
        domain = None
    else:
        domain = Interval(lo, hi)
    return NormalizedInstance(
        tuple(c for c, _ in kept),
        domain,
        tuple(p for _, p in kept),
        inst,
        infeasible,
    )


def as_normalized(inst: Union[FscInstance, NormalizedInstance]) -> NormalizedInstance:
    return normalize(inst) if isinstance(inst, FscInstance) else inst


def check_guess(inst: Union[FscInstance, NormalizedInstance], s: int) -> Optional[Solution]:
    """Return the unique witness for the guess ``s``, or None if ``s`` fails.

    ``x`` is reported against the original constraints when the instance came
    from :func:`normalize` (signs restored, redundant rows filled in, zero rows
    set to 0); otherwise in normalised order.
    """
    inst = as_normalized(inst)
    if inst.infeasible or s < 0:
        return None
    if inst.s_domain is not None and s not in inst.s_domain:
        return None
    xs = []
    for c in inst.constraints:
        x = ceil_div(c.lower - s, c.a)
        if x != (c.upper - s) // c.a:
            return None
        xs.append(x)

    if inst.original is None:
        return Solution(s, tuple(xs))
    full = []
    for con in inst.original.constraints:
        if con.a == 0:
            full.append(0)
        else:
            x = ceil_div(con.lower - s, abs(con.a))
            full.append(-x if con.a < 0 else x)
    for x, (idx, flipped) in zip(xs, inst.provenance):
        if idx is not None:
            full[idx] = -x if flipped else x
    return Solution(s, tuple(full))


def solution_upper_bound(inst: Union[FscInstance, NormalizedInstance]) -> int:
    """``lcm`` of the capacities; the smallest solution, if any, lies below it."""
    inst = as_normalized(inst)
    return math.lcm(*inst.capacities) if inst.constraints else 1


def with_domain_constraint(inst: NormalizedInstance) -> NormalizedInstance:
    """Replace a bounded ``s_domain [l, u]`` by an extra harmonic constraint.

    The new capacity ``2*a_n*ceil((u+1)/a_n)`` is a multiple of ``a_n`` and
    exceeds ``u``, so inside one period the constraint admits exactly
    ``[l, u]``.
    """
    if inst.s_domain is None:
        return inst
    top = inst.constraints[-1].a if inst.constraints else 1
    u = inst.s_domain.hi
    cap = 2 * top * ceil_div(u + 1, top)
    extra = Constraint(cap, inst.s_domain.lo, u)
    return inst.replace(inst.constraints + (extra,), inst.provenance + ((None, False),), None)


def require_harmonic(inst: NormalizedInstance):
    i = _first_non_harmonic(inst.constraints)
    if i is not None:
        raise NotHarmonicError(i, inst.constraints[i].a, inst.constraints[i + 1].a)


def _sweep(constraints: Sequence[Constraint], keep: bool):
    """Walk from the largest capacity down; returns the Q lists (top first) or a bool."""
    q = [rep(constraints[-1].remainders, constraints[-1].a)]
    trace = [q]
    for c in reversed(constraints[:-1]):
        if q:
            q = merge_arcs(intersect_one_many(c.remainders, q, c.a), c.a)
        if keep:
            trace.append(q)
        elif not q:
            return False
    return trace if keep else bool(q)


def feasibility_sweep(inst: Union[FscInstance, NormalizedInstance]) -> List[Tuple[int, List[Interval]]]:
    """Pairs ``(a_i, Q_i)`` for ``i = n, ..., 1``: the representing intervals of
    every step of the feasibility test, after domain injection.

    ``Q_i`` represents, modulo ``a_i``, exactly the values of ``s`` that
    satisfy constraints ``i..n``; ``len(Q_i) <= n - i + 1``.
    """
    inst = with_domain_constraint(as_normalized(inst))
    require_harmonic(inst)
    if inst.infeasible or not inst.constraints:
        return []
    caps = [c.a for c in reversed(inst.constraints)]
    return list(zip(caps, _sweep(inst.constraints, keep=True)))


def feasible(inst: Union[FscInstance, NormalizedInstance]) -> Tuple[bool, List[ModSet]]:
    """Decide whether some ``s >= 0`` (inside ``s_domain``) satisfies every constraint.

    Returns the verdict and the trace ``Q_n, ..., Q_1`` as ModSets.  A bounded
    domain contributes one extra leading trace entry for its constraint.

    Raises:
        NotHarmonicError: consecutive capacities do not divide each other.
    """
    inst = as_normalized(inst)
    if inst.infeasible:
        require_harmonic(inst)
        return False, []
    steps = feasibility_sweep(inst)
    if not steps:
        return True, []
    trace = [ModSet.of(a, q) for a, q in steps]
    return not trace[-1].is_empty, trace


def is_feasible(inst: Union[FscInstance, NormalizedInstance]) -> bool:
    """Verdict of :func:`feasible` without building the trace."""
    inst = with_domain_constraint(as_normalized(inst))
    require_harmonic(inst)
    if inst.infeasible:
        return False
    if not inst.constraints:
        return True
    return _sweep(inst.constraints, keep=False)


def sweep_constraints(constraints: Sequence[Constraint]) -> bool:
    """Feasibility of a domain-free constraint list already known to be harmonic."""
    return True if not constraints else _sweep(constraints, keep=False)

