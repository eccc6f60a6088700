"""
Smallest and largest feasible ``s`` for harmonic instances.

Two independent routes to the minimum are provided: a binary search over a
measuring constraint (``O(n^2 log a_n)``) and the strongly polynomial
aggregation of the last two constraints (``O(n^3)``).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple, Union

from .core import (
    Constraint,
    FscInstance,
    NormalizedInstance,
    Solution,
    as_normalized,
    check_guess,
    require_harmonic,
    sweep_constraints,
    with_domain_constraint,
)
from .errors import PreconditionError
from .intervals import Interval, lift_pieces, project

__all__ = [
    "AggregationResult",
    "make_beta_instance",
    "make_floor_instance",
    "min_s_binary",
    "min_s_aggregate",
    "max_s",
    "aggregate_last_two",
    "solve",
]

Instance = Union[FscInstance, NormalizedInstance]


@dataclass(frozen=True)
class AggregationResult:
    """Disjoint pieces ``E_1 < ... < E_k`` inside ``[0, a_n)`` standing in for
    the last two constraints; each is the smallest representative of its
    residues modulo ``a_{n-1}``."""

    pieces: Tuple[Interval, ...]
    blocks: Tuple[int, ...] = ()

    @property
    def count(self) -> int:
        return len(self.pieces)


def _prepared(inst: Instance) -> NormalizedInstance:
    inst = with_domain_constraint(as_normalized(inst))
    require_harmonic(inst)
    return inst


def _append(inst: NormalizedInstance, con: Constraint) -> NormalizedInstance:
    return inst.replace(inst.constraints + (con,), inst.provenance + ((None, False),))


def make_beta_instance(inst: Instance, beta: int) -> NormalizedInstance:
    """Append ``0 <= s + 2*a_n*x <= beta``; feasible iff some solution has ``s <= beta``.

    A bounded ``s_domain`` is first turned into a constraint, so ``a_n`` refers
    to the resulting top capacity.
    """
    inst = _prepared(inst)
    if not inst.constraints:
        raise PreconditionError("measuring constraint needs a nonempty instance")
    top = inst.constraints[-1].a
    if not 0 <= beta <= top:
        raise PreconditionError(f"beta must lie in [0, {top}], got {beta}")
    return _append(inst, Constraint(2 * top, 0, beta))


def make_floor_instance(inst: Instance, beta: int) -> NormalizedInstance:
    """Mirror of :func:`make_beta_instance`: feasible iff some solution in
    ``[beta, a_n)`` exists (appends ``beta <= s + 2*a_n*x <= a_n - 1``)."""
    inst = _prepared(inst)
    if not inst.constraints:
        raise PreconditionError("measuring constraint needs a nonempty instance")
    top = inst.constraints[-1].a
    if not 0 <= beta <= top - 1:
        raise PreconditionError(f"beta must lie in [0, {top - 1}], got {beta}")
    return _append(inst, Constraint(2 * top, beta, top - 1))


def min_s_binary(inst: Instance) -> Optional[int]:
    """Smallest feasible ``s`` by bisection on the measuring bound."""
    inst = _prepared(inst)
    if inst.infeasible:
        return None
    if not inst.constraints:
        return 0
    if not sweep_constraints(inst.constraints):
        return None
    top = inst.constraints[-1].a
    lo, hi = 0, top  # invariant: the answer lies in [lo, hi]
    while lo < hi:
        mid = (lo + hi) // 2
        if sweep_constraints(make_beta_instance(inst, mid).constraints):
            hi = mid
        else:
            lo = mid + 1
    return lo


def max_s(inst: Instance) -> Optional[int]:
    """Largest feasible ``s`` below ``a_n`` (inside ``s_domain`` when one is given)."""
    inst = _prepared(inst)
    if inst.infeasible:
        return None
    if not inst.constraints:
        return 0
    if not sweep_constraints(inst.constraints):
        return None
    lo, hi = 0, inst.constraints[-1].a - 1
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if sweep_constraints(make_floor_instance(inst, mid).constraints):
            lo = mid
        else:
            hi = mid - 1
    return lo


def aggregate_last_two(inst: Instance) -> AggregationResult:
    """Fold constraints ``n-1`` and ``n`` into at most six disjoint pieces of ``R_n^[a_n]``.

    The pieces cover every residue of ``R_{n-1}^[a_{n-1}] & R_n^[a_{n-1}]``
    exactly once, always by the smallest element of ``R_n^[a_n]`` carrying
    that residue.
    """
    inst = _prepared(inst)
    if inst.n < 2:
        raise PreconditionError("aggregation needs at least two constraints")
    last, prev = inst.constraints[-1], inst.constraints[-2]
    blocks = lift_pieces(last.remainders, prev.remainders, prev.a, last.a // prev.a)
    pieces, owners = [], []
    for i, d in blocks:
        for p in d:
            if pieces and pieces[-1].hi + 1 == p.lo:
                pieces[-1] = Interval(pieces[-1].lo, p.hi)
            else:
                pieces.append(p)
                owners.append(i)
    return AggregationResult(tuple(pieces), tuple(owners))


def min_s_aggregate(inst: Instance) -> Optional[int]:
    """Smallest feasible ``s`` by repeated aggregation of the top two constraints.

    At every level the pieces are probed in ascending order with the
    feasibility sweep and the first feasible one replaces the top two
    constraints, so each level removes one constraint.
    """
    inst = _prepared(inst)
    if inst.infeasible:
        return None
    cons = list(inst.constraints)
    while len(cons) >= 2:
        agg = aggregate_last_two(NormalizedInstance(tuple(cons)))
        top = cons[-1].a
        for e in agg.pieces:
            probe = cons[:-2] + [Constraint(top, e.lo, e.hi)]
            if sweep_constraints(probe):
                cons = probe
                break
        else:
            return None
    if not cons:
        return 0
    return project(cons[0].remainders, cons[0].a).parts[0].lo


def solve(inst: Instance, objective: str = "min", method: str = "aggregate") -> Optional[Solution]:
    """Optimal ``(s, x)`` for ``objective`` in {"min", "max"}; None if infeasible.

    ``method`` picks the minimisation route ("aggregate" or "binary"); the
    maximum always uses bisection.
    """
    norm = as_normalized(inst)
    if objective == "min":
        if method == "aggregate":
            s = min_s_aggregate(norm)
        elif method == "binary":
            s = min_s_binary(norm)
        else:
            raise ValueError(f"unknown method {method!r}")
    elif objective == "max":
        s = max_s(norm)
    else:
        raise ValueError(f"unknown objective {objective!r}")
    if s is None:
        return None
    sol = check_guess(norm, s)
    if sol is None:  # pragma: no cover - would mean a solver bug
        raise AssertionError(f"optimiser returned infeasible s={s}")
    return sol

