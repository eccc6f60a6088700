import itertools
from fractions import Fraction

import pytest

from fuzzycrt.core import check_guess
from fuzzycrt.errors import InconsistencyError, PreconditionError
from fuzzycrt.generators import gen_random_taskset
from fuzzycrt.intervals import Interval
from fuzzycrt.optimize import min_s_aggregate, min_s_binary
from fuzzycrt.realtime import Task, TaskSet, bounds_lu, response_solution, reveal, to_bms

EX = TaskSet.of([(1, 4, 2), (1, 2, 0)])


def system_holds(ts, x):
    """Every inequality ``J_i + T_i x_i <= J_n + T_n x_n <= J_i + T_i x_i + c_i``, with ``x_1 = 1``."""
    n = ts.n
    tn = ts.task(n)
    right = tn.J + tn.T * x[-1]
    if x[0] != 1:
        return False
    for i in range(1, n):
        t = ts.task(i)
        left = t.J + t.T * x[i - 1]
        if not left <= right <= left + ts.c(i):
            return False
    return True


def brute_xn(ts):
    n = ts.n
    if n == 1:
        return 1
    # x_1 = 1 caps the response point at J_1 + T_1 + c_1
    t1, tn = ts.task(1), ts.task(n)
    bound = (t1.J + t1.T + ts.c(1) - tn.J) // tn.T
    for xn in range(0, bound + 1):
        ranges = []
        tn = ts.task(n)
        for j in range(1, n):
            t = ts.task(j)
            v = tn.J - t.J + tn.T * xn
            lo, hi = -((ts.c(j) - v) // t.T), v // t.T
            if j == 1:
                lo, hi = max(lo, 1), min(hi, 1)
            ranges.append((lo, hi))
        if all(lo <= hi for lo, hi in ranges):
            return xn
    return None


def test_task_validation():
    with pytest.raises(PreconditionError):
        Task(1, 0)
    with pytest.raises(PreconditionError):
        Task(-1, 3)
    with pytest.raises(PreconditionError):
        TaskSet(())


def test_taskset_invariants():
    with pytest.raises(PreconditionError):
        TaskSet.of([(1, 6, 0), (1, 4, 0)])
    with pytest.raises(PreconditionError):
        TaskSet.of([(2, 4, 0), (2, 4, 0), (1, 2, 0)])
    ts = TaskSet.of([(1, 8, 0), (1, 4, 0), (1, 4, 0), (1, 2, 0)])
    assert ts.utilization == Fraction(5, 8)
    assert [ts.c(i) for i in range(1, 5)] == [2, 1, 0, 0]


def test_reveal_examples():
    assert reveal(EX) == 3
    assert reveal(TaskSet.of([(1, 4, 1), (1, 2, 0)])) is None
    assert reveal(TaskSet.of([(1, 5, 0)])) == 1


def test_bounds_examples():
    assert bounds_lu(EX, 1, 2, 1) == (3, 3)
    assert bounds_lu(TaskSet.of([(1, 4, 1), (1, 2, 0)]), 1, 2, 1) == (3, 2)
    ts = TaskSet.of([(0, 8, 3), (0, 4, 3), (1, 2, 0)])
    assert bounds_lu(ts, 1, 2, 5) == (10, 10)
    with pytest.raises(IndexError):
        bounds_lu(EX, 2, 2, 1)
    with pytest.raises(IndexError):
        bounds_lu(EX, 2, 1, 1)


def test_to_bms_examples():
    inst = to_bms(EX)
    assert inst.capacities == (2,)
    assert inst.s_domain == Interval(3, 3)
    inst = to_bms(TaskSet.of([(1, 8, 0), (1, 4, 0), (1, 2, 0)]))
    assert inst.capacities == (2, 4)
    assert inst.s_domain is not None
    inst = to_bms(TaskSet.of([(1, 5, 0)]))
    assert inst.n == 0 and inst.s_domain == Interval(1, 1)
    assert min_s_binary(inst) == 1


def test_response_solution_examples():
    assert response_solution(EX, 3) == [1, 3]
    assert response_solution(TaskSet.of([(1, 5, 0)]), 1) == [1]
    ts = TaskSet.of([(1, 8, 0), (1, 4, 0), (1, 2, 0)])
    xn = reveal(ts)
    if xn is not None:
        assert system_holds(ts, response_solution(ts, xn))
    with pytest.raises(InconsistencyError):
        response_solution(EX, 4)


def test_reveal_matches_brute_force_and_bms():
    for seed in range(400):
        ts = gen_random_taskset(1 + seed % 6, 16, seed, plant=(seed // 6) % 2 == 1)
        xn = reveal(ts)
        assert xn == brute_xn(ts)
        inst = to_bms(ts)
        assert min_s_binary(inst) == xn
        assert min_s_aggregate(inst) == xn
        if xn is not None:
            x = response_solution(ts, xn)
            assert system_holds(ts, x)
            assert check_guess(inst, xn) is not None


def test_equal_period_blocks():
    ts = TaskSet.of([(1, 8, 4), (1, 4, 1), (0, 4, 2), (0, 4, 1), (1, 2, 0)])
    assert reveal(ts) == brute_xn(ts)


def test_deterministic():
    ts = gen_random_taskset(5, 32, 99)
    assert reveal(ts) == reveal(TaskSet(tuple(ts.tasks)))


def test_system_exhaustive_tiny():
    for cs in itertools.product(range(2), repeat=3):
        for js in itertools.product(range(3), repeat=3):
            try:
                ts = TaskSet(tuple(Task(c, t, j) for c, t, j in zip(cs, (8, 4, 2), js)))
            except PreconditionError:
                continue
            assert reveal(ts) == brute_xn(ts)
