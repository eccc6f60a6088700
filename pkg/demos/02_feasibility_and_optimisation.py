"""Fuzzy congruences: decide, minimise, maximise, and cross-check by brute force."""
import time

from fuzzycrt import (
    FscInstance,
    Interval,
    check_guess,
    feasible,
    gen_random_harmonic,
    max_s,
    min_s_aggregate,
    min_s_binary,
    oracle_min_s,
    solve,
)

# s = 1 (mod 2), s in {2,3} (mod 4), s in {7,8} (mod 12)
inst = FscInstance.from_lists((2, 4, 12), (1, 2, 7), (1, 3, 8))
ok, trace = feasible(inst)
print("feasible:", ok)
for step in trace:
    print("  ", step)

print("min via bisection:  ", min_s_binary(inst))
print("min via aggregation:", min_s_aggregate(inst))
print("max below 12:       ", max_s(inst))
print("witness:            ", solve(inst))
print("guess s=0:          ", check_guess(inst, 0))

# Restricting s to a window is just another constraint.
windowed = FscInstance(inst.constraints, Interval(8, 40))
print("smallest s in [8,40]:", min_s_binary(windowed))

# Random planted instances agree with enumeration.
for seed in range(5):
    r = gen_random_harmonic(6, 4, seed, plant=True)
    print(seed, r.capacities, min_s_aggregate(r), oracle_min_s(r))

# Big instances: the sweep is quadratic, the numbers are not a problem.
huge = gen_random_harmonic(4000, 4, 1, plant=True)
t = time.perf_counter()
print("n=4000 feasible:", feasible(huge)[0], f"({time.perf_counter() - t:.2f}s,",
      huge.capacities[-1].bit_length(), "bit top capacity)")
