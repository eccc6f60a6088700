"""Unbounded mixing sets, and x_n for a harmonic task set with release jitter."""
from fuzzycrt import TaskSet, gen_random_taskset, min_s_binary, mixing_min_s, response_solution, reveal, to_bms

# Only zero-capacity rows can force s up.
print(mixing_min_s((2, 5), (3, -2)))
print(mixing_min_s((2, 0), (3, 7)))
print(mixing_min_s((-3,), (4,)))

# Tasks listed as (C, T, J), longest period first, analysed task last.
ts = TaskSet.of([(1, 4, 2), (1, 2, 0)])
xn = reveal(ts)
print("x_n =", xn, "full vector", response_solution(ts, xn))
print("same instance as a bounded mixing set:", to_bms(ts))
print("its minimum:", min_s_binary(to_bms(ts)))

print("jitter 1 instead of 2:", reveal(TaskSet.of([(1, 4, 1), (1, 2, 0)])))

# Random jitter makes most larger sets infeasible; planted ones are not.
for seed in range(6):
    ts = gen_random_taskset(5, 32, seed, plant=seed % 2 == 0)
    print([(t.C, t.T, t.J) for t in ts.tasks], reveal(ts), min_s_binary(to_bms(ts)))
