"""Residue sets of integer intervals and how they intersect."""
from fuzzycrt.intervals import Interval, intersect_one_many, intersect_pair, lift_intersection, project

# An interval shorter than the modulus projects to one or two residue runs.
print(project(Interval(7, 9), 5))   # 7,8,9 -> 2,3,4
print(project(Interval(3, 6), 5))   # wraps: 3,4,0,1
print(project(Interval(2, 9), 5))   # long enough to hit everything

# Two wrapping intervals mod 10 meet in two pieces.
print(intersect_pair(Interval(8, 12), Interval(9, 14), 10))

# Against a list of intervals the result never needs more than k+1 pieces.
q = [Interval(9, 14), Interval(7, 11)]
print(intersect_one_many(Interval(8, 12), q, 10))

# Lifting: which values of [5,10] mod 12 carry each residue mod 4 that is
# also hit by [1,2]?  Only the first occurrence of each residue is kept.
print(lift_intersection(Interval(5, 10), Interval(1, 2), 4, 3))

# Everything is exact at any size.
big = 10**50
print(intersect_pair(Interval(big, big + 3), Interval(big + 2, big + 9), 7 * 10**40 + 1))
