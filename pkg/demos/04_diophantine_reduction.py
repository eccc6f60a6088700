"""Directed Diophantine approximation embedded as a bounded mixing set.

The embedded instance has solutions exactly at s = lambda * Q, so the two
brute-force searches must agree.
"""
from fractions import Fraction

from fuzzycrt import DdaInstance, dda_to_bms, gen_random_dda, oracle_dda, oracle_min_s, reduction_roundtrip
from fuzzycrt.reduction import dda_scale

d = DdaInstance((Fraction(1, 2),), 2, Fraction(1, 4))
print(dda_to_bms(d))
print("Q =", oracle_dda(d), " s =", oracle_min_s(dda_to_bms(d)))

d = DdaInstance((Fraction(1, 3), Fraction(1, 2)), 6, Fraction(1, 100))
print("Q =", oracle_dda(d), " lambda =", dda_scale(d), " s =", oracle_min_s(dda_to_bms(d)))

agree = sum(reduction_roundtrip(gen_random_dda(3, 10, 50, s)) for s in range(40))
print(f"{agree}/40 random instances agree")
