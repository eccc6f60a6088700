import random

import pytest
from hypothesis import given, settings, strategies as st

from brute import residues, union_residues, modset_residues
from fuzzycrt.errors import InvalidModulusError
from fuzzycrt.intervals import (
    Interval,
    ModSet,
    canonical_violation,
    intersect_one_many,
    intersect_pair,
    lift_intersection,
    lift_pieces,
    member,
    merge_arcs,
    pair_pieces,
    phi,
    project,
    psi,
    rep,
)

I = Interval


def parts(m):
    return [(p.lo, p.hi) for p in m.parts]


def test_interval_rejects_empty():
    with pytest.raises(ValueError):
        I(3, 2)


@pytest.mark.parametrize(
    "v, alpha, expected",
    [((7, 9), 5, [(2, 4)]), ((3, 6), 5, [(0, 1), (3, 4)]), ((2, 9), 5, [(0, 4)])],
)
def test_project_examples(v, alpha, expected):
    assert parts(project(I(*v), alpha)) == expected


@pytest.mark.parametrize("alpha", [0, -3])
def test_project_bad_modulus(alpha):
    with pytest.raises(InvalidModulusError):
        project(I(0, 1), alpha)


def test_phi_examples():
    assert phi(I(3, 4), I(1, 7), 10) == I(3, 7)
    assert phi(I(8, 9), I(1, 2), 10) is None
    assert phi(I(13, 14), I(21, 27), 10) == I(3, 7)


def test_psi_examples():
    assert psi(I(8, 12), I(9, 14), 10) == I(9, 12)
    assert psi(I(0, 0), I(0, 0), 1) == I(0, 1)
    assert psi(I(9, 11), I(8, 13), 10) == I(9, 11)


def test_intersect_pair_examples():
    assert parts(intersect_pair(I(8, 12), I(9, 14), 10)) == [(0, 2), (9, 9)]
    assert parts(intersect_pair(I(0, 9), I(3, 5), 10)) == [(3, 5)]
    assert intersect_pair(I(1, 2), I(4, 5), 10).is_empty


def test_intersect_one_many_examples():
    got = intersect_one_many(I(8, 12), [I(9, 14)], 10)
    assert union_residues(got, 10) == {0, 1, 2, 9}
    got = intersect_one_many(I(0, 3), [I(1, 1), I(2, 2), I(3, 3)], 10)
    assert sorted(got) == [I(1, 1), I(2, 2), I(3, 3)]
    got = intersect_one_many(I(8, 12), [I(9, 14), I(7, 11)], 10)
    assert union_residues(got, 10) == {8, 9, 0, 1, 2}
    assert len(got) <= 3


def test_intersect_one_many_empty_q():
    assert intersect_one_many(I(0, 3), [], 7) == []


def test_lift_examples():
    assert lift_intersection(I(3, 4), I(1, 1), 2, 2) == [I(3, 3)]
    assert lift_intersection(I(0, 3), I(0, 3), 4, 1) == [I(0, 3)]
    assert lift_intersection(I(5, 10), I(1, 2), 4, 3) == [I(5, 6)]


def test_member_examples():
    m = ModSet.from_parts(5, [I(2, 4)])
    assert member(7, m)
    assert not member(5, m)
    assert member(-1, ModSet.from_parts(5, [I(3, 4)]))


def test_modset_rejects_non_canonical():
    for bad in ([I(0, 2), I(3, 4)], [I(3, 4), I(0, 1)], [I(0, 5)], [I(-1, 2)], [I(0, 2), I(2, 3)]):
        assert canonical_violation(5, bad) is not None
        with pytest.raises(ValueError):
            ModSet(5, tuple(bad))
    assert parts(ModSet.of(5, [I(0, 2), I(3, 4)])) == [(0, 4)]
    assert parts(ModSet.of(10, [I(9, 11)])) == [(0, 1), (9, 9)]


def test_rep_is_normalised():
    assert rep(I(13, 14), 10) == I(3, 4)
    assert rep(I(-1, 1), 10) == I(9, 11)
    assert rep(I(0, 30), 10) == I(0, 9)


def test_merge_arcs_joins_across_wrap():
    assert merge_arcs([I(0, 1), I(9, 9)], 10) == [I(9, 11)]
    assert merge_arcs([I(2, 3), I(4, 4), I(7, 8)], 10) == [I(2, 4), I(7, 8)]


def _endpoints(rng, alpha):
    lo = rng.randint(-2 * alpha, 2 * alpha)
    return I(lo, rng.randint(lo, 2 * alpha))


def test_intersect_pair_matches_enumeration_small_moduli():
    # every interval pair with endpoints in [-2a, 2a] for small a, sampled beyond
    for alpha in range(1, 8):
        span = range(-2 * alpha, 2 * alpha + 1)
        ivs = [I(l, h) for l in span for h in span if l <= h]
        for v in ivs[::3]:
            for w in ivs[::5]:
                pieces = pair_pieces(v, w, alpha)
                assert len(pieces) <= 2
                want = residues(v.lo, v.hi, alpha) & residues(w.lo, w.hi, alpha)
                assert union_residues(pieces, alpha) == want
                got = intersect_pair(v, w, alpha)
                assert canonical_violation(alpha, got.parts) is None
                assert modset_residues(got) == want


@pytest.mark.parametrize(
    "case",
    ["neither wraps", "v wraps", "w wraps", "both wrap", "v full", "w full", "disjoint", "nested", "equal"],
)
def test_pair_case_coverage(case):
    alpha = 10
    v, w = {
        "neither wraps": (I(2, 6), I(4, 8)),
        "v wraps": (I(8, 12), I(1, 5)),
        "w wraps": (I(1, 5), I(7, 13)),
        "both wrap": (I(8, 12), I(9, 14)),
        "v full": (I(0, 9), I(3, 5)),
        "w full": (I(3, 5), I(-4, 20)),
        "disjoint": (I(1, 2), I(4, 5)),
        "nested": (I(1, 8), I(23, 24)),
        "equal": (I(7, 12), I(17, 22)),
    }[case]
    want = residues(v.lo, v.hi, alpha) & residues(w.lo, w.hi, alpha)
    assert modset_residues(intersect_pair(v, w, alpha)) == want
    assert modset_residues(intersect_pair(w, v, alpha)) == want


@settings(max_examples=400, deadline=None)
@given(
    alpha=st.integers(1, 60),
    v=st.tuples(st.integers(-150, 150), st.integers(0, 80)),
    q=st.lists(st.tuples(st.integers(-150, 150), st.integers(0, 80)), min_size=1, max_size=6),
)
def test_one_many_property(alpha, v, q):
    v = I(v[0], v[0] + v[1])
    q = [I(lo, lo + d) for lo, d in q]
    got = intersect_one_many(v, q, alpha)
    assert len(got) <= len(q) + 1
    assert union_residues(got, alpha) == residues(v.lo, v.hi, alpha) & union_residues(q, alpha)


@settings(max_examples=300, deadline=None)
@given(
    a=st.integers(1, 12),
    b=st.integers(1, 12),
    A=st.tuples(st.integers(-60, 160), st.integers(0, 150)),
    B=st.tuples(st.integers(-30, 30), st.integers(0, 15)),
)
def test_lift_property(a, b, A, B):
    A = I(A[0], A[0] + A[1])
    B = I(B[0], B[0] + B[1])
    _check_lift(A, B, a, b)


def _check_lift(A, B, a, b):
    ab = a * b
    got = lift_intersection(A, B, a, b)
    allowed = residues(A.lo, A.hi, ab)
    seen_ints, seen_res = set(), set()
    for p in got:
        assert 0 <= p.lo and p.hi < ab
        for z in range(p.lo, p.hi + 1):
            assert z in allowed
            assert z not in seen_ints and z % a not in seen_res
            seen_ints.add(z)
            seen_res.add(z % a)
    assert seen_res == residues(A.lo, A.hi, a) & residues(B.lo, B.hi, a)
    # each residue is carried by its smallest representative inside A^[ab]
    for r in seen_res:
        z = next(z for z in seen_ints if z % a == r)
        assert z == min(y for y in allowed if y % a == r)


def test_lift_block_structure():
    blocks = lift_pieces(I(5, 10), I(1, 2), 4, 3)
    assert blocks == [(1, [I(5, 6)])]


def test_lift_exhaustive_small():
    rng = random.Random(7)
    for a in range(1, 9):
        for b in range(1, 9):
            for _ in range(6):
                _check_lift(_endpoints(rng, a * b), _endpoints(rng, a), a, b)


def test_huge_values_stay_exact():
    big = 10**40
    alpha = 3 * 10**30 + 7
    got = intersect_pair(I(big, big + 5), I(big + 3, big + 10), alpha)
    r = big % alpha
    assert modset_residues(got) == {(r + k) % alpha for k in range(3, 6)}
