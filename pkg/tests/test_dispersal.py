import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import random_instance
from geomedit import (
    Block,
    DispersalInstance,
    Interval,
    blocks_intersect_when_equispaced,
    breakpoints,
    disperse,
    disperse_by_block_merging,
    equispace_cost,
    equispace_displacements,
    initial_partition,
    median_anchor,
    merge_blocks,
)
from geomedit.oracle import brute_force_disperse, validate_dispersal


def unit(*centers):
    return tuple(Interval(center=F(c), id=i) for i, c in enumerate(centers))


def inst(*centers, s=1):
    return DispersalInstance(unit(*centers), F(s))


# ---------------------------------------------------------------- worked examples


def test_three_coincident_centers():
    r = disperse(inst(0, 0, 0))
    assert r.total == 2
    assert sorted(r.final_centers) == [-1, 0, 1]


def test_two_coincident_centers():
    r = disperse(inst(0, 0))
    assert r.total == 1


def test_symmetric_pair_with_middle():
    r = disperse(inst(0, F(1, 2), 1))
    assert r.total == 1
    assert sorted(r.final_centers) == [F(-1, 2), F(1, 2), F(3, 2)]


def test_already_dispersed_costs_zero():
    r = disperse(inst(0, 2, 5))
    assert r.total == 0
    assert r.final_centers == (0, 2, 5)


def test_empty_and_singleton():
    assert disperse(DispersalInstance((), F(1))).total == 0
    r = disperse(inst(7))
    assert r.total == 0 and r.final_centers == (7,)


def test_larger_separation():
    # gap deficit is 1 (need >= 2, have 1), so the optimum pays exactly 1
    r = disperse(inst(0, 1, s=2))
    assert r.total == 1
    final = sorted(r.final_centers)
    assert final[1] - final[0] >= 2


def test_s_below_one_rejected():
    with pytest.raises(ValueError):
        DispersalInstance(unit(0), F(1, 2))


def test_non_unit_interval_rejected():
    with pytest.raises(ValueError):
        DispersalInstance((Interval(center=F(0), length=F(2), id=0),), F(1))


def test_displacements_in_input_order():
    instance = inst(5, 0, 5)  # input not sorted
    r = disperse(instance)
    for iv, d, c in zip(instance.intervals, r.movement.displacements, r.final_centers):
        assert iv.center + d == c
    assert validate_dispersal(instance, r.movement)


# ---------------------------------------------------------------- block primitives


def test_breakpoints_multiset():
    assert breakpoints([F(0), F(0), F(0)], F(1)) == [0, 1, 2]
    assert breakpoints([F(0), F(3)], F(2)) == [2, 3]


def test_median_anchor_odd_even():
    assert median_anchor([1, 2, 3]) == (2, 2)
    assert median_anchor([1, 2, 3, 4]) == (2, 3)
    with pytest.raises(ValueError):
        median_anchor([])


def test_equispace_cost_convexity_at_median():
    centers = [F(0), F(1, 2), F(2)]
    bps = breakpoints(centers, F(1))
    x1, x2 = median_anchor(bps)
    best = equispace_cost(centers, F(1), x1)
    for cand in bps + [x1 - 1, x2 + 1, (x1 + x2) / 2]:
        assert equispace_cost(centers, F(1), cand) >= best


def test_equispace_displacements_realize_cost():
    centers = [F(0), F(1, 2), F(2)]
    x = F(5, 2)
    ds = equispace_displacements(centers, F(1), x)
    assert sum(abs(d) for d in ds) == equispace_cost(centers, F(1), x)
    finals = [c + d for c, d in zip(centers, ds)]
    assert finals == [x - 2, x - 1, x]


def test_block_merge_condition_boundary():
    # singletons at 0 and 3/2 with s = 1: anchors 1 and 3/2 -> no merge
    left = Block(0, 0, [F(1)])
    right = Block(1, 1, [F(3, 2)])
    assert not blocks_intersect_when_equispaced(left, right)
    # equality is a conflict (non-strict)
    right_eq = Block(1, 1, [F(1)])
    assert blocks_intersect_when_equispaced(left, right_eq)
    merged = merge_blocks(left, right_eq)
    assert merged.first == 0 and merged.last == 1
    assert merged.cum_breakpoints == [1, 1]


def test_merge_requires_adjacency():
    with pytest.raises(ValueError):
        merge_blocks(Block(0, 0, [F(0)]), Block(2, 2, [F(0)]))


def test_initial_partition_runs():
    blocks = initial_partition(inst(0, F(1, 2), 3, 4, 9))
    spans = [(b.first, b.last) for b in blocks]
    assert spans == [(0, 1), (2, 3), (4, 4)]


# ---------------------------------------------------------------- cross-checks


def test_heap_and_block_merging_agree_with_oracle():
    rng = random.Random(123)
    for _ in range(400):
        instance = random_instance(rng, rng.randint(0, 10))
        r1 = disperse(instance)
        r2 = disperse_by_block_merging(instance)
        r3 = brute_force_disperse(instance)
        assert r1.total == r2.total == r3.total
        assert validate_dispersal(instance, r1.movement)
        assert validate_dispersal(instance, r2.movement)


def test_integer_center_fast_path_matches_oracle():
    rng = random.Random(9)
    for _ in range(200):
        n = rng.randint(0, 10)
        instance = DispersalInstance(
            tuple(Interval(center=F(rng.randint(-12, 12)), id=i) for i in range(n)), F(1)
        )
        r = disperse(instance)
        assert r.total == brute_force_disperse(instance).total
        assert validate_dispersal(instance, r.movement)


@settings(max_examples=200, deadline=None)
@given(
    st.lists(st.fractions(min_value=-30, max_value=30, max_denominator=8), max_size=12),
    st.fractions(min_value=1, max_value=3, max_denominator=4),
)
def test_hypothesis_feasible_and_optimal(centers, s):
    instance = DispersalInstance(
        tuple(Interval(center=c, id=i) for i, c in enumerate(centers)), s
    )
    r = disperse(instance)
    assert validate_dispersal(instance, r.movement)
    if len(centers) <= 9:
        assert r.total == brute_force_disperse(instance).total


@settings(max_examples=100, deadline=None)
@given(
    st.lists(st.fractions(min_value=-20, max_value=20, max_denominator=6), max_size=10),
    st.fractions(min_value=0, max_value=10, max_denominator=6),
)
def test_hypothesis_translation_invariance(centers, shift):
    base = DispersalInstance(tuple(Interval(center=c, id=i) for i, c in enumerate(centers)), F(1))
    moved = DispersalInstance(
        tuple(Interval(center=c + shift, id=i) for i, c in enumerate(centers)), F(1)
    )
    assert disperse(base).total == disperse(moved).total


def test_cost_monotone_in_s():
    rng = random.Random(77)
    for _ in range(100):
        ivs = tuple(Interval(center=F(rng.randint(0, 16), 2), id=i) for i in range(rng.randint(0, 8)))
        t1 = disperse(DispersalInstance(ivs, F(1))).total
        t2 = disperse(DispersalInstance(ivs, F(3, 2))).total
        t3 = disperse(DispersalInstance(ivs, F(2))).total
        assert t1 <= t2 <= t3
