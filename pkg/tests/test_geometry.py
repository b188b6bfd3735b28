from fractions import Fraction as F

import pytest

from geomedit import (
    Disk,
    Interval,
    K,
    disks_intersect,
    intervals_intersect,
    lm_distance,
    moving_cost,
    moving_cost_within,
    sort_intervals,
)


def test_interval_endpoints():
    iv = Interval(center=F(3, 2), id=0)
    assert iv.length == 1
    assert iv.left == F(1)
    assert iv.right == F(2)


def test_interval_intersection_is_strict():
    a = Interval(center=F(0), id=0)
    b = Interval(center=F(1), id=1)  # touching endpoints only
    assert not intervals_intersect(a, b)
    c = Interval(center=F(999, 1000), id=2)
    assert intervals_intersect(a, c)


def test_weighted_interval_touching_is_disjoint():
    a = Interval(center=F(0), length=F(4), id=0)
    b = Interval(center=F(3), length=F(2), id=1)
    assert not intervals_intersect(a, b)
    b2 = Interval(center=F(29, 10), length=F(2), id=2)
    assert intervals_intersect(a, b2)


def test_sort_intervals_stable_by_center_then_id():
    ivs = [Interval(center=F(1), id=2), Interval(center=F(0), id=1), Interval(center=F(1), id=0)]
    assert [iv.id for iv in sort_intervals(ivs)] == [1, 0, 2]


def test_lm_distance_l1_vs_l2():
    p, q = (F(0), F(0)), (F(3), F(4))
    assert lm_distance(p, q, "L1") == 7
    # L2 distances are reported squared to stay rational
    assert lm_distance(p, q, "L2") == 25


def test_disk_weights():
    t = Disk(center=(F(0), F(0)), kind="transition", id=0)
    h1 = Disk(center=(F(0), F(0)), kind=1, id=1)
    h6 = Disk(center=(F(0), F(0)), kind=6, id=2)
    assert t.weight == F(K, 3)
    assert h1.weight == 2 * K
    assert h6.weight == 64 * K
    assert t.radius == F(1, 2)


def test_disks_intersect_euclidean_strict():
    a = Disk(center=(F(0), F(0)), kind="transition", id=0)
    b = Disk(center=(F(1), F(0)), kind="transition", id=1)  # tangent
    assert not disks_intersect(a, b)
    c = Disk(center=(F(9, 10), F(0)), kind="transition", id=2)
    assert disks_intersect(a, c)
    # tangency must be exact even for irrational actual distance
    d = Disk(center=(F(7, 10), F(7, 10)), kind="transition", id=3)  # dist^2 = 0.98 < 1
    assert disks_intersect(a, d)


def test_moving_cost_interval():
    iv = Interval(center=F(0), weight=F(3), id=0)
    assert moving_cost(iv, F(-5, 2)) == F(15, 2)


def test_moving_cost_disk_l1():
    d = Disk(center=(F(0), F(0)), kind="transition", metric="L1", id=0)
    assert moving_cost(d, (F(1, 2), F(1, 3))) == F(1, 3) * (F(1, 2) + F(1, 3))


def test_moving_cost_disk_l2_perfect_square():
    d = Disk(center=(F(0), F(0)), kind="transition", metric="L2", id=0)
    assert moving_cost(d, (F(3, 5), F(4, 5))) == F(1, 3)  # distance exactly 1


def test_moving_cost_disk_l2_irrational_raises():
    d = Disk(center=(F(0), F(0)), kind="transition", metric="L2", id=0)
    with pytest.raises(ValueError):
        moving_cost(d, (F(1), F(1)))


def test_moving_cost_within_handles_irrational_distances():
    d = Disk(center=(F(0), F(0)), kind="transition", metric="L2", id=0)
    # weighted cost = (1/3) * sqrt(2) ~ 0.471: within 1/2, not within 0.47
    assert moving_cost_within(d, (F(1), F(1)), F(1, 2))
    assert not moving_cost_within(d, (F(1), F(1)), F(47, 100))
