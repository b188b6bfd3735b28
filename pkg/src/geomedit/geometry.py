"""Interval and disk primitives with exact rational coordinates.

Intervals and disks are open sets.  L2 quantities are kept squared so every
predicate stays inside the rationals; callers compare squared values against
squared thresholds.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Literal, Optional, Sequence, Tuple

Metric = Literal["L1", "L2"]
Point = Tuple[Fraction, Fraction]

#: Global per-move weighted budget for the disk gadgets.
K = Fraction(1)


def lm_distance(p: Point, q: Point, metric: Metric) -> Fraction:
    """L1 distance, or the exact *squared* L2 distance, between two points."""
    dx = p[0] - q[0]
    dy = p[1] - q[1]
    if metric == "L1":
        return abs(dx) + abs(dy)
    if metric == "L2":
        return dx * dx + dy * dy
    raise ValueError(f"unsupported metric: {metric!r}")


@dataclass(frozen=True)
class Interval:
    """Open interval on the line, optionally carrying a distance weight."""

    center: Fraction
    length: Fraction = Fraction(1)
    weight: Fraction = Fraction(1)
    id: int = 0

    def __post_init__(self):
        object.__setattr__(self, "center", Fraction(self.center))
        object.__setattr__(self, "length", Fraction(self.length))
        object.__setattr__(self, "weight", Fraction(self.weight))
        if self.length <= 0:
            raise ValueError("interval length must be positive")
        if self.weight <= 0:
            raise ValueError("interval weight must be positive")

    @property
    def left(self) -> Fraction:
        return self.center - self.length / 2

    @property
    def right(self) -> Fraction:
        return self.center + self.length / 2

    def moved_to(self, center: Fraction) -> "Interval":
        return replace(self, center=Fraction(center))


def intervals_intersect(a: Interval, b: Interval) -> bool:
    """Open intervals intersect iff |c(b) - c(a)| < (len(a) + len(b)) / 2."""
    return abs(b.center - a.center) * 2 < a.length + b.length


def sort_intervals(items: Sequence[Interval]) -> list[Interval]:
    """Sort by center; ties broken by ascending id (deterministic)."""
    return sorted(items, key=lambda iv: (iv.center, iv.id))


def is_sorted(items: Sequence[Interval]) -> bool:
    return all(items[i].center <= items[i + 1].center for i in range(len(items) - 1))


@dataclass
class Disk:
    """Open unit-diameter disk with a movement weight and movement state.

    ``kind`` is either "transition" (weight K/3) or a positive integer k for a
    k-heavy disk (weight 2^k * K).  Disk intersection is always Euclidean;
    ``metric`` selects how movement cost is measured.
    """

    center: Point
    kind: "str | int" = "transition"
    radius: Fraction = Fraction(1, 2)
    metric: Metric = "L2"
    moved_to: Optional[Point] = None
    label: str = ""
    id: int = field(default=0, compare=False)

    def __post_init__(self):
        self.center = (Fraction(self.center[0]), Fraction(self.center[1]))
        self.radius = Fraction(self.radius)
        if self.kind != "transition" and (not isinstance(self.kind, int) or self.kind < 1):
            raise ValueError(f"disk kind must be 'transition' or a positive int, got {self.kind!r}")

    @property
    def weight(self) -> Fraction:
        if self.kind == "transition":
            return K / 3
        return (1 << self.kind) * K

    @property
    def position(self) -> Point:
        return self.moved_to if self.moved_to is not None else self.center


def disks_intersect(a: Disk, b: Disk) -> bool:
    """Open disks intersect iff their centers are closer than the radius sum.

    Geometric (Euclidean) test on squared rationals, regardless of the
    movement metric.
    """
    rsum = a.radius + b.radius
    return lm_distance(a.position, b.position, "L2") < rsum * rsum


def moving_cost(obj, target) -> Fraction:
    """Weight times metric distance from the object's original center.

    For an Interval, ``target`` is a coordinate.  For a Disk under L2 the
    *squared* weighted cost is NOT returned here; see ``moving_cost_within``
    for exact budget comparisons.  This function returns the exact cost and
    requires the L2 distance to be a perfect rational square (true for the
    axis-aligned movements the gadgets use).
    """
    if isinstance(obj, Interval):
        return obj.weight * abs(obj.center - Fraction(target))
    if isinstance(obj, Disk):
        if obj.metric == "L1":
            return obj.weight * lm_distance(obj.center, target, "L1")
        return obj.weight * _exact_sqrt(lm_distance(obj.center, target, "L2"))
    raise TypeError(f"unsupported object: {type(obj).__name__}")


def moving_cost_within(disk: Disk, target: Point, budget: Fraction) -> bool:
    """Exact test: weighted moving distance of ``disk`` to ``target`` <= budget.

    Avoids square roots entirely under L2 by comparing squared quantities.
    """
    if disk.metric == "L1":
        return disk.weight * lm_distance(disk.center, target, "L1") <= budget
    d2 = lm_distance(disk.center, target, "L2")
    return disk.weight * disk.weight * d2 <= budget * budget


def _exact_sqrt(value: Fraction) -> Fraction:
    from math import isqrt

    num, den = value.numerator, value.denominator
    rn, rd = isqrt(num), isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    raise ValueError(
        f"L2 distance sqrt({value}) is irrational; use moving_cost_within for comparisons"
    )
