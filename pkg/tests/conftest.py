"""Shared helpers for the test suite."""

from __future__ import annotations

import random
from fractions import Fraction

from geomedit import DispersalInstance, Interval


def random_unit_intervals(rng: random.Random, n: int, span: int | None = None,
                          max_den: int = 4) -> tuple[Interval, ...]:
    """n unit intervals with uniform rational centers in [0, span]."""
    span = n if span is None else span
    return tuple(
        Interval(center=Fraction(rng.randint(0, span * max_den), rng.randint(1, max_den)), id=i)
        for i in range(n)
    )


def random_instance(rng: random.Random, n: int,
                    s_choices=(Fraction(1), Fraction(3, 2), Fraction(2))) -> DispersalInstance:
    return DispersalInstance(random_unit_intervals(rng, n), rng.choice(list(s_choices)))
