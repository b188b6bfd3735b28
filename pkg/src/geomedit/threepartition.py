"""Weighted-interval instances encoding 3-Partition, plus the yes-certificate.

A 3-Partition instance (3m positive sizes with B/4 < s(a) < B/2 and total
m*B) maps to weighted intervals on the line:

* item intervals I_i: length s(a_i), right endpoint at 0 (center -s(a_i)/2),
  weight 1 — initially all stacked on top of each other;
* m-1 separator intervals of length B centered at (2i-1)B + B/2, carving the
  positive axis into m slots of length 2B each holding one triple of items
  plus B of free space;
* two border intervals of length 3Bm^2 + max s(a) hugging the construction
  from both sides, so nothing can escape outward.

Separators and borders carry weight 12Bm^2, far above the movement budget
T = 3Bm^2, so any solution within budget leaves them in place.  The
partition-to-movement certificate packs triple i flush against the left end
of slot i, which is edgeless and costs sum_i 6B(i-1) + 3a1 + 2a2 + a3 < T.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .dispersal import MovementVector
from .geometry import Interval


@dataclass(frozen=True)
class ThreePartitionInstance:
    sizes: tuple[int, ...]
    B: int

    def __post_init__(self):
        object.__setattr__(self, "sizes", tuple(self.sizes))
        if len(self.sizes) % 3 or not self.sizes:
            raise ValueError("need 3m sizes for some m >= 1")
        if any(s <= 0 for s in self.sizes):
            raise ValueError("sizes must be positive")
        if not all(self.B < 4 * s and 2 * s < self.B for s in self.sizes):
            raise ValueError("every size must satisfy B/4 < s(a) < B/2 strictly")
        if sum(self.sizes) != self.m * self.B:
            raise ValueError("sizes must sum to m*B")

    @property
    def m(self) -> int:
        return len(self.sizes) // 3


@dataclass(frozen=True)
class WeightedIntervalInstance:
    items: tuple[Interval, ...]  # weight 1, one per size, same order
    separators: tuple[Interval, ...]  # m-1 heavy separators
    borders: tuple[Interval, ...]  # left and right heavy borders
    budget: Fraction
    source: ThreePartitionInstance

    @property
    def intervals(self) -> tuple[Interval, ...]:
        return self.items + self.separators + self.borders


def build_3partition_instance(tp: ThreePartitionInstance) -> WeightedIntervalInstance:
    m, B = tp.m, tp.B
    heavy = Fraction(12 * B * m * m)
    half_border = Fraction(3 * B * m * m + max(tp.sizes), 2)

    items = tuple(
        Interval(center=Fraction(-s, 2), length=s, weight=1, id=i)
        for i, s in enumerate(tp.sizes)
    )
    separators = tuple(
        Interval(
            center=Fraction((2 * i - 1) * B) + Fraction(B, 2),
            length=B,
            weight=heavy,
            id=3 * m + i - 1,
        )
        for i in range(1, m)
    )
    borders = (
        Interval(center=-half_border, length=2 * half_border, weight=heavy, id=3 * m + m - 1),
        Interval(
            center=Fraction((2 * m - 1) * B) + half_border,
            length=2 * half_border,
            weight=heavy,
            id=3 * m + m,
        ),
    )
    return WeightedIntervalInstance(
        items, separators, borders, Fraction(3 * B * m * m), tp
    )


def certificate_cost(tp: ThreePartitionInstance, triples: Sequence[tuple[int, int, int]]) -> Fraction:
    """Closed-form cost of the certificate: sum_i 6B(i-1) + 3a1 + 2a2 + a3."""
    total = 0
    for i, triple in enumerate(triples, start=1):
        a1, a2, a3 = (tp.sizes[j] for j in triple)
        total += 6 * tp.B * (i - 1) + 3 * a1 + 2 * a2 + a3
    return Fraction(total)


def certificate_movement(
    instance: WeightedIntervalInstance, triples: Sequence[tuple[int, int, int]]
) -> MovementVector:
    """The explicit movement witnessing a yes-partition, in instance order.

    Triple i = (a1, a2, a3) is laid out flush left in slot i, which starts at
    2(i-1)B: item displacements are d1 = 2(i-1)B + a1, d2 = d1 + a2,
    d3 = d2 + a3 (each item's right endpoint starts at 0, so displacement d
    puts its right endpoint at d).  Separators and borders do not move.
    """
    tp = instance.source
    m, B = tp.m, tp.B
    if len(triples) != m:
        raise ValueError(f"expected {m} triples")
    seen = sorted(j for t in triples for j in t)
    if seen != list(range(3 * m)):
        raise ValueError("triples must partition the item indices exactly")
    for t in triples:
        if sum(tp.sizes[j] for j in t) != B:
            raise ValueError(f"triple {t} does not sum to B")

    n = len(instance.intervals)
    displacements = [Fraction(0)] * n
    for i, triple in enumerate(triples, start=1):
        offset = Fraction(2 * (i - 1) * B)
        for j in triple:
            offset += tp.sizes[j]
            displacements[j] = offset
    total = sum(abs(d) for d in displacements)
    movement = MovementVector(tuple(displacements), total)
    assert total == certificate_cost(tp, triples)
    return movement


def random_yes_instance(rng, m: int) -> tuple[ThreePartitionInstance, list[tuple[int, int, int]]]:
    """A random 3-Partition yes-instance with its witness partition.

    Draws m triples that each sum to a common B with every element strictly
    inside (B/4, B/2), then shuffles the items.
    """
    while True:
        B = 4 * rng.randint(3 * m, 12 * m)  # roomy even B
        lo, hi = B // 4 + 1, (B - 1) // 2
        triples_sizes = []
        ok = True
        for _ in range(m):
            a1 = rng.randint(lo, hi)
            a2 = rng.randint(lo, hi)
            a3 = B - a1 - a2
            if not lo <= a3 <= hi:
                ok = False
                break
            triples_sizes.append((a1, a2, a3))
        if not ok:
            continue
        sizes = [s for t in triples_sizes for s in t]
        order = list(range(3 * m))
        rng.shuffle(order)
        shuffled = [sizes[j] for j in order]
        pos = {j: p for p, j in enumerate(order)}  # original item -> new index
        triples = [tuple(pos[3 * t + r] for r in range(3)) for t in range(m)]
        return ThreePartitionInstance(tuple(shuffled), B), triples
