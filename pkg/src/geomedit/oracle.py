"""Independent reference implementations used to cross-check the fast solver.

Everything here is deliberately slow and simple: plain Fraction arithmetic,
exhaustive enumeration, no shared code with the O(n log n) path beyond the
primitive data types.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .dispersal import DispersalInstance, MovementVector
from .geometry import Interval, intervals_intersect

BRUTE_FORCE_CAP = 16


@dataclass(frozen=True)
class OracleResult:
    total: Fraction
    witness_partition: tuple[tuple[int, int], ...]  # [lo, hi) ranges of sorted indices
    witness_anchors: tuple[Fraction, ...]  # shared-frame anchor per block
    final_centers: tuple[Fraction, ...]  # original input order


@dataclass(frozen=True)
class ValidationResult:
    ok: bool
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok


def brute_force_disperse(instance: DispersalInstance) -> OracleResult:
    """Exact optimum by enumerating every partition into consecutive runs.

    Some optimal solution equispaces each run of a consecutive partition at an
    anchor inside that run's unconstrained optimum, so trying all 2^(n-1)
    partitions of the sorted order is exhaustive.  Blocks are placed greedily
    left to right in the shared frame (anchor a_i = max(x1_i, a_{i-1}), where
    adjacent blocks need a_i >= a_{i-1}); a partition whose greedy anchor
    overshoots x2_i is dominated by the merged partition, which is also
    enumerated, so it is simply skipped.  n is capped at 16.
    """
    n = len(instance.intervals)
    if n > BRUTE_FORCE_CAP:
        raise ValueError(f"brute force capped at n <= {BRUTE_FORCE_CAP}")
    if n == 0:
        return OracleResult(Fraction(0), (), (), ())

    order = sorted(
        range(n), key=lambda i: (instance.intervals[i].center, instance.intervals[i].id)
    )
    centers = [instance.intervals[i].center for i in order]
    s = instance.s
    # shared-frame breakpoints: b_j = c_j + (n - 1 - j) * s on sorted indices
    bps = [c + (n - 1 - j) * s for j, c in enumerate(centers)]

    best: tuple | None = None
    for mask in range(1 << (n - 1)):
        cuts = [0] + [j for j in range(1, n) if mask >> (j - 1) & 1] + [n]
        anchors: list[Fraction] = []
        prev = None
        feasible = True
        total = Fraction(0)
        for lo, hi in zip(cuts, cuts[1:]):
            block = sorted(bps[lo:hi])
            m = len(block)
            x1, x2 = block[(m - 1) // 2], block[m // 2]
            a = x1 if prev is None else max(x1, prev)
            if a > x2:
                feasible = False
                break
            total += sum(abs(a - b) for b in block)
            anchors.append(a)
            prev = a
        if feasible and (best is None or total < best[0]):
            best = (total, cuts, anchors)

    total, cuts, anchors = best
    finals = [Fraction(0)] * n
    for (lo, hi), a in zip(zip(cuts, cuts[1:]), anchors):
        for j in range(lo, hi):
            finals[order[j]] = a - (n - 1 - j) * s
    ranges = tuple(zip(cuts, cuts[1:]))
    return OracleResult(total, ranges, tuple(anchors), tuple(finals))


def validate_dispersal(instance: DispersalInstance, movement: MovementVector) -> ValidationResult:
    """Check a claimed movement: every sorted gap >= s and the total adds up."""
    n = len(instance.intervals)
    if len(movement.displacements) != n:
        return ValidationResult(False, "displacement count mismatch")
    finals = sorted(
        iv.center + d for iv, d in zip(instance.intervals, movement.displacements)
    )
    for i, (a, b) in enumerate(zip(finals, finals[1:])):
        if b - a < instance.s:
            return ValidationResult(False, f"gap {b - a} < s between sorted pair {i},{i + 1}")
    total = sum(abs(d) for d in movement.displacements)
    if total != movement.total:
        return ValidationResult(False, f"claimed total {movement.total} != actual {total}")
    return ValidationResult(True)


def validate_weighted_edgeless(
    intervals: Sequence[Interval],
    movement: MovementVector,
    budget: Fraction | None = None,
) -> ValidationResult:
    """Check that moved weighted intervals are pairwise disjoint within budget.

    Disjointness is checked on consecutive pairs after sorting by final
    center, which suffices: if interval i ends at or before interval i+1
    starts, induction along the chain gives r_i <= l_j for every j > i.
    The (optional) budget compares the weighted cost sum w_i * |d_i|.
    """
    if len(intervals) != len(movement.displacements):
        return ValidationResult(False, "displacement count mismatch")
    moved = sorted(
        (iv.moved_to(iv.center + d) for iv, d in zip(intervals, movement.displacements)),
        key=lambda iv: (iv.center, iv.id),
    )
    for a, b in zip(moved, moved[1:]):
        if intervals_intersect(a, b):
            return ValidationResult(False, f"intervals {a.id} and {b.id} intersect")
    if budget is not None:
        cost = sum(iv.weight * abs(d) for iv, d in zip(intervals, movement.displacements))
        if cost > budget:
            return ValidationResult(False, f"weighted cost {cost} exceeds budget {budget}")
    return ValidationResult(True)
