"""Minimum-movement editing of unit intervals toward a target graph property.

Edgeless is dispersal at pitch 1.  k-clique-freeness decomposes into k-1
independent dispersal problems on residue classes of the sorted positions:
the final graph has no k-clique iff every k consecutive sorted centers span
at least 1, i.e. c_{i+k-1} - c_i >= 1 for all i, and that is exactly "each
class r = {i : i = r mod (k-1)} is internally dispersed at pitch 1".
Acyclicity for unit intervals is triangle-freeness (the graphs are chordal),
so it reduces to k = 3.

Every solve re-checks the requested property on the final collection and
raises if it does not hold, so a wrong decomposition fails loudly instead of
returning an invalid edit.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .dispersal import DispersalInstance, MovementVector, disperse
from .geometry import Interval, sort_intervals
from .graph import build_graph, is_acyclic, is_edgeless, max_clique_interval


@dataclass(frozen=True)
class EditResult:
    total: Fraction
    movement: MovementVector
    final: tuple[Interval, ...]  # original input order
    property: str  # "edgeless" | "acyclic" | "k-clique-free(k)"


class PropertyViolation(AssertionError):
    """The solver produced a collection that fails its own property check."""


def solve_edgeless(intervals: Sequence[Interval]) -> EditResult:
    """Minimum total movement making the interval graph edgeless.

    Unit intervals are pairwise disjoint iff consecutive sorted centers are
    at least 1 apart, so this is dispersal with s = 1.
    """
    result = disperse(DispersalInstance(tuple(intervals), Fraction(1)))
    final = tuple(iv.moved_to(c) for iv, c in zip(intervals, result.final_centers))
    if not is_edgeless(build_graph(final)):
        raise PropertyViolation("edgeless solve produced an intersecting pair")
    return EditResult(result.total, result.movement, final, "edgeless")


def solve_k_clique_free(intervals: Sequence[Interval], k: int) -> EditResult:
    """Minimum total movement so the interval graph has no k-clique.

    Splits sorted positions into residue classes mod (k-1) and disperses each
    class independently at pitch 1; the per-class optima combine into a
    global optimum because the constraints c_{i+k-1} - c_i >= 1 never couple
    different classes.
    """
    n = len(intervals)
    if k < 2:
        raise ValueError("k must be >= 2")
    if k > n + 1:
        # fewer than k intervals can never form a k-clique
        zero = MovementVector((Fraction(0),) * n, Fraction(0))
        return EditResult(Fraction(0), zero, tuple(intervals), f"k-clique-free({k})")

    order = sorted(range(n), key=lambda i: (intervals[i].center, intervals[i].id))
    displacements = [Fraction(0)] * n
    total = Fraction(0)
    for r in range(k - 1):
        members = order[r :: k - 1]
        sub = disperse(
            DispersalInstance(tuple(intervals[i] for i in members), Fraction(1))
        )
        total += sub.total
        for i, d in zip(members, sub.movement.displacements):
            displacements[i] = d

    final = tuple(iv.moved_to(iv.center + d) for iv, d in zip(intervals, displacements))
    if max_clique_interval(sort_intervals(final)) >= k:
        raise PropertyViolation(f"solve produced a {k}-clique")
    return EditResult(
        total, MovementVector(tuple(displacements), total), final, f"k-clique-free({k})"
    )


def solve_acyclic(intervals: Sequence[Interval]) -> EditResult:
    """Minimum total movement making the interval graph acyclic.

    Unit interval graphs are chordal, so acyclic = triangle-free = 3-clique
    free; delegate to the k = 3 decomposition.
    """
    if len(intervals) < 2:
        zero = MovementVector((Fraction(0),) * len(intervals), Fraction(0))
        return EditResult(Fraction(0), zero, tuple(intervals), "acyclic")
    res = solve_k_clique_free(intervals, 3)
    if not is_acyclic(build_graph(res.final)):
        raise PropertyViolation("triangle-free edit left a cycle")
    return EditResult(res.total, res.movement, res.final, "acyclic")
