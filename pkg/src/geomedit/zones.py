"""Blocked zones, feasible-area probes, and sequential chain moves for disks.

A disk's blocked zone is the region where no other disk center may land:

* an unmoved k-heavy disk blocks the open Euclidean ball of radius
  (2^k - 1)/2^k around its center — the part of its surroundings it cannot
  vacate within the budget;
* a moved disk (any kind) blocks the open unit ball around its new position;
* an unmoved transition disk blocks nothing (it can always get out of the
  way within budget).

Zones are geometric, so they are Euclidean balls regardless of which metric
prices the movements.  All membership tests compare squared rationals;
boundaries are excluded (strict <) unless ``closed`` is requested.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Sequence

from .gadgets import GadgetCollection
from .geometry import Disk, K, Point, lm_distance, moving_cost, moving_cost_within
from .graph import build_graph, is_edgeless


def blocked_zone_radius(d: Disk) -> Fraction:
    """Radius of the disk's blocked zone (0 for an unmoved transition disk)."""
    if d.moved_to is not None:
        return Fraction(1)
    if d.kind == "transition":
        return Fraction(0)
    return Fraction((1 << d.kind) - 1, 1 << d.kind)


def blocked_zone_contains(d: Disk, p: Point, closed: bool = False) -> bool:
    """Is p inside d's blocked zone?  Open ball by default."""
    r = blocked_zone_radius(d)
    if r == 0:
        return False
    d2 = lm_distance(d.position, p, "L2")
    return d2 <= r * r if closed else d2 < r * r


def feasible_area_probe(d: Disk, collection: Sequence[Disk], p: Point) -> bool:
    """Can d be placed at p right now?

    True iff the weighted moving cost from d's original center is within K
    and p avoids every other disk's blocked zone in its current movement
    state.
    """
    if not moving_cost_within(d, p, K):
        return False
    return not any(blocked_zone_contains(d2, p) for d2 in collection if d2 is not d)


@dataclass(frozen=True)
class ChainStep:
    label: str
    target: Point
    cost: Fraction


@dataclass(frozen=True)
class ChainReport:
    steps: tuple[ChainStep, ...]
    max_weighted_cost: Fraction
    final_edgeless: bool


class InfeasibleMove(ValueError):
    pass


def execute_chain_move(
    component: GadgetCollection, script: Sequence[tuple[str, Point]]
) -> ChainReport:
    """Apply the scripted moves in order, checking feasibility at each step.

    Each target must pass feasible_area_probe against the collection's state
    at that moment (earlier moves count).  Returns the per-step weighted
    costs, their maximum, and whether the final intersection graph is
    edgeless.  Mutates nothing: works on a copy of the collection.
    """
    disks = [replace(d) for d in component.disks]
    by_label = {d.label: d for d in disks if d.label}

    steps: list[ChainStep] = []
    max_cost = Fraction(0)
    for label, target in script:
        d = by_label.get(label)
        if d is None:
            raise KeyError(f"no disk labelled {label!r}")
        target = (Fraction(target[0]), Fraction(target[1]))
        if not moving_cost_within(d, target, K):
            raise InfeasibleMove(f"{label}: moving cost to {target} exceeds K")
        for other in disks:
            if other is not d and blocked_zone_contains(other, target):
                raise InfeasibleMove(
                    f"{label}: target {target} inside blocked zone of "
                    f"{other.label or other.center} (kind {other.kind})"
                )
        cost = moving_cost(d, target)
        d.moved_to = target
        steps.append(ChainStep(label, target, cost))
        max_cost = max(max_cost, cost)

    placed = [replace(d, center=d.position, moved_to=None) for d in disks]
    return ChainReport(tuple(steps), max_cost, is_edgeless(build_graph(placed)))
