"""Weighted unit-disk gadget builders for the planar-3SAT hardness construction.

All disks have diameter 1 and exact rational centers.  Weights encode how far
a disk can travel within the global budget K = 1:

* transition disks (weight K/3) can move up to distance 3 — they are the
  mobile "signal" carriers;
* k-heavy disks (weight 2^k K) are effectively frozen: a 6-heavy moving just
  1/32 already costs 2 > K.

A transition disk placed concentrically on top of a heavy disk is an
*intersection disk*: the only initially-intersecting pair, and the thing a
solution must move away.  The clause gadget's intersection disk is T_c; the
variable gadget's is the truth setter S_x, whose destination (left or right
truth slot) encodes the variable's assignment.

Coordinates below are verbatim transcriptions of the construction's tables
(variable-gadget positions relative to S_x at the origin, clause positions
relative to T_c at the origin).
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Iterable, Sequence

from .geometry import Disk, Metric, Point

F = Fraction
T = "transition"

# (x, y, kind, label); kind 6/2/1 = k-heavy, T = transition
_CELL = [
    (-1, 1, 6, ""), (0, 1, 6, ""), (1, 1, 6, ""), (-1, 0, 6, ""),
    (0, 0, T, "cell"),
    (1, 0, 6, ""), (-1, -1, 6, ""), (0, -1, 6, ""), (1, -1, 6, ""),
]

_CLAUSE = [
    (1, 1, 6, ""), (2, 1, 6, ""), (3, 1, 6, ""), (4, 1, 6, ""), (-4, 0, 6, ""),
    (-3, 0, T, "C_left"), (-2, 0, 6, ""), (-1, 0, 6, ""), (0, 0, T, "T_c"), (0, 0, 6, ""),
    (1, 0, 6, ""), (2, 0, 6, ""), (3, 0, T, "C_right"), (4, 0, 6, ""), (-4, -1, 6, ""),
    (-3, -1, 6, ""), (-2, -1, 6, ""), (-1, -1, 6, ""), (0, -1, 6, ""), (1, -1, 6, ""),
    (2, -1, 6, ""), (3, -1, 6, ""), (4, -1, 6, ""), (-1, -2, 6, ""), (0, -2, 6, ""),
    (1, -2, 6, ""), (-1, -3, 6, ""), (0, -3, T, "C_bottom"), (1, -3, 6, ""), (-1, -4, 6, ""),
    (0, -4, 6, ""), (1, -4, 6, ""),
]

_CENTRAL = [
    (4, F(15, 4), 6, ""), (-5, 3, 6, ""), (-3, 3, 6, ""), (3, 3, 6, ""), (5, 3, 6, ""),
    (-4, F(9, 4), 1, "B<c1>"), (4, F(9, 4), 1, "B<c4>"), (-5, 2, 6, ""), (-3, 2, 6, ""), (-2, 2, 6, ""),
    (-1, 2, 6, ""), (0, 2, 6, ""), (1, 2, 6, ""), (2, 2, 6, ""), (3, 2, 6, ""),
    (5, 2, 6, ""), (-8, 1, 6, ""), (-7, 1, 6, ""), (-6, 1, 6, ""), (-5, 1, 6, ""),
    (-3, 1, 6, ""), (-2, 1, 6, ""), (-1, 1, 6, ""), (0, 1, 6, ""), (1, 1, 6, ""),
    (2, 1, 6, ""), (3, 1, 6, ""), (5, 1, 6, ""), (6, 1, 6, ""), (7, 1, 6, ""),
    (8, 1, 6, ""), (-4, F(3, 4), 2, "L<c1>"), (4, F(3, 4), 2, "L<c4>"), (F(-31, 4), 0, 6, ""), (-6, 0, 1, "B<c2>"),
    (F(-19, 4), 0, 2, "L<c2>"), (F(-7, 2), 0, 1, "B<t1>"), (-2, 0, 6, ""), (-1, 0, 6, ""), (0, 0, T, "S_x"),
    (0, 0, 6, ""), (1, 0, 6, ""), (2, 0, 6, ""), (F(7, 2), 0, 1, "B<t2>"), (F(19, 4), 0, 2, "L<c5>"),
    (6, 0, 1, "B<c5>"), (F(31, 4), 0, 6, ""), (-4, F(-3, 4), 2, "L<c3>"), (4, F(-3, 4), 2, "L<c6>"), (-8, -1, 6, ""),
    (-7, -1, 6, ""), (-6, -1, 6, ""), (-5, -1, 6, ""), (-3, -1, 6, ""), (-2, -1, 6, ""),
    (-1, -1, 6, ""), (0, -1, 6, ""), (1, -1, 6, ""), (2, -1, 6, ""), (3, -1, 6, ""),
    (5, -1, 6, ""), (6, -1, 6, ""), (7, -1, 6, ""), (8, -1, 6, ""), (-5, -2, 6, ""),
    (-3, -2, 6, ""), (-2, -2, 6, ""), (-1, -2, 6, ""), (0, -2, 6, ""), (1, -2, 6, ""),
    (2, -2, 6, ""), (3, -2, 6, ""), (5, -2, 6, ""), (-4, F(-9, 4), 1, "B<c3>"), (4, F(-9, 4), 1, "B<c6>"),
    (-5, -3, 6, ""), (-3, -3, 6, ""), (3, -3, 6, ""), (5, -3, 6, ""), (-4, F(-15, 4), 6, ""),
    (4, F(-15, 4), 6, ""), (-5, -4, 6, ""), (-3, -4, 6, ""), (3, -4, 6, ""), (5, -4, 6, ""),
]

_ARM1 = [
    (-5, 9, 6, ""), (-4, 9, 6, ""), (-3, 9, 6, ""), (-5, 8, 6, ""), (-4, 8, T, "A1_top"),
    (-3, 8, 6, ""), (-5, 7, 6, ""), (-4, 7, 6, ""), (-3, 7, 6, ""), (-5, 6, 6, ""),
    (-3, 6, 6, ""), (-4, F(23, 4), T, "D_c1"), (-5, 5, 6, ""), (-3, 5, 6, ""), (-4, F(19, 4), 6, ""),
]

_ARM2 = [
    (-9, 8, 6, ""), (-11, 7, 6, ""), (-10, 7, 6, ""), (-9, 7, 6, ""), (-11, 6, 6, ""),
    (-10, 6, 6, ""), (-9, 6, 6, ""), (-11, 5, 6, ""), (-10, 5, T, "A2_a"), (-9, 5, 6, ""),
    (-11, 4, 6, ""), (-10, 4, 6, ""), (-9, 4, 6, ""), (-11, 3, 6, ""), (-10, 3, 6, ""),
    (-9, 3, 6, ""), (-11, 2, 6, ""), (-10, 2, T, "A2_b"), (-9, 2, 6, ""), (-11, 1, 6, ""),
    (-10, 1, 6, ""), (-9, 1, 6, ""), (-11, 0, 6, ""), (F(-39, 4), 0, T, "D_c2"), (F(-35, 4), 0, 6, ""),
    (-11, -1, 6, ""), (-10, -1, 6, ""), (-9, -1, 6, ""),
]

_ARM3 = [
    (-15, 8, 6, ""), (-17, 7, 6, ""), (-16, 7, 6, ""), (-15, 7, 6, ""), (-17, 6, 6, ""),
    (-16, 6, 6, ""), (-15, 6, 6, ""), (-17, 5, 6, ""), (-16, 5, T, "A3_a"), (-15, 5, 6, ""),
    (-17, 4, 6, ""), (-16, 4, 6, ""), (-15, 4, 6, ""), (-17, 3, 6, ""), (-16, 3, 6, ""),
    (-15, 3, 6, ""), (-17, 2, 6, ""), (-16, 2, T, "A3_b"), (-15, 2, 6, ""), (-17, 1, 6, ""),
    (-16, 1, 6, ""), (-15, 1, 6, ""), (-17, 0, 6, ""), (-16, 0, 6, ""), (-15, 0, 6, ""),
    (-17, -1, 6, ""), (-16, -1, T, "A3_c"), (-15, -1, 6, ""), (-17, -2, 6, ""), (-16, -2, 6, ""),
    (-15, -2, 6, ""), (-17, -3, 6, ""), (-16, -3, 6, ""), (-15, -3, 6, ""), (-17, -4, 6, ""),
    (-16, -4, T, "A3_d"), (-15, -4, 6, ""), (-4, F(-19, 4), 6, ""), (-17, -5, 6, ""), (-16, -5, 6, ""),
    (-15, -5, 6, ""), (-14, -5, 6, ""), (-13, -5, 6, ""), (-12, -5, 6, ""), (-11, -5, 6, ""),
    (-10, -5, 6, ""), (-9, -5, 6, ""), (-8, -5, 6, ""), (-7, -5, 6, ""), (-6, -5, 6, ""),
    (-5, -5, 6, ""), (-3, -5, 6, ""), (-4, F(-23, 4), T, "D_c3"), (-17, -6, 6, ""), (F(-31, 2), -6, T, "A3_e"),
    (F(-29, 2), -6, 6, ""), (F(-27, 2), -6, 6, ""), (F(-25, 2), -6, T, "A3_f"), (F(-23, 2), -6, 6, ""), (F(-21, 2), -6, 6, ""),
    (F(-19, 2), -6, T, "A3_g"), (F(-17, 2), -6, 6, ""), (F(-15, 2), -6, 6, ""), (F(-13, 2), -6, T, "A3_h"), (-5, -6, 6, ""),
    (-3, -6, 6, ""), (-17, -7, 6, ""), (-16, -7, 6, ""), (-15, -7, 6, ""), (-14, -7, 6, ""),
    (-13, -7, 6, ""), (-12, -7, 6, ""), (-11, -7, 6, ""), (-10, -7, 6, ""), (-9, -7, 6, ""),
    (-8, -7, 6, ""), (-7, -7, 6, ""), (-6, -7, 6, ""), (-5, -7, 6, ""), (-4, -7, 6, ""),
    (-3, -7, 6, ""),
]

#: Cell shapes used by the hole checks: heavy-disk offsets around a transition.
#: "regular" is the closed 3x3 cell; a/b/c are the irregular shapes appearing
#: at arm bends and junctions.
CELL_VARIANTS: dict[str, tuple[tuple[Fraction, Fraction], ...]] = {
    "regular": tuple(
        (F(i), F(j)) for i in (-1, 0, 1) for j in (-1, 0, 1) if (i, j) != (0, 0)
    ),
    "a": ((F(-1, 2), F(1)), (F(1, 2), F(1)), (F(-1), F(0)), (F(1), F(0)),
          (F(-1, 2), F(-1)), (F(1, 2), F(-1))),
    "b": ((F(0), F(5, 4)), (F(-1), F(5, 4)), (F(1), F(5, 4)), (F(-1), F(1, 4)),
          (F(1), F(1, 4)), (F(-1), F(-3, 4)), (F(1), F(-3, 4)), (F(0), F(-1))),
    "c": ((F(-1, 2), F(1)), (F(1, 2), F(1)), (F(1), F(0)), (F(1, 2), F(-1)),
          (F(-1, 2), F(-1)), (F(-3, 2), F(-1)), (F(-3, 2), F(0)), (F(-3, 2), F(1))),
}

#: Free-slot centers of the variable gadget (relative to S_x): truth slots
#: t1/t2 and the three clause slots per side.
SLOTS: dict[str, Point] = {
    "t1": (F(-3), F(0)), "t2": (F(3), F(0)),
    "c1": (F(-4), F(3)), "c2": (F(-27, 4), F(0)), "c3": (F(-4), F(-3)),
    "c4": (F(4), F(3)), "c5": (F(27, 4), F(0)), "c6": (F(4), F(-3)),
}


@dataclass
class GadgetCollection:
    disks: list[Disk]
    metric: Metric = "L2"

    def find(self, label: str) -> Disk:
        for d in self.disks:
            if d.label == label:
                return d
        raise KeyError(f"no disk labelled {label!r}")

    def translated(self, dx: Fraction, dy: Fraction) -> "GadgetCollection":
        return GadgetCollection(
            [replace(d, center=(d.center[0] + dx, d.center[1] + dy)) for d in self.disks],
            self.metric,
        )

    def mirrored(self) -> "GadgetCollection":
        """Reflection across the vertical axis through the origin."""
        return GadgetCollection(
            [replace(d, center=(-d.center[0], d.center[1])) for d in self.disks],
            self.metric,
        )

    def merged(self, other: "GadgetCollection") -> "GadgetCollection":
        """Union deduplicated by (position, kind): overlapping cells coincide."""
        seen = {(d.center, d.kind) for d in self.disks}
        out = list(self.disks)
        for d in other.disks:
            if (d.center, d.kind) not in seen:
                seen.add((d.center, d.kind))
                out.append(d)
        return GadgetCollection(out, self.metric)


def _build(rows: Iterable[tuple], metric: Metric, origin: Point = (F(0), F(0))) -> GadgetCollection:
    ox, oy = F(origin[0]), F(origin[1])
    disks = []
    for i, (x, y, kind, label) in enumerate(rows):
        disks.append(
            Disk(center=(ox + F(x), oy + F(y)), kind=kind, metric=metric, label=label, id=i)
        )
    return GadgetCollection(disks, metric)


def build_cell_gadget(center: Point = (0, 0), metric: Metric = "L2") -> GadgetCollection:
    """One transition disk and the 8 six-heavy disks boxing it in."""
    return _build(_CELL, metric, center)


def build_clause_gadget(center: Point = (0, 0), metric: Metric = "L2") -> GadgetCollection:
    """Intersection disk T_c on a concentric 6-heavy, plus three cells at
    (-3,0), (3,0), (0,-3) toward the literal arms."""
    return _build(_CLAUSE, metric, center)


def build_variable_gadget(
    center: Point = (0, 0), metric: Metric = "L2", arms: Sequence[int] = (), mirror: bool = False
) -> GadgetCollection:
    """Central part of a variable gadget (S_x at ``center``), optional arms.

    ``arms`` selects which of the three left-side arms to attach; ``mirror``
    reflects the whole gadget so the arms leave on the right instead.
    """
    g = _build(_CENTRAL, "L2")
    for a in arms:
        g = g.merged(build_arm(a))
    if mirror:
        g = g.mirrored()
    g = g.translated(F(center[0]), F(center[1]))
    g.metric = metric
    for d in g.disks:
        d.metric = metric
    return g


def build_arm(variant: int, anchor: Point = (0, 0), metric: Metric = "L2") -> GadgetCollection:
    """One of the three arm shapes, positioned for S_x at ``anchor``."""
    rows = {1: _ARM1, 2: _ARM2, 3: _ARM3}.get(variant)
    if rows is None:
        raise ValueError("arm variant must be 1, 2 or 3")
    return _build(rows, metric, anchor)


def build_cell_variant(name: str, center: Point = (0, 0), metric: Metric = "L2") -> GadgetCollection:
    """A cell shape from CELL_VARIANTS as a standalone disk collection."""
    if name not in CELL_VARIANTS:
        raise ValueError(f"unknown cell variant {name!r}")
    rows = [(0, 0, T, "cell")] + [(x, y, 6, "") for x, y in CELL_VARIANTS[name]]
    return _build(rows, metric, center)


def build_clause_component(metric: Metric = "L2") -> GadgetCollection:
    """The worked example: variable gadget + arm 1 + a clause on top.

    The clause gadget is translated so its bottom cell lands exactly on arm
    1's top cell; the merge deduplicates the 9 coinciding disks.
    """
    g = build_variable_gadget(metric=metric, arms=(1,))
    clause = build_clause_gadget(center=(F(-4), F(11)), metric=metric)
    return g.merged(clause)


def clause_chain_script() -> list[tuple[str, Point]]:
    """The move sequence that makes the clause component edgeless.

    Reading order: the truth setter picks the right (true) side, the right
    truth-slot blocker and its three link disks shuffle out of the way, the
    left blocker parks in the freed left truth slot, and the clause's signal
    chains down arm 1 — D_c1 into the top-left clause slot, its own cell
    refilled from above, and finally T_c off its concentric heavy.
    """
    return [
        ("S_x", (F(3), F(0))),
        ("B<t2>", (F(4), F(0))),
        ("L<c4>", (F(4), F(1))),
        ("L<c6>", (F(4), F(-1))),
        ("L<c5>", (F(5), F(0))),
        ("B<t1>", (F(-3), F(0))),
        ("D_c1", (F(-4), F(3))),
        ("B<c1>", (F(-4), F(7, 4))),
        ("A1_top", (F(-4), F(23, 4))),
        ("T_c", (F(-4), F(8))),
    ]
