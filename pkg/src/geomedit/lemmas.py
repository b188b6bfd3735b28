"""Machine checks for the geometric facts the disk gadgets rely on.

The gadget arguments reduce to finitely many comparisons between distances
of rational points and rational thresholds.  Distances that stay squared are
compared exactly; where a genuine square root appears (hole vertices are
circle-circle intersections), we use certified rational enclosures from
``rational.Interval`` and require the comparison to resolve with the
enclosure's full width on the safe side.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .gadgets import CELL_VARIANTS, GadgetCollection, SLOTS, build_variable_gadget
from .geometry import K, Metric, Point, lm_distance, moving_cost_within
from .rational import Interval

F = Fraction

#: Blocked-zone radius of an unmoved 6-heavy disk.
R6 = F(63, 64)

IPoint = tuple[Interval, Interval]


def _circle_pair_points(a: Point, b: Point, radius: Fraction) -> list[IPoint]:
    """Intersection points of two radius-``radius`` circles, as certified
    interval points.  Empty if the circles are disjoint or concentric.

    The points are m +- t * (-(dy), dx) with m the midpoint, (dx, dy) = b - a
    and t = sqrt(radius^2/d^2 - 1/4): a single square root of a rational.
    """
    dx, dy = b[0] - a[0], b[1] - a[1]
    d2 = dx * dx + dy * dy
    if d2 == 0 or d2 >= 4 * radius * radius:
        return []
    t = Interval.sqrt_of(radius * radius / d2 - F(1, 4))
    mx, my = (a[0] + b[0]) / 2, (a[1] + b[1]) / 2
    return [
        (mx + t * -dy, my + t * dx),
        (mx - t * -dy, my - t * dx),
    ]


def _dist_sq(p: IPoint, q: IPoint) -> Interval:
    return (p[0] - q[0]).sq() + (p[1] - q[1]).sq()


def _dist_sq_to_point(p: IPoint, q: Point) -> Interval:
    return (p[0] - q[0]).sq() + (p[1] - q[1]).sq()


def hole_vertices(center: Point, heavies: Sequence[Point], radius: Fraction = R6) -> list[IPoint]:
    """Vertices of the uncovered hole around ``center``: pairwise boundary
    intersections of the surrounding blocked zones that are near the center
    and not strictly inside a third zone."""
    cap = F(3, 5)  # squared distance cap: holes are tiny, vertices sit close
    out: list[IPoint] = []
    for i, a in enumerate(heavies):
        for b in heavies[i + 1 :]:
            for p in _circle_pair_points(a, b, radius):
                if not _dist_sq_to_point(p, center).certainly_lt(cap):
                    continue
                if any(
                    _dist_sq_to_point(p, h).certainly_lt(radius * radius)
                    for h in heavies
                    if h not in (a, b)
                ):
                    continue
                out.append(p)
    return out


def hole_diameter_sq(vertices: Sequence[IPoint]) -> Interval:
    """Largest pairwise squared distance among the hole vertices."""
    if len(vertices) < 2:
        return Interval(0)
    best = Interval(0)
    for i, p in enumerate(vertices):
        for q in vertices[i + 1 :]:
            d = _dist_sq(p, q)
            if d.hi > best.hi:
                best = d
    return best


@dataclass(frozen=True)
class HoleReport:
    nonempty: bool
    contains_center: bool
    admits_one_disk: bool
    diameter_bound_ok: bool  # diameter strictly under the variant's bound
    diameter_sq: Interval = field(compare=False, default_factory=lambda: Interval(0))


#: Proven upper bound on each variant's hole diameter.
VARIANT_DIAMETER_BOUNDS = {
    "regular": F(1),
    "a": F(31, 100),
    "b": F(11, 100),
    "c": F(57, 100),
}


def check_cell_hole(gadget: GadgetCollection | str, variant: str | None = None) -> HoleReport:
    """Verify the hole of a cell: it exists, contains the cell center, and is
    too small for two disjoint disks (diameter < 1).

    ``gadget`` is either a built cell collection (transition labelled "cell")
    or a variant name from CELL_VARIANTS.  For variant "b" the diameter bound
    applies to the designated bottom vertex pair (the hole's narrow throat
    between the two lower zones), not the full hole.
    """
    if isinstance(gadget, str):
        variant = gadget
        center: Point = (F(0), F(0))
        heavies = [(F(x), F(y)) for x, y in CELL_VARIANTS[variant]]
    else:
        cell = gadget.find("cell")
        center = cell.center
        heavies = [
            d.center
            for d in gadget.disks
            if d.kind == 6
            and lm_distance(d.center, center, "L2") <= 4
            and d.center != center
        ]
        variant = variant or "regular"
    if variant not in VARIANT_DIAMETER_BOUNDS:
        raise ValueError(f"unknown cell variant {variant!r}")

    contains_center = all(lm_distance(center, h, "L2") >= R6 * R6 for h in heavies)
    vertices = hole_vertices(center, heavies)
    diam_sq = hole_diameter_sq(vertices)
    admits_one_disk = bool(vertices) and all(
        _dist_sq(p, q).certainly_lt(F(1))
        for i, p in enumerate(vertices)
        for q in vertices[i + 1 :]
    )

    bound = VARIANT_DIAMETER_BOUNDS[variant]
    if variant == "b":
        # throat between the two bottom zones: inner crossing of each upper
        # zone's boundary with the bottom zone's boundary
        cx, cy = center
        bottom = (cx, cy - 1)
        left, right = (cx - 1, cy + F(1, 4)), (cx + 1, cy + F(1, 4))
        p_l = _inner_point(_circle_pair_points(left, bottom, R6), center)
        p_r = _inner_point(_circle_pair_points(right, bottom, R6), center)
        bound_ok = _dist_sq(p_l, p_r).certainly_lt(bound * bound)
    else:
        bound_ok = diam_sq.certainly_lt(bound * bound)

    return HoleReport(
        nonempty=contains_center or bool(vertices),
        contains_center=contains_center,
        admits_one_disk=admits_one_disk,
        diameter_bound_ok=bound_ok,
        diameter_sq=diam_sq,
    )


def _inner_point(points: list[IPoint], center: Point) -> IPoint:
    if len(points) != 2:
        raise ValueError("expected exactly two circle intersection points")
    d0 = _dist_sq_to_point(points[0], center)
    d1 = _dist_sq_to_point(points[1], center)
    return points[0] if d0.hi < d1.lo else points[1]


def check_square_hole_empty(k: int = 6, grid: int = 128) -> bool:
    """Four k-heavy disks on the unit square's corners leave no hole inside.

    Exact part: the square's minimax point (the center) is covered, i.e.
    1/2 < ((2^k - 1)/2^k)^2.  Sampling part: every point of a 1/grid lattice
    over the square is strictly inside some corner's blocked zone (corners
    themselves are zone centers).
    """
    r = F((1 << k) - 1, 1 << k)
    r2 = r * r
    if not F(1, 2) < r2:
        return False
    corners = [(F(0), F(0)), (F(1), F(0)), (F(0), F(1)), (F(1), F(1))]
    for i in range(grid + 1):
        for j in range(grid + 1):
            p = (F(i, grid), F(j, grid))
            if not any(lm_distance(p, c, "L2") < r2 or p == c for c in corners):
                return False
    return True


@dataclass(frozen=True)
class BlockingReport:
    checks: dict[str, bool]

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def failed(self) -> list[str]:
        return [name for name, ok in self.checks.items() if not ok]


def check_blocking_lemmas(metric: Metric = "L2") -> BlockingReport:
    """Exact point checks behind the variable gadget's blocking argument.

    (a) two k-heavy zones side by side leave no vertical gap: the points at
        height sqrt((63/64)^2 - 1/4) above/below the midline lie in the zone
        union for x-offsets -1/2, 1/2, 3/2 (boundary membership, so closed);
    (b) the left truth-slot blocker, confined to the rectangle
        [-4, -4+1/50] x [-1/100, 1/100], intersects all three left link
        disks from every corner of that rectangle;
    (c) with the upper-left slot blocker pushed to its extreme positions
        (-4 +- 1/50, 2 - 3/100), its radius-1 zone still swallows both
        entry points (-4.05, 2.77) and (-3.95, 2.77) of the upper-left slot;
    plus movement-budget reachability of every scripted target under the
    requested metric.
    """
    checks: dict[str, bool] = {}

    # (a) vertical condition, k = 6: h^2 = (63/64)^2 - 1/4 = 2945/4096
    h2 = R6 * R6 - F(1, 4)
    checks["zone_gap_height_value"] = h2 == F(2945, 4096)
    for x_off in (F(-1, 2), F(1, 2), F(3, 2)):
        covered = False
        for hx in (F(0), F(1)):  # the two heavy centers (0,0), (1,0)
            d2 = (x_off - hx) ** 2 + h2  # point (x_off, +-h): y-offset^2 = h2
            if d2 <= R6 * R6:
                covered = True
        checks[f"zone_gap_point_x={x_off}"] = covered

    # (b) blocker rectangle corners vs the three left link-disk centers
    g = build_variable_gadget()
    links = [g.find("L<c1>").center, g.find("L<c2>").center, g.find("L<c3>").center]
    corners = [
        (F(-4), F(1, 100)), (F(-4) + F(1, 50), F(1, 100)),
        (F(-4) + F(1, 50), F(-1, 100)), (F(-4), F(-1, 100)),
    ]
    for ci, corner in enumerate(corners):
        checks[f"blocker_corner_{ci}_hits_all_links"] = all(
            lm_distance(corner, link, "L2") < 1 for link in links
        )

    # (c) moved slot blocker covers the slot's entry points
    entry = [(F(-81, 20), F(277, 100)), (F(-79, 20), F(277, 100))]
    for sign in (-1, 1):
        q = (F(-4) + sign * F(1, 50), F(2) - F(3, 100))
        checks[f"moved_blocker_{'right' if sign > 0 else 'left'}_covers_entries"] = all(
            lm_distance(q, p, "L2") < 1 for p in entry
        )

    # movement-budget reachability under the requested metric
    reach = [
        ("S_x", SLOTS["t1"]), ("S_x", SLOTS["t2"]),
        ("D_c1", SLOTS["c1"]),
        ("B<t1>", (F(-4) + F(1, 50), F(-1, 100))),
        ("B<c1>", (F(-4) + F(1, 50), F(2) - F(3, 100))),
        ("B<c1>", (F(-4) - F(1, 50), F(2) - F(3, 100))),
        ("L<c1>", (F(-4) + F(1, 50), F(1) - F(1, 50))),
        ("L<c1>", (F(-4) - F(1, 50), F(1) - F(1, 50))),
    ]
    gm = build_variable_gadget(metric=metric, arms=(1,))
    for label, target in reach:
        d = gm.find(label)
        checks[f"reach_{label}_{target}"] = moving_cost_within(d, target, K)

    return BlockingReport(checks)
