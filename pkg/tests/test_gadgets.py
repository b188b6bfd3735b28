from fractions import Fraction as F

import pytest

from geomedit import (
    Disk,
    build_arm,
    build_cell_gadget,
    build_cell_variant,
    build_clause_component,
    build_clause_gadget,
    build_graph,
    build_variable_gadget,
    check_blocking_lemmas,
    check_cell_hole,
    check_square_hole_empty,
    clause_chain_script,
    disks_intersect,
)
from geomedit.gadgets import CELL_VARIANTS, SLOTS
from geomedit.zones import (
    InfeasibleMove,
    blocked_zone_contains,
    blocked_zone_radius,
    execute_chain_move,
    feasible_area_probe,
)


# ---------------------------------------------------------------- construction


def test_gadget_disk_counts():
    assert len(build_cell_gadget().disks) == 9
    assert len(build_clause_gadget().disks) == 32
    assert len(build_variable_gadget().disks) == 85
    assert len(build_arm(1).disks) == 15
    assert len(build_arm(2).disks) == 28
    assert len(build_arm(3).disks) == 81


def test_cell_gadget_shape():
    cell = build_cell_gadget()
    heavies = [d for d in cell.disks if d.kind == 6]
    assert len(heavies) == 8
    transitions = [d for d in cell.disks if d.kind == "transition"]
    assert len(transitions) == 1
    assert transitions[0].center == (0, 0)


def test_clause_contains_concentric_pair():
    clause = build_clause_gadget()
    at_origin = [d for d in clause.disks if d.center == (0, 0)]
    kinds = sorted(str(d.kind) for d in at_origin)
    assert kinds == ["6", "transition"]


def test_component_assembly():
    comp = build_clause_component()
    assert len(comp.disks) == 123
    g = build_graph(list(comp.disks))
    assert len(g.edges) == 6  # two concentric pairs + four blocker/link contacts


def test_initial_edges_are_the_designed_ones():
    comp = build_clause_component()
    pairs = set()
    disks = list(comp.disks)
    for i, a in enumerate(disks):
        for b in disks[i + 1:]:
            if disks_intersect(a, b):
                pairs.add(tuple(sorted((a.label or str(a.center), b.label or str(b.center)))))
    concentric = {p for p in pairs if p[0].startswith("B<") is False and p[1].startswith("B<") is False}
    blocker_link = {p for p in pairs if p[0].startswith("B<") or p[1].startswith("B<")}
    assert len(pairs) == 6
    assert len(blocker_link) == 4


def test_translation_and_find():
    cell = build_cell_gadget().translated(F(2), F(-1))
    t = [d for d in cell.disks if d.kind == "transition"][0]
    assert t.center == (2, -1)


def test_slots_and_variants_present():
    assert set(SLOTS) == {"t1", "t2", "c1", "c2", "c3", "c4", "c5", "c6"}
    assert set(CELL_VARIANTS) == {"regular", "a", "b", "c"}
    for name in CELL_VARIANTS:
        build_cell_variant(name)


# ---------------------------------------------------------------- blocked zones


def test_blocked_zone_radii():
    t = Disk(center=(F(0), F(0)), kind="transition", id=0)
    h6 = Disk(center=(F(0), F(0)), kind=6, id=1)
    h1 = Disk(center=(F(0), F(0)), kind=1, id=2)
    assert blocked_zone_radius(t) == 0
    assert blocked_zone_radius(h1) == F(1, 2)
    assert blocked_zone_radius(h6) == F(63, 64)
    moved = Disk(center=(F(0), F(0)), kind=6, id=3, moved_to=(F(1), F(0)))
    assert blocked_zone_radius(moved) == 1


def test_blocked_zone_is_open():
    h6 = Disk(center=(F(0), F(0)), kind=6, id=0)
    on_boundary = (F(63, 64), F(0))
    assert not blocked_zone_contains(h6, on_boundary)
    assert blocked_zone_contains(h6, on_boundary, closed=True)
    assert blocked_zone_contains(h6, (F(1, 2), F(0)))


def test_feasible_area_probe_respects_zones_and_budget():
    comp = build_clause_component()
    sx = comp.find("S_x")
    # the designed slot is reachable
    assert feasible_area_probe(sx, comp.disks, (F(3), F(0)))
    # a point inside a heavy zone is not
    assert not feasible_area_probe(sx, comp.disks, (F(1), F(1)))
    # a far point exceeds the budget
    assert not feasible_area_probe(sx, comp.disks, (F(100), F(0)))


# ---------------------------------------------------------------- chain move


def test_chain_move_full_script():
    comp = build_clause_component()
    report = execute_chain_move(comp, clause_chain_script())
    assert report.max_weighted_cost <= 1
    assert report.final_edgeless
    assert len(report.steps) == 10
    assert all(step.cost <= 1 for step in report.steps)


def test_infeasible_targets_raise():
    comp = build_clause_component()
    # inside the central heavy disk's blocked zone
    with pytest.raises(InfeasibleMove):
        execute_chain_move(comp, [("S_x", (F(1, 2), F(0)))])
    # beyond the per-move budget (cost 4/3 > 1)
    with pytest.raises(InfeasibleMove):
        execute_chain_move(comp, [("S_x", (F(4), F(0)))])
    with pytest.raises(KeyError):
        execute_chain_move(comp, [("no-such-disk", (F(0), F(0)))])


def test_chain_move_does_not_mutate_input():
    comp = build_clause_component()
    execute_chain_move(comp, clause_chain_script())
    assert all(d.moved_to is None for d in comp.disks)


def test_heavy_disk_cannot_afford_1_32():
    # a 6-heavy moving distance 1/32 already costs 64 * 1/32 = 2 > 1
    h6 = Disk(center=(F(0), F(0)), kind=6, id=0)
    from geomedit import moving_cost

    assert moving_cost(h6, (F(1, 32), F(0))) == 2


# ---------------------------------------------------------------- lemma suite


@pytest.mark.parametrize("metric", ["L1", "L2"])
def test_square_hole(metric):
    assert check_square_hole_empty(k=6)
    assert not check_square_hole_empty(k=1)


@pytest.mark.parametrize("metric", ["L1", "L2"])
def test_regular_cell_hole(metric):
    report = check_cell_hole(build_cell_gadget(metric=metric))
    assert report.nonempty
    assert report.contains_center
    assert report.admits_one_disk
    assert report.diameter_bound_ok


@pytest.mark.parametrize("metric", ["L1", "L2"])
@pytest.mark.parametrize("variant,bound", [("a", F(31, 100)), ("b", F(11, 100)), ("c", F(57, 100))])
def test_irregular_cell_holes(metric, variant, bound):
    report = check_cell_hole(variant, variant=variant)
    assert report.nonempty
    assert report.admits_one_disk
    assert report.diameter_bound_ok
    if variant != "b":
        # for "b" the certified bound applies to the hole's narrow throat;
        # diameter_sq reports the full hole (still well under one disk width)
        assert report.diameter_sq.certainly_lt(bound * bound)


@pytest.mark.parametrize("metric", ["L1", "L2"])
def test_blocking_lemmas(metric):
    report = check_blocking_lemmas(metric)
    assert report.ok, report.failed()
