import json
from fractions import Fraction as F

import pytest

from geomedit.gadgets import build_cell_gadget
from geomedit.instances import (
    Instance,
    ParseError,
    disks_to_svg,
    dump_instance,
    load_instance,
)
from geomedit.rational import format_rational, parse_rational


def test_parse_rational():
    assert parse_rational("3/2") == F(3, 2)
    assert parse_rational("-7") == -7
    assert parse_rational(5) == 5
    assert parse_rational("1.5") == F(3, 2)  # exact base-10 parse, not a float
    with pytest.raises(ValueError):
        parse_rational("1/0")
    with pytest.raises(ValueError):
        parse_rational("abc")
    with pytest.raises(ValueError):
        parse_rational(True)


def test_format_round_trip():
    for v in (F(0), F(-3, 7), F(12)):
        assert parse_rational(format_rational(v)) == v


def test_load_unit_intervals():
    inst = load_instance(json.dumps({
        "kind": "unit_intervals",
        "s": "3/2",
        "items": [{"center": "1/2"}, {"center": 3}],
    }))
    assert inst.kind == "unit_intervals"
    assert inst.s == F(3, 2)
    assert [iv.center for iv in inst.intervals] == [F(1, 2), 3]
    assert all(iv.length == 1 for iv in inst.intervals)


def test_round_trip_all_kinds():
    docs = [
        {"kind": "unit_intervals", "s": "2", "items": [{"center": "0"}, {"center": "5/3"}]},
        {"kind": "weighted_intervals",
         "items": [{"center": "0", "length": "4", "weight": "576"}]},
        {"kind": "disks", "metric": "L1",
         "items": [{"x": "0", "y": "1/2", "kind": "transition", "label": "t"},
                   {"x": "-7/2", "y": "0", "kind": 6}]},
    ]
    for doc in docs:
        inst = load_instance(json.dumps(doc))
        again = load_instance(dump_instance(inst))
        assert dump_instance(inst) == dump_instance(again)


def test_unknown_fields_rejected():
    with pytest.raises(ParseError):
        load_instance(json.dumps({"kind": "unit_intervals", "items": [], "extra": 1}))
    with pytest.raises(ParseError):
        load_instance(json.dumps({"kind": "unit_intervals",
                                  "items": [{"center": "0", "length": "2"}]}))
    with pytest.raises(ParseError):
        load_instance(json.dumps({"kind": "disks",
                                  "items": [{"x": "0", "y": "0", "kind": "transition",
                                             "bogus": True}]}))


def test_schema_scoping_rules():
    with pytest.raises(ParseError):
        load_instance(json.dumps({"kind": "disks", "s": "1", "items": []}))
    with pytest.raises(ParseError):
        load_instance(json.dumps({"kind": "unit_intervals", "metric": "L1", "items": []}))
    with pytest.raises(ParseError):
        load_instance(json.dumps({"kind": "disks", "metric": "L3", "items": []}))
    with pytest.raises(ParseError):
        load_instance("not json")
    with pytest.raises(ParseError):
        load_instance(json.dumps({"kind": "mystery", "items": []}))


def test_disks_svg():
    svg = disks_to_svg(build_cell_gadget().disks)
    assert svg.startswith("<svg")
    assert svg.count("<circle") >= 9
    assert "</svg>" in svg
