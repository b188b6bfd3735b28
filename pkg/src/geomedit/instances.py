"""Instance file IO (strict JSON schema), SVG rendering, and benchmark plots.

Schema::

    {
      "kind": "unit_intervals" | "weighted_intervals" | "disks",
      "s": "3/2",                  # optional, rational string, intervals only
      "metric": "L1" | "L2",       # optional, disks only
      "items": [...]
    }

Interval items: {"center": rational, ["length": rational, "weight": rational]}
(unit_intervals forbids length/weight).  Disk items: {"x": rational,
"y": rational, "kind": "transition" | positive int, ["label": str]}.
All rationals are strings or ints and parse exactly; unknown fields anywhere
are rejected.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .geometry import Disk, Interval, Metric
from .rational import format_rational, parse_rational


class ParseError(ValueError):
    pass


@dataclass
class Instance:
    kind: str  # "unit_intervals" | "weighted_intervals" | "disks"
    intervals: list[Interval]
    disks: list[Disk]
    s: Fraction | None = None
    metric: Metric = "L2"


def _require_keys(obj: dict, allowed: set[str], where: str) -> None:
    unknown = set(obj) - allowed
    if unknown:
        raise ParseError(f"unknown field(s) {sorted(unknown)} in {where}")


def load_instance(text: str) -> Instance:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ParseError("instance file must be a JSON object")
    _require_keys(doc, {"kind", "s", "metric", "items"}, "instance")
    kind = doc.get("kind")
    if kind not in ("unit_intervals", "weighted_intervals", "disks"):
        raise ParseError(f"unknown kind {kind!r}")
    items = doc.get("items")
    if not isinstance(items, list):
        raise ParseError("items must be a list")

    try:
        s = parse_rational(doc["s"]) if "s" in doc else None
    except ValueError as exc:
        raise ParseError(str(exc)) from exc

    if kind == "disks":
        if "s" in doc:
            raise ParseError("'s' only applies to interval instances")
        metric = doc.get("metric", "L2")
        if metric not in ("L1", "L2"):
            raise ParseError(f"metric must be L1 or L2, got {metric!r}")
        disks = []
        for i, it in enumerate(items):
            if not isinstance(it, dict):
                raise ParseError(f"item {i} must be an object")
            _require_keys(it, {"x", "y", "kind", "label"}, f"item {i}")
            try:
                kind_v = it.get("kind", "transition")
                if kind_v != "transition":
                    kind_v = int(kind_v)
                disks.append(
                    Disk(
                        center=(parse_rational(it["x"]), parse_rational(it["y"])),
                        kind=kind_v,
                        metric=metric,
                        label=str(it.get("label", "")),
                        id=i,
                    )
                )
            except (KeyError, ValueError, TypeError) as exc:
                raise ParseError(f"item {i}: {exc}") from exc
        return Instance("disks", [], disks, metric=metric)

    if "metric" in doc:
        raise ParseError("'metric' only applies to disk instances")
    intervals = []
    allowed = {"center"} if kind == "unit_intervals" else {"center", "length", "weight"}
    for i, it in enumerate(items):
        if not isinstance(it, dict):
            raise ParseError(f"item {i} must be an object")
        _require_keys(it, allowed, f"item {i}")
        try:
            intervals.append(
                Interval(
                    center=parse_rational(it["center"]),
                    length=parse_rational(it.get("length", 1)),
                    weight=parse_rational(it.get("weight", 1)),
                    id=i,
                )
            )
        except (KeyError, ValueError, TypeError) as exc:
            raise ParseError(f"item {i}: {exc}") from exc
    return Instance(kind, intervals, [], s=s)


def dump_instance(inst: Instance) -> str:
    doc: dict = {"kind": inst.kind}
    if inst.s is not None:
        doc["s"] = format_rational(inst.s)
    if inst.kind == "disks":
        doc["metric"] = inst.metric
        doc["items"] = [
            {
                "x": format_rational(d.center[0]),
                "y": format_rational(d.center[1]),
                "kind": d.kind,
                **({"label": d.label} if d.label else {}),
            }
            for d in inst.disks
        ]
    else:
        doc["items"] = []
        for iv in inst.intervals:
            item = {"center": format_rational(iv.center)}
            if inst.kind == "weighted_intervals":
                item["length"] = format_rational(iv.length)
                item["weight"] = format_rational(iv.weight)
            doc["items"].append(item)
    return json.dumps(doc, indent=2)


def disks_to_svg(disks: Sequence[Disk], scale: float = 40.0) -> str:
    """SVG 1.1 rendering: disk outlines plus dashed blocked-zone circles."""
    from .zones import blocked_zone_radius

    xs = [float(d.position[0]) for d in disks]
    ys = [float(d.position[1]) for d in disks]
    pad = 1.5
    x0, x1 = min(xs) - pad, max(xs) + pad
    y0, y1 = min(ys) - pad, max(ys) + pad
    w, h = (x1 - x0) * scale, (y1 - y0) * scale

    def sx(x: float) -> float:
        return (x - x0) * scale

    def sy(y: float) -> float:
        return (y1 - y) * scale  # flip: SVG y grows downward

    colors = {"transition": "#2b8cbe", 1: "#fdae61", 2: "#f46d43", 6: "#d73027"}
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{w:.0f}" height="{h:.0f}" viewBox="0 0 {w:.2f} {h:.2f}">'
    ]
    for d in disks:
        cx, cy = sx(float(d.position[0])), sy(float(d.position[1]))
        color = colors.get(d.kind, "#888888")
        zr = blocked_zone_radius(d)
        if zr > 0:
            parts.append(
                f'<circle cx="{cx:.2f}" cy="{cy:.2f}" r="{float(zr) * scale:.2f}" '
                f'fill="none" stroke="{color}" stroke-dasharray="4 3" stroke-opacity="0.5"/>'
            )
        parts.append(
            f'<circle cx="{cx:.2f}" cy="{cy:.2f}" r="{0.5 * scale:.2f}" '
            f'fill="{color}" fill-opacity="0.25" stroke="{color}"/>'
        )
        if d.label:
            parts.append(
                f'<text x="{cx:.2f}" y="{cy:.2f}" font-size="{0.22 * scale:.1f}" '
                f'text-anchor="middle" dominant-baseline="middle">{d.label}</text>'
            )
    parts.append("</svg>")
    return "\n".join(parts)


def render_bench_figure(rows: Sequence[dict], path: str) -> None:
    """Log-log wall-time plot for the benchmark report (written next to the CSV)."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    ns = [r["n"] for r in rows]
    ts = [r["seconds"] for r in rows]
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.loglog(ns, ts, "o-", label="measured")
    if ts and ts[0] > 0:
        import math

        ref = [ts[0] * (n * math.log2(max(n, 2))) / (ns[0] * math.log2(max(ns[0], 2))) for n in ns]
        ax.loglog(ns, ref, "--", color="gray", label="n log n reference")
    ax.set_xlabel("n (intervals)")
    ax.set_ylabel("wall time (s)")
    ax.set_title("dispersal solve time")
    ax.grid(True, which="both", alpha=0.3)
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
