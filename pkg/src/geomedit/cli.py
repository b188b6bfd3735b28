"""Command-line front end.

Exit codes: 0 success, 1 property/oracle check failure, 2 parse error,
3 precondition violation.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from fractions import Fraction

from .dispersal import DispersalInstance, disperse
from .gadgets import (
    build_cell_gadget,
    build_clause_component,
    build_clause_gadget,
    build_variable_gadget,
)
from .geometry import Interval, sort_intervals
from .graph import build_graph, is_acyclic, is_edgeless, max_clique_interval
from .instances import (
    Instance,
    ParseError,
    disks_to_svg,
    dump_instance,
    load_instance,
    render_bench_figure,
)
from .oracle import brute_force_disperse
from .properties import solve_acyclic, solve_edgeless, solve_k_clique_free
from .rational import format_rational, parse_rational
from .threepartition import ThreePartitionInstance, build_3partition_instance

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_PARSE = 2
EXIT_PRECONDITION = 3

PRNG_HEADER = "# prng=mersenne-twister(random.Random) seed={seed}"


def _read_instance(path: str) -> Instance:
    with open(path, encoding="utf-8") as fh:
        return load_instance(fh.read())


def _print_movement(intervals, displacements, finals, as_json: bool, total) -> None:
    if as_json:
        print(
            json.dumps(
                {
                    "total": format_rational(total),
                    "displacements": [format_rational(d) for d in displacements],
                    "final_centers": [format_rational(c) for c in finals],
                }
            )
        )
    else:
        print(f"total\t{format_rational(total)}")
        print("index\tcenter\tdisplacement\tfinal")
        for i, iv in enumerate(intervals):
            print(
                f"{i}\t{format_rational(iv.center)}\t"
                f"{format_rational(displacements[i])}\t{format_rational(finals[i])}"
            )


def cmd_disperse(args) -> int:
    try:
        inst = _read_instance(args.input)
    except (OSError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    if inst.kind != "unit_intervals":
        print("error: disperse requires a unit_intervals instance", file=sys.stderr)
        return EXIT_PRECONDITION
    try:
        s = parse_rational(args.s) if args.s is not None else (inst.s or Fraction(1))
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    try:
        result = disperse(DispersalInstance(tuple(inst.intervals), s))
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    _print_movement(
        inst.intervals, result.movement.displacements, result.final_centers, args.json, result.total
    )
    return EXIT_OK


def cmd_solve(args) -> int:
    try:
        inst = _read_instance(args.input)
    except (OSError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    if inst.kind != "unit_intervals":
        print("error: solve requires a unit_intervals instance", file=sys.stderr)
        return EXIT_PRECONDITION
    try:
        if args.property == "edgeless":
            res = solve_edgeless(inst.intervals)
        elif args.property == "acyclic":
            res = solve_acyclic(inst.intervals)
        else:
            if args.k is None:
                print("error: --k required for kclique-free", file=sys.stderr)
                return EXIT_PRECONDITION
            res = solve_k_clique_free(inst.intervals, args.k)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    finals = [iv.center for iv in res.final]
    _print_movement(inst.intervals, res.movement.displacements, finals, args.json, res.total)
    return EXIT_OK


def cmd_oracle(args) -> int:
    rng = random.Random(args.seed)
    print(PRNG_HEADER.format(seed=args.seed))
    s_choices = [Fraction(1), Fraction(3, 2), Fraction(2)]
    mismatches = 0
    for trial in range(args.trials):
        n = rng.randint(0, args.max_n)
        denom = 4
        intervals = tuple(
            Interval(center=Fraction(rng.randint(0, denom * max(n, 1)), denom), id=i)
            for i in range(n)
        )
        s = rng.choice(s_choices)
        inst = DispersalInstance(intervals, s)
        fast = disperse(inst).total
        slow = brute_force_disperse(inst).total
        if fast != slow:
            mismatches += 1
            print(
                f"MISMATCH trial={trial} n={n} s={s} fast={fast} slow={slow} "
                f"centers={[str(iv.center) for iv in intervals]}"
            )
    print(f"trials={args.trials} mismatches={mismatches}")
    return EXIT_OK if mismatches == 0 else EXIT_CHECK_FAILED


def cmd_gen_3partition(args) -> int:
    try:
        if args.sizes:
            if args.b is None:
                print("error: --sizes requires --b", file=sys.stderr)
                return EXIT_PRECONDITION
            sizes = tuple(int(x) for x in args.sizes.split(","))
            tp = ThreePartitionInstance(sizes, args.b)
        else:
            from .threepartition import random_yes_instance

            rng = random.Random(args.seed)
            print(PRNG_HEADER.format(seed=args.seed), file=sys.stderr)
            tp, _ = random_yes_instance(rng, args.m)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    built = build_3partition_instance(tp)
    inst = Instance("weighted_intervals", list(built.intervals), [])
    text = dump_instance(inst)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    print(f"# budget={format_rational(built.budget)} m={tp.m} B={tp.B}", file=sys.stderr)
    return EXIT_OK


def cmd_gen_gadget(args) -> int:
    builders = {
        "cell": build_cell_gadget,
        "clause": build_clause_gadget,
        "variable": lambda metric: build_variable_gadget(metric=metric, arms=(1, 2, 3)),
        "component": build_clause_component,
    }
    builder = builders.get(args.kind)
    if builder is None:
        print(f"error: unknown gadget kind {args.kind!r}", file=sys.stderr)
        return EXIT_PRECONDITION
    if args.kind in ("cell", "clause"):
        g = builder(metric=args.metric)
    else:
        g = builder(args.metric)
    inst = Instance("disks", [], g.disks, metric=args.metric)
    text = dump_instance(inst)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    if args.svg:
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(disks_to_svg(g.disks))
        print(f"# svg written to {args.svg}", file=sys.stderr)
    print(f"# disks={len(g.disks)}", file=sys.stderr)
    return EXIT_OK


def cmd_check_graph(args) -> int:
    try:
        inst = _read_instance(args.input)
    except (OSError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    objects = inst.disks if inst.kind == "disks" else inst.intervals
    g = build_graph(objects)
    if args.property == "edgeless":
        ok = is_edgeless(g)
    elif args.property == "acyclic":
        ok = is_acyclic(g)
    elif args.property == "kclique-free":
        if args.k is None:
            print("error: --k required for kclique-free", file=sys.stderr)
            return EXIT_PRECONDITION
        if inst.kind == "disks":
            from .graph import has_k_clique

            try:
                ok = not has_k_clique(g, args.k)
            except ValueError as exc:
                print(f"error: {exc}", file=sys.stderr)
                return EXIT_PRECONDITION
        else:
            ok = max_clique_interval(sort_intervals(inst.intervals)) < args.k
    else:
        print(f"error: unknown property {args.property!r}", file=sys.stderr)
        return EXIT_PRECONDITION
    print(f"vertices={g.vertex_count} edges={len(g.edges)} {args.property}={ok}")
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def cmd_bench(args) -> int:
    rng = random.Random(args.seed)
    print(PRNG_HEADER.format(seed=args.seed))
    sizes = [int(float(x)) for x in args.sizes.split(",")]
    rows = []
    print("n,seconds,ratio_to_prev,seconds_per_nlogn")
    prev = None
    import math

    for n in sizes:
        intervals = tuple(
            Interval(center=Fraction(rng.randint(0, 2 * n), 2), id=i) for i in range(n)
        )
        inst = DispersalInstance(intervals, Fraction(1))
        t0 = time.perf_counter()
        disperse(inst)
        dt = time.perf_counter() - t0
        ratio = dt / prev if prev else float("nan")
        per = dt / (n * math.log2(max(n, 2)))
        rows.append({"n": n, "seconds": dt, "ratio": ratio, "per_nlogn": per})
        print(f"{n},{dt:.4f},{ratio:.3f},{per:.3e}")
        prev = dt
    if args.csv:
        with open(args.csv, "w", encoding="utf-8") as fh:
            fh.write("n,seconds,ratio_to_prev,seconds_per_nlogn\n")
            for r in rows:
                fh.write(f"{r['n']},{r['seconds']:.6f},{r['ratio']:.4f},{r['per_nlogn']:.6e}\n")
    if args.figure:
        render_bench_figure(rows, args.figure)
        print(f"# figure written to {args.figure}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="geomedit",
        description="Move geometric objects the minimum total distance to "
        "make their intersection graph edgeless, acyclic, or clique-free.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    d = sub.add_parser("disperse", help="minimum-movement dispersal of unit intervals")
    d.add_argument("--input", required=True)
    d.add_argument("--s", default=None, help="separation, rational (default from file or 1)")
    d.add_argument("--json", action="store_true")
    d.set_defaults(func=cmd_disperse)

    s = sub.add_parser("solve", help="edit intervals toward a graph property")
    s.add_argument("--input", required=True)
    s.add_argument("--property", required=True, choices=["edgeless", "acyclic", "kclique-free"])
    s.add_argument("--k", type=int, default=None)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_solve)

    o = sub.add_parser("oracle", help="randomized solver-vs-brute-force cross-check")
    o.add_argument("--max-n", type=int, default=10)
    o.add_argument("--trials", type=int, default=1000)
    o.add_argument("--seed", type=int, default=0)
    o.set_defaults(func=cmd_oracle)

    g3 = sub.add_parser("gen-3partition", help="emit a weighted-interval instance")
    g3.add_argument("--m", type=int, default=2)
    g3.add_argument("--b", type=int, default=None, help="B value (with --sizes)")
    g3.add_argument("--sizes", default=None, help="comma-separated 3m sizes")
    g3.add_argument("--seed", type=int, default=0)
    g3.add_argument("--output", default=None)
    g3.set_defaults(func=cmd_gen_3partition)

    gg = sub.add_parser("gen-gadget", help="emit a disk gadget as JSON (and SVG)")
    gg.add_argument("--kind", required=True, choices=["cell", "clause", "variable", "component"])
    gg.add_argument("--metric", default="L2", choices=["L1", "L2"])
    gg.add_argument("--svg", default=None)
    gg.add_argument("--output", default=None)
    gg.set_defaults(func=cmd_gen_gadget)

    cg = sub.add_parser("check-graph", help="check a property of an instance's graph")
    cg.add_argument("--input", required=True)
    cg.add_argument("--property", required=True, choices=["edgeless", "acyclic", "kclique-free"])
    cg.add_argument("--k", type=int, default=None)
    cg.set_defaults(func=cmd_check_graph)

    b = sub.add_parser("bench", help="timing report (CSV + figure)")
    b.add_argument("--sizes", default="1e3,1e4,1e5,1e6")
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--csv", default=None)
    b.add_argument("--figure", default=None)
    b.set_defaults(func=cmd_bench)

    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
