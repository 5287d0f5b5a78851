"""Command-line front end.

Four commands: ``query`` (one point), ``batch`` (a points file), ``difftest``
(differential fuzzing of the classifier against the oracle), and ``bench``
(timing across polygon sizes). Data goes to stdout (JSONL or CSV),
diagnostics to stderr.

Exit codes: 0 success, 1 property or internal-assertion failure, 2 usage,
parse, or I/O error.
"""

from __future__ import annotations

import argparse
import random
import sys
import time
from dataclasses import dataclass

from .errors import InputError, InternalError
from .evenodd import Classification, classify
from .formats import (
    QueryResultRecord,
    _parse_number,
    parse_point_list,
    parse_polygon_plaintext,
    parse_polygon_wkt,
    serialize_results,
)
from .geometry import Point, Polygon
from .oracle import GeneratorConfig, generate_case, oracle_classify

__all__ = ["main", "entrypoint", "run_difftest", "run_bench", "DifftestReport", "BenchRow"]

_BENCH_COORD_RANGE = 1_000_000


def _load_polygon(path, fmt):
    with open(path, "rb") as fh:
        data = fh.read()
    if fmt == "auto":
        fmt = "wkt" if data.lstrip()[:7].upper() == b"POLYGON" else "plain"
    if fmt == "wkt":
        return parse_polygon_wkt(data, source_name=path)
    return parse_polygon_plaintext(data, source_name=path)


def _parse_point_arg(text):
    parts = text.split(",")
    if len(parts) != 2:
        raise InputError(f"point must be 'x,y', got {text!r}")
    try:
        return Point(_parse_number(parts[0].strip()), _parse_number(parts[1].strip()))
    except ValueError as exc:
        raise InputError(f"bad point {text!r}: {exc}") from None


def _record(q, verdict, paper_mode, with_trace):
    cls = verdict.classification
    if paper_mode and cls is Classification.BOUNDARY:
        cls = Classification.INSIDE
    return QueryResultRecord(
        q, cls, verdict.crossing_count, verdict.trace if with_trace else None
    )


def cmd_query(args) -> int:
    doc = _load_polygon(args.polygon, args.format)
    q = _parse_point_arg(args.point)
    verdict = classify(doc.polygon, q, with_trace=args.trace)
    rec = _record(q, verdict, args.paper_mode, args.trace)
    sys.stdout.write(serialize_results([rec]))
    return 0


def cmd_batch(args) -> int:
    doc = _load_polygon(args.polygon, args.format)
    with open(args.points, "rb") as fh:
        points = parse_point_list(fh.read(), source_name=args.points)
    counts = {c: 0 for c in Classification}
    records = []
    for q in points:
        rec = _record(q, classify(doc.polygon, q), args.paper_mode, False)
        counts[rec.classification] += 1
        records.append(rec)
    sys.stdout.write(serialize_results(records))
    print(
        f"{len(points)} points: "
        f"{counts[Classification.INSIDE]} inside, "
        f"{counts[Classification.OUTSIDE]} outside, "
        f"{counts[Classification.BOUNDARY]} boundary",
        file=sys.stderr,
    )
    return 0


@dataclass(frozen=True, slots=True)
class DifftestReport:
    total: int
    agreements: int
    verdict_counts: dict
    failure_index: int | None = None
    failure_case: tuple | None = None
    failure_verdicts: tuple | None = None


def run_difftest(cfg: GeneratorConfig, cases: int) -> DifftestReport:
    """Run ``cases`` generated cases through classifier and oracle.

    Stops at the first disagreement and reports it; the verdict counts
    cover the evenodd side of all cases examined.
    """
    counts = {c: 0 for c in Classification}
    for index in range(cases):
        poly, q = generate_case(cfg, index)
        ours = classify(poly, q).classification
        truth = oracle_classify(poly, q)
        counts[ours] += 1
        if ours is not truth:
            return DifftestReport(
                total=cases,
                agreements=index,
                verdict_counts=counts,
                failure_index=index,
                failure_case=(poly, q),
                failure_verdicts=(ours, truth),
            )
    return DifftestReport(total=cases, agreements=cases, verdict_counts=counts)


def cmd_difftest(args) -> int:
    if args.cases < 1:
        raise InputError("--cases must be at least 1")
    cfg = GeneratorConfig(
        vertex_count_range=(args.min_vertices, args.max_vertices),
        coordinate_range=(args.coord_min, args.coord_max),
        p_on_axis=args.p_on_axis,
        p_duplicate=args.p_duplicate,
        p_on_boundary_query=args.p_on_boundary_query,
        seed=args.seed,
    )
    report = run_difftest(cfg, args.cases)
    if report.failure_index is not None:
        poly, q = report.failure_case
        ours, truth = report.failure_verdicts
        print(
            f"difftest: disagreement at case {report.failure_index} "
            f"(seed={cfg.seed})",
            file=sys.stderr,
        )
        print(
            "  polygon: " + " ".join(f"({v.x},{v.y})" for v in poly.vertices),
            file=sys.stderr,
        )
        print(f"  query: ({q.x},{q.y})", file=sys.stderr)
        print(f"  evenodd: {ours.value}", file=sys.stderr)
        print(f"  oracle:  {truth.value}", file=sys.stderr)
        return 1
    print(f"{report.agreements}/{report.total} agree (seed={cfg.seed})")
    print(
        "verdicts: "
        + ", ".join(f"{c.value}={report.verdict_counts[c]}" for c in Classification),
        file=sys.stderr,
    )
    return 0


@dataclass(frozen=True, slots=True)
class BenchRow:
    n: int
    mean_ns: float
    ns_per_vertex: float


def _random_polygon(rng, n):
    r = _BENCH_COORD_RANGE
    return Polygon(
        tuple(Point(rng.randint(-r, r), rng.randint(-r, r)) for _ in range(n))
    )


def run_bench(sizes, repetitions, seed) -> list[BenchRow]:
    """Time classify() on one random n-gon per size; returns one row per size."""
    rng = random.Random(seed)
    rows = []
    for n in sizes:
        poly = _random_polygon(rng, n)
        if repetitions < 1:
            continue
        total = 0
        for _ in range(repetitions):
            q = Point(
                rng.randint(-_BENCH_COORD_RANGE, _BENCH_COORD_RANGE),
                rng.randint(-_BENCH_COORD_RANGE, _BENCH_COORD_RANGE),
            )
            start = time.perf_counter_ns()
            classify(poly, q)
            total += time.perf_counter_ns() - start
        mean = total / repetitions
        rows.append(BenchRow(n, mean, mean / n))
    return rows


def cmd_bench(args) -> int:
    sizes = args.sizes
    if any(n < 1 for n in sizes):
        raise InputError("every size must be at least 1")
    if args.repetitions < 0:
        raise InputError("--repetitions must be non-negative")
    rows = run_bench(sizes, args.repetitions, args.seed)
    print(
        f"bench: seed={args.seed} repetitions={args.repetitions} "
        f"queries={len(rows) * args.repetitions}",
        file=sys.stderr,
    )
    print("n,mean_ns,ns_per_vertex")
    for row in rows:
        print(f"{row.n},{row.mean_ns:.0f},{row.ns_per_vertex:.3f}")
    return 0


def _comma_ints(text):
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pinpoly",
        description="Point-in-polygon queries for complex polygons (even-odd rule).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_polygon_args(p):
        p.add_argument("--polygon", required=True, help="polygon file")
        p.add_argument(
            "--format",
            choices=["auto", "plain", "wkt"],
            default="auto",
            help="polygon file format (default: detect)",
        )
        p.add_argument(
            "--paper-mode",
            action="store_true",
            help="report boundary hits as inside",
        )

    p = sub.add_parser("query", help="classify a single point")
    add_polygon_args(p)
    p.add_argument("--point", required=True, help="query point as 'x,y'")
    p.add_argument("--trace", action="store_true", help="include the per-hop trace")
    p.set_defaults(func=cmd_query)

    p = sub.add_parser("batch", help="classify every point in a file")
    add_polygon_args(p)
    p.add_argument("--points", required=True, help="points file, one 'x y' per line")
    p.set_defaults(func=cmd_batch)

    p = sub.add_parser("difftest", help="fuzz the classifier against the oracle")
    p.add_argument("--cases", type=int, default=10000)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--p-on-axis", type=float, default=0.3)
    p.add_argument("--p-duplicate", type=float, default=0.1)
    p.add_argument("--p-on-boundary-query", type=float, default=0.1)
    p.add_argument("--min-vertices", type=int, default=1)
    p.add_argument("--max-vertices", type=int, default=12)
    p.add_argument("--coord-min", type=int, default=-50)
    p.add_argument("--coord-max", type=int, default=50)
    p.set_defaults(func=cmd_difftest)

    p = sub.add_parser("bench", help="time classification across polygon sizes")
    p.add_argument(
        "--sizes",
        type=_comma_ints,
        default=[1000, 10000, 100000],
        help="comma-separated vertex counts",
    )
    p.add_argument("--repetitions", type=int, default=5)
    p.add_argument("--seed", type=int, default=42)
    p.set_defaults(func=cmd_bench)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InternalError as exc:
        print(f"pinpoly: internal error: {exc}", file=sys.stderr)
        return 1
    except (InputError, OSError) as exc:
        print(f"pinpoly: error: {exc}", file=sys.stderr)
        return 2


def entrypoint():
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
