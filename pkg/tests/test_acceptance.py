"""Acceptance suite.

One test per acceptance criterion, each printing a PASS/FAIL line (visible
with ``pytest -s``). Every expectation is exact except the benchmark ratio,
whose 3x band is part of the criterion itself.
"""

import math
import random
from contextlib import contextmanager

from pinpoly import (
    Classification,
    CrossingMode,
    GeneratorConfig,
    Point,
    Polygon,
    axis_crossing,
    classify,
    classify_paper_mode,
    find_start_vertex,
    generate_case,
    next_off_axis,
    parse_polygon_plaintext,
    parse_polygon_wkt,
    serialize_polygon_plaintext,
    serialize_polygon_wkt,
    translate_to_query_frame,
)
from pinpoly.cli import run_bench, run_difftest


@contextmanager
def criterion(num, title):
    try:
        yield
    except BaseException:
        print(f"[criterion {num}] FAIL  {title}")
        raise
    print(f"[criterion {num}] PASS  {title}")


QUADRANT = {1: Point(1, 1), 2: Point(-1, 1), 3: Point(-1, -1), 4: Point(1, -1)}
# substitute-edge intersection with the complete axis, for every ordered
# quadrant pair of its endpoints (10 canonical rows + 6 endpoint swaps)
QUADRANT_TABLE = {
    (1, 1): 0, (1, 2): 0, (1, 3): 1, (1, 4): 1,
    (2, 1): 0, (2, 2): 0, (2, 3): 1, (2, 4): 1,
    (3, 1): 1, (3, 2): 1, (3, 3): 0, (3, 4): 0,
    (4, 1): 1, (4, 2): 1, (4, 3): 0, (4, 4): 0,
}

TRIANGLE = Polygon([(-1, 1), (3, 0), (-1, -1)])
HEXAGON = Polygon([(-2, 2), (-3, -1), (1, 0), (3, 0), (4, -2), (5, 0)])
ORIGIN = Point(0, 0)


def test_criterion_1_quadrant_pair_table():
    with criterion(1, "complete-axis crossings for all 16 quadrant pairs"):
        for (qa, qb), expected in QUADRANT_TABLE.items():
            a, b = QUADRANT[qa], QUADRANT[qb]
            got = axis_crossing(a, b, CrossingMode.COMPLETE_AXIS)
            assert got == expected, f"q{qa}/q{qb}: got {got}, want {expected}"
            # swapped rows are the same case and must stay identical
            assert axis_crossing(b, a, CrossingMode.COMPLETE_AXIS) == expected


def test_criterion_2_worked_example_trace():
    with criterion(2, "hexagon worked-example trace, row for row"):
        verdict = classify(HEXAGON, ORIGIN, with_trace=True)
        assert len(verdict.trace) == 3
        assert [s.mode for s in verdict.trace] == [
            CrossingMode.POSITIVE_AXIS,
            CrossingMode.COMPLETE_AXIS,
            CrossingMode.COMPLETE_AXIS,
        ]
        assert [s.crossed for s in verdict.trace] == [False, False, True]
        assert [s.skipped_indices for s in verdict.trace] == [(), (2, 3), (5,)]
        assert verdict.crossing_count == 1
        assert verdict.classification is Classification.INSIDE


def test_criterion_3_skipped_vertex_regression():
    with criterion(3, "triangle with an on-ray vertex: substitute edge must count"):
        verdict = classify(TRIANGLE, ORIGIN)
        assert verdict.crossing_count == 1
        assert verdict.classification is Classification.INSIDE

        # mutation: intersect every hop with the positive half-axis only;
        # the substitute edge then contributes nothing and the naive count
        # calls an interior point outside
        frame = translate_to_query_frame(TRIANGLE, ORIGIN)
        start = find_start_vertex(frame)
        count = 0
        s = start
        while True:
            nxt, _skipped = next_off_axis(frame, s)
            if nxt != s:
                count += axis_crossing(
                    frame.vertices[s], frame.vertices[nxt], CrossingMode.POSITIVE_AXIS
                )
            s = nxt
            if s == start:
                break
        assert count == 0
        assert count % 2 == 0  # naive verdict: outside


def _lattice_points(a, b):
    g = math.gcd(abs(b.x - a.x), abs(b.y - a.y))
    if g == 0:
        return [a]
    return [
        Point(a.x + k * (b.x - a.x) // g, a.y + k * (b.y - a.y) // g)
        for k in range(g + 1)
    ]


def test_criterion_4_boundary_and_collinear_totality():
    with criterion(4, "boundary queries and all-collinear polygons are total"):
        fixtures = [
            Polygon([(0, 0), (4, 0), (4, 4), (0, 4)]),
            TRIANGLE,
            HEXAGON,
            Polygon([(0, 0), (4, 4), (4, 0), (0, 4)]),      # bowtie
            Polygon([(0, 0), (4, 4), (0, 4), (4, 0)]),      # bowtie, other pinch
            Polygon([(0, 0), (6, 0), (3, 3), (6, 6), (0, 6)]),  # notched
            Polygon([(0, 0), (0, 0), (5, 0), (5, 5)]),      # duplicate vertex
            Polygon([(1, 1), (7, 5)]),                       # bare segment
            Polygon([(2, 3)]),                               # single vertex
        ]
        offsets = [
            (0, 0), (3, 5), (-7, 2), (100, -40), (-1000, 999),
            (13, 13), (-2, -9), (8, 0), (0, -6), (21, -17),
        ]
        boundary_cases = 0
        for poly in fixtures:
            verts = poly.vertices
            n = len(verts)
            queries = []
            for i in range(n):
                a, b = verts[i], verts[(i + 1) % n]  # includes the closing edge
                queries.extend(_lattice_points(a, b))
            for tx, ty in offsets:
                moved = Polygon([(v.x + tx, v.y + ty) for v in verts])
                for q in queries:
                    shifted_q = Point(q.x + tx, q.y + ty)
                    verdict = classify(moved, shifted_q)
                    assert verdict.classification is Classification.BOUNDARY, (
                        moved,
                        shifted_q,
                    )
                    assert classify_paper_mode(moved, shifted_q) is Classification.INSIDE
                    boundary_cases += 1

        collinear_cases = 0
        for dx, dy in [(1, 0), (0, 1), (1, 1), (2, 1), (1, -3)]:
            for bx, by in [(0, 0), (5, -2), (-3, 4)]:
                for n in (1, 2, 3, 5):
                    verts = [(bx + i * dx, by + i * dy) for i in range(1, n + 1)]
                    poly = Polygon(verts)
                    off_segment = [
                        Point(bx, by),                                # before the run
                        Point(bx + (n + 1) * dx, by + (n + 1) * dy),  # past the run
                        Point(bx - dy, by + dx),                      # off the line
                    ]
                    for q in off_segment:
                        verdict = classify(poly, q)
                        assert verdict.classification is Classification.OUTSIDE, (
                            poly,
                            q,
                        )
                        collinear_cases += 1

        assert boundary_cases + collinear_cases >= 1000, (
            boundary_cases,
            collinear_cases,
        )


def test_criterion_5_differential_fuzzing_100k():
    with criterion(5, "100000 generated cases: classifier and oracle fully agree"):
        total = 0
        for p_on_axis, cases, seed in [
            (0.0, 33334, 501),
            (0.3, 33333, 502),
            (0.9, 33333, 503),
        ]:
            cfg = GeneratorConfig(
                vertex_count_range=(1, 10),
                coordinate_range=(-8, 8),
                p_on_axis=p_on_axis,
                p_duplicate=0.1,
                p_on_boundary_query=0.1,
                seed=seed,
            )
            report = run_difftest(cfg, cases)
            assert report.failure_index is None, (
                p_on_axis,
                report.failure_index,
                report.failure_case,
                report.failure_verdicts,
            )
            assert report.agreements == cases
            total += report.agreements
        assert total == 100000


def test_criterion_6_metamorphic_invariants_10k():
    with criterion(6, "shift/reversal/translation/scaling preserve classification"):
        cfg = GeneratorConfig(
            vertex_count_range=(1, 10), coordinate_range=(-30, 30), seed=606
        )
        trng = random.Random(607)
        for i in range(10000):
            poly, q = generate_case(cfg, i)
            base = classify(poly, q).classification
            verts = [(v.x, v.y) for v in poly.vertices]

            k = trng.randrange(len(verts))
            shifted = classify(Polygon(verts[k:] + verts[:k]), q)
            assert shifted.classification is base, (verts, q, "shift", k)

            rev = classify(Polygon(verts[::-1]), q)
            assert rev.classification is base, (verts, q, "reversal")

            tx, ty = trng.randint(-1000, 1000), trng.randint(-1000, 1000)
            moved = classify(
                Polygon([(x + tx, y + ty) for x, y in verts]),
                Point(q.x + tx, q.y + ty),
            )
            assert moved.classification is base, (verts, q, "translate", (tx, ty))

            m = 2 ** trng.randint(1, 4)
            scaled = classify(
                Polygon([(x * m, y * m) for x, y in verts]), Point(q.x * m, q.y * m)
            )
            assert scaled.classification is base, (verts, q, "scale", m)


def test_criterion_7_linear_scaling():
    with criterion(7, "ns/vertex at n=10^6 within 3x of n=10^4"):
        rows = run_bench([10**3, 10**4, 10**5, 10**6], repetitions=3, seed=1234)
        per_vertex = {row.n: row.ns_per_vertex for row in rows}
        ratio = per_vertex[10**6] / per_vertex[10**4]
        print(
            "  ns/vertex:",
            {n: round(v, 1) for n, v in per_vertex.items()},
            f"ratio(1e6/1e4)={ratio:.2f}",
        )
        assert 1 / 3 <= ratio <= 3, per_vertex


def test_criterion_8_format_round_trips_1000():
    with criterion(8, "plaintext and WKT round-trips are lossless"):
        rng = random.Random(88)
        polys = [
            Polygon([(0, 0), (4, 4), (4, 0), (0, 4)]),
            Polygon([(0, 0), (4, 4), (0, 4), (4, 0)]),
            Polygon([(-1, -1), (0, 1), (1, -1), (-1, 0), (1, 0)]),  # pentagram
        ]
        while len(polys) < 1000:
            n = rng.randint(1, 12)
            if rng.random() < 0.5:
                verts = [
                    (rng.randint(-999, 999), rng.randint(-999, 999)) for _ in range(n)
                ]
            else:
                verts = [
                    (rng.uniform(-1e6, 1e6), rng.uniform(-1e-6, 1e-6))
                    for _ in range(n)
                ]
            if n > 1 and verts[-1] == verts[0]:
                continue  # would trigger the closure-drop path by design
            polys.append(Polygon(verts))

        for poly in polys:
            plain = parse_polygon_plaintext(serialize_polygon_plaintext(poly))
            assert plain.polygon.vertices == poly.vertices
            wkt = parse_polygon_wkt(serialize_polygon_wkt(poly))
            assert wkt.polygon.vertices == poly.vertices
