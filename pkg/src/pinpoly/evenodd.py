"""Even-odd point-in-polygon classification without special cases.

The classifier works in a frame where the query point is the origin and the
ray is the positive x-axis. Instead of nudging inputs or handling vertex-on-
ray cases one by one, it walks the cyclic sequence of vertices that are off
the axis. Each hop connects an off-axis vertex to the next off-axis vertex;
any on-axis vertices in between are skipped and the hop's substitute segment
is intersected with the full x-axis when the skipped run sits on the
positive half (a run on the negative half can contribute nothing). The
parity of the crossing count is the verdict.

A query exactly on a vertex or edge is detected up front and reported as
BOUNDARY, so the walk itself never meets a vertex at the origin or a run
that changes sides; both would be bugs and raise InternalError.

All functions are pure; polygons may be shared read-only across threads.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import InputError, InternalError
from .geometry import CrossingMode, Point, Polygon, point_on_segment

__all__ = [
    "Classification",
    "TraceStep",
    "Verdict",
    "is_on_boundary",
    "find_start_vertex",
    "next_off_axis",
    "classify",
    "classify_paper_mode",
]


class Classification(enum.Enum):
    """Three-valued query result."""

    INSIDE = "inside"
    OUTSIDE = "outside"
    BOUNDARY = "boundary"


@dataclass(frozen=True, slots=True)
class TraceStep:
    """One hop of the walk.

    ``mode`` is the axis the substitute segment was intersected with, or
    None when the skipped run lay on the negative half-axis and no
    intersection was attempted (such a hop never crosses).
    """

    start_index: int
    end_index: int
    skipped_indices: tuple[int, ...]
    mode: CrossingMode | None
    crossed: bool


@dataclass(frozen=True, slots=True)
class Verdict:
    """Classification plus the evidence that produced it."""

    classification: Classification
    crossing_count: int
    trace: tuple[TraceStep, ...] | None = None


def _as_point(p) -> Point:
    return p if isinstance(p, Point) else Point(*p)


def _as_polygon(poly) -> Polygon:
    return poly if isinstance(poly, Polygon) else Polygon(tuple(poly))


def is_on_boundary(poly: Polygon, q: Point) -> bool:
    """True iff ``q`` equals a vertex or lies on an edge (closed segments).

    The closing edge from the last vertex back to the first is included.
    For a single-vertex polygon this reduces to point equality.
    """
    poly = _as_polygon(poly)
    q = _as_point(q)
    prev = poly.vertices[-1]
    for v in poly.vertices:
        if point_on_segment(prev, v, q):
            return True
        prev = v
    return False


def find_start_vertex(poly_q: Polygon) -> int | None:
    """Smallest index of an off-axis vertex of a query-frame polygon.

    None when every vertex lies on the axis, in which case the query is
    outside (assuming the boundary test already said no).
    """
    poly_q = _as_polygon(poly_q)
    for i, v in enumerate(poly_q.vertices):
        if v.y != 0:
            return i
    return None


def next_off_axis(poly_q: Polygon, s: int) -> tuple[int, list[int]]:
    """Walk forward (cyclically) from off-axis vertex ``s`` to the next one.

    Returns the next off-axis index plus the on-axis indices skipped on the
    way, in walk order. When ``s`` is the only off-axis vertex the walk
    comes back around to ``s`` itself.

    The skipped run is checked, not trusted: a skipped vertex at the origin
    or a run containing both positive and negative x-values would mean the
    query sits on a vertex or edge, which the boundary step must already
    have caught, so either raises InternalError.
    """
    poly_q = _as_polygon(poly_q)
    nxt, skipped = _walk_off_axis([(v.x, v.y) for v in poly_q.vertices], s)
    return nxt, skipped


def _walk_off_axis(pts, s):
    """Core of next_off_axis over raw (x, y) pairs."""
    n = len(pts)
    if pts[s][1] == 0:
        raise InternalError(f"walk started on an on-axis vertex at index {s}")
    skipped = []
    j = (s + 1) % n
    while pts[j][1] == 0:
        skipped.append(j)
        j = (j + 1) % n
    run_sign = 0
    for idx in skipped:
        x = pts[idx][0]
        if x == 0:
            raise InternalError(
                f"skipped vertex {idx} is the query point; "
                "the boundary step should have caught this"
            )
        side = 1 if x > 0 else -1
        if run_sign == 0:
            run_sign = side
        elif side != run_sign:
            raise InternalError(
                "skipped run changes from one half-axis to the other; "
                "the boundary step should have caught this"
            )
    return j, skipped


def _segment_crossing(ax, ay, bx, by, positive_only):
    """axis_crossing over raw coordinates (same exact sign logic)."""
    if (ay > 0) == (by > 0):
        return 0
    if not positive_only:
        return 1
    cross = ax * by - ay * bx
    if by > 0:
        return 1 if cross > 0 else 0
    return 1 if cross < 0 else 0


def classify(poly: Polygon, q: Point, with_trace: bool = False) -> Verdict:
    """Classify ``q`` against ``poly`` under the even-odd rule.

    Steps, in order:

    1. If q equals a vertex or lies on an edge the verdict is BOUNDARY.
    2. Shift all vertices so q becomes the origin. If every shifted vertex
       lies on the x-axis the verdict is OUTSIDE.
    3. Starting from the first off-axis vertex, hop between consecutive
       off-axis vertices until the cycle closes. A hop with no skipped
       vertices is intersected with the positive x-axis; a hop that skipped
       a run on the positive half-axis is intersected with the complete
       x-axis; a hop that skipped a run on the negative half-axis counts
       nothing. Every off-axis vertex begins exactly one hop.
    4. An odd crossing total means INSIDE, an even one OUTSIDE.

    With ``with_trace`` the verdict carries one TraceStep per hop.
    """
    poly = _as_polygon(poly)
    q = _as_point(q)

    if is_on_boundary(poly, q):
        return Verdict(Classification.BOUNDARY, 0, () if with_trace else None)

    qx, qy = q.x, q.y
    pts = []
    for v in poly.vertices:
        x = v.x - qx
        y = v.y - qy
        if not (math.isfinite(x) and math.isfinite(y)):
            raise InputError(f"translating {v} by {q} overflows")
        pts.append((x, y))

    start = None
    for i, (_, y) in enumerate(pts):
        if y != 0:
            start = i
            break
    if start is None:
        return Verdict(Classification.OUTSIDE, 0, () if with_trace else None)

    count = 0
    steps = [] if with_trace else None
    s = start
    while True:
        nxt, skipped = _walk_off_axis(pts, s)
        if not skipped:
            mode = CrossingMode.POSITIVE_AXIS
            crossed = _segment_crossing(*pts[s], *pts[nxt], True)
        elif pts[skipped[0]][0] > 0:
            mode = CrossingMode.COMPLETE_AXIS
            crossed = _segment_crossing(*pts[s], *pts[nxt], False)
        else:
            mode = None
            crossed = 0
        count += crossed
        if steps is not None:
            steps.append(TraceStep(s, nxt, tuple(skipped), mode, bool(crossed)))
        s = nxt
        if s == start:
            break

    verdict = Classification.INSIDE if count % 2 else Classification.OUTSIDE
    return Verdict(verdict, count, tuple(steps) if steps is not None else None)


def classify_paper_mode(poly: Polygon, q: Point) -> Classification:
    """Two-valued classification: a boundary hit reports as INSIDE."""
    result = classify(poly, q).classification
    if result is Classification.BOUNDARY:
        return Classification.INSIDE
    return result
