"""Exact low-level predicates in the query-centered frame.

Everything here is a pure function over immutable values, so any number of
threads may share the same objects. Sign tests compare against zero exactly,
with no epsilon: the classifier built on top eliminates ambiguous incidences
combinatorially, and a tolerance would reintroduce them. Callers that need
fuzzy matching should snap their inputs before querying.

Precision caveat: coordinates are ordinary Python numbers. With int inputs
(or floats that are integer-valued up to 2**53) every predicate is exact.
With general floats the intermediate products can round or overflow, and the
predicates are then best effort.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import InputError, InternalError

__all__ = [
    "Point",
    "Polygon",
    "AxisSign",
    "CrossingMode",
    "orient2d",
    "translate_to_query_frame",
    "axis_sign",
    "point_on_segment",
    "axis_crossing",
]


@dataclass(frozen=True, slots=True)
class Point:
    """A finite 2-D coordinate pair."""

    x: float
    y: float

    def __post_init__(self):
        for c in (self.x, self.y):
            if not isinstance(c, (int, float)) or not math.isfinite(c):
                raise InputError(f"coordinates must be finite numbers, got {c!r}")

    def __iter__(self):
        return iter((self.x, self.y))


@dataclass(frozen=True, slots=True)
class Polygon:
    """An ordered vertex ring, n >= 1.

    Edges run between consecutive vertices plus the closing edge from the
    last vertex back to the first; they are never stored separately. The
    ring may self-intersect. Plain ``(x, y)`` pairs are accepted wherever a
    vertex is expected and are converted on construction.
    """

    vertices: tuple[Point, ...]

    def __post_init__(self):
        try:
            verts = tuple(
                v if isinstance(v, Point) else Point(*v) for v in self.vertices
            )
        except TypeError:
            raise InputError("vertices must be Points or (x, y) pairs") from None
        if not verts:
            raise InputError("a polygon needs at least one vertex")
        object.__setattr__(self, "vertices", verts)

    def __len__(self):
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def edges(self):
        """Yield every edge as a (start, end) vertex pair, closing edge last."""
        verts = self.vertices
        for i in range(len(verts) - 1):
            yield verts[i], verts[i + 1]
        yield verts[-1], verts[0]


class AxisSign(enum.Enum):
    """Where a point of the query frame sits relative to the x-axis."""

    OFF_AXIS = "off_axis"
    ON_POSITIVE_AXIS = "on_positive_axis"
    ON_NEGATIVE_AXIS = "on_negative_axis"
    AT_ORIGIN = "at_origin"


class CrossingMode(enum.Enum):
    """Which part of the x-axis a segment is intersected with.

    POSITIVE_AXIS counts a crossing only when the intercept is at x > 0;
    COMPLETE_AXIS counts any sign change of y.
    """

    POSITIVE_AXIS = "positive"
    COMPLETE_AXIS = "complete"


def orient2d(a: Point, b: Point, c: Point) -> float:
    """Twice the signed area of triangle (a, b, c).

    Positive when the triangle winds counterclockwise, zero when the points
    are collinear. Exact for integer-valued inputs whose products stay
    within 2**53; the formula is antisymmetric under swapping a and b even
    after floating-point rounding.
    """
    return (a.x - c.x) * (b.y - c.y) - (a.y - c.y) * (b.x - c.x)


def translate_to_query_frame(poly: Polygon, q: Point) -> Polygon:
    """Return a copy of ``poly`` shifted so that ``q`` becomes the origin.

    The input polygon is not touched. Raises InputError if a shifted
    coordinate overflows to a non-finite value.
    """
    return Polygon(tuple(Point(v.x - q.x, v.y - q.y) for v in poly.vertices))


def axis_sign(p: Point) -> AxisSign:
    """Classify a query-frame point against the x-axis, exactly."""
    if p.y != 0:
        return AxisSign.OFF_AXIS
    if p.x > 0:
        return AxisSign.ON_POSITIVE_AXIS
    if p.x < 0:
        return AxisSign.ON_NEGATIVE_AXIS
    return AxisSign.AT_ORIGIN


def point_on_segment(a: Point, b: Point, p: Point) -> bool:
    """True iff ``p`` lies on the closed segment [a, b], endpoints included.

    Exact collinearity (zero cross product) plus closed bounding-box
    containment. A degenerate segment (a == b) degrades to point equality.
    Swapping a and b never changes the answer.
    """
    if orient2d(a, b, p) != 0:
        return False
    return (
        min(a.x, b.x) <= p.x <= max(a.x, b.x)
        and min(a.y, b.y) <= p.y <= max(a.y, b.y)
    )


def axis_crossing(a: Point, b: Point, mode: CrossingMode) -> int:
    """Count (0 or 1) how often segment [a, b] crosses the selected axis.

    Both endpoints must be strictly off the x-axis; violating that is a bug
    in the caller and raises InternalError rather than guessing. The
    endpoints' y-signs decide whether the segment reaches the axis at all;
    for POSITIVE_AXIS the sign of the x-intercept is then decided without
    division so the test stays exact and symmetric in (a, b). An intercept
    exactly at the origin (segment through the query point, which the
    classifier rules out beforehand) counts for the complete axis only.
    """
    if not isinstance(mode, CrossingMode):
        raise InputError(f"unknown crossing mode {mode!r}")
    if a.y == 0 or b.y == 0:
        raise InternalError(
            f"axis_crossing endpoints must be off the axis, got {a} -> {b}"
        )
    if (a.y > 0) == (b.y > 0):
        return 0
    if mode is CrossingMode.COMPLETE_AXIS:
        return 1
    # x-intercept is cross(a, b) / (b.y - a.y); the denominator has the
    # sign of b.y because the y-signs differ, so only the numerator's sign
    # needs computing.
    cross = a.x * b.y - a.y * b.x
    if b.y > 0:
        return 1 if cross > 0 else 0
    return 1 if cross < 0 else 0
