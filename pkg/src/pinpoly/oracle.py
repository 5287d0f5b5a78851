"""Independent ground-truth classifier and adversarial case generator.

The oracle answers the same inside/outside/boundary question as
:mod:`pinpoly.evenodd` but shares none of its crossing machinery (only the
exact boundary test is common). Robustness comes from picking a ray
direction that passes through no vertex and parallels no edge, after which
plain proper-crossing counting is unambiguous. Directions are integer
vectors tried in a fixed order, so results are reproducible and every sign
test stays exact on integer inputs.

The generator produces deterministic (polygon, query) cases with dialable
degeneracy: vertices forced onto the query's horizontal axis, duplicated
vertices, and queries snapped exactly onto the boundary. Coordinates are
always integers so differential verdicts are never noise.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .errors import InputError, InternalError
from .evenodd import Classification, is_on_boundary
from .geometry import Point, Polygon

__all__ = [
    "GeneratorConfig",
    "oracle_classify",
    "ray_crossings",
    "generate_case",
]

_EXACT_SPAN = 2**53


@dataclass(frozen=True, slots=True)
class GeneratorConfig:
    """Knobs for the adversarial case generator.

    Probabilities are per-vertex (or per-case for the boundary snap). The
    coordinate range must contain at least two integers so that a vertex
    can always be moved off the query's axis when it is not forced onto it.
    """

    vertex_count_range: tuple[int, int] = (1, 12)
    coordinate_range: tuple[int, int] = (-50, 50)
    p_on_axis: float = 0.3
    p_duplicate: float = 0.1
    p_on_boundary_query: float = 0.1
    seed: int = 42

    def __post_init__(self):
        lo, hi = self.vertex_count_range
        if not (isinstance(lo, int) and isinstance(hi, int) and 1 <= lo <= hi):
            raise InputError(f"bad vertex count range {self.vertex_count_range!r}")
        clo, chi = self.coordinate_range
        if not (isinstance(clo, int) and isinstance(chi, int) and clo < chi):
            raise InputError(f"bad coordinate range {self.coordinate_range!r}")
        if max(abs(clo), abs(chi)) > _EXACT_SPAN:
            raise InputError("coordinate range exceeds the exactly representable span")
        for name in ("p_on_axis", "p_duplicate", "p_on_boundary_query"):
            p = getattr(self, name)
            if not 0.0 <= p <= 1.0:
                raise InputError(f"{name} must be within [0, 1], got {p!r}")


def oracle_classify(poly: Polygon, q: Point) -> Classification:
    """Ground-truth even-odd classification via a generic-direction ray.

    The answer never depends on which valid direction gets picked; the
    built-in search just takes the first one that survives validation.
    """
    poly = poly if isinstance(poly, Polygon) else Polygon(tuple(poly))
    q = q if isinstance(q, Point) else Point(*q)
    if is_on_boundary(poly, q):
        return Classification.BOUNDARY
    direction = _generic_direction(poly, q)
    crossings = _count_crossings(poly, q, direction)
    return Classification.INSIDE if crossings % 2 else Classification.OUTSIDE


def ray_crossings(poly: Polygon, q: Point, direction: tuple[float, float]) -> int:
    """Count proper crossings of the ray from ``q`` along ``direction``.

    The direction must be generic for this polygon (through no vertex,
    parallel to no edge); anything else raises InputError. Exposed so tests
    can force several different directions and compare parities.
    """
    poly = poly if isinstance(poly, Polygon) else Polygon(tuple(poly))
    q = q if isinstance(q, Point) else Point(*q)
    if not _is_generic(poly, q, direction):
        raise InputError(f"direction {direction!r} is not generic for this polygon")
    return _count_crossings(poly, q, direction)


def _is_generic(poly, q, direction):
    dx, dy = direction
    if dx == 0 and dy == 0:
        return False
    for v in poly.vertices:
        if dx * (v.y - q.y) - dy * (v.x - q.x) == 0:
            return False
    prev = poly.vertices[-1]
    for v in poly.vertices:
        ex, ey = v.x - prev.x, v.y - prev.y
        if (ex != 0 or ey != 0) and dx * ey - dy * ex == 0:
            return False
        prev = v
    return True


def _generic_direction(poly, q):
    # Directions (k, 1) for k = 0, 1, 2, ... Each vertex and each edge can
    # rule out at most one k, so a polygon with n vertices admits a valid
    # direction among the first 2n + 1 candidates.
    limit = 2 * len(poly.vertices) + 1
    for k in range(limit):
        d = (k, 1)
        if _is_generic(poly, q, d):
            return d
    raise InternalError("no generic ray direction found; this cannot happen")


def _count_crossings(poly, q, direction):
    dx, dy = direction
    qx, qy = q.x, q.y
    count = 0
    prev = poly.vertices[-1]
    for v in poly.vertices:
        ax, ay = prev.x, prev.y
        bx, by = v.x, v.y
        prev = v
        if ax == bx and ay == by:
            continue
        side_a = dx * (ay - qy) - dy * (ax - qx)
        side_b = dx * (by - qy) - dy * (bx - qx)
        if side_a == 0 or side_b == 0:
            raise InternalError("generic direction still hit a vertex")
        if (side_a > 0) == (side_b > 0):
            continue
        # The segment crosses the ray's line once; it crosses the ray
        # itself iff the intersection parameter t is positive, and
        # t = ((a - q) x (b - a)) / (d x (b - a)) with both parts nonzero
        # here (t = 0 would put q on the segment, i.e. on the boundary).
        ex, ey = bx - ax, by - ay
        num = (ax - qx) * ey - (ay - qy) * ex
        den = dx * ey - dy * ex
        if num == 0:
            raise InternalError("ray origin on an edge line despite boundary check")
        if (num > 0) == (den > 0):
            count += 1
    return count


def _case_seed(seed: int, case_index: int) -> int:
    return ((seed & 0xFFFF_FFFF_FFFF_FFFF) << 64) | (
        case_index & 0xFFFF_FFFF_FFFF_FFFF
    )


def generate_case(cfg: GeneratorConfig, case_index: int) -> tuple[Polygon, Point]:
    """Produce the ``case_index``-th (polygon, query) pair for ``cfg``.

    Fully determined by (cfg.seed, case_index): the same pair comes back on
    every run and platform. All coordinates are integers.
    """
    rng = random.Random(_case_seed(cfg.seed, case_index))
    lo, hi = cfg.coordinate_range
    qx = rng.randint(lo, hi)
    qy = rng.randint(lo, hi)
    n = rng.randint(*cfg.vertex_count_range)

    verts: list[Point] = []
    for _ in range(n):
        if verts and rng.random() < cfg.p_duplicate:
            verts.append(verts[-1])
            continue
        x = rng.randint(lo, hi)
        if rng.random() < cfg.p_on_axis:
            y = qy
        else:
            y = rng.randint(lo, hi)
            while y == qy:
                y = rng.randint(lo, hi)
        verts.append(Point(x, y))

    if rng.random() < cfg.p_on_boundary_query:
        i = rng.randrange(n)
        a = verts[i]
        b = verts[(i + 1) % n]
        g = math.gcd(abs(b.x - a.x), abs(b.y - a.y))
        if g == 0:
            qx, qy = a.x, a.y
        else:
            # Integer lattice points of the closed segment, endpoints included.
            k = rng.randint(0, g)
            qx = a.x + k * (b.x - a.x) // g
            qy = a.y + k * (b.y - a.y) // g

    return Polygon(tuple(verts)), Point(qx, qy)
