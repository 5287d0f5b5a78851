"""Point-in-polygon queries for complex polygons.

Classifies points against arbitrary closed vertex rings, including
self-intersecting ones, under the even-odd rule. Queries exactly on a
vertex or edge are reported as a distinct BOUNDARY result. All predicates
use exact zero comparisons, so integer-valued inputs are classified
exactly; see :mod:`pinpoly.geometry` for the precision caveats on general
floats.
"""

from .errors import InputError, InternalError
from .evenodd import (
    Classification,
    TraceStep,
    Verdict,
    classify,
    classify_paper_mode,
    find_start_vertex,
    is_on_boundary,
    next_off_axis,
)
from .formats import (
    ParseError,
    PolygonDocument,
    PolygonFormat,
    QueryResultRecord,
    UnsupportedFeatureError,
    parse_point_list,
    parse_polygon_plaintext,
    parse_polygon_wkt,
    serialize_polygon_plaintext,
    serialize_polygon_wkt,
    serialize_results,
)
from .geometry import (
    AxisSign,
    CrossingMode,
    Point,
    Polygon,
    axis_crossing,
    axis_sign,
    orient2d,
    point_on_segment,
    translate_to_query_frame,
)
from .oracle import GeneratorConfig, generate_case, oracle_classify, ray_crossings

__version__ = "0.1.0"

__all__ = [
    "AxisSign",
    "Classification",
    "CrossingMode",
    "GeneratorConfig",
    "InputError",
    "InternalError",
    "ParseError",
    "Point",
    "Polygon",
    "PolygonDocument",
    "PolygonFormat",
    "QueryResultRecord",
    "TraceStep",
    "UnsupportedFeatureError",
    "Verdict",
    "axis_crossing",
    "axis_sign",
    "classify",
    "classify_paper_mode",
    "find_start_vertex",
    "generate_case",
    "is_on_boundary",
    "next_off_axis",
    "oracle_classify",
    "orient2d",
    "parse_point_list",
    "parse_polygon_plaintext",
    "parse_polygon_wkt",
    "point_on_segment",
    "ray_crossings",
    "serialize_polygon_plaintext",
    "serialize_polygon_wkt",
    "serialize_results",
    "translate_to_query_frame",
]
