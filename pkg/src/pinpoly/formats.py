"""Parsing and serialization of polygons, point lists, and query results.

Two polygon encodings are supported: a hand-editable plain-text format (one
``x y`` vertex per line) and the single-ring ``POLYGON ((...))`` subset of
WKT. Both store the ring implicitly closed; an explicit final vertex equal
to the first is accepted and dropped. Numbers round-trip exactly: integers
stay integers and floats are rendered with their shortest exact decimal
form.

Parse failures raise :class:`ParseError` carrying a 1-based line number
(plain text) or a character offset (WKT); they never crash the process.
"""

from __future__ import annotations

import enum
import json
import math
from dataclasses import dataclass

from .errors import InputError
from .evenodd import Classification, TraceStep
from .geometry import Point, Polygon

__all__ = [
    "ParseError",
    "UnsupportedFeatureError",
    "PolygonFormat",
    "PolygonDocument",
    "QueryResultRecord",
    "parse_polygon_plaintext",
    "parse_polygon_wkt",
    "parse_point_list",
    "serialize_polygon_plaintext",
    "serialize_polygon_wkt",
    "serialize_results",
]


class ParseError(InputError):
    """Malformed input, with a location when one is known."""

    def __init__(self, message, *, source_name=None, line=None, offset=None):
        self.message = message
        self.source_name = source_name
        self.line = line
        self.offset = offset
        super().__init__(str(self))

    def __str__(self):
        where = self.source_name or "<input>"
        if self.line is not None:
            return f"{where}:{self.line}: {self.message}"
        if self.offset is not None:
            return f"{where}: offset {self.offset}: {self.message}"
        return f"{where}: {self.message}"


class UnsupportedFeatureError(ParseError):
    """Syntactically valid input using a feature this model rejects."""


class PolygonFormat(enum.Enum):
    PLAIN_TEXT = "plain"
    WKT_SUBSET = "wkt"


@dataclass(frozen=True, slots=True)
class PolygonDocument:
    """A parsed polygon plus provenance.

    ``dropped_closing_vertex`` flags that the input spelled out the closing
    vertex explicitly and it was removed (always true for well-formed WKT,
    a warning-worthy oddity for plain text).
    """

    polygon: Polygon
    source_name: str
    format: PolygonFormat
    dropped_closing_vertex: bool = False


@dataclass(frozen=True, slots=True)
class QueryResultRecord:
    """One classified query, ready for JSONL output."""

    query: Point
    classification: Classification
    crossing_count: int
    trace: tuple[TraceStep, ...] | None = None


def _decode(text, source_name):
    if isinstance(text, bytes):
        try:
            return text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(
                f"invalid UTF-8: {exc.reason}",
                source_name=source_name,
                offset=exc.start,
            ) from None
    return text


def _parse_number(token):
    """int for integral tokens, float otherwise; rejects non-finite values."""
    try:
        return int(token)
    except ValueError:
        pass
    try:
        value = float(token)
    except ValueError:
        raise ValueError(f"malformed number {token!r}") from None
    if not math.isfinite(value):
        raise ValueError(f"non-finite number {token!r}")
    return value


def _parse_vertex_lines(text, source_name):
    verts = []
    for lineno, raw in enumerate(_decode(text, source_name).splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise ParseError(
                f"expected two numbers per line, got {len(fields)} fields",
                source_name=source_name,
                line=lineno,
            )
        try:
            x = _parse_number(fields[0])
            y = _parse_number(fields[1])
        except ValueError as exc:
            raise ParseError(str(exc), source_name=source_name, line=lineno) from None
        verts.append(Point(x, y))
    return verts


def parse_polygon_plaintext(text, source_name="<plaintext>") -> PolygonDocument:
    """Parse the plain-text vertex format.

    One vertex per line as two whitespace-separated numbers (decimal or
    scientific notation). Blank lines and lines starting with '#' are
    skipped. A final vertex repeating the first is dropped and flagged.
    """
    verts = _parse_vertex_lines(text, source_name)
    if not verts:
        end_line = max(1, len(_decode(text, source_name).splitlines()))
        raise ParseError(
            "polygon has no vertices", source_name=source_name, line=end_line
        )
    dropped = False
    if len(verts) > 1 and verts[-1] == verts[0]:
        verts.pop()
        dropped = True
    return PolygonDocument(
        Polygon(tuple(verts)), source_name, PolygonFormat.PLAIN_TEXT, dropped
    )


def parse_point_list(text, source_name="<points>") -> list[Point]:
    """Parse a point list in the same line format; may be empty."""
    return _parse_vertex_lines(text, source_name)


class _WktScanner:
    def __init__(self, text, source_name):
        self.text = text
        self.pos = 0
        self.source_name = source_name

    def error(self, message, at=None):
        raise ParseError(
            message,
            source_name=self.source_name,
            offset=self.pos if at is None else at,
        )

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def expect(self, char):
        if self.pos >= len(self.text) or self.text[self.pos] != char:
            found = self.text[self.pos] if self.pos < len(self.text) else "end of input"
            self.error(f"expected {char!r}, found {found!r}")
        self.pos += 1

    def number(self):
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] in "+-.0123456789eE":
            self.pos += 1
        if self.pos == start:
            self.error("expected a number")
        try:
            return _parse_number(self.text[start : self.pos])
        except ValueError as exc:
            self.error(str(exc), at=start)


def parse_polygon_wkt(text, source_name="<wkt>") -> PolygonDocument:
    """Parse a single-ring WKT ``POLYGON ((x y, x y, ...))``.

    The conventional repeated closing vertex is dropped. Additional rings
    (holes) raise UnsupportedFeatureError: a self-intersecting outer ring
    already expresses holes under the even-odd rule.
    """
    sc = _WktScanner(_decode(text, source_name), source_name)
    sc.skip_ws()
    keyword = sc.text[sc.pos : sc.pos + 7]
    if keyword.upper() != "POLYGON":
        sc.error(f"expected 'POLYGON', found {keyword!r}")
    sc.pos += 7
    sc.skip_ws()
    if sc.text[sc.pos : sc.pos + 5].upper() == "EMPTY":
        sc.error("empty polygons are not supported (no vertices)")
    sc.expect("(")
    sc.skip_ws()
    sc.expect("(")
    verts = []
    while True:
        sc.skip_ws()
        x = sc.number()
        sc.skip_ws()
        y = sc.number()
        verts.append(Point(x, y))
        sc.skip_ws()
        if sc.pos < len(sc.text) and sc.text[sc.pos] == ",":
            sc.pos += 1
            continue
        sc.expect(")")
        break
    sc.skip_ws()
    if sc.pos < len(sc.text) and sc.text[sc.pos] == ",":
        raise UnsupportedFeatureError(
            "polygons with interior rings (holes) are not supported",
            source_name=source_name,
            offset=sc.pos,
        )
    sc.expect(")")
    sc.skip_ws()
    if sc.pos != len(sc.text):
        sc.error("unexpected trailing characters")
    dropped = False
    if len(verts) > 1 and verts[-1] == verts[0]:
        verts.pop()
        dropped = True
    return PolygonDocument(
        Polygon(tuple(verts)), source_name, PolygonFormat.WKT_SUBSET, dropped
    )


def _fmt(value) -> str:
    # repr of a float is its shortest decimal that parses back exactly;
    # repr of an int has no decimal point, so integer inputs stay integers.
    return repr(value)


def serialize_polygon_plaintext(polygon: Polygon) -> str:
    return "".join(f"{_fmt(v.x)} {_fmt(v.y)}\n" for v in polygon.vertices)


def serialize_polygon_wkt(polygon: Polygon) -> str:
    ring = list(polygon.vertices) + [polygon.vertices[0]]
    coords = ", ".join(f"{_fmt(v.x)} {_fmt(v.y)}" for v in ring)
    return f"POLYGON (({coords}))"


def _trace_json(step: TraceStep):
    return {
        "start": step.start_index,
        "end": step.end_index,
        "skipped": list(step.skipped_indices),
        "mode": step.mode.value if step.mode is not None else "skipped",
        "crossed": step.crossed,
    }


def serialize_results(records) -> str:
    """Render records as JSON lines with a stable field order."""
    lines = []
    for rec in records:
        obj = {
            "x": rec.query.x,
            "y": rec.query.y,
            "result": rec.classification.value,
            "crossings": rec.crossing_count,
        }
        if rec.trace is not None:
            obj["trace"] = [_trace_json(s) for s in rec.trace]
        lines.append(json.dumps(obj, separators=(",", ":")))
    return "".join(line + "\n" for line in lines)
