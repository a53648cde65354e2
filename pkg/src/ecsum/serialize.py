"""Text and JSON encodings of points and curves.

Points are ``{"x": "<s>", "y": "<s>"}`` or the string ``"O"``; curves are
``{"a": "<s>", "b": "<s>", "field": "Fp:10007"}``. Coordinates use the
canonical strings of :class:`~ecsum.fields.FieldValue`.
"""

from __future__ import annotations

from .curve import O, CurveParams, Point
from .fields import FieldDescriptor


def point_to_json(P: Point):
    if P.is_infinity:
        return "O"
    return {"x": str(P.x), "y": str(P.y)}


def point_from_json(obj, field: FieldDescriptor) -> Point:
    if obj == "O":
        return O
    if not isinstance(obj, dict) or set(obj) != {"x", "y"}:
        raise ValueError(f"bad point encoding {obj!r}")
    return Point(field(str(obj["x"])), field(str(obj["y"])))


def curve_to_json(E: CurveParams) -> dict:
    return {"a": str(E.a), "b": str(E.b), "field": str(E.field)}


def curve_from_json(obj) -> CurveParams:
    if not isinstance(obj, dict) or not {"a", "b", "field"} <= set(obj):
        raise ValueError(f"bad curve encoding {obj!r}")
    field = FieldDescriptor.parse(obj["field"])
    return CurveParams.build(field, str(obj["a"]), str(obj["b"]))


def parse_points(text: str, field: FieldDescriptor) -> list[Point]:
    """Parse ``"(x,y);(x,y);O"``."""
    points = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        if chunk == "O":
            points.append(O)
            continue
        if not (chunk.startswith("(") and chunk.endswith(")")):
            raise ValueError(f"bad point {chunk!r}; expected (x,y) or O")
        parts = chunk[1:-1].split(",")
        if len(parts) != 2:
            raise ValueError(f"bad point {chunk!r}; expected two coordinates")
        points.append(Point(field(parts[0]), field(parts[1])))
    return points


def format_points(points) -> str:
    return ";".join(str(P) for P in points)
