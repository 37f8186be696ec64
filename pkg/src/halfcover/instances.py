"""Instance file schema: exact JSON round-tripping.

Every numeric is an integer or a "p/q" rational string, keeping the format
language-neutral and exact.  Kinds: "points" (point coverage), "star"
(boundary coverage), "polyline" (x-monotone coverage).  Optional fields:
"epsilon" (kernel commands), "subset" (kernel-check), "metadata" (planted
information from the generators; ignored by solvers).
"""

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Tuple

from .errors import InvalidInstance
from .geometry import Halfplane, Point

KINDS = ("points", "star", "polyline")


def parse_scalar(v):
    if isinstance(v, bool) or isinstance(v, float):
        raise InvalidInstance(f"numeric fields must be exact (int or 'p/q'), got {v!r}")
    if isinstance(v, int):
        return v
    if isinstance(v, str):
        try:
            f = Fraction(v)
        except (ValueError, ZeroDivisionError) as e:
            raise InvalidInstance(f"bad rational string {v!r}") from e
        return int(f) if f.denominator == 1 else f
    raise InvalidInstance(f"bad scalar {v!r}")


def format_scalar(v):
    f = Fraction(v)
    if f.denominator == 1:
        return int(f)
    return f"{f.numerator}/{f.denominator}"


def _parse_point(v) -> Point:
    if not isinstance(v, (list, tuple)) or len(v) != 2:
        raise InvalidInstance(f"point must be a pair, got {v!r}")
    return Point(parse_scalar(v[0]), parse_scalar(v[1]))


def _parse_halfplane(v) -> Halfplane:
    if not isinstance(v, dict) or set(v) != {"a", "b", "c"}:
        raise InvalidInstance(f"halfplane must be an a/b/c object, got {v!r}")
    try:
        return Halfplane(parse_scalar(v["a"]), parse_scalar(v["b"]), parse_scalar(v["c"]))
    except ValueError as e:
        raise InvalidInstance(str(e)) from e


@dataclass(frozen=True)
class Instance:
    kind: str
    points: Tuple[Point, ...] = ()
    halfplanes: Tuple[Halfplane, ...] = ()
    center: Optional[Point] = None
    vertices: Tuple[Point, ...] = ()
    epsilon: Optional[object] = None
    subset: Optional[Tuple[int, ...]] = None
    metadata: dict = field(default_factory=dict)


def parse_instance(doc) -> Instance:
    if not isinstance(doc, dict):
        raise InvalidInstance("instance document must be a JSON object")
    kind = doc.get("kind")
    if kind not in KINDS:
        raise InvalidInstance(f"kind must be one of {KINDS}, got {kind!r}")
    points = tuple(_parse_point(p) for p in doc.get("points", []))
    halfplanes = tuple(_parse_halfplane(h) for h in doc.get("halfplanes", []))
    vertices = tuple(_parse_point(p) for p in doc.get("vertices", []))
    center = _parse_point(doc["center"]) if "center" in doc else None
    epsilon = parse_scalar(doc["epsilon"]) if "epsilon" in doc else None
    subset = tuple(int(i) for i in doc["subset"]) if "subset" in doc else None
    metadata = doc.get("metadata", {})
    if kind == "points" and not points and "points" not in doc:
        raise InvalidInstance("points instance needs a 'points' field")
    if kind == "star":
        if center is None or not vertices:
            raise InvalidInstance("star instance needs 'center' and 'vertices'")
    if kind == "polyline" and not vertices:
        raise InvalidInstance("polyline instance needs 'vertices'")
    return Instance(kind, points, halfplanes, center, vertices, epsilon, subset, metadata)


def serialize_instance(inst: Instance) -> dict:
    doc = {"kind": inst.kind}
    if inst.kind == "points" or inst.points:
        doc["points"] = [[format_scalar(p.x), format_scalar(p.y)] for p in inst.points]
    if inst.halfplanes or inst.kind in KINDS:
        doc["halfplanes"] = [
            {"a": format_scalar(h.a), "b": format_scalar(h.b), "c": format_scalar(h.c)}
            for h in inst.halfplanes
        ]
    if inst.center is not None:
        doc["center"] = [format_scalar(inst.center.x), format_scalar(inst.center.y)]
    if inst.vertices:
        doc["vertices"] = [[format_scalar(p.x), format_scalar(p.y)] for p in inst.vertices]
    if inst.epsilon is not None:
        doc["epsilon"] = format_scalar(inst.epsilon)
    if inst.subset is not None:
        doc["subset"] = list(inst.subset)
    if inst.metadata:
        doc["metadata"] = inst.metadata
    return doc


def dumps_canonical(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def load_instance(path) -> Instance:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as e:
            raise InvalidInstance(f"malformed JSON in {path}: {e}") from e
    return parse_instance(doc)


def save_instance(inst: Instance, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_canonical(serialize_instance(inst)))
