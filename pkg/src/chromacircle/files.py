"""JSON file formats: disk instances, precise point sets, solutions.

Numbers are printed with 12 significant digits and documents are rendered
with a fixed layout, so equal content always produces byte-identical
files (serialization is idempotent: serialize(parse(text)) == text for
files written by this module).

Disk identity in solution files is canonical: realizations are listed
with the disks sorted by (x, y, color), and each entry's ``disk`` field is
the index in that canonical order.  This keeps solver output byte-stable
under permutations of the input file.
"""

from __future__ import annotations

import json
import math

from .geometry import Circle, ColoredDisk, ColoredPoint, Point
from .mcsc import MissingColor, PrecisePointSet
from .smcsc import Instance

__all__ = [
    "FileFormatError",
    "WrongFileKind",
    "InvalidInstance",
    "fmt_num",
    "dumps",
    "canonical_instance",
    "canonical_points",
    "parse_instance",
    "serialize_instance",
    "parse_points",
    "serialize_points",
    "serialize_solution",
]


class FileFormatError(ValueError):
    """Structurally malformed input: wrong JSON shape or value types."""


class WrongFileKind(FileFormatError):
    """A points file where a disk instance was required, or vice versa."""


class InvalidInstance(ValueError):
    """Well-formed file whose content breaks an invariant (unsupported
    diameter, out-of-range color, non-finite coordinate)."""


def fmt_num(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, int):
        return str(v)
    return format(float(v), ".12g")


def _scalar(v) -> str:
    if v is None:
        return "null"
    if isinstance(v, str):
        return json.dumps(v)
    return fmt_num(v)


def _is_scalar(v) -> bool:
    return v is None or isinstance(v, (bool, int, float, str))


def _render(v, indent: int) -> str:
    pad = " " * indent
    inner = " " * (indent + 2)
    if _is_scalar(v):
        return _scalar(v)
    if isinstance(v, dict):
        if not v:
            return "{}"
        if all(_is_scalar(x) for x in v.values()):
            return "{" + ", ".join(f"{json.dumps(k)}: {_scalar(x)}" for k, x in v.items()) + "}"
        parts = [f"{inner}{json.dumps(k)}: {_render(x, indent + 2)}" for k, x in v.items()]
        return "{\n" + ",\n".join(parts) + "\n" + pad + "}"
    if isinstance(v, (list, tuple)):
        if not v:
            return "[]"
        if all(_is_scalar(x) for x in v):
            return "[" + ", ".join(_scalar(x) for x in v) + "]"
        parts = [f"{inner}{_render(x, indent + 2)}" for x in v]
        return "[\n" + ",\n".join(parts) + "\n" + pad + "]"
    raise TypeError(f"cannot serialize {type(v)!r}")


def dumps(doc: dict) -> str:
    return _render(doc, 0) + "\n"


def _num(entry, key, where):
    v = entry.get(key)
    if isinstance(v, bool) or not isinstance(v, (int, float)):
        raise FileFormatError(f"{where}: field {key!r} must be a number")
    v = float(v)
    if not math.isfinite(v):
        raise InvalidInstance(f"{where}: field {key!r} must be finite")
    return v


def _color(entry, where):
    v = entry.get("color")
    if isinstance(v, bool) or not isinstance(v, int):
        raise FileFormatError(f"{where}: field 'color' must be an integer")
    if v < 0:
        raise InvalidInstance(f"{where}: color must be non-negative")
    return v


def _check_contiguous(colors, what):
    k = max(colors) + 1
    present = set(colors)
    for c in range(k):
        if c not in present:
            raise MissingColor(c)
    return k


def canonical_instance(inst: Instance) -> Instance:
    """The same multiset of disks, sorted by (x, y, color)."""
    disks = sorted(inst.disks, key=lambda d: (d.center[0], d.center[1], d.color))
    return Instance(disks, inst.k)


def canonical_points(points: list[ColoredPoint]) -> list[ColoredPoint]:
    return sorted(points, key=lambda p: (p.point[0], p.point[1], p.color))


def parse_instance(text: str) -> tuple[Instance, dict | None]:
    """Parse a disk instance file; returns (instance, annotations)."""
    doc = json.loads(text)
    if not isinstance(doc, dict):
        raise FileFormatError("top-level JSON object expected")
    if "disks" not in doc:
        if "points" in doc:
            raise WrongFileKind("points file given where a disk instance is required")
        raise FileFormatError("missing 'disks' array")
    diameter = doc.get("diameter", 1.0)
    if isinstance(diameter, bool) or not isinstance(diameter, (int, float)):
        raise FileFormatError("'diameter' must be a number")
    if float(diameter) != 1.0:
        raise InvalidInstance(f"only diameter 1.0 is supported, got {diameter}")
    raw = doc["disks"]
    if not isinstance(raw, list) or not all(isinstance(e, dict) for e in raw):
        raise FileFormatError("'disks' must be an array of objects")
    if not raw:
        raise InvalidInstance("instance has no disks")
    disks = []
    for idx, entry in enumerate(raw):
        where = f"disk {idx}"
        disks.append(
            ColoredDisk(
                Point(_num(entry, "x", where), _num(entry, "y", where)),
                _color(entry, where),
            )
        )
    k = _check_contiguous([d.color for d in disks], "disks")
    annotations = doc.get("annotations")
    if annotations is not None and not isinstance(annotations, dict):
        raise FileFormatError("'annotations' must be an object")
    return Instance(disks, k), annotations


def serialize_instance(inst: Instance, annotations: dict | None = None) -> str:
    doc: dict = {
        "diameter": 1.0,
        "disks": [
            {"x": d.center[0], "y": d.center[1], "color": d.color} for d in inst.disks
        ],
    }
    if annotations is not None:
        doc["annotations"] = annotations
    return dumps(doc)


def parse_points(text: str) -> list[ColoredPoint]:
    """Parse a precise points file into a list of colored points."""
    doc = json.loads(text)
    if not isinstance(doc, dict):
        raise FileFormatError("top-level JSON object expected")
    if "points" not in doc:
        if "disks" in doc:
            raise WrongFileKind("disk instance given where a points file is required")
        raise FileFormatError("missing 'points' array")
    raw = doc["points"]
    if not isinstance(raw, list) or not all(isinstance(e, dict) for e in raw):
        raise FileFormatError("'points' must be an array of objects")
    if not raw:
        raise InvalidInstance("file has no points")
    points = []
    for idx, entry in enumerate(raw):
        where = f"point {idx}"
        disk = entry.get("disk")
        if disk is not None and (isinstance(disk, bool) or not isinstance(disk, int)):
            raise FileFormatError(f"{where}: field 'disk' must be an integer")
        points.append(
            ColoredPoint(
                Point(_num(entry, "x", where), _num(entry, "y", where)),
                _color(entry, where),
                disk,
            )
        )
    _check_contiguous([p.color for p in points], "points")
    return points


def serialize_points(points: list[ColoredPoint]) -> str:
    entries = []
    for p in points:
        entry = {"x": p.point[0], "y": p.point[1], "color": p.color}
        if p.disk_index is not None:
            entry["disk"] = p.disk_index
        entries.append(entry)
    return dumps({"points": entries})


def serialize_solution(
    command: str,
    circle: Circle,
    realization: list[dict],
    certificate: dict | None = None,
) -> str:
    doc: dict = {
        "command": command,
        "radius": circle.radius,
        "center": [circle.center[0], circle.center[1]],
        "realization": realization,
    }
    if certificate is not None:
        doc["certificate"] = certificate
    return dumps(doc)
