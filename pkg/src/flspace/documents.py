"""JSON space documents.

Schema:

    {
      "lattice": {"n": <int>},
      "points":  ["x", "y", ...],
      "lines":   [{"name": "d1", "values": ["1", "a1", "0", ...]}, ...],
      "meta":    { ... }          # optional, free form, ignored on parse
    }

Values use the token grammar of the lattice ("0", "1", "a<i>").  Unknown
fields are rejected; errors carry the document location.  Serialization
and parsing round-trip exactly.
"""

from __future__ import annotations

import json
from typing import Any

from .errors import DocumentError, TokenError
from .lattice import ChainLattice
from .space import FuzzyLine, FuzzyLinearSpace

_TOP_FIELDS = {"lattice", "points", "lines", "meta"}
_LINE_FIELDS = {"name", "values"}


def _expect(condition: bool, message: str) -> None:
    if not condition:
        raise DocumentError(message)


def parse_space(doc: str | bytes | dict) -> FuzzyLinearSpace:
    """Parse a space document; structural checks only, axioms are separate."""
    if isinstance(doc, (str, bytes)):
        try:
            data = json.loads(doc)
        except json.JSONDecodeError as exc:
            raise DocumentError(f"malformed JSON: {exc}") from None
    else:
        data = doc
    _expect(isinstance(data, dict), "document root must be an object")
    unknown = set(data) - _TOP_FIELDS
    _expect(not unknown, f"unknown top-level fields {sorted(unknown)}")
    for field in ("lattice", "points", "lines"):
        _expect(field in data, f"missing field {field!r}")

    lat_doc = data["lattice"]
    _expect(isinstance(lat_doc, dict), "lattice: must be an object")
    _expect(
        set(lat_doc) == {"n"}, f"lattice: expected exactly {{'n'}}, got {sorted(lat_doc)}"
    )
    _expect(
        isinstance(lat_doc["n"], int) and not isinstance(lat_doc["n"], bool),
        "lattice.n: must be an integer",
    )
    _expect(lat_doc["n"] >= 0, f"lattice.n: must be >= 0, got {lat_doc['n']}")
    lattice = ChainLattice(lat_doc["n"])

    points = data["points"]
    _expect(isinstance(points, list), "points: must be an array")
    _expect(all(isinstance(p, str) for p in points), "points: entries must be strings")
    _expect(len(set(points)) == len(points), "points: names must be unique")

    lines_doc = data["lines"]
    _expect(isinstance(lines_doc, list), "lines: must be an array")
    lines = []
    for idx, entry in enumerate(lines_doc):
        where = f"lines[{idx}]"
        _expect(isinstance(entry, dict), f"{where}: must be an object")
        unknown = set(entry) - _LINE_FIELDS
        _expect(not unknown, f"{where}: unknown fields {sorted(unknown)}")
        _expect("name" in entry and "values" in entry, f"{where}: needs name and values")
        _expect(isinstance(entry["name"], str), f"{where}.name: must be a string")
        values_doc = entry["values"]
        _expect(isinstance(values_doc, list), f"{where}.values: must be an array")
        _expect(
            len(values_doc) == len(points),
            f"{where}.values: expected {len(points)} values, got {len(values_doc)}",
        )
        ranks = []
        for col, token in enumerate(values_doc):
            _expect(
                isinstance(token, str), f"{where}.values[{col}]: must be a token string"
            )
            try:
                ranks.append(lattice.parse(token).rank)
            except TokenError as exc:
                raise DocumentError(f"{where}.values[{col}]: {exc}") from None
        lines.append(FuzzyLine(entry["name"], tuple(ranks)))
    names = [d.name for d in lines]
    _expect(len(set(names)) == len(names), "lines: names must be unique")
    return FuzzyLinearSpace(tuple(points), lattice, tuple(lines))


def space_to_dict(space: FuzzyLinearSpace, meta: dict[str, Any] | None = None) -> dict:
    doc: dict[str, Any] = {
        "lattice": {"n": space.lattice.n},
        "points": list(space.point_names),
        "lines": [
            {
                "name": d.name,
                "values": [space.lattice.token(r) for r in d.values],
            }
            for d in space.lines
        ],
    }
    if meta is not None:
        doc["meta"] = meta
    return doc


def serialize_space(space: FuzzyLinearSpace, meta: dict[str, Any] | None = None) -> str:
    return json.dumps(space_to_dict(space, meta), indent=2) + "\n"


def load_space(path: str) -> FuzzyLinearSpace:
    try:
        with open(path, "rb") as handle:
            raw = handle.read()
    except OSError as exc:
        raise DocumentError(f"cannot read {path}: {exc}") from None
    return parse_space(raw)
