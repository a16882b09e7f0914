"""Figure tuples, their on-disk document format and validation.

A figure is described purely combinatorially: named vertices, edges between
them, one length per edge and a list of inter-edge angles in radians. No
coordinates are stored; the lists are taken as given and two figures are
compared position by position.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Sequence

__all__ = [
    "Figure",
    "FigurePair",
    "FigureFormatError",
    "FigureSyntaxError",
    "FigureSchemaError",
    "FigureValidationError",
    "CorrespondenceError",
    "parse_figure",
    "dumps_figure",
    "load_figure",
    "dump_figure",
    "figure_violations",
    "validate_figure",
    "scale_figure",
    "FIGURE_SUFFIX",
]

FIGURE_SUFFIX = ".figure.json"
TWO_PI = 2.0 * math.pi

_FIELDS = ("name", "vertices", "edges", "edge_lengths", "angles_rad")


class FigureFormatError(ValueError):
    """A figure document could not be turned into a :class:`Figure`."""


class FigureSyntaxError(FigureFormatError):
    """The document is not well-formed JSON."""


class FigureSchemaError(FigureFormatError):
    """The document is JSON but does not have the figure layout."""


class FigureValidationError(ValueError):
    def __init__(self, name: str, violations: Sequence[str]):
        self.name = name
        self.violations = list(violations)
        super().__init__(f"figure {name!r} is invalid: " + "; ".join(self.violations))


class CorrespondenceError(ValueError):
    """Two figures cannot be put in positional correspondence."""


@dataclass(frozen=True)
class Figure:
    """An immutable figure ``(V, E, L, Theta)``.

    ``edge_lengths[h]`` is the length of ``edges[h]``. ``angles`` is an
    independent list; its size need not match the number of edges.
    """

    name: str
    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str], ...]
    edge_lengths: tuple[float, ...]
    angles: tuple[float, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", tuple(str(v) for v in self.vertices))
        object.__setattr__(
            self, "edges", tuple((str(a), str(b)) for a, b in self.edges)
        )
        object.__setattr__(
            self, "edge_lengths", tuple(float(x) for x in self.edge_lengths)
        )
        object.__setattr__(self, "angles", tuple(float(x) for x in self.angles))

    @property
    def n(self) -> int:
        """Number of edges."""
        return len(self.edges)

    @property
    def z(self) -> int:
        """Number of angles."""
        return len(self.angles)


@dataclass(frozen=True)
class FigurePair:
    """Two figures whose angle and edge lists correspond index by index."""

    first: Figure
    second: Figure

    def __post_init__(self) -> None:
        a, b = self.first, self.second
        problems = []
        if a.n != b.n:
            problems.append(f"edge counts differ ({a.n} vs {b.n})")
        if a.z != b.z:
            problems.append(f"angle counts differ ({a.z} vs {b.z})")
        if problems:
            raise CorrespondenceError(
                f"{a.name!r} and {b.name!r} do not correspond: " + ", ".join(problems)
            )

    def swapped(self) -> "FigurePair":
        return FigurePair(self.second, self.first)


def _require_list(doc: dict, key: str) -> list:
    value = doc[key]
    if not isinstance(value, list):
        raise FigureSchemaError(f"field {key!r} must be an array")
    return value


def _number(value: Any, where: str) -> float:
    # bool is an int subclass; reject it explicitly
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise FigureSchemaError(f"{where} must be a number, got {value!r}")
    return float(value)


def parse_figure(text: str) -> Figure:
    """Parse a figure document.

    Raises :class:`FigureSyntaxError` for malformed JSON and
    :class:`FigureSchemaError` for missing fields or wrong arities. The result
    is not validated; see :func:`validate_figure`.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FigureSyntaxError(f"malformed figure document: {exc}") from exc
    if not isinstance(doc, dict):
        raise FigureSchemaError("figure document must be a single object")
    missing = [k for k in _FIELDS if k not in doc]
    if missing:
        raise FigureSchemaError("missing field(s): " + ", ".join(missing))
    unknown = sorted(set(doc) - set(_FIELDS))
    if unknown:
        raise FigureSchemaError("unknown field(s): " + ", ".join(unknown))

    name = doc["name"]
    if not isinstance(name, str):
        raise FigureSchemaError("field 'name' must be a string")
    vertices = _require_list(doc, "vertices")
    for v in vertices:
        if not isinstance(v, str):
            raise FigureSchemaError(f"vertex identifiers must be strings, got {v!r}")
    edges = []
    for i, e in enumerate(_require_list(doc, "edges")):
        if not (isinstance(e, list) and len(e) == 2 and all(isinstance(x, str) for x in e)):
            raise FigureSchemaError(f"edge {i} must be a 2-element array of strings")
        edges.append((e[0], e[1]))
    lengths = [
        _number(x, f"edge_lengths[{i}]")
        for i, x in enumerate(_require_list(doc, "edge_lengths"))
    ]
    if len(lengths) != len(edges):
        raise FigureSchemaError(
            f"edge_lengths has {len(lengths)} entries for {len(edges)} edges"
        )
    angles = [
        _number(x, f"angles_rad[{i}]")
        for i, x in enumerate(_require_list(doc, "angles_rad"))
    ]
    return Figure(name, tuple(vertices), tuple(edges), tuple(lengths), tuple(angles))


def dumps_figure(f: Figure) -> str:
    doc = {
        "name": f.name,
        "vertices": list(f.vertices),
        "edges": [list(e) for e in f.edges],
        "edge_lengths": list(f.edge_lengths),
        "angles_rad": list(f.angles),
    }
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def load_figure(path: str | Path) -> Figure:
    return parse_figure(Path(path).read_text(encoding="utf-8"))


def dump_figure(f: Figure, path: str | Path) -> None:
    Path(path).write_text(dumps_figure(f), encoding="utf-8")


def figure_violations(f: Figure) -> list[str]:
    """Return every invariant violation of ``f`` (empty when valid)."""
    problems: list[str] = []
    seen_vertices: set[str] = set()
    for v in f.vertices:
        if v in seen_vertices:
            problems.append(f"duplicate vertex {v!r}")
        seen_vertices.add(v)

    if f.n == 0:
        problems.append("figure has no edges")
    seen_edges: set[frozenset[str]] = set()
    for h, (a, b) in enumerate(f.edges):
        for end in (a, b):
            if end not in seen_vertices:
                problems.append(f"edge {h} has undeclared endpoint {end!r}")
        if a == b:
            problems.append(f"edge {h} is a self-loop on {a!r}")
            continue
        key = frozenset((a, b))
        if key in seen_edges:
            problems.append(f"duplicate edge {a!r}-{b!r} at index {h}")
        seen_edges.add(key)

    if len(f.edge_lengths) != f.n:
        problems.append(
            f"{len(f.edge_lengths)} edge lengths for {f.n} edges"
        )
    for h, length in enumerate(f.edge_lengths):
        if not math.isfinite(length):
            problems.append(f"non-finite length at index {h}")
        elif length <= 0.0:
            problems.append(f"nonpositive length at index {h}")

    for u, theta in enumerate(f.angles):
        if not math.isfinite(theta) or not 0.0 < theta < TWO_PI:
            problems.append(f"angle out of range at index {u}: {theta!r}")
    return problems


def validate_figure(f: Figure) -> Figure:
    """Return ``f`` unchanged, or raise :class:`FigureValidationError`
    listing all violations."""
    problems = figure_violations(f)
    if problems:
        raise FigureValidationError(f.name, problems)
    return f


def scale_figure(f: Figure, k: float, name: str | None = None) -> Figure:
    """Multiply every edge length by ``k``; topology and angles are kept."""
    k = float(k)
    if not math.isfinite(k) or k <= 0.0:
        raise ValueError(f"scale factor must be finite and positive, got {k!r}")
    return Figure(
        f.name if name is None else name,
        f.vertices,
        f.edges,
        tuple(k * x for x in f.edge_lengths),
        f.angles,
    )
