"""Bundled reference figures.

Eight figures forming four isomorphic pairs, shipped as figure documents.
Edge lengths are stored at four decimals; angles are full-precision
multiples of pi. The pairs are:

* ``gamma1`` / ``gamma2``: hexagon and skewed hexagon (6-cycle)
* ``gamma3`` / ``gamma4``: parallelogram with a triangle on one side
* ``gamma5`` / ``gamma6``: six triangles around a hexagon
* ``gamma7`` / ``gamma8``: octagon with four quadrilateral blocks

Only the edge and angle lists come with published values; the vertex
labelling of each topology is a reconstruction consistent with the edge
and angle counts.
"""

from __future__ import annotations

from importlib import resources
from pathlib import Path

from .figure import FIGURE_SUFFIX, Figure, parse_figure

__all__ = ["REFERENCE_NAMES", "REFERENCE_PAIRS", "reference_dir", "load_reference"]

REFERENCE_PAIRS = (
    ("gamma1", "gamma2"),
    ("gamma3", "gamma4"),
    ("gamma5", "gamma6"),
    ("gamma7", "gamma8"),
)
REFERENCE_NAMES = tuple(name for pair in REFERENCE_PAIRS for name in pair)


def reference_dir() -> Path:
    """Directory holding the reference ``*.figure.json`` files."""
    return Path(str(resources.files("figdist") / "data" / "reference"))


def load_reference(name: str) -> Figure:
    if name not in REFERENCE_NAMES:
        raise KeyError(f"unknown reference figure {name!r}")
    return parse_figure((reference_dir() / (name + FIGURE_SUFFIX)).read_text(encoding="utf-8"))
