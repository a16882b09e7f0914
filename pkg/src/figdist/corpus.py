"""Figure collections: isomorphism classes, distance matrices, nearest
neighbours and CSV output."""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from .distance import DEFAULT_BETA, DistanceOutcome, DistanceReport, check_beta, distance
from .figure import FIGURE_SUFFIX, Figure, figure_violations, FigureValidationError, load_figure
from .graph_iso import Graph, adjacency_graph, is_isomorphic
from .ipfp import DEFAULT_TOLERANCE

__all__ = [
    "INCOMPARABLE",
    "FigureCorpus",
    "CorpusError",
    "load_figures",
    "build_corpus",
    "distance_matrix",
    "nearest",
    "format_number",
    "matrix_csv",
    "scatter_rows",
    "emit_scatter",
    "trace_csv",
]

INCOMPARABLE = "incomparable"


class CorpusError(ValueError):
    pass


def format_number(x: float, precision: str | int = 4) -> str:
    """Render ``x`` at 4 decimals with trailing zeros dropped, or with full
    round-trip precision when ``precision == "full"``."""
    if str(precision) == "full":
        return repr(float(x))
    text = f"{float(x):.{int(precision)}f}"
    if "." in text:
        text = text.rstrip("0").rstrip(".")
    if text in ("-0", ""):
        text = "0"
    return text


@dataclass(frozen=True)
class FigureCorpus:
    """Named figures, their isomorphism classes and within-class distances.

    ``matrix`` is keyed by name pairs in lexicographic order; use
    :meth:`entry` for order-independent lookup. Cross-class pairs hold
    ``None`` and render as ``incomparable``.
    """

    figures: Mapping[str, Figure]
    iso_classes: tuple[tuple[str, ...], ...]
    matrix: Mapping[tuple[str, str], DistanceOutcome | None]
    beta: float = DEFAULT_BETA
    tolerance: float = DEFAULT_TOLERANCE

    @property
    def names(self) -> list[str]:
        return sorted(self.figures)

    def entry(self, a: str, b: str) -> DistanceOutcome | None:
        key = (a, b) if a <= b else (b, a)
        return self.matrix[key]

    def d(self, a: str, b: str) -> float | None:
        e = self.entry(a, b)
        return e.d if isinstance(e, DistanceReport) else None

    def comparable_pairs(self) -> list[tuple[str, str]]:
        return [k for k, v in sorted(self.matrix.items()) if k[0] != k[1] and isinstance(v, DistanceReport)]


def load_figures(corpus_dir: str | Path) -> list[Figure]:
    """Load every ``*.figure.json`` in ``corpus_dir``, sorted by figure name.

    Any invalid figure aborts loading with its name and violation list.
    """
    root = Path(corpus_dir)
    if not root.is_dir():
        raise CorpusError(f"{root} is not a directory")
    paths = sorted(root.glob("*" + FIGURE_SUFFIX))
    if not paths:
        raise CorpusError(f"no {FIGURE_SUFFIX} files in {root}")
    figures = []
    for p in paths:
        f = load_figure(p)
        problems = figure_violations(f)
        if problems:
            raise FigureValidationError(f.name, problems)
        figures.append(f)
    return sorted(figures, key=lambda f: f.name)


def _iso_classes(figures: Sequence[Figure]) -> list[list[str]]:
    classes: list[tuple[Graph, list[str]]] = []
    for f in figures:
        g = adjacency_graph(f)
        for rep, members in classes:
            if is_isomorphic(rep, g):
                members.append(f.name)
                break
        else:
            classes.append((g, [f.name]))
    return sorted((sorted(m) for _, m in classes), key=lambda m: m[0])


def build_corpus(
    figures: Iterable[Figure],
    beta: float = DEFAULT_BETA,
    tolerance: float = DEFAULT_TOLERANCE,
) -> FigureCorpus:
    figs = sorted(figures, key=lambda f: f.name)
    if not figs:
        raise CorpusError("corpus is empty")
    beta = check_beta(beta)
    by_name: dict[str, Figure] = {}
    for f in figs:
        if f.name in by_name:
            raise CorpusError(f"duplicate figure name {f.name!r}")
        problems = figure_violations(f)
        if problems:
            raise FigureValidationError(f.name, problems)
        by_name[f.name] = f

    classes = _iso_classes(figs)
    class_of = {name: i for i, members in enumerate(classes) for name in members}
    matrix: dict[tuple[str, str], DistanceOutcome | None] = {}
    names = sorted(by_name)
    for i, a in enumerate(names):
        for b in names[i:]:
            if class_of[a] != class_of[b]:
                matrix[(a, b)] = None
            else:
                matrix[(a, b)] = distance(by_name[a], by_name[b], beta, tolerance)
    return FigureCorpus(by_name, tuple(tuple(c) for c in classes), matrix, beta, tolerance)


def distance_matrix(
    corpus_dir: str | Path,
    beta: float = DEFAULT_BETA,
    tolerance: float = DEFAULT_TOLERANCE,
) -> FigureCorpus:
    return build_corpus(load_figures(corpus_dir), beta, tolerance)


def nearest(
    query: Figure,
    candidates: Iterable[Figure],
    beta: float = DEFAULT_BETA,
    k: int = 5,
    tolerance: float = DEFAULT_TOLERANCE,
) -> list[tuple[str, float]]:
    """The ``k`` comparable candidates closest to ``query``.

    Ascending by distance, ties broken by name. Candidates whose graphs are
    not isomorphic to the query's are skipped; the list may be empty.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    beta = check_beta(beta)
    ranked = []
    for f in candidates:
        outcome = distance(query, f, beta, tolerance)
        if isinstance(outcome, DistanceReport):
            ranked.append((outcome.d, f.name))
    ranked.sort()
    return [(name, d) for d, name in ranked[:k]]


def matrix_csv(corpus: FigureCorpus, precision: str | int = 4) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    names = corpus.names
    w.writerow([""] + names)
    for a in names:
        row = [a]
        for b in names:
            e = corpus.entry(a, b)
            row.append(format_number(e.d, precision) if isinstance(e, DistanceReport) else INCOMPARABLE)
        w.writerow(row)
    return buf.getvalue()


def scatter_rows(report: DistanceReport, first: Figure, second: Figure):
    """Plot data behind the angle and edge scatter charts.

    Returns ``(angle_rows, edge_rows)``; each angle row is
    ``(u, theta_i, theta_j, line_x, line_y)`` with ``(line_x, line_y)`` the
    reference point on ``y = x``, each edge row is
    ``(h, l_i, l_j, l_i', l_j', m)``. Indices start at 1.
    """
    angle_rows = [
        (u, ti, tj, ti, ti)
        for u, (ti, tj) in enumerate(zip(first.angles, second.angles), start=1)
    ]
    line = report.edge_result.line
    edge_rows = [
        (h, li, lj, float(fi), float(fj), line.slope)
        for h, (li, lj, (fi, fj)) in enumerate(
            zip(first.edge_lengths, second.edge_lengths, line.fitted), start=1
        )
    ]
    return angle_rows, edge_rows


def _write_csv(path: Path, header: Sequence[str], rows, precision) -> None:
    with path.open("w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        for r in rows:
            w.writerow([str(r[0])] + [format_number(x, precision) for x in r[1:]])


def emit_scatter(
    report: DistanceReport,
    first: Figure,
    second: Figure,
    out_prefix: str | Path,
    precision: str | int = 4,
) -> tuple[Path, Path]:
    """Write ``<prefix>_angles.csv`` and ``<prefix>_edges.csv``."""
    if not isinstance(report, DistanceReport):
        raise TypeError("scatter data needs a defined distance report")
    angle_rows, edge_rows = scatter_rows(report, first, second)
    prefix = str(out_prefix)
    angles_path = Path(prefix + "_angles.csv")
    edges_path = Path(prefix + "_edges.csv")
    _write_csv(angles_path, ["u", "theta_i", "theta_j", "line_x", "line_y"], angle_rows, precision)
    _write_csv(edges_path, ["h", "l_i", "l_j", "l_i_fitted", "l_j_fitted", "m"], edge_rows, precision)
    return angles_path, edges_path


def trace_csv(table, precision: str | int = 4) -> str:
    """One IPF table as CSV with columns ``h, left, right, total``."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["h", "left", "right", "total"])
    for h, (left, right) in enumerate(table, start=1):
        w.writerow([h, format_number(left, precision), format_number(right, precision),
                    format_number(left + right, precision)])
    w.writerow(["TOTAL", format_number(math.fsum(table[:, 0]), precision),
                format_number(math.fsum(table[:, 1]), precision),
                format_number(math.fsum(table.ravel()), precision)])
    return buf.getvalue()
