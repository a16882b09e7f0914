"""The figure distance: a convex combination of angular dissimilarity and
edge-length disproportionality, defined only for figures whose adjacency
graphs are isomorphic."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

from .angular import AngularResult, angular_dissimilarity
from .edge_prop import EdgeResult, edge_disproportionality
from .figure import Figure, FigurePair, validate_figure
from .graph_iso import adjacency_graph, is_isomorphic
from .ipfp import DEFAULT_TOLERANCE

__all__ = [
    "DEFAULT_BETA",
    "DistanceReport",
    "UndefinedDistance",
    "DistanceOutcome",
    "distance",
    "check_beta",
]

DEFAULT_BETA = 0.5


@dataclass(frozen=True)
class DistanceReport:
    first: str
    second: str
    alpha_result: AngularResult
    edge_result: EdgeResult
    beta: float
    d: float
    defined = True

    @property
    def alpha(self) -> float:
        return self.alpha_result.alpha

    @property
    def rho(self) -> float:
        return self.edge_result.rho

    @property
    def slope(self) -> float:
        return self.edge_result.line.slope


@dataclass(frozen=True)
class UndefinedDistance:
    """Outcome for a pair whose adjacency graphs are not isomorphic."""

    first: str
    second: str
    first_graph: str
    second_graph: str
    reason: str = "adjacency graphs not isomorphic"
    defined = False


DistanceOutcome = Union[DistanceReport, UndefinedDistance]


def check_beta(beta: float) -> float:
    beta = float(beta)
    if not (math.isfinite(beta) and 0.0 <= beta <= 1.0):
        raise ValueError(f"beta must lie in [0, 1], got {beta!r}")
    return beta


def distance(
    first: Figure | FigurePair,
    second: Figure | None = None,
    beta: float = DEFAULT_BETA,
    tolerance: float = DEFAULT_TOLERANCE,
    trace: bool = False,
) -> DistanceOutcome:
    """Distance between two figures.

    Accepts either two figures or a :class:`FigurePair`. Both figures are
    validated first. When their graphs are not isomorphic the result is an
    :class:`UndefinedDistance` rather than an exception; list-length
    mismatches between isomorphic figures raise ``CorrespondenceError``.
    """
    if isinstance(first, FigurePair):
        if second is not None:
            raise TypeError("pass either a FigurePair or two figures")
        a, b = first.first, first.second
    else:
        if second is None:
            raise TypeError("a second figure is required")
        a, b = first, second
    beta = check_beta(beta)
    validate_figure(a)
    validate_figure(b)

    ga, gb = adjacency_graph(a), adjacency_graph(b)
    if not is_isomorphic(ga, gb):
        return UndefinedDistance(a.name, b.name, ga.summary(), gb.summary())

    pair = FigurePair(a, b)
    ang = angular_dissimilarity(pair.first.angles, pair.second.angles)
    edge = edge_disproportionality(
        pair.first.edge_lengths, pair.second.edge_lengths, tolerance, trace=trace
    )
    d = beta * ang.alpha + (1.0 - beta) * edge.rho
    return DistanceReport(a.name, b.name, ang, edge, beta, d)
