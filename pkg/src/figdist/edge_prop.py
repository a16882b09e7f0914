"""Edge-length disproportionality.

Deviations are measured from each original pair to its IPF-fitted point,
which keeps the pair total ``l_i(h) + l_j(h)``. That point is on the fitted
line but is not the orthogonal projection onto it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .figure import CorrespondenceError
from .ipfp import DEFAULT_TOLERANCE, FittedLine, ipfp_fit

__all__ = ["EdgeResult", "edge_deviations", "edge_disproportionality", "rho"]


@dataclass(frozen=True)
class EdgeResult:
    deviations: tuple[float, ...]
    deviation_sum: float
    edge_count: int
    rho: float
    line: FittedLine


def edge_deviations(pairs: np.ndarray, fitted: np.ndarray) -> np.ndarray:
    """Euclidean distance from each ``(l_i, l_j)`` row to its fitted row."""
    pairs = np.asarray(pairs, dtype=float)
    fitted = np.asarray(fitted, dtype=float)
    if pairs.shape != fitted.shape or pairs.ndim != 2 or pairs.shape[1] != 2:
        raise CorrespondenceError(
            f"pair tables differ in shape ({pairs.shape} vs {fitted.shape})"
        )
    return np.hypot(pairs[:, 0] - fitted[:, 0], pairs[:, 1] - fitted[:, 1])


def edge_disproportionality(
    l_i: Sequence[float],
    l_j: Sequence[float],
    tolerance: float = DEFAULT_TOLERANCE,
    trace: bool = False,
) -> EdgeResult:
    line = ipfp_fit(l_i, l_j, tolerance=tolerance, trace=trace)
    pairs = np.column_stack([np.asarray(l_i, float), np.asarray(l_j, float)])
    dev = edge_deviations(pairs, line.fitted)
    total = math.fsum(dev)
    n = len(dev)
    # the edge count, not 1, is the scaling constant here
    return EdgeResult(tuple(dev.tolist()), total, n, total / (n + total), line)


def rho(l_i: Sequence[float], l_j: Sequence[float], tolerance: float = DEFAULT_TOLERANCE) -> float:
    """``sum(Delta) / (n + sum(Delta))``, in ``[0, 1)``."""
    return edge_disproportionality(l_i, l_j, tolerance).rho
