"""Angular dissimilarity between corresponding angle lists.

Each pair ``(theta_i(u), theta_j(u))`` is a point in the plane; its distance
to ``(theta_i(u), theta_i(u))`` on ``y = x`` is the absolute difference of the
two angles. Differences are taken on the stored radian values and are never
wrapped modulo 2*pi.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .figure import CorrespondenceError

__all__ = ["AngularResult", "angular_shifts", "alpha", "angular_dissimilarity"]


@dataclass(frozen=True)
class AngularResult:
    shifts: tuple[float, ...]
    shift_sum: float
    alpha: float


def _as_pair(theta_i: Sequence[float], theta_j: Sequence[float]) -> tuple[np.ndarray, np.ndarray]:
    ti = np.asarray(theta_i, dtype=float)
    tj = np.asarray(theta_j, dtype=float)
    if ti.ndim != 1 or ti.shape != tj.shape:
        raise CorrespondenceError(
            f"angle lists must have equal length ({ti.size} vs {tj.size})"
        )
    return ti, tj


def angular_shifts(theta_i: Sequence[float], theta_j: Sequence[float]) -> np.ndarray:
    ti, tj = _as_pair(theta_i, theta_j)
    return np.abs(tj - ti)


def _normalise(total: float) -> float:
    return total / (1.0 + total)


def angular_dissimilarity(theta_i: Sequence[float], theta_j: Sequence[float]) -> AngularResult:
    shifts = angular_shifts(theta_i, theta_j)
    # fsum keeps the total independent of argument order
    total = math.fsum(shifts)
    return AngularResult(tuple(shifts.tolist()), total, _normalise(total))


def alpha(theta_i: Sequence[float], theta_j: Sequence[float]) -> float:
    """Sum of angular shifts ``S`` mapped to ``S / (1 + S)``, in ``[0, 1)``."""
    return angular_dissimilarity(theta_i, theta_j).alpha
