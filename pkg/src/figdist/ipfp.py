"""Classical iterative proportional fitting on an ``n x 2`` table.

Row ``h`` of the target table holds the corresponding edge lengths
``(l_i(h), l_j(h))``. Starting from an all-ones table, rows are rescaled to
the target row totals and then columns to the target column totals, until
both sets of marginals are reproduced. Every row of the fitted table has the
same column ratio, so the fitted points lie on one line through the origin.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .figure import CorrespondenceError

__all__ = [
    "FitTable",
    "FittedLine",
    "ConvergenceError",
    "DEFAULT_TOLERANCE",
    "DEFAULT_MAX_ITERATIONS",
    "fit_table",
    "row_fit",
    "column_fit",
    "ipfp_fit",
    "closed_form_fit",
]

DEFAULT_TOLERANCE = 5e-4
DEFAULT_MAX_ITERATIONS = 100

# relative spread of l_j/l_i below which inputs count as already proportional
_PROPORTIONAL_RTOL = 1e-12
_SLOPE_RTOL = 1e-9


class ConvergenceError(RuntimeError):
    pass


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.array(a, dtype=float)
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class FitTable:
    """Target table with its row targets ``T_h`` and column targets ``(C1, C2)``."""

    rows: np.ndarray
    row_targets: np.ndarray
    column_targets: np.ndarray

    def __post_init__(self) -> None:
        object.__setattr__(self, "rows", _frozen(self.rows))
        object.__setattr__(self, "row_targets", _frozen(self.row_targets))
        object.__setattr__(self, "column_targets", _frozen(self.column_targets))
        n = self.rows.shape[0]
        if self.rows.ndim != 2 or self.rows.shape[1] != 2 or n < 1:
            raise ValueError("rows must be an n x 2 table with n >= 1")
        if self.row_targets.shape != (n,) or self.column_targets.shape != (2,):
            raise ValueError("target shapes do not match the table")
        targets = np.concatenate([self.row_targets, self.column_targets])
        if not np.all(np.isfinite(targets)) or np.any(targets <= 0):
            raise ValueError("all targets must be finite and positive")
        r, c = self.row_targets.sum(), self.column_targets.sum()
        if abs(r - c) > 1e-9 * max(r, c):
            raise ValueError(f"row and column grand totals disagree ({r} vs {c})")

    @property
    def n(self) -> int:
        return self.rows.shape[0]


@dataclass(frozen=True)
class FittedLine:
    """Result of fitting; ``fitted[h] = (l_i'(h), l_j'(h))`` lies on ``y = slope * x``.

    ``trace`` is empty unless requested; otherwise it holds the target table
    followed by the seed and the table after every row and column fit.
    """

    slope: float
    fitted: np.ndarray
    iterations: int
    residual: float
    trace: tuple[tuple[str, np.ndarray], ...] = field(default=(), repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "fitted", _frozen(self.fitted))


def _lengths(l_i: Sequence[float], l_j: Sequence[float]) -> tuple[np.ndarray, np.ndarray]:
    a = np.asarray(l_i, dtype=float)
    b = np.asarray(l_j, dtype=float)
    if a.ndim != 1 or a.shape != b.shape:
        raise CorrespondenceError(
            f"edge length lists must have equal length ({a.size} vs {b.size})"
        )
    if a.size == 0:
        raise CorrespondenceError("edge length lists are empty")
    if not (np.all(np.isfinite(a)) and np.all(np.isfinite(b))):
        raise ValueError("edge lengths must be finite")
    if np.any(a <= 0) or np.any(b <= 0):
        raise ValueError("edge lengths must be positive")
    return a, b


def fit_table(l_i: Sequence[float], l_j: Sequence[float]) -> FitTable:
    a, b = _lengths(l_i, l_j)
    rows = np.column_stack([a, b])
    return FitTable(rows, rows.sum(axis=1), rows.sum(axis=0))


def row_fit(table: np.ndarray, row_targets: Sequence[float]) -> np.ndarray:
    """Scale each row of ``table`` so that it sums to its target."""
    table = np.asarray(table, dtype=float)
    sums = table.sum(axis=1)
    if np.any(sums <= 0):
        raise ZeroDivisionError("row fit needs every row sum to be positive")
    return table * (np.asarray(row_targets, dtype=float) / sums)[:, None]


def column_fit(table: np.ndarray, column_targets: Sequence[float]) -> np.ndarray:
    """Scale each column of ``table`` so that it sums to its target."""
    table = np.asarray(table, dtype=float)
    sums = table.sum(axis=0)
    if np.any(sums <= 0):
        raise ZeroDivisionError("column fit needs every column sum to be positive")
    return table * (np.asarray(column_targets, dtype=float) / sums)[None, :]


def _marginal_residual(table: np.ndarray, target: FitTable) -> float:
    return float(
        max(
            np.max(np.abs(table.sum(axis=1) - target.row_targets)),
            np.max(np.abs(table.sum(axis=0) - target.column_targets)),
        )
    )


def _is_proportional(a: np.ndarray, b: np.ndarray) -> bool:
    ratios = b / a
    return bool(np.ptp(ratios) <= _PROPORTIONAL_RTOL * np.max(ratios))


def _slope(fitted: np.ndarray) -> float:
    ratios = fitted[:, 1] / fitted[:, 0]
    m = float(ratios[0])
    if np.max(np.abs(ratios - m)) > _SLOPE_RTOL * m:
        raise ConvergenceError("fitted rows do not share a single slope")
    return m


def ipfp_fit(
    l_i: Sequence[float],
    l_j: Sequence[float],
    tolerance: float = DEFAULT_TOLERANCE,
    max_iterations: int = DEFAULT_MAX_ITERATIONS,
    trace: bool = False,
) -> FittedLine:
    """Fit the origin line through the pairs ``(l_i(h), l_j(h))`` by IPF.

    One iteration is a row fit followed by a column fit. Iteration stops once
    every achieved row and column total is within ``tolerance`` of its
    target; ``ConvergenceError`` is raised after ``max_iterations``.

    Inputs that are already proportional are their own fixed point and are
    returned as the fitted table, so their deviations are exactly zero.
    """
    if not (tolerance > 0 and math.isfinite(tolerance)):
        raise ValueError("tolerance must be finite and positive")
    target = fit_table(l_i, l_j)
    table = np.ones((target.n, 2))
    steps: list[tuple[str, np.ndarray]] = []
    if trace:
        steps += [("target", target.rows.copy()), ("seed", table.copy())]

    iterations = 0
    while True:
        table = row_fit(table, target.row_targets)
        if trace:
            steps.append((f"row fit {iterations + 1}", table.copy()))
        table = column_fit(table, target.column_targets)
        iterations += 1
        if trace:
            steps.append((f"column fit {iterations}", table.copy()))
        residual = _marginal_residual(table, target)
        if residual <= tolerance:
            break
        if iterations >= max_iterations:
            raise ConvergenceError(
                f"IPF did not converge in {max_iterations} iterations "
                f"(residual {residual:.3g})"
            )

    if _is_proportional(target.rows[:, 0], target.rows[:, 1]):
        table = target.rows.copy()
        residual = 0.0
    return FittedLine(_slope(table), table, iterations, residual, tuple(steps))


def closed_form_fit(l_i: Sequence[float], l_j: Sequence[float]) -> FittedLine:
    """Analytic fixed point of the two-column fit from a uniform seed.

    ``l_i'(h) = T_h C1 / (C1 + C2)``, ``l_j'(h) = T_h C2 / (C1 + C2)`` and
    ``m = C2 / C1``.
    """
    target = fit_table(l_i, l_j)
    c1, c2 = target.column_targets
    grand = c1 + c2
    t = target.row_targets
    fitted = np.column_stack([t * c1 / grand, t * c2 / grand])
    return FittedLine(float(c2 / c1), fitted, 1, _marginal_residual(fitted, target))
