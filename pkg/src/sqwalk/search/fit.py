"""Least-squares fit of stopping time against system size."""

from typing import Sequence

import numpy as np

from ..types import FitPoint, FitResult


def fit_line(points: Sequence[tuple[int, int]]) -> FitResult:
    """Ordinary least squares ``t_f ~ slope * x + intercept``."""
    if len(points) < 2:
        raise ValueError("a line fit needs at least 2 points")
    x = np.array([p[0] for p in points], dtype=float)
    y = np.array([p[1] for p in points], dtype=float)
    design = np.column_stack([x, np.ones_like(x)])
    (slope, intercept), *_ = np.linalg.lstsq(design, y, rcond=None)
    residuals = y - (slope * x + intercept)
    return FitResult(
        slope=float(slope),
        intercept=float(intercept),
        residual_rms=float(np.sqrt(np.mean(residuals**2))),
        points=[FitPoint(x=int(px), t_f=int(py)) for px, py in points],
    )
