"""Cyclic Jacobi eigensolver for real symmetric matrices."""

import logging
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from .._core.exceptions import ConvergenceError, NotSymmetricError

log: logging.Logger = logging.getLogger(__name__)

JACOBI_TOLERANCE = 1e-12
MAX_SWEEPS = 100


@dataclass(frozen=True)
class EigenPair:
    eigenvalue: float
    eigenvector: npt.NDArray[np.float64]
    residual: float


def _off_norm(a: npt.NDArray[np.float64]) -> float:
    return float(np.linalg.norm(a - np.diag(np.diag(a))))


def _rotate(a: npt.NDArray[np.float64], v: npt.NDArray[np.float64], p: int, q: int) -> None:
    """Zero ``a[p, q]`` in place with the rotation ``a <- J^T a J`` and ``v <- v J``."""
    apq = a[p, q]
    theta = (a[q, q] - a[p, p]) / (2.0 * apq)
    t = (1.0 if theta >= 0 else -1.0) / (abs(theta) + np.sqrt(theta * theta + 1.0))
    c = 1.0 / np.sqrt(t * t + 1.0)
    s = t * c

    col_p, col_q = a[:, p].copy(), a[:, q].copy()
    a[:, p] = c * col_p - s * col_q
    a[:, q] = s * col_p + c * col_q
    row_p, row_q = a[p, :].copy(), a[q, :].copy()
    a[p, :] = c * row_p - s * row_q
    a[q, :] = s * row_p + c * row_q
    a[p, q] = a[q, p] = 0.0

    vec_p, vec_q = v[:, p].copy(), v[:, q].copy()
    v[:, p] = c * vec_p - s * vec_q
    v[:, q] = s * vec_p + c * vec_q


def symmetric_eigen(
    matrix: npt.ArrayLike,
    *,
    tolerance: float = JACOBI_TOLERANCE,
    max_sweeps: int = MAX_SWEEPS,
) -> list[EigenPair]:
    """All eigenpairs, eigenvalues descending, eigenvectors orthonormal.

    Sweeps rotate every off-diagonal pair in row order, skipping entries already
    below the working threshold, until the off-diagonal Frobenius norm drops under
    ``tolerance * max(1, ||A||_F)``. The input is never modified.

    Raises:
        NotSymmetricError: the input is not square or not symmetric.
        ConvergenceError: ``max_sweeps`` sweeps did not reach the tolerance.
    """
    original = np.asarray(matrix, dtype=float)
    if original.ndim != 2 or original.shape[0] != original.shape[1]:
        raise NotSymmetricError(f"expected a square matrix, got shape {original.shape}")
    scale = max(1.0, float(np.linalg.norm(original)))
    if np.max(np.abs(original - original.T), initial=0.0) > tolerance * scale:
        raise NotSymmetricError("matrix is not symmetric")

    size = original.shape[0]
    a = original.copy()
    v = np.eye(size)
    target = tolerance * scale
    sweeps = 0
    off = _off_norm(a)
    while off >= target:
        if sweeps == max_sweeps:
            raise ConvergenceError(
                f"Jacobi did not converge in {max_sweeps} sweeps (off-norm {off:.3e})",
                sweeps=sweeps,
                off_norm=off,
            )
        sweeps += 1
        skip = target / size
        for p in range(size - 1):
            for q in range(p + 1, size):
                if abs(a[p, q]) > skip:
                    _rotate(a, v, p, q)
        off = _off_norm(a)
    log.debug("Jacobi converged after %d sweeps for size %d", sweeps, size)

    values = np.diag(a)
    order = np.argsort(-values, kind="stable")
    pairs = []
    for k in order:
        vector = v[:, k]
        residual = float(np.linalg.norm(original @ vector - values[k] * vector))
        pairs.append(EigenPair(float(values[k]), vector.copy(), residual))
    return pairs
