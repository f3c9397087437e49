"""Time evolution, initial states and measurement."""

import logging
from typing import Union

import numpy as np
import numpy.typing as npt

from .._core.exceptions import DimensionMismatchError, ZeroNormError
from ..simplicial import Simplex
from ..utils.validation import validate_non_negative_int
from .operators import BlockUnitary
from .pair_space import PairSpace

log: logging.Logger = logging.getLogger(__name__)

NORM_TOLERANCE = 1e-10

StateVector = npt.NDArray[np.complex128]


def uniform_state(dim_or_space: Union[int, PairSpace]) -> StateVector:
    """Equal amplitudes ``1/sqrt(dim)``."""
    dim = dim_or_space.dim if isinstance(dim_or_space, PairSpace) else dim_or_space
    validate_non_negative_int("dim", dim)
    if dim == 0:
        raise DimensionMismatchError("uniform state needs a nonempty space", expected=1, actual=0)
    return np.full(dim, 1.0 / np.sqrt(dim), dtype=np.complex128)


def basis_state(dim: int, index: int) -> StateVector:
    state = np.zeros(dim, dtype=np.complex128)
    state[index] = 1.0
    return state


def evolve(unitary: BlockUnitary, psi: npt.ArrayLike, steps: int) -> StateVector:
    """Return ``U^steps psi``. Norm drift is logged, never corrected."""
    validate_non_negative_int("steps", steps)
    state = np.asarray(psi, dtype=np.complex128)
    if state.ndim != 1 or state.shape[0] != unitary.dim:
        raise DimensionMismatchError(
            f"state of shape {state.shape} does not match operator dimension {unitary.dim}",
            expected=unitary.dim,
            actual=state.shape[0] if state.ndim else 0,
        )
    start = float(np.linalg.norm(state))
    for _ in range(steps):
        state = unitary.apply(state)
    drift = abs(float(np.linalg.norm(state)) - start)
    if drift > NORM_TOLERANCE:
        log.warning("Norm drifted by %.3e over %d steps", drift, steps)
    return state


def distribution(psi: npt.ArrayLike, space: PairSpace) -> dict[Simplex, float]:
    """Probability of each unoriented (n-1)-simplex, summed over both orientation classes."""
    state = np.asarray(psi)
    if state.shape != (space.dim,):
        raise DimensionMismatchError(
            f"state of shape {state.shape} does not match pair space of size {space.dim}",
            expected=space.dim,
            actual=state.shape[0] if state.ndim else 0,
        )
    weights = np.abs(state) ** 2
    total = float(weights.sum())
    if total == 0.0:
        raise ZeroNormError("state has zero norm")
    if abs(total - 1.0) > NORM_TOLERANCE:
        log.warning("distribution input has norm^2 %.12f; normalizing", total)
        weights = weights / total
    mass = np.bincount(space.support_index, weights=weights, minlength=len(space.supports))
    return {face: float(p) for face, p in zip(space.supports, mass)}
