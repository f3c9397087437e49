"""Finding-probability traces and stopping-time detection."""

from dataclasses import dataclass
from typing import Optional

import numpy as np
import numpy.typing as npt

from ..simplicial import Simplex

PEAK_FRACTION = 0.5


def detect_first_peak(
    probabilities: npt.ArrayLike, min_fraction: float = PEAK_FRACTION
) -> Optional[int]:
    """First ``t`` with ``p[t-1] < p[t] >= p[t+1]`` and ``p[t] >= min_fraction * max(p)``.

    Plateaus resolve to their first sample. Returns ``None`` when the trace holds
    no such point, including a trace still rising at its last sample.
    """
    p = np.asarray(probabilities, dtype=float)
    if p.size < 3:
        return None
    floor = min_fraction * float(p.max())
    inner = p[1:-1]
    peaks = (inner > p[:-2]) & (inner >= p[2:]) & (inner >= floor)
    found = np.flatnonzero(peaks)
    return int(found[0]) + 1 if found.size else None


@dataclass(frozen=True)
class SearchTrace:
    """Per-step record of a search from ``t = 0`` to ``t = t_max``.

    ``loop_amplitudes[t]`` holds the four loop amplitudes of ``Gamma_*^t psi_IN``
    in loop-arc order and ``norms[t]`` the total probability.
    """

    n: int
    num_faces: int
    marked: tuple[int, int]
    marked_face: Simplex
    probabilities: npt.NDArray[np.float64]
    loop_amplitudes: npt.NDArray[np.complex128]
    norms: npt.NDArray[np.float64]
    t_f: Optional[int] = None

    @property
    def t_max(self) -> int:
        return int(self.probabilities.size) - 1

    @property
    def norm_drift(self) -> float:
        return float(np.max(np.abs(self.norms - 1.0)))

    @property
    def target_probabilities(self) -> npt.NDArray[np.float64]:
        """``|<psi_Tar, psi_t>|^2`` per step."""
        overlap = self.loop_amplitudes.sum(axis=1) / np.sqrt(self.loop_amplitudes.shape[1])
        return np.abs(overlap) ** 2

    def _at_tf(self) -> int:
        if self.t_f is None:
            raise ValueError("trace has no detected t_f")
        return self.t_f

    @property
    def p_f(self) -> float:
        return float(self.probabilities[self._at_tf()])

    @property
    def p_f_target(self) -> float:
        return float(self.target_probabilities[self._at_tf()])

    @property
    def loop_probabilities(self) -> list[float]:
        return [float(x) for x in np.abs(self.loop_amplitudes[self._at_tf()]) ** 2]
