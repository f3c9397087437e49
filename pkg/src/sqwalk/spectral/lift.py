"""Lifting discriminant eigenvectors to eigenvectors of ``Gamma_*``."""

import numpy as np
import numpy.typing as npt

from .._core.exceptions import DimensionMismatchError, InvalidAngleError
from ..graphs import DirectedMultigraph
from ..walk import StateVector

ANGLE_TOLERANCE = 1e-12


def lift_partial(theta: float, f: npt.ArrayLike, graph: DirectedMultigraph) -> StateVector:
    """Unit vector on arcs with ``a -> f(o(a)) - e^{i theta} f(t(a))``.

    Loops carry ``-(1 + e^{i theta}) f(o(a))`` instead. When ``T_* f = cos(theta) f``
    the result is an eigenvector of ``Gamma_*`` with eigenvalue ``e^{i theta}``.
    """
    if abs(np.sin(theta)) < ANGLE_TOLERANCE:
        raise InvalidAngleError(f"theta must not be a multiple of pi, got {theta!r}")
    values = np.asarray(f, dtype=np.complex128)
    if values.shape != (len(graph.vertices),):
        raise DimensionMismatchError(
            "vertex function does not match the graph",
            expected=len(graph.vertices),
            actual=values.shape[0] if values.ndim else 0,
        )
    index = graph.vertex_index
    origins = values[[index[arc.origin] for arc in graph.arcs]]
    termini = values[[index[arc.terminus] for arc in graph.arcs]]
    z = np.exp(1j * theta)
    lifted = np.where(graph.is_loop, -(1.0 + z) * origins, origins - z * termini)
    norm = float(np.linalg.norm(lifted))
    if norm == 0.0:
        raise InvalidAngleError("lift vanishes identically for this vertex function")
    return lifted / norm
