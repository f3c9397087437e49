"""Time evolution of the reduced search walk."""

import logging
import math
from typing import Optional

import numpy as np

from .._core.exceptions import TimeLimitError
from ..simplicial import SimplicialComplex, sphere_triangulation
from ..spectral.closed_form import predicted_tf
from ..utils.validation import validate_dimension, validate_non_negative_int
from ..walk import uniform_state
from .deformed import deformed_graph, gamma_star, loop_indices
from .marked import MarkedFace
from .trace import PEAK_FRACTION, SearchTrace, detect_first_peak

log: logging.Logger = logging.getLogger(__name__)

DEFAULT_T_MAX_FACTOR = 2.0


def default_t_max(n: int, factor: float = DEFAULT_T_MAX_FACTOR) -> int:
    """``ceil(factor * predicted_tf(n))`` steps."""
    return math.ceil(factor * predicted_tf(n))


def search_complex(
    complex_: SimplicialComplex,
    marked: MarkedFace,
    t_max: int,
    *,
    min_fraction: float = PEAK_FRACTION,
) -> SearchTrace:
    """Evolve ``psi_IN`` under ``Gamma_*`` for ``t_max`` steps and locate ``t_f``.

    Raises:
        TimeLimitError: no qualifying local maximum of ``p_f`` in ``[0, t_max]``;
            the full trace is attached to the error.
    """
    validate_non_negative_int("t_max", t_max)
    graph = deformed_graph(complex_, marked)
    walk = gamma_star(graph)
    loops = loop_indices(graph)

    state = uniform_state(graph.num_arcs)
    amplitudes = np.empty((t_max + 1, loops.size), dtype=np.complex128)
    norms = np.empty(t_max + 1)
    for t in range(t_max + 1):
        if t:
            state = walk.apply(state)
        amplitudes[t] = state[loops]
        norms[t] = float(np.vdot(state, state).real)
    probabilities = np.sum(np.abs(amplitudes) ** 2, axis=1)

    i, j = marked.facet_indices
    trace = SearchTrace(
        n=complex_.dim,
        num_faces=graph.num_arcs // 4,
        marked=(i, j),
        marked_face=marked.target,
        probabilities=probabilities,
        loop_amplitudes=amplitudes,
        norms=norms,
        t_f=detect_first_peak(probabilities, min_fraction),
    )
    if trace.norm_drift > 1e-10:
        log.warning("Search norm drifted by %.3e over %d steps", trace.norm_drift, t_max)
    if trace.t_f is None:
        raise TimeLimitError(
            f"no local maximum of p_f within t_max = {t_max}; increase t_max", trace=trace
        )
    log.info("Search n=%d marked=%s: t_f=%d p_f=%.6f", trace.n, trace.marked, trace.t_f, trace.p_f)
    return trace


def run_search(
    n: int,
    marked: tuple[int, int] = (0, 1),
    t_max: Optional[int] = None,
    *,
    min_fraction: float = PEAK_FRACTION,
) -> SearchTrace:
    """Search on the boundary of the (n+1)-simplex, marking ``|sigma_i| & |sigma_j|``.

    ``t_max`` defaults to :func:`default_t_max`, twice the predicted stopping time.
    """
    validate_dimension(n)
    complex_ = sphere_triangulation(n)
    face = MarkedFace.from_facets(complex_, *marked)
    return search_complex(
        complex_, face, t_max if t_max is not None else default_t_max(n), min_fraction=min_fraction
    )
