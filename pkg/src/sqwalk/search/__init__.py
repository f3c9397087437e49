"""Search for a marked primary face: the perturbed walk, ``G_*`` and search traces."""

from ..walk import uniform_state
from .deformed import (
    deformed_graph,
    gamma_star,
    loop_indices,
    search_intertwiner,
    target_state,
    verify_search_equivalence,
)
from .fit import fit_line
from .marked import MarkedFace
from .operator import build_search_operator
from .runner import DEFAULT_T_MAX_FACTOR, default_t_max, run_search, search_complex
from .trace import PEAK_FRACTION, SearchTrace, detect_first_peak

__all__ = [
    "MarkedFace",
    "build_search_operator",
    "deformed_graph",
    "gamma_star",
    "loop_indices",
    "target_state",
    "uniform_state",
    "search_intertwiner",
    "verify_search_equivalence",
    "PEAK_FRACTION",
    "SearchTrace",
    "detect_first_peak",
    "DEFAULT_T_MAX_FACTOR",
    "default_t_max",
    "run_search",
    "search_complex",
    "fit_line",
]
