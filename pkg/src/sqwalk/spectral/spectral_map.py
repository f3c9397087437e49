"""Dense check that discriminant eigenvalues lift onto the spectrum of ``Gamma_*``."""

import logging

import numpy as np

from ..graphs import DirectedMultigraph
from ..search import gamma_star
from ..types import SpectralMapReport
from .discriminant import discriminant
from .jacobi import symmetric_eigen

log: logging.Logger = logging.getLogger(__name__)

LIFT_TOLERANCE = 1e-8
MODULUS_TOLERANCE = 1e-10
EDGE_MARGIN = 1e-9


def spectral_map_check(graph: DirectedMultigraph) -> SpectralMapReport:
    """Every discriminant eigenvalue ``|lambda| < 1`` must reappear as ``e^{+-i arccos lambda}``.

    Builds ``Gamma_*`` densely, so keep ``graph`` small.
    """
    values = [pair.eigenvalue for pair in symmetric_eigen(discriminant(graph).matrix)]
    spectrum = np.linalg.eigvals(gamma_star(graph).to_dense())

    worst = 0.0
    lifted = 0
    for value in values:
        if abs(value) >= 1.0 - EDGE_MARGIN:
            continue
        lifted += 1
        theta = np.arccos(value)
        for z in (np.exp(1j * theta), np.exp(-1j * theta)):
            worst = max(worst, float(np.min(np.abs(spectrum - z))))
    modulus = float(np.max(np.abs(np.abs(spectrum) - 1.0)))
    report = SpectralMapReport(
        n=graph.in_degree(graph.vertices[0]) - 1,
        lifted=lifted,
        max_lift_error=worst,
        max_modulus_error=modulus,
        contains_plus_one=bool(np.min(np.abs(spectrum - 1.0)) < LIFT_TOLERANCE),
        contains_minus_one=bool(np.min(np.abs(spectrum + 1.0)) < LIFT_TOLERANCE),
        passed=worst < LIFT_TOLERANCE and modulus < MODULUS_TOLERANCE,
    )
    log.debug("Spectral map: %d eigenvalues lifted, worst error %.3e", lifted, worst)
    return report
