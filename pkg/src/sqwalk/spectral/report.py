"""The spectrum report behind the ``spectrum`` command."""

import logging
from typing import Optional

import numpy as np

from ..search import MarkedFace, deformed_graph
from ..simplicial import sphere_triangulation
from ..types import Residuals, SpectrumReport
from ..utils.validation import validate_dimension
from .closed_form import candidate_eigenvalues, mu1_closed_form, predicted_tf
from .discriminant import discriminant
from .jacobi import symmetric_eigen
from .spectral_map import spectral_map_check

log: logging.Logger = logging.getLogger(__name__)

DEFAULT_DENSE_LIMIT = 10
CANDIDATE_TOLERANCE = 1e-9


def spectrum_report(
    n: int, marked: tuple[int, int] = (0, 1), *, dense_limit: Optional[int] = None
) -> SpectrumReport:
    """Closed-form top eigenpair against a Jacobi solve of the discriminant on ``G_*``.

    The dense spectral-map check runs only for ``n <= dense_limit``.
    """
    validate_dimension(n)
    limit = DEFAULT_DENSE_LIMIT if dense_limit is None else dense_limit
    complex_ = sphere_triangulation(n)
    graph = deformed_graph(complex_, MarkedFace.from_facets(complex_, *marked))
    pairs = symmetric_eigen(discriminant(graph).matrix)
    top = mu1_closed_form(n, graph)

    leading = pairs[0]
    alignment = abs(float(np.dot(top.f1, leading.eigenvector))) / (
        float(np.linalg.norm(top.f1)) * float(np.linalg.norm(leading.eigenvector))
    )
    values = [pair.eigenvalue for pair in pairs]
    matches = {
        label: sum(1 for value in values if abs(value - candidate) < CANDIDATE_TOLERANCE)
        for label, candidate in candidate_eigenvalues(n).items()
    }
    report = SpectrumReport(
        n=n,
        mu1_closed=top.mu1,
        mu1_numeric=leading.eigenvalue,
        eta=top.eta,
        f1_norm_sq=top.norm_sq,
        residuals=Residuals(
            eigen=leading.residual,
            closed_form_gap=abs(top.mu1 - leading.eigenvalue),
            alignment_gap=1.0 - alignment,
            norm_sq_gap=abs(float(np.sum(top.f1**2)) - top.norm_sq) / top.norm_sq,
        ),
        predicted_tf=predicted_tf(n),
        eigenvalues=values,
        candidate_matches=matches,
        spectral_map=spectral_map_check(graph) if n <= limit else None,
    )
    log.info("Spectrum n=%d: mu1=%.12f (gap %.3e)", n, top.mu1, report.residuals.closed_form_gap)
    return report
