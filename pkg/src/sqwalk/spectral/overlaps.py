"""Overlaps of the search states with the lifted top eigenvectors."""

import logging

import numpy as np

from ..search import MarkedFace, deformed_graph, target_state, uniform_state
from ..simplicial import sphere_triangulation
from ..types import ComplexValue, OverlapReport
from .closed_form import mu1_closed_form
from .lift import lift_partial

log: logging.Logger = logging.getLogger(__name__)


def overlaps(n: int, marked: tuple[int, int] = (0, 1)) -> OverlapReport:
    """``<psi_IN, beta_->`` and ``<psi_Tar, beta_+>`` on ``G_*`` over the n-sphere.

    ``alpha_+-`` lift ``f_1`` at ``+-theta_1`` and ``beta_+- = (alpha_+ +- alpha_-) / sqrt 2``.
    Under this lift's phases the first overlap tends to ``-i`` and the second to ``-1``.
    """
    complex_ = sphere_triangulation(n)
    graph = deformed_graph(complex_, MarkedFace.from_facets(complex_, *marked))
    top = mu1_closed_form(n, graph)
    alpha_plus = lift_partial(top.theta, top.f1, graph)
    alpha_minus = lift_partial(-top.theta, top.f1, graph)
    beta_plus = (alpha_plus + alpha_minus) / np.sqrt(2.0)
    beta_minus = (alpha_plus - alpha_minus) / np.sqrt(2.0)

    in_minus = complex(np.vdot(uniform_state(graph.num_arcs), beta_minus))
    target_plus = complex(np.vdot(target_state(graph), beta_plus))
    report = OverlapReport(
        n=n,
        in_minus=ComplexValue.of(in_minus),
        target_plus=ComplexValue.of(target_plus),
        in_alignment=abs(in_minus),
        target_alignment=abs(target_plus),
        orthogonality=abs(complex(np.vdot(beta_plus, beta_minus))),
    )
    log.debug("Overlaps n=%d: %s, %s", n, in_minus, target_plus)
    return report
