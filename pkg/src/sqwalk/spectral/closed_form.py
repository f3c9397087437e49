"""Closed forms for the top eigenpair of the discriminant on ``G_*`` over the sphere.

With the marked face ``|sigma_i| & |sigma_j|``, the eigenvector is ``eta`` on the four
loop vertices and ``1`` everywhere else.
"""

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np
import numpy.typing as npt

from ..graphs import DirectedMultigraph
from ..utils.validation import validate_dimension


def _root(n: int) -> float:
    return math.sqrt(n * (n + 8))


def one_minus_mu1(n: int) -> float:
    """``1 - mu_1`` without cancellation."""
    validate_dimension(n)
    return 8.0 / ((n + 1) * (n + 4 + _root(n)))


def theta1(n: int) -> float:
    """``arccos mu_1``, evaluated through ``sin theta_1 = sqrt(1 - mu_1^2)``."""
    gap = one_minus_mu1(n)
    mu1 = 1.0 - gap
    return math.atan2(math.sqrt(gap * (1.0 + mu1)), mu1)


def predicted_tf(n: int) -> float:
    """``pi / (2 theta_1)``; grows like ``pi n / (4 sqrt 2)``."""
    return math.pi / (2.0 * theta1(n))


@dataclass(frozen=True)
class TopEigenpair:
    n: int
    mu1: float
    eta: float
    norm_sq: float
    f1: npt.NDArray[np.float64]

    @property
    def theta(self) -> float:
        return theta1(self.n)


def mu1_closed_form(n: int, graph: Optional[DirectedMultigraph] = None) -> TopEigenpair:
    """``mu_1``, ``eta``, ``||f_1||^2`` and ``f_1``.

    ``f_1`` is laid out on ``graph.vertices`` with ``eta`` at the loop vertices; without
    a graph it uses the ``G_*`` layout for the marked facets ``(0, 1)``.
    """
    validate_dimension(n)
    root = _root(n)
    mu1 = 1.0 - one_minus_mu1(n)
    eta = (root - n) / 4.0
    norm_sq = (n / 2.0) * (n + 8 - root)
    if graph is None:
        f1 = np.ones(2 * (n + 2))
        f1[[0, 1, n + 2, n + 3]] = eta
    else:
        f1 = np.ones(len(graph.vertices))
        index = graph.vertex_index
        f1[[index[arc.terminus] for arc in graph.loops]] = eta
    return TopEigenpair(n=n, mu1=mu1, eta=eta, norm_sq=norm_sq, f1=f1)


def candidate_eigenvalues(n: int) -> dict[str, float]:
    """Closed-form eigenvalue candidates of the discriminant; multiplicities are not known."""
    validate_dimension(n)
    return {
        "mu1": 1.0 - one_minus_mu1(n),
        "1/(n+1)": 1.0 / (n + 1),
        "-1/(n+1)": -1.0 / (n + 1),
        "-3/(n+1)": -3.0 / (n + 1),
        "-1": -1.0,
    }
