"""Pass/fail verification reports."""

import logging
from typing import Callable, Optional

from .._core.exceptions import NonOrientableError, SQWalkError
from ..graphs import (
    verify_bipartite_equivalence,
    verify_equivalence,
    verify_isomorphism,
)
from ..search import MarkedFace, verify_search_equivalence
from ..simplicial import (
    OrientationAssignment,
    SimplicialComplex,
    boundary_faces,
    find_orientation,
    sphere_triangulation,
    strong_connectivity,
)
from ..spectral import spectrum_report
from ..types import CheckResult, VerificationReport
from ..utils.validation import validate_dimension
from ._base import BaseResource

log: logging.Logger = logging.getLogger(__name__)

EQUIVALENCE_THRESHOLD = 1e-12
EIGEN_THRESHOLD = 1e-10
DENSE_VERIFY_LIMIT = 4


def _deviation_check(name: str, compute: Callable[[], float], threshold: float) -> CheckResult:
    try:
        value = compute()
    except SQWalkError as exc:
        return CheckResult(name=name, passed=False, detail=str(exc))
    return CheckResult(name=name, passed=value < threshold, value=value, threshold=threshold)


def _isomorphism_check(
    complex_: SimplicialComplex, orientation: Optional[OrientationAssignment]
) -> CheckResult:
    try:
        result = verify_isomorphism(complex_, orientation)
    except SQWalkError as exc:
        return CheckResult(name="isomorphism", passed=False, detail=str(exc))
    return CheckResult(
        name="isomorphism",
        passed=result.is_isomorphic,
        detail=f"{len(result.mapping)} vertices mapped",
    )


class Verifications(BaseResource):
    """Dense cross-checks of the walk equivalences and the closed-form spectrum."""

    def run(self, n: int) -> VerificationReport:
        """Dense checks for ``n <= 4``; the closed-form eigen checks for every ``n``."""
        validate_dimension(n)
        checks: list[CheckResult] = []
        if n <= DENSE_VERIFY_LIMIT:
            complex_ = sphere_triangulation(n)
            orientation = find_orientation(complex_)
            marked = MarkedFace.from_facets(complex_, 0, 1)
            checks.append(_isomorphism_check(complex_, orientation))
            checks.append(
                _deviation_check(
                    "equivalence",
                    lambda: verify_equivalence(complex_, orientation),
                    EQUIVALENCE_THRESHOLD,
                )
            )
            checks.append(
                _deviation_check(
                    "bipartite_equivalence",
                    lambda: verify_bipartite_equivalence(complex_, orientation),
                    EQUIVALENCE_THRESHOLD,
                )
            )
            checks.append(
                _deviation_check(
                    "search_equivalence",
                    lambda: verify_search_equivalence(complex_, marked, orientation),
                    EQUIVALENCE_THRESHOLD,
                )
            )

        report = spectrum_report(n, dense_limit=self._client.dense_limit)
        residuals = report.residuals
        checks.append(
            CheckResult(
                name="eigen_closed_form",
                passed=residuals.closed_form_gap < EIGEN_THRESHOLD,
                value=residuals.closed_form_gap,
                threshold=EIGEN_THRESHOLD,
            )
        )
        checks.append(
            CheckResult(
                name="eigen_alignment",
                passed=residuals.alignment_gap < EIGEN_THRESHOLD,
                value=residuals.alignment_gap,
                threshold=EIGEN_THRESHOLD,
            )
        )
        if report.spectral_map is not None:
            checks.append(
                CheckResult(
                    name="spectral_map",
                    passed=report.spectral_map.passed,
                    value=report.spectral_map.max_lift_error,
                    threshold=1e-8,
                )
            )
        verification = VerificationReport(n=n, checks=checks)
        log.info("Verification n=%d: %s", n, "passed" if verification.passed else "FAILED")
        return verification

    def run_complex(self, complex_: SimplicialComplex) -> VerificationReport:
        """Complex-level checks: strong connectivity, orientability, the graph equivalences.

        The arc-space equivalence is only checked when the complex has no boundary.
        """
        connectivity = strong_connectivity(complex_)
        checks = [
            CheckResult(
                name="strongly_connected",
                passed=connectivity.connected,
                detail=connectivity.reason,
            )
        ]
        if not connectivity:
            return VerificationReport(n=complex_.dim, checks=checks)
        try:
            orientation = find_orientation(complex_)
        except NonOrientableError as exc:
            checks.append(
                CheckResult(
                    name="orientable",
                    passed=False,
                    detail=f"{exc.witness_kind} witness: {list(exc.witness)}",
                )
            )
            return VerificationReport(n=complex_.dim, checks=checks)
        except SQWalkError as exc:
            checks.append(CheckResult(name="orientable", passed=False, detail=str(exc)))
            return VerificationReport(n=complex_.dim, checks=checks)
        checks.append(CheckResult(name="orientable", passed=True))

        checks.append(_isomorphism_check(complex_, orientation))
        checks.append(
            _deviation_check(
                "bipartite_equivalence",
                lambda: verify_bipartite_equivalence(complex_, orientation),
                EQUIVALENCE_THRESHOLD,
            )
        )
        if not boundary_faces(complex_):
            checks.append(
                _deviation_check(
                    "equivalence",
                    lambda: verify_equivalence(complex_, orientation),
                    EQUIVALENCE_THRESHOLD,
                )
            )
        return VerificationReport(n=complex_.dim, checks=checks)
