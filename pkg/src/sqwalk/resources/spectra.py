"""Discriminant spectra and overlap reports."""

from ..spectral import overlaps, spectrum_report
from ..types import OverlapReport, SpectrumReport
from ._base import BaseResource


class Spectra(BaseResource):
    """Spectral reports on ``G_*`` over sphere triangulations."""

    def report(self, n: int) -> SpectrumReport:
        return spectrum_report(n, dense_limit=self._client.dense_limit)

    def overlaps(self, n: int) -> OverlapReport:
        return overlaps(n)
