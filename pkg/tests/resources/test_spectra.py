"""Tests for the spectra resource."""

import pytest


class TestSpectra:
    """Test Spectra resource."""

    def test_report_uses_dense_limit(self, simulator):
        """Test the simulator's dense limit decides the spectral-map check."""
        assert simulator.spectra.report(4).spectral_map is not None
        assert simulator.spectra.report(11).spectral_map is None

    def test_overlaps(self, simulator):
        """Test overlaps are forwarded."""
        report = simulator.spectra.overlaps(10)
        assert report.n == 10
        assert report.orthogonality == pytest.approx(0.0, abs=1e-10)
