"""Tests for overlap predictions."""

import pytest

from sqwalk.spectral import overlaps


class TestOverlaps:
    """Test overlaps function."""

    def test_headline_limits(self):
        """Test the overlaps near -i and unit modulus at n = 98."""
        report = overlaps(98, (5, 11))
        assert abs(report.in_minus.to_complex() + 1j) < 0.05
        assert abs(report.target_alignment - 1.0) < 0.05
        assert report.orthogonality < 1e-10

    def test_gaps_shrink_with_n(self):
        """Test both gaps decrease strictly along n = 10, 30, 50, 98."""
        reports = [overlaps(n) for n in (10, 30, 50, 98)]
        in_gaps = [abs(r.in_minus.to_complex() + 1j) for r in reports]
        target_gaps = [abs(r.target_alignment - 1.0) for r in reports]
        assert all(a > b for a, b in zip(in_gaps, in_gaps[1:]))
        assert all(a > b for a, b in zip(target_gaps, target_gaps[1:]))

    def test_alignment_is_modulus(self):
        """Test the alignment fields are the moduli of the raw overlaps."""
        report = overlaps(4)
        assert report.in_alignment == pytest.approx(abs(report.in_minus.to_complex()))
        assert report.target_alignment == pytest.approx(abs(report.target_plus.to_complex()))
