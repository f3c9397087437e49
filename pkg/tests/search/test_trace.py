"""Tests for stopping-time detection and search traces."""

import numpy as np
import pytest

from sqwalk.search import SearchTrace, detect_first_peak


def make_trace(probabilities, t_f=None):
    p = np.asarray(probabilities, dtype=float)
    amplitudes = np.repeat(np.sqrt(p / 4)[:, None], 4, axis=1).astype(np.complex128)
    return SearchTrace(
        n=2,
        num_faces=6,
        marked=(0, 1),
        marked_face=(0, 1),
        probabilities=p,
        loop_amplitudes=amplitudes,
        norms=np.ones(p.size),
        t_f=t_f,
    )


class TestDetectFirstPeak:
    """Test detect_first_peak function."""

    @pytest.mark.parametrize(
        ("probabilities", "expected"),
        [
            ([0.0, 1.0, 0.0], 1),
            ([0.0, 0.2, 0.1, 0.5, 1.0, 0.4], 4),
            ([0.0, 1.0, 1.0, 0.0], 1),
            ([0.1, 0.2, 0.3, 0.4], None),
            ([0.5, 0.5], None),
            ([1.0, 0.5, 0.2], None),
        ],
        ids=["single", "ripple", "plateau", "rising", "short", "falling"],
    )
    def test_detection(self, probabilities, expected):
        """Test the first qualifying local maximum."""
        assert detect_first_peak(probabilities) == expected

    def test_fraction_is_configurable(self):
        """Test a lower floor accepts the early ripple."""
        assert detect_first_peak([0.0, 0.2, 0.1, 0.5, 1.0, 0.4], min_fraction=0.1) == 1


class TestSearchTrace:
    """Test SearchTrace properties."""

    def test_values_at_tf(self):
        """Test p_f and the loop split at t_f."""
        trace = make_trace([0.1, 0.9, 0.2], t_f=1)
        assert trace.t_max == 2
        assert trace.p_f == pytest.approx(0.9)
        assert trace.loop_probabilities == pytest.approx([0.225] * 4)
        assert trace.p_f_target == pytest.approx(0.9)
        assert trace.norm_drift == 0.0

    def test_missing_tf(self):
        """Test t_f-dependent values need a detected peak."""
        trace = make_trace([0.1, 0.2, 0.3])
        with pytest.raises(ValueError, match="no detected t_f"):
            _ = trace.p_f
        with pytest.raises(ValueError):
            _ = trace.loop_probabilities
