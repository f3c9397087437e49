"""Tests for search runs on sphere triangulations."""

import math

import numpy as np
import pytest

from sqwalk import MarkedFaceError, TimeLimitError, UnsupportedComplexError
from sqwalk.search import MarkedFace, default_t_max, run_search, search_complex
from sqwalk.simplicial import build_complex, sphere_triangulation
from sqwalk.spectral import predicted_tf


@pytest.fixture
def sphere4():
    return sphere_triangulation(4)


@pytest.fixture(scope="module")
def headline_trace():
    """n+2 = 100 marking |sigma_5| & |sigma_11|, run over four stopping times."""
    return run_search(98, (5, 11), t_max=4 * 56)


class TestRunSearch:
    """Test run_search on small complexes."""

    def test_initial_probability(self):
        """Test p_f(0) = 1/N."""
        trace = run_search(4, t_max=20)
        n_faces = 5 * 6 // 2
        assert trace.num_faces == n_faces
        assert trace.probabilities[0] == pytest.approx(1 / n_faces)

    def test_default_time_limit(self):
        """Test t_max defaults to twice the predicted stopping time."""
        trace = run_search(6)
        assert trace.t_max == default_t_max(6) == math.ceil(2.0 * predicted_tf(6))
        assert trace.t_f is not None

    def test_norm_is_conserved(self):
        """Test total probability stays at one."""
        trace = run_search(10, t_max=60)
        assert trace.norm_drift < 1e-10

    @pytest.mark.parametrize(
        "relabel",
        [(1, 0, 2, 3, 4, 5), (5, 3, 1, 4, 0, 2), (2, 3, 4, 5, 0, 1)],
        ids=["swap", "scramble", "shift"],
    )
    def test_vertex_relabelling_leaves_trace_unchanged(self, sphere4, relabel):
        """Test permuting the vertices of K_6 carries the search onto the relabelled face."""
        relabelled = build_complex([[relabel[v] for v in facet] for facet in sphere4.facets])
        face = (0, 2, 3, 5)
        image = tuple(sorted(relabel[v] for v in face))

        first = search_complex(sphere4, MarkedFace.resolve(sphere4, face), 20)
        second = search_complex(relabelled, MarkedFace.resolve(relabelled, image), 20)

        np.testing.assert_allclose(first.probabilities, second.probabilities, atol=1e-12)
        assert first.t_f == second.t_f

    def test_time_limit_carries_trace(self):
        """Test a horizon before the first peak raises with the partial trace."""
        with pytest.raises(TimeLimitError, match="increase t_max") as exc_info:
            run_search(98, (5, 11), t_max=10)
        trace = exc_info.value.trace
        assert trace.t_f is None
        assert trace.probabilities.size == 11
        assert np.all(np.diff(trace.probabilities) > 0)

    def test_rejects_bad_arguments(self):
        """Test argument validation."""
        with pytest.raises(ValueError, match="n must be"):
            run_search(1)
        with pytest.raises(MarkedFaceError):
            run_search(3, (0, 5))
        with pytest.raises(ValueError, match="t_max"):
            run_search(3, t_max=-1)

    def test_search_needs_closed_complex(self, glued_triangles):
        """Test complexes with boundary are rejected."""
        marked = MarkedFace.resolve(glued_triangles, (1, 2))
        with pytest.raises(UnsupportedComplexError):
            search_complex(glued_triangles, marked, 10)

    def test_octahedron_search(self, octahedron):
        """Test search runs on a closed complex other than a simplex boundary."""
        marked = MarkedFace.from_facets(octahedron, 0, 1)
        trace = search_complex(octahedron, marked, 30)
        assert trace.num_faces == 12
        assert trace.t_f is not None
        assert trace.norm_drift < 1e-10


class TestHeadlineSearch:
    """Search on the boundary of the 99-simplex."""

    def test_stopping_time_and_probability(self, headline_trace):
        """Test t_f near 55 with finding probability close to one."""
        assert 53 <= headline_trace.t_f <= 57
        assert headline_trace.p_f >= 0.95

    def test_loops_share_probability_equally(self, headline_trace):
        """Test each loop carries about a quarter."""
        for p in headline_trace.loop_probabilities:
            assert p == pytest.approx(0.25, abs=0.03)

    def test_trace_oscillates(self, headline_trace):
        """Test p_f swings between near zero and near one."""
        window = headline_trace.probabilities[: 4 * headline_trace.t_f + 1]
        assert window.min() <= 0.02
        assert window.max() >= 0.95

    def test_target_overlap_tracks_finding_probability(self, headline_trace):
        """Test the loop-uniform target state captures almost all of p_f."""
        assert headline_trace.p_f_target == pytest.approx(headline_trace.p_f, abs=0.02)

    @pytest.mark.parametrize("n", [48, 98])
    def test_closed_form_prediction(self, n, headline_trace):
        """Test the empirical t_f is within two steps of pi/(2 theta_1)."""
        trace = headline_trace if n == 98 else run_search(n, t_max=2 * (n + 2))
        assert abs(trace.t_f - predicted_tf(n)) <= 2
