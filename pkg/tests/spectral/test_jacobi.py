"""Tests for the Jacobi eigensolver."""

import numpy as np
import pytest

from sqwalk import ConvergenceError, NotSymmetricError
from sqwalk.spectral import symmetric_eigen
from sqwalk.walk import grover


class TestSymmetricEigen:
    """Test symmetric_eigen function."""

    def test_diagonal_matrix(self):
        """Test a diagonal input needs no rotations and sorts descending."""
        pairs = symmetric_eigen(np.diag([3.0, 1.0, 2.0]))
        assert [p.eigenvalue for p in pairs] == [3.0, 2.0, 1.0]
        np.testing.assert_allclose(np.abs(pairs[1].eigenvector), [0.0, 0.0, 1.0])

    def test_grover_spectrum(self):
        """Test G_3 has eigenvalues 1, -1, -1."""
        values = [p.eigenvalue for p in symmetric_eigen(grover(3))]
        np.testing.assert_allclose(values, [1.0, -1.0, -1.0], atol=1e-12)

    def test_matches_numpy(self):
        """Test eigenvalues agree with numpy on a random symmetric matrix."""
        rng = np.random.default_rng(11)
        a = rng.normal(size=(9, 9))
        a = a + a.T
        values = [p.eigenvalue for p in symmetric_eigen(a)]
        np.testing.assert_allclose(values, np.sort(np.linalg.eigvalsh(a))[::-1], atol=1e-10)

    def test_reconstruction(self):
        """Test V diag(lambda) V^T recovers the input with orthonormal V."""
        rng = np.random.default_rng(3)
        a = rng.normal(size=(6, 6))
        a = (a + a.T) / 2
        pairs = symmetric_eigen(a)
        v = np.column_stack([p.eigenvector for p in pairs])
        lam = np.diag([p.eigenvalue for p in pairs])
        np.testing.assert_allclose(v @ lam @ v.T, a, atol=1e-10)
        np.testing.assert_allclose(v.T @ v, np.eye(6), atol=1e-10)
        assert max(p.residual for p in pairs) < 1e-10

    def test_does_not_modify_input(self):
        """Test the input array is left untouched."""
        a = np.array([[2.0, 1.0], [1.0, 2.0]])
        copy = a.copy()
        symmetric_eigen(a)
        np.testing.assert_array_equal(a, copy)

    @pytest.mark.parametrize(
        "matrix",
        [np.ones((2, 3)), np.array([[1.0, 2.0], [0.0, 1.0]]), np.ones(4)],
        ids=["rectangular", "asymmetric", "vector"],
    )
    def test_rejects_non_symmetric(self, matrix):
        """Test non-square or asymmetric input."""
        with pytest.raises(NotSymmetricError):
            symmetric_eigen(matrix)

    def test_sweep_limit(self):
        """Test ConvergenceError when no sweeps are allowed."""
        with pytest.raises(ConvergenceError) as exc_info:
            symmetric_eigen(np.array([[2.0, 1.0], [1.0, 2.0]]), max_sweeps=0)
        assert exc_info.value.sweeps == 0
        assert exc_info.value.off_norm == pytest.approx(np.sqrt(2))
