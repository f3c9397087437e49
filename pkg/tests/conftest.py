"""Shared pytest fixtures for sqwalk tests."""

import itertools

import pytest

from sqwalk import Simulator
from sqwalk.simplicial import SimplicialComplex, build_complex, sphere_triangulation


@pytest.fixture
def sphere2() -> SimplicialComplex:
    """Boundary of the tetrahedron."""
    return sphere_triangulation(2)


@pytest.fixture
def sphere3() -> SimplicialComplex:
    return sphere_triangulation(3)


@pytest.fixture
def glued_triangles() -> SimplicialComplex:
    """Two triangles sharing the edge (1, 2); four boundary edges."""
    return build_complex([[0, 1, 2], [1, 2, 3]])


@pytest.fixture
def single_triangle() -> SimplicialComplex:
    return build_complex([[0, 1, 2]])


@pytest.fixture
def octahedron() -> SimplicialComplex:
    """Boundary of the cross polytope: an orientable 2-sphere with 8 facets."""
    return build_complex(itertools.product((0, 1), (2, 3), (4, 5)))


@pytest.fixture
def mobius() -> SimplicialComplex:
    """Five-vertex Moebius strip."""
    return build_complex([[i, (i + 1) % 5, (i + 2) % 5] for i in range(5)])


@pytest.fixture
def mobius6() -> SimplicialComplex:
    """Moebius strip from three twisted squares, two triangles each; boundary 0-1-2-3-4-5."""
    return build_complex([[0, 1, 3], [1, 3, 4], [1, 2, 4], [2, 4, 5], [2, 3, 5], [3, 5, 0]])


@pytest.fixture
def junction() -> SimplicialComplex:
    """Three triangles on the edge (0, 1)."""
    return build_complex([[0, 1, 2], [0, 1, 3], [0, 1, 4]])


@pytest.fixture
def simulator(monkeypatch: pytest.MonkeyPatch):
    """Simulator with default settings, independent of the environment."""
    for name in ("SQWALK_WORKERS", "SQWALK_T_MAX_FACTOR", "SQWALK_DENSE_LIMIT"):
        monkeypatch.delenv(name, raising=False)
    with Simulator(workers=2) as sim:
        yield sim
