"""Simplicial complexes and oriented-simplex combinatorics."""

from .complexes import (
    GraphLike,
    SimplicialComplex,
    StrongConnectivity,
    boundary_faces,
    build_complex,
    clique_complex,
    facet_adjacency,
    is_strongly_connected,
    skeleton,
    sphere_triangulation,
    strong_connectivity,
)
from .io import dump_complex, load_complex, parse_complex
from .orientation import (
    OrientationAssignment,
    SkeletonOrientability,
    find_orientation,
    induced_face,
    is_non_contradicted,
    is_orientable,
    orientation_filtration,
)
from .simplex import OrientedSimplex, Simplex, induced_primary_faces, permutation_parity

__all__ = [
    "Simplex",
    "OrientedSimplex",
    "permutation_parity",
    "induced_primary_faces",
    "GraphLike",
    "SimplicialComplex",
    "StrongConnectivity",
    "build_complex",
    "clique_complex",
    "skeleton",
    "sphere_triangulation",
    "boundary_faces",
    "facet_adjacency",
    "strong_connectivity",
    "is_strongly_connected",
    "OrientationAssignment",
    "SkeletonOrientability",
    "find_orientation",
    "induced_face",
    "is_non_contradicted",
    "is_orientable",
    "orientation_filtration",
    "load_complex",
    "dump_complex",
    "parse_complex",
]
