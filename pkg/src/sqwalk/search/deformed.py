"""The deformed duplication graph ``G_*`` and the reduced search walk on its arcs."""

import logging
from typing import Optional

import numpy as np

from .._core.exceptions import UnsupportedComplexError
from ..graphs import (
    COPY,
    ORIGINAL,
    DirectedMultigraph,
    Intertwiner,
    arc_intertwiner,
    coin_layer,
    max_deviation,
    oriented_pair_space,
    shift_layer,
)
from ..simplicial import OrientationAssignment, SimplicialComplex, boundary_faces
from ..walk import BlockUnitary, StateVector
from .marked import MarkedFace
from .operator import build_search_operator

log: logging.Logger = logging.getLogger(__name__)


def deformed_graph(complex_: SimplicialComplex, marked: MarkedFace) -> DirectedMultigraph:
    """``D(G_a)`` with the four arcs across the marked face rewired as self loops.

    Vertices are ``("orig", i)`` and ``("copy", i)`` for facet positions ``i``.
    Each removed arc becomes a loop at its terminus, so every vertex keeps degree
    ``n+1``. With ``(i, j) = marked.facet_indices`` the loops sit, in arc order,
    at ``orig i``, ``orig j``, ``copy i`` and ``copy j``.
    """
    boundary = boundary_faces(complex_)
    if boundary:
        raise UnsupportedComplexError(
            f"search needs a complex without boundary; found {len(boundary)} boundary faces"
        )
    count = len(complex_.facets)
    vertices = [(ORIGINAL, i) for i in range(count)]
    vertices.extend((COPY, i) for i in range(count))
    sides = {v: v[0] for v in vertices}

    cut = tuple(sorted(marked.facet_indices))
    edges = []
    for i, j in complex_.adjacent_facets():
        if (i, j) == cut:
            continue
        edges.append(((ORIGINAL, i), (COPY, j)))
        edges.append(((ORIGINAL, j), (COPY, i)))
    i, j = cut
    edges.extend((v, v) for v in ((ORIGINAL, i), (ORIGINAL, j), (COPY, i), (COPY, j)))
    graph = DirectedMultigraph.from_edges(vertices, edges, sides)
    log.debug("Built deformed graph: %d vertices, %d arcs", len(graph.vertices), graph.num_arcs)
    return graph


def gamma_star(graph: DirectedMultigraph) -> BlockUnitary:
    """``Gamma_* = C S_*``: the shift (loops flip sign) acts first, then Grover coins."""
    return BlockUnitary([shift_layer(graph, loop_phase=-1.0), coin_layer(graph)])


def loop_indices(graph: DirectedMultigraph) -> np.ndarray:
    return np.flatnonzero(graph.is_loop)


def target_state(graph: DirectedMultigraph) -> StateVector:
    """``1/2`` on each of the four loops, zero elsewhere."""
    loops = loop_indices(graph)
    state = np.zeros(graph.num_arcs, dtype=np.complex128)
    state[loops] = 1.0 / np.sqrt(loops.size)
    return state


def search_intertwiner(
    complex_: SimplicialComplex,
    marked: MarkedFace,
    orientation: Optional[OrientationAssignment] = None,
) -> Intertwiner:
    """Pair space onto the arcs of ``G_*``; marked pairs land on the loops."""
    space = oriented_pair_space(complex_, orientation)
    return arc_intertwiner(space, deformed_graph(complex_, marked), marked.target)


def verify_search_equivalence(
    complex_: SimplicialComplex,
    marked: MarkedFace,
    orientation: Optional[OrientationAssignment] = None,
) -> float:
    """Max elementwise deviation between ``W U_* W^-1`` and ``Gamma_*`` (dense)."""
    space = oriented_pair_space(complex_, orientation)
    graph = deformed_graph(complex_, marked)
    w = arc_intertwiner(space, graph, marked.target)
    perturbed = build_search_operator(space, marked).to_dense()
    deviation = max_deviation(w.conjugate(perturbed), gamma_star(graph).to_dense())
    log.info("Search operator/reduced walk deviation: %.3e", deviation)
    return deviation
