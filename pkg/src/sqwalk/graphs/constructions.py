"""Graphs derived from a complex: induced bipartite, associated, duplication, subdivision."""

import logging
from itertools import combinations

from .._core.exceptions import GraphError
from ..simplicial import SimplicialComplex, boundary_faces
from ..walk import PairSpace
from .multigraph import DirectedMultigraph, Vertex

log: logging.Logger = logging.getLogger(__name__)

X_E = "X_E"
X_F = "X_F"
ORIGINAL = "orig"
COPY = "copy"


def induced_bipartite(space: PairSpace) -> DirectedMultigraph:
    """``G_cap``: oriented faces ``("E", tau)`` and oriented facets ``("F", sigma)``,
    one edge per pair ``(sigma, tau)``."""
    vertices: list[Vertex] = [("E", tau) for tau in space.e_blocks]
    vertices.extend(("F", sigma) for sigma in space.f_blocks)
    sides = {v: (X_E if v[0] == "E" else X_F) for v in vertices}
    edges = [(("F", sigma), ("E", tau)) for sigma, tau in space.pairs]
    return DirectedMultigraph.from_edges(vertices, edges, sides)


def associated_graph(complex_: SimplicialComplex) -> DirectedMultigraph:
    """``G_a``: facets, adjacent when they share a primary face.

    Vertices are facet positions in ``complex_.facets``.
    """
    indices = range(len(complex_.facets))
    return DirectedMultigraph.from_edges(
        indices, complex_.adjacent_facets(), {i: "facet" for i in indices}
    )


def _require_simple(graph: DirectedMultigraph, name: str) -> None:
    if graph.loops or any(arc.key for arc in graph.arcs):
        raise GraphError(f"{name} expects a simple graph")


def duplication(graph: DirectedMultigraph) -> DirectedMultigraph:
    """``D(G)``: vertices ``("orig", v)`` and ``("copy", v)``.

    ``u`` is joined to ``phi(v)`` iff ``uv`` is an edge of ``G``.
    """
    _require_simple(graph, "duplication")
    vertices: list[Vertex] = [(ORIGINAL, v) for v in graph.vertices]
    vertices.extend((COPY, v) for v in graph.vertices)
    sides = {v: v[0] for v in vertices}
    edges = []
    for edge in graph.edges:
        u, v = edge.origin, edge.terminus
        edges.append(((ORIGINAL, u), (COPY, v)))
        edges.append(((ORIGINAL, v), (COPY, u)))
    return DirectedMultigraph.from_edges(vertices, edges, sides)


def subdivision(graph: DirectedMultigraph) -> DirectedMultigraph:
    """``S(G)``: every edge ``uv`` becomes a vertex ``("edge", u, v, key)`` of degree two."""
    if graph.loops:
        raise GraphError("subdivision expects a graph without self loops")
    vertices: list[Vertex] = list(graph.vertices)
    sides = {v: "V" for v in graph.vertices}
    edges = []
    for edge in graph.edges:
        middle = ("edge", edge.origin, edge.terminus, edge.key)
        vertices.append(middle)
        sides[middle] = "E"
        edges.append((edge.origin, middle))
        edges.append((edge.terminus, middle))
    return DirectedMultigraph.from_edges(vertices, edges, sides)


def attach_bunches(graph: DirectedMultigraph, complex_: SimplicialComplex) -> DirectedMultigraph:
    """Hang one pendant vertex per boundary primary face on each facet vertex and its copy.

    Pendants are labelled ``("bunch", i, face, +1)`` at ``("orig", i)`` and
    ``("bunch", i, face, -1)`` at ``("copy", i)``, ``i`` being the facet position.
    """
    boundary = set(boundary_faces(complex_))
    vertices: list[Vertex] = list(graph.vertices)
    sides = dict(graph.sides)
    edges = [(e.origin, e.terminus) for e in graph.edges]
    for i, facet in enumerate(complex_.facets):
        for face in combinations(facet, len(facet) - 1):
            if face not in boundary:
                continue
            for sign, tag in ((1, ORIGINAL), (-1, COPY)):
                anchor = (tag, i)
                if anchor not in graph.vertex_index:
                    raise GraphError(f"graph has no vertex {anchor!r} to attach a bunch to")
                pendant = ("bunch", i, face, sign)
                vertices.append(pendant)
                sides[pendant] = "bunch"
                edges.append((anchor, pendant))
    log.debug("Attached %d bunch vertices", len(vertices) - len(graph.vertices))
    return DirectedMultigraph.from_edges(vertices, edges, sides)
