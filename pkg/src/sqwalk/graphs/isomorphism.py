"""The constructive isomorphism between the bunched subdivided duplication graph and G_cap."""

import logging
from collections import Counter
from dataclasses import dataclass
from typing import Any, Optional

from .._core.exceptions import IsomorphismError, NonOrientableError, UnsupportedComplexError
from ..simplicial import OrientationAssignment, SimplicialComplex, find_orientation, induced_face
from ..walk import pair_space
from .constructions import (
    COPY,
    ORIGINAL,
    associated_graph,
    attach_bunches,
    duplication,
    induced_bipartite,
    subdivision,
)
from .multigraph import DirectedMultigraph, Vertex

log: logging.Logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IsomorphismResult:
    is_isomorphic: bool
    mapping: dict[Vertex, Vertex]
    source: DirectedMultigraph
    target: DirectedMultigraph

    def __bool__(self) -> bool:
        return self.is_isomorphic


def _edge_multiset(
    graph: DirectedMultigraph, relabel: Optional[dict[Vertex, Any]] = None
) -> Counter:
    def name(v: Vertex) -> Any:
        return relabel[v] if relabel is not None else v

    return Counter(frozenset((name(e.origin), name(e.terminus))) for e in graph.edges)


def _xi(
    vertex: Vertex, complex_: SimplicialComplex, orientation: OrientationAssignment
) -> tuple[str, Any]:
    kind = vertex[0]
    if kind == ORIGINAL:
        return ("F", orientation.oriented(complex_.facets[vertex[1]], 1))
    if kind == COPY:
        return ("F", orientation.oriented(complex_.facets[vertex[1]], -1))
    if kind == "edge":
        _, first, second, _ = vertex
        (_, i), (_, j) = sorted((first, second), key=lambda v: v[0] != ORIGINAL)
        facet, other = complex_.facets[i], complex_.facets[j]
        face = tuple(sorted(set(facet) & set(other)))
        return ("E", induced_face(facet, orientation.signs[facet], face))
    if kind == "bunch":
        _, i, face, sign = vertex
        facet = complex_.facets[i]
        return ("E", induced_face(facet, orientation.signs[facet] * sign, face))
    raise IsomorphismError(f"unexpected vertex label {vertex!r}")


def verify_isomorphism(
    complex_: SimplicialComplex, orientation: Optional[OrientationAssignment] = None
) -> IsomorphismResult:
    """Build ``xi`` from ``S(D(G_a)) + bunches`` to ``G_cap`` and check it edge by edge.

    ``("orig", i)`` goes to ``(f_i, +)``, ``("copy", i)`` to ``(f_i, -)``; the middle
    vertex of ``f_i - phi(f_j)`` goes to the face ``(f_i, +)`` induces on ``f_i & f_j`` and a
    bunch vertex to the orientation its facet side induces on the boundary face.
    """
    try:
        if orientation is None:
            orientation = find_orientation(complex_)
    except NonOrientableError as exc:
        raise UnsupportedComplexError(
            "non-orientable complexes are not duplication-type; no isomorphism is claimed"
        ) from exc

    target = induced_bipartite(pair_space(complex_, orientation))
    source = attach_bunches(subdivision(duplication(associated_graph(complex_))), complex_)
    mapping = {v: _xi(v, complex_, orientation) for v in source.vertices}

    image = set(mapping.values())
    bijective = (
        len(image) == len(mapping) == len(target.vertices)
        and image <= set(target.vertex_index)
    )
    preserved = bijective and _edge_multiset(source, mapping) == _edge_multiset(target)
    log.debug(
        "Isomorphism check: %d vertices, %d edges, result %s",
        len(source.vertices),
        len(source.edges),
        preserved,
    )
    return IsomorphismResult(preserved, mapping, source, target)
