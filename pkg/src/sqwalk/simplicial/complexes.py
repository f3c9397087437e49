"""Simplicial complexes built from facet lists."""

import logging
from collections import defaultdict
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Any, Iterable, Optional, Union

import networkx as nx
import numpy as np
import numpy.typing as npt

from .._core.exceptions import InvalidComplexError, NonPureComplexError, UnsupportedComplexError
from .simplex import Simplex

log: logging.Logger = logging.getLogger(__name__)

GraphLike = Union[nx.Graph, tuple[Iterable[int], Iterable[tuple[int, int]]]]


@dataclass(frozen=True)
class SimplicialComplex:
    """A face-closed collection of simplices, stored through its facets.

    The per-dimension simplex sets ``K_k`` are derived lazily from the facets and
    cached, so high-dimensional complexes with few facets stay cheap as long as
    only dimensions close to the top are requested.
    """

    facets: tuple[Simplex, ...]
    _cache: dict[int, tuple[Simplex, ...]] = field(
        default_factory=dict, init=False, repr=False, compare=False
    )

    @property
    def dim(self) -> int:
        return max(len(f) for f in self.facets) - 1

    @property
    def is_pure(self) -> bool:
        return len({len(f) for f in self.facets}) == 1

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted({v for f in self.facets for v in f}))

    def simplices(self, k: int) -> tuple[Simplex, ...]:
        """All k-simplices in lexicographic order."""
        if k < 0 or k > self.dim:
            return ()
        cached = self._cache.get(k)
        if cached is None:
            found: set[Simplex] = set()
            for facet in self.facets:
                if len(facet) > k:
                    found.update(combinations(facet, k + 1))
            cached = tuple(sorted(found))
            self._cache[k] = cached
        return cached

    @property
    def all_simplices(self) -> dict[int, tuple[Simplex, ...]]:
        return {k: self.simplices(k) for k in range(self.dim + 1)}

    def f_vector(self) -> tuple[int, ...]:
        return tuple(len(self.simplices(k)) for k in range(self.dim + 1))

    def __contains__(self, simplex: Any) -> bool:
        key = tuple(sorted(simplex))
        return any(set(key) <= set(f) for f in self.facets)

    def cofaces(self, face: Iterable[int]) -> tuple[Simplex, ...]:
        """Facets containing ``face``."""
        key = set(face)
        return tuple(f for f in self.facets if key <= set(f))

    @cached_property
    def facet_index(self) -> dict[Simplex, int]:
        return {facet: i for i, facet in enumerate(self.facets)}

    @cached_property
    def incidence(self) -> npt.NDArray[np.bool_]:
        """Facet-by-vertex incidence matrix, columns in :attr:`vertices` order."""
        column = {v: k for k, v in enumerate(self.vertices)}
        matrix = np.zeros((len(self.facets), len(column)), dtype=bool)
        for i, facet in enumerate(self.facets):
            matrix[i, [column[v] for v in facet]] = True
        return matrix

    def adjacent_facets(self) -> list[tuple[int, int]]:
        """Index pairs ``i < j`` of facets sharing a primary face."""
        self.require_pure()
        counts = self.incidence.astype(np.int32)
        overlap = counts @ counts.T
        rows, cols = np.nonzero(np.triu(overlap == self.dim, k=1))
        return list(zip(rows.tolist(), cols.tolist()))

    def primary_face_cofaces(self) -> dict[Simplex, tuple[Simplex, ...]]:
        """Map each (n-1)-simplex of a pure complex to its cofacets."""
        self.require_pure()
        table: dict[Simplex, list[Simplex]] = defaultdict(list)
        for facet in self.facets:
            for face in combinations(facet, len(facet) - 1):
                table[face].append(facet)
        return {face: tuple(table[face]) for face in sorted(table)}

    def require_pure(self) -> None:
        if not self.is_pure:
            raise NonPureComplexError(
                "complex is not pure", dimensions=[len(f) - 1 for f in self.facets]
            )


def build_complex(facets: Iterable[Iterable[int]]) -> SimplicialComplex:
    """Build the face closure of a facet list.

    Duplicate and non-maximal entries are dropped, so the stored facets are the
    maximal simplices, ordered lexicographically.
    """
    candidates: set[Simplex] = set()
    for raw in facets:
        vertices = list(raw)
        if not vertices:
            raise InvalidComplexError("facets must be nonempty")
        for v in vertices:
            if isinstance(v, bool) or not isinstance(v, int) or v < 0:
                raise InvalidComplexError(f"vertex ids must be nonnegative integers, got {v!r}")
        if len(set(vertices)) != len(vertices):
            raise InvalidComplexError(f"facet {tuple(vertices)} repeats a vertex")
        candidates.add(tuple(sorted(vertices)))
    if not candidates:
        raise InvalidComplexError("facet list is empty")

    by_size = sorted(candidates, key=len, reverse=True)
    maximal: list[Simplex] = []
    for simplex in by_size:
        as_set = set(simplex)
        if not any(as_set < set(m) for m in maximal if len(m) > len(simplex)):
            maximal.append(simplex)
    complex_ = SimplicialComplex(tuple(sorted(maximal)))
    log.debug("Built complex of dimension %d with %d facets", complex_.dim, len(maximal))
    return complex_


def _as_graph(graph: GraphLike) -> nx.Graph:
    if isinstance(graph, nx.Graph):
        if graph.is_directed() or graph.is_multigraph():
            raise InvalidComplexError("clique complexes need a simple undirected graph")
        return graph
    vertices, edges = graph
    result = nx.Graph()
    result.add_nodes_from(vertices)
    result.add_edges_from(edges)
    return result


def clique_complex(graph: GraphLike) -> SimplicialComplex:
    """Clique complex: one m-simplex per complete subgraph on m+1 vertices."""
    g = _as_graph(graph)
    if nx.number_of_selfloops(g):
        raise InvalidComplexError("clique complexes need a graph without self loops")
    if g.number_of_nodes() == 0:
        raise InvalidComplexError("graph has no vertices")
    return build_complex(nx.find_cliques(g))


def skeleton(complex_: SimplicialComplex, m: int) -> SimplicialComplex:
    """The m-skeleton: every simplex of dimension <= m."""
    if m < 0 or m > complex_.dim:
        raise InvalidComplexError(f"skeleton dimension must be in [0, {complex_.dim}], got {m}")
    facets = list(complex_.simplices(m))
    facets.extend(f for f in complex_.facets if len(f) - 1 < m)
    return build_complex(facets)


def sphere_triangulation(n: int) -> SimplicialComplex:
    """The n-skeleton of the clique complex of K_{n+2}: the boundary of an (n+1)-simplex."""
    if isinstance(n, bool) or not isinstance(n, int) or n < 2:
        raise UnsupportedComplexError(f"sphere triangulation needs n >= 2, got {n!r}")
    return skeleton(clique_complex(nx.complete_graph(n + 2)), n)


def _opposite_vertices(complex_: SimplicialComplex) -> list[set[int]]:
    """For each facet, the vertices whose opposite primary face has a second coface."""
    covered: list[set[int]] = [set() for _ in complex_.facets]
    pairs = complex_.adjacent_facets()
    if not pairs:
        return covered
    incidence = complex_.incidence
    vertices = np.asarray(complex_.vertices)
    first, second = (np.asarray(side) for side in zip(*pairs))
    dropped_first = vertices[(incidence[first] & ~incidence[second]).argmax(axis=1)]
    dropped_second = vertices[(incidence[second] & ~incidence[first]).argmax(axis=1)]
    for i, j, u, v in zip(first.tolist(), second.tolist(), dropped_first, dropped_second):
        covered[i].add(int(u))
        covered[j].add(int(v))
    return covered


def boundary_faces(complex_: SimplicialComplex) -> tuple[Simplex, ...]:
    """(n-1)-simplices with exactly one coface."""
    complex_.require_pure()
    boundary = set()
    for facet, covered in zip(complex_.facets, _opposite_vertices(complex_)):
        boundary.update(tuple(w for w in facet if w != v) for v in facet if v not in covered)
    return tuple(sorted(boundary))


@dataclass(frozen=True)
class StrongConnectivity:
    connected: bool
    reason: Optional[str] = None

    def __bool__(self) -> bool:
        return self.connected


def facet_adjacency(complex_: SimplicialComplex) -> nx.Graph:
    """Facets joined when they share a primary face."""
    graph = nx.Graph()
    graph.add_nodes_from(complex_.facets)
    graph.add_edges_from(
        (complex_.facets[i], complex_.facets[j]) for i, j in complex_.adjacent_facets()
    )
    return graph


def strong_connectivity(complex_: SimplicialComplex) -> StrongConnectivity:
    if not complex_.is_pure:
        return StrongConnectivity(False, "non-pure")
    if complex_.dim == 0:
        if len(complex_.facets) == 1:
            return StrongConnectivity(True)
        return StrongConnectivity(False, "disconnected")
    if nx.is_connected(facet_adjacency(complex_)):
        return StrongConnectivity(True)
    return StrongConnectivity(False, "disconnected")


def is_strongly_connected(complex_: SimplicialComplex) -> bool:
    return strong_connectivity(complex_).connected
