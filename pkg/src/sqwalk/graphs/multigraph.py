"""Directed multigraphs with symmetric arc sets and optional self loops."""

from collections import Counter
from functools import cached_property
from typing import Hashable, Iterable, Mapping, NamedTuple, Optional, Sequence

import networkx as nx
import numpy as np
import numpy.typing as npt
from typing_extensions import override

from .._core.exceptions import GraphError
from ..types.complexes import GraphExport

Vertex = Hashable


class Arc(NamedTuple):
    origin: Vertex
    terminus: Vertex
    key: int = 0

    @property
    def is_loop(self) -> bool:
        return self.origin == self.terminus

    def reversed(self) -> "Arc":
        return Arc(self.terminus, self.origin, self.key)


class DirectedMultigraph:
    """Vertices with side tags and arcs ``(origin, terminus, key)``.

    Arcs are kept sorted by (terminus, origin, key) in vertex order, so the arcs
    entering a vertex are contiguous. Every non-loop arc must have its inverse in
    the arc set; a self loop is its own inverse.
    """

    def __init__(
        self,
        vertices: Sequence[Vertex],
        arcs: Iterable[Arc],
        sides: Optional[Mapping[Vertex, str]] = None,
    ) -> None:
        self.vertices = tuple(vertices)
        self.vertex_index = {v: i for i, v in enumerate(self.vertices)}
        if len(self.vertex_index) != len(self.vertices):
            raise GraphError("vertex labels must be unique")
        self.sides = dict(sides or {})

        arc_list = [Arc(*arc) for arc in arcs]
        for arc in arc_list:
            if arc.origin not in self.vertex_index or arc.terminus not in self.vertex_index:
                raise GraphError(f"arc {arc} references an unknown vertex")
        if len(set(arc_list)) != len(arc_list):
            raise GraphError("arc identifiers must be unique")
        pos = self.vertex_index
        self.arcs = tuple(
            sorted(arc_list, key=lambda a: (pos[a.terminus], pos[a.origin], a.key))
        )
        self.arc_index = {arc: i for i, arc in enumerate(self.arcs)}

        inverse = np.empty(len(self.arcs), dtype=np.intp)
        for i, arc in enumerate(self.arcs):
            j = self.arc_index.get(arc.reversed())
            if j is None:
                raise GraphError(f"arc set is not symmetric: {arc} has no inverse")
            inverse[i] = j
        self.inverse: npt.NDArray[np.intp] = inverse
        self.is_loop: npt.NDArray[np.bool_] = np.array(
            [arc.is_loop for arc in self.arcs], dtype=bool
        )

    @classmethod
    def from_edges(
        cls,
        vertices: Sequence[Vertex],
        edges: Iterable[tuple[Vertex, Vertex]],
        sides: Optional[Mapping[Vertex, str]] = None,
    ) -> "DirectedMultigraph":
        """One arc pair per edge (one arc per loop); parallel edges get increasing keys."""
        multiplicity: Counter[frozenset[Vertex]] = Counter()
        arcs = []
        for u, v in edges:
            pair = frozenset((u, v))
            key = multiplicity[pair]
            multiplicity[pair] += 1
            arcs.append(Arc(u, v, key))
            if u != v:
                arcs.append(Arc(v, u, key))
        return cls(vertices, arcs, sides)

    @override
    def __repr__(self) -> str:
        return f"DirectedMultigraph(vertices={len(self.vertices)}, arcs={len(self.arcs)})"

    @property
    def num_arcs(self) -> int:
        return len(self.arcs)

    @property
    def loops(self) -> tuple[Arc, ...]:
        return tuple(arc for arc in self.arcs if arc.is_loop)

    @cached_property
    def edges(self) -> tuple[Arc, ...]:
        """One representative arc per edge: origin before terminus in vertex order, or a loop."""
        pos = self.vertex_index
        return tuple(arc for arc in self.arcs if pos[arc.origin] <= pos[arc.terminus])

    @cached_property
    def _edge_positions(self) -> dict[Arc, int]:
        return {arc: i for i, arc in enumerate(self.edges)}

    def edge_position(self, u: Vertex, v: Vertex, key: int = 0) -> int:
        """Index of the edge ``uv`` in :attr:`edges`."""
        positions = self._edge_positions
        found = positions.get(Arc(u, v, key))
        if found is None:
            found = positions.get(Arc(v, u, key))
        if found is None:
            raise GraphError(f"no edge between {u!r} and {v!r} (key {key})")
        return found

    @cached_property
    def _in_arcs(self) -> dict[Vertex, tuple[int, ...]]:
        table: dict[Vertex, list[int]] = {v: [] for v in self.vertices}
        for i, arc in enumerate(self.arcs):
            table[arc.terminus].append(i)
        return {v: tuple(ids) for v, ids in table.items()}

    def in_arcs(self, vertex: Vertex) -> tuple[int, ...]:
        return self._in_arcs[vertex]

    def in_degree(self, vertex: Vertex) -> int:
        return len(self._in_arcs[vertex])

    def out_degree(self, vertex: Vertex) -> int:
        return sum(1 for arc in self.arcs if arc.origin == vertex)

    @cached_property
    def _incident(self) -> dict[Vertex, tuple[int, ...]]:
        table: dict[Vertex, list[int]] = {v: [] for v in self.vertices}
        for i, edge in enumerate(self.edges):
            table[edge.origin].append(i)
            if not edge.is_loop:
                table[edge.terminus].append(i)
        return {v: tuple(ids) for v, ids in table.items()}

    def incident_edges(self, vertex: Vertex) -> tuple[int, ...]:
        return self._incident[vertex]

    def neighbours(self, vertex: Vertex) -> list[Vertex]:
        return [self.arcs[i].origin for i in self._in_arcs[vertex]]

    def to_networkx(self) -> nx.MultiDiGraph:
        graph = nx.MultiDiGraph()
        for v in self.vertices:
            graph.add_node(v, side=self.sides.get(v))
        for arc in self.arcs:
            graph.add_edge(arc.origin, arc.terminus, key=arc.key)
        return graph

    def is_connected(self) -> bool:
        if not self.vertices:
            return False
        return bool(nx.is_weakly_connected(self.to_networkx()))

    def is_bipartite(self) -> bool:
        if self.loops:
            return False
        simple = nx.Graph()
        simple.add_nodes_from(self.vertices)
        simple.add_edges_from((e.origin, e.terminus) for e in self.edges)
        return bool(nx.is_bipartite(simple))

    def to_edge_list(self) -> GraphExport:
        """Edge-list export with vertex labels rendered as strings."""
        return GraphExport(
            vertices=[str(v) for v in self.vertices],
            sides={str(v): side for v, side in self.sides.items()},
            edges=[(str(e.origin), str(e.terminus)) for e in self.edges if not e.is_loop],
            loops=[str(e.origin) for e in self.edges if e.is_loop],
        )

    def to_json(self) -> str:
        return self.to_edge_list().to_json()
