"""Tests for graphs derived from a complex."""

import pytest

from sqwalk import GraphError
from sqwalk.graphs import (
    COPY,
    ORIGINAL,
    DirectedMultigraph,
    associated_graph,
    attach_bunches,
    duplication,
    induced_bipartite,
    subdivision,
)
from sqwalk.walk import pair_space


class TestInducedBipartite:
    """Test induced_bipartite function."""

    def test_tetrahedron_counts(self, sphere2):
        """Test G_cap has one vertex per oriented face and facet and one edge per pair."""
        graph = induced_bipartite(pair_space(sphere2))
        assert len(graph.vertices) == 20
        assert len(graph.edges) == 24
        assert graph.is_bipartite()

    def test_sides(self, sphere2):
        """Test vertices are tagged by side."""
        graph = induced_bipartite(pair_space(sphere2))
        sides = [graph.sides[v] for v in graph.vertices]
        assert sides.count("X_E") == 12
        assert sides.count("X_F") == 8


class TestAssociatedGraph:
    """Test associated_graph function."""

    def test_sphere_gives_complete_graph(self, sphere3):
        """Test G_a of the boundary of the 4-simplex is K_5."""
        graph = associated_graph(sphere3)
        assert graph.vertices == (0, 1, 2, 3, 4)
        assert len(graph.edges) == 10

    def test_glued_triangles(self, glued_triangles):
        """Test two facets sharing an edge give a single edge."""
        graph = associated_graph(glued_triangles)
        assert [(e.origin, e.terminus) for e in graph.edges] == [(0, 1)]


class TestDuplication:
    """Test duplication function."""

    def test_k4(self, sphere2):
        """Test D(K_4) has 8 vertices, 12 edges and 24 arcs."""
        graph = duplication(associated_graph(sphere2))
        assert len(graph.vertices) == 8
        assert len(graph.edges) == 12
        assert graph.num_arcs == 24
        assert graph.is_bipartite()

    def test_edges_cross_copies(self, glued_triangles):
        """Test every edge joins an original vertex to a copy."""
        graph = duplication(associated_graph(glued_triangles))
        edges = {frozenset((e.origin, e.terminus)) for e in graph.edges}
        assert edges == {
            frozenset(((ORIGINAL, 0), (COPY, 1))),
            frozenset(((ORIGINAL, 1), (COPY, 0))),
        }

    def test_rejects_loops(self):
        """Test duplication needs a simple graph."""
        graph = DirectedMultigraph.from_edges([0, 1], [(0, 1), (1, 1)])
        with pytest.raises(GraphError, match="simple"):
            duplication(graph)


class TestSubdivisionAndBunches:
    """Test subdivision and attach_bunches."""

    def test_subdivision_counts(self, sphere2):
        """Test each edge becomes a degree-two vertex."""
        base = duplication(associated_graph(sphere2))
        split = subdivision(base)
        assert len(split.vertices) == 8 + 12
        assert len(split.edges) == 24
        middles = [v for v in split.vertices if split.sides[v] == "E"]
        assert all(split.in_degree(v) == 2 for v in middles)

    def test_subdivision_rejects_loops(self):
        """Test subdividing a loop is refused."""
        graph = DirectedMultigraph.from_edges([0], [(0, 0)])
        with pytest.raises(GraphError):
            subdivision(graph)

    def test_glued_triangles_with_bunches(self, glued_triangles):
        """Test two pendants per boundary face: 14 vertices and 12 edges."""
        graph = attach_bunches(
            subdivision(duplication(associated_graph(glued_triangles))), glued_triangles
        )
        assert len(graph.vertices) == 14
        assert len(graph.edges) == 12
        pendants = [v for v in graph.vertices if graph.sides[v] == "bunch"]
        assert len(pendants) == 8
        assert ("bunch", 0, (0, 1), 1) in graph.vertex_index
        assert ("bunch", 1, (2, 3), -1) in graph.vertex_index

    def test_bunches_need_duplication_vertices(self, glued_triangles):
        """Test attaching to a graph without the facet vertices fails."""
        with pytest.raises(GraphError, match="attach a bunch"):
            attach_bunches(associated_graph(glued_triangles), glued_triangles)
