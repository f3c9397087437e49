"""Tests for the complexes resource."""

import networkx as nx


class TestComplexes:
    """Test Complexes resource."""

    def test_sphere(self, simulator):
        """Test the sphere triangulation."""
        assert len(simulator.complexes.sphere(3).facets) == 5

    def test_clique(self, simulator):
        """Test the clique complex."""
        assert simulator.complexes.clique(nx.cycle_graph(4)).dim == 1

    def test_dump_and_load(self, simulator, tmp_path, mobius):
        """Test files written by dump are read back by load."""
        path = tmp_path / "mobius.json"
        simulator.complexes.dump(mobius, path)
        assert simulator.complexes.load(path).facets == mobius.facets
