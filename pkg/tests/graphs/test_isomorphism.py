"""Tests for the constructive isomorphism onto G_cap."""

import pytest

from sqwalk import IsomorphismError, UnsupportedComplexError
from sqwalk.graphs import verify_isomorphism
from sqwalk.graphs.isomorphism import _xi
from sqwalk.simplicial import OrientedSimplex, find_orientation, sphere_triangulation


class TestVerifyIsomorphism:
    """Test verify_isomorphism function."""

    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
    def test_spheres(self, n):
        """Test the map is an isomorphism on sphere triangulations."""
        result = verify_isomorphism(sphere_triangulation(n))
        assert result
        assert len(result.source.vertices) == len(result.target.vertices)

    @pytest.mark.parametrize("name", ["glued_triangles", "single_triangle", "octahedron"])
    def test_other_orientable_complexes(self, name, request):
        """Test complexes with and without boundary."""
        assert verify_isomorphism(request.getfixturevalue(name)).is_isomorphic

    def test_mapping_of_facet_vertices(self, glued_triangles):
        """Test original and copy vertices map to the two orientations of their facet."""
        result = verify_isomorphism(glued_triangles)
        assert result.mapping[("orig", 0)] == ("F", OrientedSimplex((0, 1, 2), 1))
        assert result.mapping[("copy", 0)] == ("F", OrientedSimplex((0, 1, 2), -1))
        assert result.mapping[("orig", 1)] == ("F", OrientedSimplex((1, 2, 3), -1))

    def test_rejects_non_orientable(self, mobius):
        """Test no isomorphism is claimed for the Moebius strip."""
        with pytest.raises(UnsupportedComplexError, match="duplication-type"):
            verify_isomorphism(mobius)

    def test_unknown_label(self, sphere2):
        """Test labels outside the construction are rejected."""
        with pytest.raises(IsomorphismError, match="unexpected vertex"):
            _xi(("mystery", 0), sphere2, find_orientation(sphere2))
