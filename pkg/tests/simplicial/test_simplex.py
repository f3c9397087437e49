"""Tests for oriented simplices."""

import itertools

import pytest

from sqwalk import InvalidComplexError
from sqwalk.simplicial import OrientedSimplex, induced_primary_faces, permutation_parity


class TestPermutationParity:
    """Test permutation_parity function."""

    @pytest.mark.parametrize(
        ("ordering", "expected"),
        [((0, 1, 2), 1), ((1, 0, 2), -1), ((2, 0, 1), 1), ((2, 1, 0), -1), ((5,), 1)],
    )
    def test_parity(self, ordering, expected):
        """Test even and odd orderings."""
        assert permutation_parity(ordering) == expected

    def test_rejects_repeated_vertex(self):
        """Test repeated vertices are rejected."""
        with pytest.raises(InvalidComplexError, match="repeats a vertex"):
            permutation_parity((0, 1, 0))


class TestOrientedSimplex:
    """Test OrientedSimplex."""

    def test_from_ordering_canonicalizes(self):
        """Test even permutations give the same class."""
        assert OrientedSimplex.from_ordering((2, 0, 1)) == OrientedSimplex((0, 1, 2), 1)
        assert OrientedSimplex.from_ordering((1, 0, 2)) == OrientedSimplex((0, 1, 2), -1)

    def test_ordering_representative(self):
        """Test odd classes swap the first two vertices."""
        assert OrientedSimplex((0, 1, 2), -1).ordering() == (1, 0, 2)
        assert str(OrientedSimplex((0, 2), -1)) == "<2 0>"

    def test_str_shows_representative_ordering(self):
        """Test str prints a representative ordering."""
        assert str(OrientedSimplex((1, 3, 4), -1)) == "<3 1 4>"
        assert OrientedSimplex.__str__.__override__ is True

    def test_opposite(self):
        """Test opposite flips the parity and is an involution."""
        simplex = OrientedSimplex((3, 4, 7))
        assert simplex.opposite().parity == -1
        assert simplex.opposite().opposite() == simplex

    def test_vertex_has_single_class(self):
        """Test a 0-simplex has no opposite."""
        vertex = OrientedSimplex.from_ordering((4,))
        assert vertex.parity == 1
        with pytest.raises(InvalidComplexError):
            vertex.opposite()
        with pytest.raises(InvalidComplexError):
            OrientedSimplex((4,), -1)

    @pytest.mark.parametrize(
        ("vertices", "parity"),
        [((1, 0), 1), ((0, 0, 1), 1), ((0, 1), 0)],
        ids=["unsorted", "repeated", "bad-parity"],
    )
    def test_rejects_malformed(self, vertices, parity):
        """Test malformed simplices are rejected."""
        with pytest.raises(InvalidComplexError):
            OrientedSimplex(vertices, parity)

    def test_sorting(self):
        """Test positive classes sort before negative ones on the same support."""
        items = [OrientedSimplex((0, 2), -1), OrientedSimplex((0, 1)), OrientedSimplex((0, 2))]
        assert sorted(items) == [items[1], items[2], items[0]]


class TestInducedPrimaryFaces:
    """Test induced_primary_faces function."""

    def test_triangle_faces(self):
        """Test <012> induces <12>, <20>, <01>."""
        faces = induced_primary_faces(OrientedSimplex((0, 1, 2)))
        assert faces == [
            OrientedSimplex((1, 2)),
            OrientedSimplex.from_ordering((2, 0)),
            OrientedSimplex((0, 1)),
        ]

    def test_opposite_simplex_gives_opposite_faces(self):
        """Test reversing the simplex reverses every face."""
        simplex = OrientedSimplex((0, 1, 2, 3))
        forward = induced_primary_faces(simplex)
        backward = induced_primary_faces(simplex.opposite())
        assert backward == [face.opposite() for face in forward]

    def test_edge_has_single_face(self):
        """Test an edge induces only its head vertex."""
        assert induced_primary_faces(OrientedSimplex((3, 5))) == [OrientedSimplex((5,))]
        assert induced_primary_faces(OrientedSimplex((3, 5), -1)) == [OrientedSimplex((3,))]

    def test_faces_ordered_by_deleted_vertex(self):
        """Test the k-th face omits the k-th vertex."""
        simplex = OrientedSimplex((2, 4, 6, 8))
        for vertex, face in zip(simplex.vertices, simplex.faces()):
            assert vertex not in face.vertices
            assert len(face.vertices) == 3

    def test_vertex_has_no_faces(self):
        """Test 0-simplices are rejected."""
        with pytest.raises(InvalidComplexError):
            induced_primary_faces(OrientedSimplex((0,)))


LABELS = (1, 3, 4, 7, 8)


def inversion_sign(ordering):
    inversions = sum(1 for a, b in itertools.combinations(ordering, 2) if a > b)
    return -1 if inversions % 2 else 1


class TestAgainstPermutationEnumeration:
    """Test canonical classes and induced faces against all vertex orderings."""

    @pytest.mark.parametrize("k", [1, 2, 3, 4])
    def test_canonical_class_matches_inversion_parity(self, k):
        """Test two orderings share a class exactly when their inversion parities agree."""
        vertices = LABELS[: k + 1]
        for ordering in itertools.permutations(vertices):
            simplex = OrientedSimplex.from_ordering(ordering)
            assert simplex.vertices == vertices
            assert simplex.parity == inversion_sign(ordering)
            assert OrientedSimplex.from_ordering(simplex.ordering()) == simplex

    @pytest.mark.parametrize("k", [1, 2, 3, 4])
    def test_induced_faces_drop_leading_vertex_of_each_representative(self, k):
        """Test the induced faces are the leading-vertex deletions of every representative."""
        vertices = LABELS[: k + 1]
        classes = {1: set(), -1: set()}
        for ordering in itertools.permutations(vertices):
            classes[inversion_sign(ordering)].add(ordering)

        for sign, representatives in classes.items():
            expected = {OrientedSimplex.from_ordering(r[1:]) for r in representatives}
            faces = induced_primary_faces(OrientedSimplex(vertices, sign))
            assert len(faces) == len(expected)
            assert set(faces) == expected
