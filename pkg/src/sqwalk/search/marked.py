"""The marked primary face of a search."""

from dataclasses import dataclass

from .._core.exceptions import MarkedFaceError
from ..simplicial import Simplex, SimplicialComplex


@dataclass(frozen=True)
class MarkedFace:
    """An (n-1)-simplex ``target`` together with its two cofacets.

    ``facet_indices`` are positions in ``complex_.facets`` (lexicographic order),
    smaller index first.
    """

    target: Simplex
    cofacets: tuple[Simplex, Simplex]
    facet_indices: tuple[int, int]

    @classmethod
    def from_facets(cls, complex_: SimplicialComplex, i: int, j: int) -> "MarkedFace":
        """The face ``|sigma_i| & |sigma_j|`` for 0-based facet indices."""
        count = len(complex_.facets)
        for index in (i, j):
            if isinstance(index, bool) or not isinstance(index, int) or not 0 <= index < count:
                raise MarkedFaceError(f"facet index {index!r} out of range for {count} facets")
        if i == j:
            raise MarkedFaceError("marked facet indices must differ")
        first, second = complex_.facets[i], complex_.facets[j]
        face = tuple(sorted(set(first) & set(second)))
        if len(face) != complex_.dim:
            raise MarkedFaceError(
                f"facets {i} and {j} do not share a primary face (intersection {face})"
            )
        return cls.resolve(complex_, face)

    @classmethod
    def resolve(cls, complex_: SimplicialComplex, face: Simplex) -> "MarkedFace":
        complex_.require_pure()
        target = tuple(sorted(face))
        if len(target) != complex_.dim:
            raise MarkedFaceError(f"{target} is not an (n-1)-simplex for n = {complex_.dim}")
        cofacets = complex_.cofaces(target)
        if not cofacets:
            raise MarkedFaceError(f"{target} is not a face of the complex")
        if len(cofacets) != 2:
            raise MarkedFaceError(
                f"{target} has {len(cofacets)} cofacets; a marked face needs exactly two"
            )
        index = complex_.facet_index
        return cls(
            target=target,
            cofacets=(cofacets[0], cofacets[1]),
            facet_indices=(index[cofacets[0]], index[cofacets[1]]),
        )
