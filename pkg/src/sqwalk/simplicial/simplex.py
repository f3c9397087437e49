"""Oriented simplices stored as (sorted vertices, parity)."""

from dataclasses import dataclass
from typing import Iterable, Sequence

from typing_extensions import override

from .._core.exceptions import InvalidComplexError

Simplex = tuple[int, ...]


def permutation_parity(ordering: Sequence[int]) -> int:
    """Return +1 if sorting ``ordering`` takes an even number of transpositions, else -1.

    Counts transpositions of an insertion sort, so repeated vertices are rejected.
    """
    items = list(ordering)
    if len(set(items)) != len(items):
        raise InvalidComplexError(f"ordering {tuple(items)} repeats a vertex")
    swaps = 0
    for i in range(1, len(items)):
        j = i
        while j > 0 and items[j - 1] > items[j]:
            items[j - 1], items[j] = items[j], items[j - 1]
            swaps += 1
            j -= 1
    return 1 if swaps % 2 == 0 else -1


@dataclass(frozen=True)
class OrientedSimplex:
    """An orientation class ``<w0 ... wk>`` of a simplex.

    Two orderings are the same oriented simplex iff they differ by an even
    permutation. A 0-simplex has a single class, always stored with parity +1.
    """

    vertices: Simplex
    parity: int = 1

    def __post_init__(self) -> None:
        if self.parity not in (1, -1):
            raise InvalidComplexError(f"parity must be +1 or -1, got {self.parity!r}")
        if list(self.vertices) != sorted(set(self.vertices)):
            raise InvalidComplexError(
                f"vertices must be strictly increasing, got {self.vertices!r}"
            )
        if len(self.vertices) == 1 and self.parity != 1:
            raise InvalidComplexError("a 0-simplex has a single orientation class")

    @classmethod
    def from_ordering(cls, ordering: Iterable[int]) -> "OrientedSimplex":
        """Canonicalize a vertex ordering."""
        items = tuple(ordering)
        if not items:
            raise InvalidComplexError("an oriented simplex needs at least one vertex")
        parity = permutation_parity(items) if len(items) > 1 else 1
        return cls(tuple(sorted(items)), parity)

    @property
    def dim(self) -> int:
        return len(self.vertices) - 1

    @property
    def support(self) -> Simplex:
        return self.vertices

    def ordering(self) -> Simplex:
        """A representative ordering: sorted, with the first two vertices swapped if odd."""
        if self.parity == 1:
            return self.vertices
        first, second, *rest = self.vertices
        return (second, first, *rest)

    def opposite(self) -> "OrientedSimplex":
        if self.dim == 0:
            raise InvalidComplexError("a 0-simplex has no opposite orientation")
        return OrientedSimplex(self.vertices, -self.parity)

    def faces(self) -> list["OrientedSimplex"]:
        return induced_primary_faces(self)

    def sort_key(self) -> tuple[Simplex, int]:
        return (self.vertices, 0 if self.parity == 1 else 1)

    def __lt__(self, other: "OrientedSimplex") -> bool:
        return self.sort_key() < other.sort_key()

    @override
    def __str__(self) -> str:
        return "<" + " ".join(str(v) for v in self.ordering()) + ">"


def induced_primary_faces(simplex: OrientedSimplex) -> list[OrientedSimplex]:
    """Induced directed primary faces of an oriented n-simplex.

    Each face is obtained by deleting the leading vertex of an even-permuted
    representative. Bringing ``w_j`` to the front of a representative costs ``j``
    transpositions, so the face opposite ``w_j`` is the ordered remainder when ``j``
    is even and its opposite when ``j`` is odd. For n = 1 only the identity is
    even, leaving the single face ``<w1>``.

    Faces are ordered by the position of the deleted vertex in the sorted vertex tuple.
    """
    n = simplex.dim
    if n < 1:
        raise InvalidComplexError("induced primary faces need a simplex of dimension >= 1")
    rep = simplex.ordering()
    if n == 1:
        return [OrientedSimplex((rep[1],))]

    faces: dict[int, OrientedSimplex] = {}
    for j, deleted in enumerate(rep):
        face = OrientedSimplex.from_ordering(rep[:j] + rep[j + 1 :])
        faces[deleted] = face if j % 2 == 0 else face.opposite()
    return [faces[v] for v in simplex.vertices]
