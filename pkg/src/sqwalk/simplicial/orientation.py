"""Orientation search by sign propagation over the facet-adjacency graph."""

import logging
from collections import deque
from dataclasses import dataclass
from typing import Mapping, Optional

from .._core.exceptions import NonOrientableError, NonPureComplexError, UnsupportedComplexError
from .complexes import SimplicialComplex, skeleton, strong_connectivity
from .simplex import OrientedSimplex, Simplex, induced_primary_faces

log: logging.Logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OrientationAssignment:
    """A sign per facet; the sign is the parity of the facet's "+" orientation class."""

    signs: Mapping[Simplex, int]

    def oriented(self, facet: Simplex, sign: int = 1) -> OrientedSimplex:
        """The oriented facet ``(|facet|, sign)``."""
        return OrientedSimplex(facet, self.signs[facet] * sign)

    def label(self, simplex: OrientedSimplex) -> int:
        """+1 or -1 depending on which orientation class ``simplex`` is."""
        return simplex.parity * self.signs[simplex.vertices]

    def negated(self) -> "OrientationAssignment":
        return OrientationAssignment({facet: -s for facet, s in self.signs.items()})


def induced_face(facet: Simplex, parity: int, face: Simplex) -> OrientedSimplex:
    """The orientation that ``OrientedSimplex(facet, parity)`` induces on ``face``."""
    for candidate in induced_primary_faces(OrientedSimplex(facet, parity)):
        if candidate.vertices == face:
            return candidate
    raise ValueError(f"{face} is not a primary face of {facet}")


def is_non_contradicted(complex_: SimplicialComplex, orientation: OrientationAssignment) -> bool:
    """Every adjacent facet pair induces opposite orientations on its shared face."""
    for face, cofaces in complex_.primary_face_cofaces().items():
        if len(cofaces) > 2:
            return False
        if len(cofaces) == 2:
            f, g = cofaces
            first = induced_face(f, orientation.signs[f], face)
            second = induced_face(g, orientation.signs[g], face)
            if first == second:
                return False
    return True


def _tree_path(parents: dict[Simplex, Optional[Simplex]], facet: Simplex) -> list[Simplex]:
    path = [facet]
    while parents[path[-1]] is not None:
        path.append(parents[path[-1]])  # type: ignore[arg-type]
    return path


def find_orientation(complex_: SimplicialComplex) -> OrientationAssignment:
    """Find a non-contradicting orientation assignment.

    The first facet gets sign +1 and signs are propagated breadth first across
    shared primary faces. Raises NonOrientableError with a junction or cycle
    witness when no assignment exists.
    """
    if not complex_.is_pure:
        raise NonPureComplexError(
            "orientation needs a pure complex", dimensions=[len(f) - 1 for f in complex_.facets]
        )
    if complex_.dim < 1:
        raise UnsupportedComplexError("orientation needs a complex of dimension >= 1")
    connectivity = strong_connectivity(complex_)
    if not connectivity:
        raise UnsupportedComplexError(
            f"orientation needs a strongly connected complex ({connectivity.reason})"
        )

    table = complex_.primary_face_cofaces()
    for face, cofaces in table.items():
        if len(cofaces) > 2:
            raise NonOrientableError.junction(face, cofaces)

    neighbours: dict[Simplex, list[tuple[Simplex, Simplex]]] = {f: [] for f in complex_.facets}
    for face, cofaces in table.items():
        if len(cofaces) == 2:
            f, g = cofaces
            neighbours[f].append((g, face))
            neighbours[g].append((f, face))

    root = complex_.facets[0]
    signs: dict[Simplex, int] = {root: 1}
    parents: dict[Simplex, Optional[Simplex]] = {root: None}
    queue = deque([root])
    while queue:
        facet = queue.popleft()
        for other, face in neighbours[facet]:
            wanted = induced_face(facet, signs[facet], face).opposite()
            sign = 1 if induced_face(other, 1, face) == wanted else -1
            if other not in signs:
                signs[other] = sign
                parents[other] = facet
                queue.append(other)
            elif signs[other] != sign:
                left = _tree_path(parents, facet)
                right = _tree_path(parents, other)
                on_right = set(right)
                common = next(x for x in left if x in on_right)
                cycle = left[: left.index(common) + 1]
                cycle.extend(reversed(right[: right.index(common)]))
                raise NonOrientableError.cycle(cycle)

    log.debug("Oriented %d facets", len(signs))
    return OrientationAssignment(signs)


def is_orientable(complex_: SimplicialComplex) -> bool:
    try:
        find_orientation(complex_)
    except NonOrientableError:
        return False
    return True


@dataclass(frozen=True)
class SkeletonOrientability:
    dim: int
    orientable: bool
    witness_kind: Optional[str] = None
    witness: tuple[Simplex, ...] = ()


def orientation_filtration(complex_: SimplicialComplex) -> list[SkeletonOrientability]:
    """Orientability of the k-skeletons for 2 <= k <= dim.

    Skeletons of a clique complex are typically orientable only at the top level
    where each codimension-one face has two cofaces; lower levels show junctions.
    """
    levels = []
    for k in range(2, complex_.dim + 1):
        level = skeleton(complex_, k)
        try:
            find_orientation(level)
        except NonOrientableError as exc:
            levels.append(SkeletonOrientability(k, False, exc.witness_kind, exc.witness))
        else:
            levels.append(SkeletonOrientability(k, True))
    return levels
