"""The pair space of oriented facets and their induced directed primary faces."""

import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np
import numpy.typing as npt

from .._core.exceptions import UnsupportedComplexError
from ..simplicial import (
    OrientationAssignment,
    OrientedSimplex,
    Simplex,
    SimplicialComplex,
    find_orientation,
)

log: logging.Logger = logging.getLogger(__name__)

Pair = tuple[OrientedSimplex, OrientedSimplex]


@dataclass(frozen=True)
class PairSpace:
    """Indexed pairs ``(sigma, tau)`` with ``sigma`` inducing ``tau``.

    ``e_blocks[tau]`` lists the indices of pairs whose face is ``tau`` and
    ``f_blocks[sigma]`` those whose facet is ``sigma``; both partition the index set.
    """

    complex_: SimplicialComplex
    orientation: OrientationAssignment
    pairs: tuple[Pair, ...]
    index: dict[Pair, int]
    e_blocks: dict[OrientedSimplex, tuple[int, ...]]
    f_blocks: dict[OrientedSimplex, tuple[int, ...]]
    supports: tuple[Simplex, ...]
    support_index: npt.NDArray[np.intp]

    @property
    def n(self) -> int:
        return self.complex_.dim

    @property
    def dim(self) -> int:
        return len(self.pairs)

    def __len__(self) -> int:
        return len(self.pairs)

    @property
    def oriented_facets(self) -> tuple[OrientedSimplex, ...]:
        return tuple(self.f_blocks)

    @property
    def oriented_faces(self) -> tuple[OrientedSimplex, ...]:
        return tuple(self.e_blocks)

    def label(self, facet: OrientedSimplex) -> int:
        """+1 for ``(|facet|, +)`` and -1 for ``(|facet|, -)``."""
        return self.orientation.label(facet)

    def pair_index(self, facet: OrientedSimplex, face: OrientedSimplex) -> int:
        return self.index[(facet, face)]


def pair_space(
    complex_: SimplicialComplex, orientation: Optional[OrientationAssignment] = None
) -> PairSpace:
    """Enumerate the pairs in (canonical facet, canonical face) order."""
    complex_.require_pure()
    if complex_.dim < 2:
        raise UnsupportedComplexError(
            f"the pair-space walk is modelled for n >= 2, got n = {complex_.dim}"
        )
    if orientation is None:
        orientation = find_orientation(complex_)

    oriented_facets = sorted(
        OrientedSimplex(facet, parity) for facet in complex_.facets for parity in (1, -1)
    )
    pairs: list[Pair] = []
    for sigma in oriented_facets:
        pairs.extend((sigma, tau) for tau in sorted(sigma.faces()))

    index = {pair: i for i, pair in enumerate(pairs)}
    e_lists: dict[OrientedSimplex, list[int]] = {}
    f_lists: dict[OrientedSimplex, list[int]] = {}
    for i, (sigma, tau) in enumerate(pairs):
        e_lists.setdefault(tau, []).append(i)
        f_lists.setdefault(sigma, []).append(i)

    supports = tuple(sorted({tau.vertices for _, tau in pairs}))
    position = {face: k for k, face in enumerate(supports)}
    support_index = np.fromiter(
        (position[tau.vertices] for _, tau in pairs), dtype=np.intp, count=len(pairs)
    )

    space = PairSpace(
        complex_=complex_,
        orientation=orientation,
        pairs=tuple(pairs),
        index=index,
        e_blocks={tau: tuple(e_lists[tau]) for tau in sorted(e_lists)},
        f_blocks={sigma: tuple(f_lists[sigma]) for sigma in oriented_facets},
        supports=supports,
        support_index=support_index,
    )
    log.debug(
        "Pair space: %d pairs, %d face blocks, %d facet blocks",
        len(pairs),
        len(space.e_blocks),
        len(space.f_blocks),
    )
    return space
