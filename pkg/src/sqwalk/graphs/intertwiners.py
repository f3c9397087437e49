"""Signed-permutation intertwiners and the dense equivalence checks built on them."""

import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np
import numpy.typing as npt

from .._core.exceptions import (
    DimensionMismatchError,
    GraphError,
    NonOrientableError,
    UnsupportedComplexError,
)
from ..simplicial import OrientationAssignment, Simplex, SimplicialComplex, find_orientation
from ..walk import BlockUnitary, PairSpace, build_sqw, pair_space
from .constructions import (
    COPY,
    ORIGINAL,
    associated_graph,
    duplication,
    induced_bipartite,
    subdivision,
)
from .multigraph import Arc, DirectedMultigraph
from .walks import bipartite_walk, coin_layer, coined_walk, shift_layer

log: logging.Logger = logging.getLogger(__name__)

Matrix = npt.NDArray[np.complex128]


@dataclass(frozen=True)
class Intertwiner:
    """``(W psi)[target[i]] = phase[i] * psi[i]``."""

    target: npt.NDArray[np.intp]
    phase: npt.NDArray[np.float64]

    def __post_init__(self) -> None:
        if self.target.shape != self.phase.shape:
            raise DimensionMismatchError(
                "target and phase lengths differ",
                expected=self.target.size,
                actual=self.phase.size,
            )
        if not np.array_equal(np.sort(self.target), np.arange(self.target.size)):
            raise GraphError("intertwiner target map is not a bijection")
        if not np.allclose(np.abs(self.phase), 1.0):
            raise GraphError("intertwiner phases must be +1 or -1")

    @classmethod
    def from_targets(cls, target: npt.ArrayLike) -> "Intertwiner":
        t = np.asarray(target, dtype=np.intp)
        return cls(t, np.ones(t.size))

    @property
    def dim(self) -> int:
        return int(self.target.size)

    def apply(self, psi: npt.ArrayLike) -> Matrix:
        state = np.asarray(psi)
        if state.shape[0] != self.dim:
            raise DimensionMismatchError(
                "state does not match intertwiner dimension",
                expected=self.dim,
                actual=state.shape[0],
            )
        out = np.empty(state.shape, dtype=np.result_type(state.dtype, np.complex128))
        out[self.target] = self.phase.reshape((-1,) + (1,) * (state.ndim - 1)) * state
        return out

    def inverse(self) -> "Intertwiner":
        target = np.empty_like(self.target)
        target[self.target] = np.arange(self.dim)
        phase = np.empty_like(self.phase)
        phase[self.target] = self.phase.conj()
        return Intertwiner(target, phase)

    def then(self, other: "Intertwiner") -> "Intertwiner":
        """``other`` after ``self``."""
        return Intertwiner(other.target[self.target], other.phase[self.target] * self.phase)

    def to_dense(self) -> npt.NDArray[np.float64]:
        matrix = np.zeros((self.dim, self.dim))
        matrix[self.target, np.arange(self.dim)] = self.phase
        return matrix

    def conjugate(self, matrix: npt.ArrayLike) -> Matrix:
        """``W M W^-1`` for a dense ``M`` on the source space."""
        m = np.asarray(matrix)
        out = np.empty(m.shape, dtype=np.result_type(m.dtype, np.complex128))
        weights = self.phase[:, None] * self.phase.conj()[None, :]
        out[np.ix_(self.target, self.target)] = weights * m
        return out


def oriented_pair_space(
    complex_: SimplicialComplex, orientation: Optional[OrientationAssignment] = None
) -> PairSpace:
    """The pair space, raising UnsupportedComplexError for non-orientable input."""
    try:
        if orientation is None:
            orientation = find_orientation(complex_)
    except NonOrientableError as exc:
        raise UnsupportedComplexError("the intertwiner needs an orientable complex") from exc
    return pair_space(complex_, orientation)


def pair_arc(space: PairSpace, index: int, marked: Optional[Simplex] = None) -> Arc:
    """The arc of the duplication graph carrying pair ``index``.

    ``((f,+), tau)`` rides the arc ``phi(g) -> f`` and ``((f,-), tau)`` the arc
    ``g -> phi(f)``, where ``g`` is the other cofacet of ``|tau|``; graph vertices
    carry facet positions. Pairs on the ``marked`` face ride the self loop at the
    terminus instead.
    """
    sigma, tau = space.pairs[index]
    cofaces = space.complex_.cofaces(tau.vertices)
    if len(cofaces) != 2:
        raise UnsupportedComplexError(
            f"face {tau.vertices} has {len(cofaces)} cofaces; the intertwiner needs exactly two"
        )
    facet = sigma.vertices
    other = cofaces[1] if cofaces[0] == facet else cofaces[0]
    facet_index = space.complex_.facet_index
    here, there = facet_index[facet], facet_index[other]
    if space.label(sigma) == 1:
        terminus, origin = (ORIGINAL, here), (COPY, there)
    else:
        terminus, origin = (COPY, here), (ORIGINAL, there)
    if marked is not None and tau.vertices == marked:
        return Arc(terminus, terminus, 0)
    return Arc(origin, terminus, 0)


def arc_intertwiner(
    space: PairSpace, graph: DirectedMultigraph, marked: Optional[Simplex] = None
) -> Intertwiner:
    if graph.num_arcs != space.dim:
        raise DimensionMismatchError(
            "pair space and arc space differ in size", expected=space.dim, actual=graph.num_arcs
        )
    targets = [graph.arc_index[pair_arc(space, i, marked)] for i in range(space.dim)]
    return Intertwiner.from_targets(targets)


def intertwiner_W(
    complex_: SimplicialComplex, orientation: Optional[OrientationAssignment] = None
) -> Intertwiner:
    """Index bijection from the pair space onto the arcs of ``D(G_a)``."""
    space = oriented_pair_space(complex_, orientation)
    return arc_intertwiner(space, duplication(associated_graph(complex_)))


def max_deviation(left: npt.ArrayLike, right: npt.ArrayLike) -> float:
    return float(np.max(np.abs(np.asarray(left) - np.asarray(right))))


def verify_equivalence(
    complex_: SimplicialComplex, orientation: Optional[OrientationAssignment] = None
) -> float:
    """Max elementwise deviation between ``U`` and ``W^-1 Gamma^T W`` (dense)."""
    space = oriented_pair_space(complex_, orientation)
    graph = duplication(associated_graph(complex_))
    w = arc_intertwiner(space, graph)
    unitary = build_sqw(space).to_dense()
    # D(G_a) splits into two components when G_a is bipartite
    gamma = BlockUnitary([coin_layer(graph), shift_layer(graph)])
    gamma_t = gamma.transpose().to_dense()
    deviation = max_deviation(unitary, w.inverse().conjugate(gamma_t))
    log.info("Walk/coined-walk equivalence deviation: %.3e", deviation)
    return deviation


def edge_intertwiner(space: PairSpace, graph: DirectedMultigraph) -> Intertwiner:
    """``eta``: pair ``(sigma, tau)`` to the edge ``F_sigma E_tau`` of ``G_cap``."""
    return Intertwiner.from_targets(
        [graph.edge_position(("F", sigma), ("E", tau)) for sigma, tau in space.pairs]
    )


def verify_bipartite_equivalence(
    complex_: SimplicialComplex, orientation: Optional[OrientationAssignment] = None
) -> float:
    """Deviation between ``eta U eta^-1`` and the bipartite walk on ``G_cap``."""
    space = oriented_pair_space(complex_, orientation)
    graph = induced_bipartite(space)
    eta = edge_intertwiner(space, graph)
    walk = bipartite_walk(graph, "X_E", "X_F").to_dense()
    return max_deviation(eta.conjugate(build_sqw(space).to_dense()), walk)


def verify_subdivision_equivalence(graph: DirectedMultigraph) -> float:
    """Deviation between ``V Gamma V^-1`` and the bipartite walk on ``S(G)``.

    ``V`` sends arc ``a`` to the edge joining ``t(a)`` with the middle vertex of ``|a|``.
    """
    split = subdivision(graph)
    targets = []
    for arc in graph.arcs:
        first, second = arc.origin, arc.terminus
        middle = ("edge", first, second, arc.key)
        if middle not in split.vertex_index:
            middle = ("edge", second, first, arc.key)
        targets.append(split.edge_position(arc.terminus, middle))
    v = Intertwiner.from_targets(targets)
    walk = bipartite_walk(split, "V", "E").to_dense()
    return max_deviation(v.conjugate(coined_walk(graph).to_dense()), walk)
