"""Pair space, the pair-space walk operator and measurement."""

from .evolution import StateVector, basis_state, distribution, evolve, uniform_state
from .operators import (
    BlockGroup,
    BlockLayer,
    BlockUnitary,
    PermutationLayer,
    grover,
    unitary_deviation,
)
from .pair_space import Pair, PairSpace, pair_space
from .sqw import build_sqw, face_layer, facet_layer

__all__ = [
    "Pair",
    "PairSpace",
    "pair_space",
    "grover",
    "unitary_deviation",
    "BlockGroup",
    "BlockLayer",
    "PermutationLayer",
    "BlockUnitary",
    "build_sqw",
    "face_layer",
    "facet_layer",
    "StateVector",
    "uniform_state",
    "basis_state",
    "evolve",
    "distribution",
]
