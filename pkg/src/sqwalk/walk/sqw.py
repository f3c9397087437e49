"""The pair-space walk ``U = F E``."""

import logging
from typing import Mapping, Optional

import numpy.typing as npt

from .._core.exceptions import BlockSizeError
from ..simplicial import OrientedSimplex
from .operators import Block, BlockLayer, BlockUnitary
from .pair_space import PairSpace

log: logging.Logger = logging.getLogger(__name__)

CoinMap = Mapping[OrientedSimplex, npt.ArrayLike]


def _layer(
    dim: int,
    blocks: Mapping[OrientedSimplex, tuple[int, ...]],
    coins: Optional[CoinMap],
    kind: str,
) -> BlockLayer:
    coins = coins or {}
    unknown = [key for key in coins if key not in blocks]
    if unknown:
        raise BlockSizeError(f"{kind} coin given for {unknown[0]}, which has no block")
    layer_blocks: list[Block] = [(indices, coins.get(key)) for key, indices in blocks.items()]
    return BlockLayer.from_blocks(dim, layer_blocks)


def face_layer(space: PairSpace, e_coins: Optional[CoinMap] = None) -> BlockLayer:
    """``E``: one block per oriented face, Grover by default (the flip on two-element blocks)."""
    return _layer(space.dim, space.e_blocks, e_coins, "face")


def facet_layer(space: PairSpace, f_coins: Optional[CoinMap] = None) -> BlockLayer:
    """``F``: one block per oriented facet, ``grover(n+1)`` by default."""
    return _layer(space.dim, space.f_blocks, f_coins, "facet")


def build_sqw(
    space: PairSpace,
    e_coins: Optional[CoinMap] = None,
    f_coins: Optional[CoinMap] = None,
) -> BlockUnitary:
    """Build ``U = F E``; coins not given default to Grover matrices of the block size."""
    unitary = BlockUnitary([face_layer(space, e_coins), facet_layer(space, f_coins)])
    log.debug("Built pair-space walk of dimension %d", unitary.dim)
    return unitary
