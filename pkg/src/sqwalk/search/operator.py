"""The perturbed pair-space walk ``U_* = F E_*``."""

import logging
from typing import Union

import numpy as np

from .._core.exceptions import MarkedFaceError
from ..simplicial import Simplex
from ..walk import BlockUnitary, PairSpace, build_sqw
from .marked import MarkedFace

log: logging.Logger = logging.getLogger(__name__)


def build_search_operator(
    space: PairSpace, marked: Union[MarkedFace, Simplex, None]
) -> BlockUnitary:
    """``E`` blocks on the marked face become ``-I``; every other block stays Grover.

    ``marked=None`` returns the unperturbed walk.
    """
    if marked is None:
        return build_sqw(space)
    target = marked.target if isinstance(marked, MarkedFace) else tuple(sorted(marked))
    e_coins = {
        tau: -np.eye(len(idx)) for tau, idx in space.e_blocks.items() if tau.vertices == target
    }
    if not e_coins:
        raise MarkedFaceError(f"{target} is not a face of the complex")
    log.debug("Marked %d oriented face blocks on %s", len(e_coins), target)
    return build_sqw(space, e_coins=e_coins)
