"""Unitaries given as layers of local blocks and signed permutations.

Nothing here materializes a dense matrix except :meth:`BlockUnitary.to_dense`,
which exists for small test oracles.
"""

import logging
from collections import defaultdict
from dataclasses import dataclass
from typing import Optional, Sequence, Union

import numpy as np
import numpy.typing as npt

from .._core.exceptions import BlockSizeError, DimensionMismatchError, NonUnitaryError

log: logging.Logger = logging.getLogger(__name__)

UNITARY_TOLERANCE = 1e-10

Array = npt.NDArray[np.generic]
Block = tuple[Sequence[int], Optional[npt.ArrayLike]]


def grover(m: int) -> npt.NDArray[np.float64]:
    """The Grover matrix ``(2/m) J_m - I_m``."""
    if isinstance(m, bool) or not isinstance(m, (int, np.integer)) or m < 1:
        raise BlockSizeError(f"grover needs m >= 1, got {m!r}")
    return np.full((m, m), 2.0 / m) - np.eye(m)


def unitary_deviation(matrix: npt.ArrayLike) -> float:
    """Frobenius norm of ``M M^H - I``."""
    m = np.asarray(matrix)
    return float(np.linalg.norm(m @ m.conj().T - np.eye(m.shape[0])))


def _broadcast(weights: Array, ndim: int) -> Array:
    return weights.reshape(weights.shape + (1,) * (ndim - 1))


@dataclass(frozen=True)
class BlockGroup:
    """Blocks of equal size ``m``; ``matrices`` is ``None`` for Grover blocks."""

    indices: npt.NDArray[np.intp]
    matrices: Optional[Array] = None

    @property
    def size(self) -> int:
        return int(self.indices.shape[1])

    def apply(self, psi: Array) -> Array:
        gathered = psi[self.indices]
        if self.matrices is None:
            return 2.0 * gathered.mean(axis=1, keepdims=True) - gathered
        return np.einsum("bij,bj...->bi...", self.matrices, gathered)

    def transpose(self) -> "BlockGroup":
        if self.matrices is None:
            return self
        return BlockGroup(self.indices, np.transpose(self.matrices, (0, 2, 1)))


class BlockLayer:
    """Block-diagonal unitary over a partition of ``range(dim)``."""

    def __init__(self, dim: int, groups: Sequence[BlockGroup]) -> None:
        self.dim = dim
        self.groups = tuple(groups)

    @classmethod
    def from_blocks(cls, dim: int, blocks: Sequence[Block]) -> "BlockLayer":
        """Validate and group ``(indices, matrix)`` blocks; ``matrix=None`` means Grover."""
        seen = np.zeros(dim, dtype=np.intp)
        grouped: dict[tuple[int, bool], tuple[list[Sequence[int]], list[Array]]] = defaultdict(
            lambda: ([], [])
        )
        for indices, matrix in blocks:
            idx = np.asarray(indices, dtype=np.intp)
            if idx.ndim != 1 or idx.size == 0:
                raise BlockSizeError("every block needs a nonempty index list")
            if idx.min() < 0 or idx.max() >= dim:
                raise BlockSizeError(f"block indices out of range for dimension {dim}")
            np.add.at(seen, idx, 1)
            if matrix is None:
                grouped[(idx.size, True)][0].append(idx)
                continue
            local = np.asarray(matrix)
            if local.shape != (idx.size, idx.size):
                raise BlockSizeError(
                    f"coin of shape {local.shape} does not fit a block of size {idx.size}"
                )
            deviation = unitary_deviation(local)
            if deviation > UNITARY_TOLERANCE:
                raise NonUnitaryError(
                    f"local coin is not unitary (deviation {deviation:.3e})", deviation=deviation
                )
            grouped[(idx.size, False)][0].append(idx)
            grouped[(idx.size, False)][1].append(local)
        if not np.all(seen == 1):
            raise BlockSizeError("blocks must partition the index set")

        groups = []
        for (_, is_grover), (idx_list, mats) in sorted(grouped.items()):
            stacked = np.stack(idx_list)
            groups.append(BlockGroup(stacked, None if is_grover else np.stack(mats)))
        return cls(dim, groups)

    def apply(self, psi: Array) -> Array:
        dtype = np.result_type(psi.dtype, np.complex128)
        out = np.empty(psi.shape, dtype=dtype)
        for group in self.groups:
            out[group.indices] = group.apply(psi)
        return out

    def transpose(self) -> "BlockLayer":
        return BlockLayer(self.dim, [g.transpose() for g in self.groups])


class PermutationLayer:
    """Signed permutation: ``(P psi)[i] = phase[i] * psi[source[i]]``."""

    def __init__(self, source: npt.ArrayLike, phase: Optional[npt.ArrayLike] = None) -> None:
        self.source = np.asarray(source, dtype=np.intp)
        self.dim = int(self.source.size)
        if not np.array_equal(np.sort(self.source), np.arange(self.dim)):
            raise BlockSizeError("permutation layer needs a bijective source map")
        if phase is None:
            self.phase = np.ones(self.dim)
        else:
            self.phase = np.asarray(phase)
            if self.phase.shape != (self.dim,):
                raise BlockSizeError("phase must have one entry per index")
            deviation = float(np.max(np.abs(np.abs(self.phase) - 1.0), initial=0.0))
            if deviation > UNITARY_TOLERANCE:
                raise NonUnitaryError("permutation phases must have modulus 1", deviation=deviation)

    def apply(self, psi: Array) -> Array:
        return _broadcast(self.phase, psi.ndim) * psi[self.source]

    def transpose(self) -> "PermutationLayer":
        source = np.empty_like(self.source)
        source[self.source] = np.arange(self.dim)
        phase = np.empty_like(self.phase)
        phase[self.source] = self.phase
        return PermutationLayer(source, phase)


Layer = Union[BlockLayer, PermutationLayer]


class BlockUnitary:
    """A product of layers, applied in order: ``layers[0]`` acts first."""

    def __init__(self, layers: Sequence[Layer]) -> None:
        if not layers:
            raise BlockSizeError("a block unitary needs at least one layer")
        dims = {layer.dim for layer in layers}
        if len(dims) != 1:
            raise BlockSizeError(f"layers disagree on dimension: {sorted(dims)}")
        self.layers = tuple(layers)
        self.dim = dims.pop()

    def apply(self, psi: npt.ArrayLike) -> Array:
        state = np.asarray(psi)
        if state.shape[0] != self.dim:
            raise DimensionMismatchError(
                f"state of length {state.shape[0]} does not match operator dimension {self.dim}",
                expected=self.dim,
                actual=state.shape[0],
            )
        for layer in self.layers:
            state = layer.apply(state)
        return state

    __call__ = apply

    def then(self, other: "BlockUnitary") -> "BlockUnitary":
        """``other`` after ``self``."""
        return BlockUnitary(self.layers + other.layers)

    def transpose(self) -> "BlockUnitary":
        return BlockUnitary([layer.transpose() for layer in reversed(self.layers)])

    def to_dense(self) -> npt.NDArray[np.complex128]:
        return self.apply(np.eye(self.dim, dtype=np.complex128))
