"""The discriminant operator of a coined walk with sign-flipping loops."""

from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from ..graphs import DirectedMultigraph


@dataclass(frozen=True)
class Discriminant:
    """``(T f)(u) = sum over arcs a into u of q(a) f(o(a))``, indexed by ``graph.vertices``.

    ``q(a) = 1 / sqrt(deg t(a) deg o(a))``, negated on self loops.
    """

    graph: DirectedMultigraph
    matrix: npt.NDArray[np.float64]

    @property
    def size(self) -> int:
        return int(self.matrix.shape[0])

    def apply(self, f: npt.ArrayLike) -> npt.NDArray[np.float64]:
        return self.matrix @ np.asarray(f)

    def loop_vertices(self) -> list[int]:
        index = self.graph.vertex_index
        return sorted({index[arc.terminus] for arc in self.graph.loops})


def discriminant(graph: DirectedMultigraph) -> Discriminant:
    index = graph.vertex_index
    termini = np.array([index[arc.terminus] for arc in graph.arcs], dtype=np.intp)
    origins = np.array([index[arc.origin] for arc in graph.arcs], dtype=np.intp)
    degree = np.bincount(termini, minlength=len(graph.vertices)).astype(float)
    weights = np.where(graph.is_loop, -1.0, 1.0) / np.sqrt(degree[termini] * degree[origins])
    matrix = np.zeros((len(graph.vertices), len(graph.vertices)))
    np.add.at(matrix, (termini, origins), weights)
    return Discriminant(graph, matrix)
