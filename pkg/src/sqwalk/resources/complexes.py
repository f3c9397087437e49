"""Complex construction and file I/O."""

from pathlib import Path
from typing import Union

from ..simplicial import (
    GraphLike,
    SimplicialComplex,
    clique_complex,
    dump_complex,
    load_complex,
    sphere_triangulation,
)
from ._base import BaseResource


class Complexes(BaseResource):
    """Simplicial complexes."""

    def sphere(self, n: int) -> SimplicialComplex:
        """The n-skeleton of the (n+1)-simplex."""
        return sphere_triangulation(n)

    def clique(self, graph: GraphLike) -> SimplicialComplex:
        return clique_complex(graph)

    def load(self, path: Union[str, Path]) -> SimplicialComplex:
        """Read a facet-list JSON file."""
        return load_complex(path)

    def dump(self, complex_: SimplicialComplex, path: Union[str, Path]) -> None:
        dump_complex(complex_, path)
