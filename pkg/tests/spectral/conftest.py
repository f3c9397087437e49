import pytest

from sqwalk.graphs import DirectedMultigraph

from ._graphs import star_graph


@pytest.fixture
def star2() -> DirectedMultigraph:
    """G_* over the tetrahedron boundary with facets 0 and 1 marked."""
    return star_graph(2)
