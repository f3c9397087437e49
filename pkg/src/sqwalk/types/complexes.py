from pydantic import Field, NonNegativeInt

from .._core.models import SQWalkBaseModel


class ComplexFile(SQWalkBaseModel):
    """Facet-list file format: ``{"facets": [[0, 1, 2], ...]}``."""

    facets: list[list[NonNegativeInt]] = Field(min_length=1)


class GraphExport(SQWalkBaseModel):
    """Edge-list export of a directed multigraph."""

    vertices: list[str]
    sides: dict[str, str]
    edges: list[tuple[str, str]]
    loops: list[str]
