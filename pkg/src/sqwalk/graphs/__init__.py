"""Derived graphs, coined and bipartite walks, and the unitary equivalences between them."""

from .constructions import (
    COPY,
    ORIGINAL,
    X_E,
    X_F,
    associated_graph,
    attach_bunches,
    duplication,
    induced_bipartite,
    subdivision,
)
from .intertwiners import (
    Intertwiner,
    arc_intertwiner,
    edge_intertwiner,
    intertwiner_W,
    max_deviation,
    oriented_pair_space,
    pair_arc,
    verify_bipartite_equivalence,
    verify_equivalence,
    verify_subdivision_equivalence,
)
from .isomorphism import IsomorphismResult, verify_isomorphism
from .multigraph import Arc, DirectedMultigraph, Vertex
from .walks import bipartite_walk, coin_layer, coined_walk, shift_layer

__all__ = [
    "ORIGINAL",
    "COPY",
    "X_E",
    "X_F",
    "Arc",
    "Vertex",
    "DirectedMultigraph",
    "induced_bipartite",
    "associated_graph",
    "duplication",
    "subdivision",
    "attach_bunches",
    "IsomorphismResult",
    "verify_isomorphism",
    "coin_layer",
    "shift_layer",
    "coined_walk",
    "bipartite_walk",
    "Intertwiner",
    "pair_arc",
    "arc_intertwiner",
    "edge_intertwiner",
    "intertwiner_W",
    "max_deviation",
    "oriented_pair_space",
    "verify_equivalence",
    "verify_bipartite_equivalence",
    "verify_subdivision_equivalence",
]
