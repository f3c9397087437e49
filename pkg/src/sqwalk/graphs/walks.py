"""Coined walks on arcs and bipartite walks on edges."""

import logging
from typing import Mapping, Optional

import numpy.typing as npt

from .._core.exceptions import GraphError
from ..walk import BlockLayer, BlockUnitary, PermutationLayer
from ..walk.operators import Block
from .multigraph import DirectedMultigraph, Vertex

log: logging.Logger = logging.getLogger(__name__)

VertexCoins = Mapping[Vertex, npt.ArrayLike]


def coin_layer(graph: DirectedMultigraph, coins: Optional[VertexCoins] = None) -> BlockLayer:
    """``C``: a coin per vertex acting on the arcs entering it (ascending arc order)."""
    coins = coins or {}
    blocks: list[Block] = []
    for vertex in graph.vertices:
        arcs = graph.in_arcs(vertex)
        if arcs:
            blocks.append((arcs, coins.get(vertex)))
    return BlockLayer.from_blocks(graph.num_arcs, blocks)


def shift_layer(graph: DirectedMultigraph, loop_phase: float = 1.0) -> PermutationLayer:
    """``(S psi)(a) = psi(a_bar)``; loops pick up ``loop_phase``."""
    phase = [loop_phase if loop else 1.0 for loop in graph.is_loop]
    return PermutationLayer(graph.inverse, phase)


def coined_walk(graph: DirectedMultigraph, coins: Optional[VertexCoins] = None) -> BlockUnitary:
    """``Gamma = S C`` on the arc space; coins default to ``grover(deg u)``."""
    if not graph.is_connected():
        raise GraphError("coined walks need a connected graph")
    walk = BlockUnitary([coin_layer(graph, coins), shift_layer(graph)])
    log.debug("Built coined walk on %d arcs", graph.num_arcs)
    return walk


def bipartite_walk(
    graph: DirectedMultigraph,
    first: str,
    second: str,
    coins: Optional[VertexCoins] = None,
) -> BlockUnitary:
    """Walk on the edge space of a bipartite graph.

    Coins of the vertices on side ``first`` act, then those on side ``second``;
    each vertex's coin acts on its incident edges in ascending edge order and
    defaults to Grover.
    """
    if not graph.is_bipartite():
        raise GraphError("bipartite walks need a bipartite graph")
    coins = coins or {}
    dim = len(graph.edges)
    layers = []
    for side in (first, second):
        members = [v for v in graph.vertices if graph.sides.get(v) == side]
        blocks: list[Block] = [
            (graph.incident_edges(v), coins.get(v)) for v in members if graph.incident_edges(v)
        ]
        layers.append(BlockLayer.from_blocks(dim, blocks))
    return BlockUnitary(layers)
