"""Parade number, spectator number and spectator floor of small (multi)graphs."""

from .floor import FloorCertificate, FloorMemo, floor_lower_bound, spectator_floor, spectator_floor_bruteforce
from .graph import (
    ContractionError,
    GraphError,
    MultiGraph,
    SizeGuardError,
    connected_components,
    contract_edge,
    delete_edge,
    delete_isolated_vertex,
    disjoint_union,
)
from .canon import canonical_key
from .io import parse_graph, serialize_graph
from .parade import ParadeCertificate, parade_number_bfs, parade_number_matrix, spectator_number

__all__ = [
    "ContractionError",
    "FloorCertificate",
    "FloorMemo",
    "GraphError",
    "MultiGraph",
    "ParadeCertificate",
    "SizeGuardError",
    "canonical_key",
    "connected_components",
    "contract_edge",
    "delete_edge",
    "delete_isolated_vertex",
    "disjoint_union",
    "floor_lower_bound",
    "parade_number_bfs",
    "parade_number_matrix",
    "parse_graph",
    "serialize_graph",
    "spectator_floor",
    "spectator_floor_bruteforce",
    "spectator_number",
]
