"""Chromatic symmetric functions of graphs and the e- and Schur-positivity posets."""

from .partition import Partition, parse_partition, partitions_of
from .symfunc import Basis, SymFunc, convert, is_nonneg_in, multiply, transition
from .graph import (
    Graph,
    chromatic_polynomial,
    csf,
    csf_bond_lattice,
    csf_power_sum,
    csf_stable_partition,
    enumerate_connected,
    parse_graph6,
    write_graph6,
)
from .chromposet import ChromaticPoset, Order, build_poset, related, weighted_difference

__all__ = [
    "Partition",
    "parse_partition",
    "partitions_of",
    "Basis",
    "SymFunc",
    "convert",
    "is_nonneg_in",
    "multiply",
    "transition",
    "Graph",
    "chromatic_polynomial",
    "csf",
    "csf_bond_lattice",
    "csf_power_sum",
    "csf_stable_partition",
    "enumerate_connected",
    "parse_graph6",
    "write_graph6",
    "ChromaticPoset",
    "Order",
    "build_poset",
    "related",
    "weighted_difference",
]
