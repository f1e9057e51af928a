from .core import Graph, canonical_key, format_edge_list, parse_edge_list
from .families import (
    make_complete,
    make_cycle,
    make_lollipop,
    make_path,
    make_star,
    make_unit_interval,
    unit_interval_sequences,
)
from .graph6 import Graph6Error, parse_graph6, read_graph6_file, write_graph6
from .enumerate import enumerate_connected
from .invariants import (
    ChromaticPolynomial,
    SinkProfile,
    acyclic_orientation_count,
    chromatic_number,
    chromatic_polynomial,
    clique_number,
    e_top_coefficient,
    independence_number,
    s_bottom_coefficient,
    sink_profile,
)
from .csf import (
    bond_lattice_mobius,
    connected_partitions,
    csf,
    csf_bond_lattice,
    csf_power_sum,
    csf_stable_partition,
    stable_partition_counts,
)
