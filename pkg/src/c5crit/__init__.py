"""Exact tools for circular 5/2-coloring: homomorphisms to odd cycles,
criticality, potential, structural audit, discharging and enumeration."""

from .constructions import (
    OreState,
    e1_graph,
    e2_graph,
    family_X,
    make_named,
    ore_6critical,
    ore_compose,
    petersen_graph,
    theta_graph,
)
from .critical import (
    CRITICAL,
    CriticalityVerdict,
    TheoremReport,
    extract_critical_subgraph,
    is_critical,
    theorem_predicate,
)
from .discharging import ChargeLedger, run_discharging
from .enumeration import (
    EnumerationTask,
    are_isomorphic,
    canonical_code,
    enumerate_graphs,
    generate,
    verify_small_critical,
)
from .errors import *  # noqa: F401,F403
from .formats import graph6_decode, graph6_encode, read_graphs
from .graph import (
    INFINITE,
    CycleReport,
    Graph,
    build_graph,
    cycle_report,
    identify_vertices,
    is_biconnected,
    potential,
    subdivide_all_edges,
)
from .hom import HomAssignment, count_homs, find_hom, has_hom, plausible_pair
from .structure import (
    AuditReport,
    Cell,
    StringDecomposition,
    audit_structure,
    find_bad_paths,
    find_cells,
    string_decomposition,
    vertex_signature,
)

__version__ = "0.1.0"
