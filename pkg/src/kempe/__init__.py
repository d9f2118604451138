"""Kempe-exchange analysis of 4-colorings of planar near-triangulations.

The package enumerates the 4-coloring states of a-graphs (near-
triangulations with a single quadrilateral face), partitions them into
Kempe-exchange classes, decides membership in the A* family, and runs the
systematic search over conforming ring configurations.
"""

from .coloring import (
    ColoringState,
    KempeChain,
    enumerate_states,
    kempe_chains,
    kempe_exchange,
    two_color_path,
)
from .configs import (
    Configuration,
    ConformanceReport,
    RingSkeleton,
    SearchReport,
    attach_outer_ring,
    build_diamond_string,
    conformance_check,
    diamond_switch,
    enumerate_rings,
    generate_configurations,
    interior_degree_average,
    search_astar,
    switch_closure,
)
from .connectivity import (
    ConnectivityVerdict,
    SeparatingCycleReport,
    internally_6_connected,
    internally_6a_connected,
    min_degree,
    separating_cycles,
)
from .errors import (
    BudgetExceededError,
    FixtureDataUnavailableError,
    FixtureNotFoundError,
    KempeError,
    OperationError,
    StructureError,
)
from .fixtures import Fixture, fixture, fixture_names
from .formats import export_dot, load_graph, load_graph_file, save_graph
from .graphs import (
    AGraph,
    EmbeddedGraph,
    Face,
    Pair,
    ParentedAGraph,
    Triangulation,
    canonical_code,
    contract_edge,
    delete_edge,
    flip_edge,
    insert_edge,
    is_isomorphic,
    trace_faces,
)
from .stategraph import (
    AStarVerdict,
    ComponentLabel,
    StateGraph,
    astar_member,
    astar_member_fast,
    build_state_graph,
    classify_components,
    path_dichotomy_holds,
)

__all__ = [
    "AGraph",
    "AStarVerdict",
    "BudgetExceededError",
    "ColoringState",
    "ComponentLabel",
    "Configuration",
    "ConformanceReport",
    "ConnectivityVerdict",
    "EmbeddedGraph",
    "Face",
    "Fixture",
    "FixtureDataUnavailableError",
    "FixtureNotFoundError",
    "KempeChain",
    "KempeError",
    "OperationError",
    "Pair",
    "ParentedAGraph",
    "RingSkeleton",
    "SearchReport",
    "SeparatingCycleReport",
    "StateGraph",
    "StructureError",
    "Triangulation",
    "astar_member",
    "astar_member_fast",
    "attach_outer_ring",
    "build_diamond_string",
    "build_state_graph",
    "canonical_code",
    "classify_components",
    "conformance_check",
    "contract_edge",
    "delete_edge",
    "diamond_switch",
    "enumerate_rings",
    "enumerate_states",
    "export_dot",
    "fixture",
    "fixture_names",
    "flip_edge",
    "generate_configurations",
    "insert_edge",
    "interior_degree_average",
    "internally_6_connected",
    "internally_6a_connected",
    "is_isomorphic",
    "kempe_chains",
    "kempe_exchange",
    "load_graph",
    "load_graph_file",
    "min_degree",
    "path_dichotomy_holds",
    "save_graph",
    "search_astar",
    "separating_cycles",
    "switch_closure",
    "trace_faces",
    "two_color_path",
]
