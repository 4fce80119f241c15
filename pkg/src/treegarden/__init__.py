"""treegarden: exhaustive spanning-tree enumeration and analysis for small graphs."""

from ._kernel import active_implementation, force_pure_python, have_speedups
from .enumeration import (
    DEFAULT_GUARD_THRESHOLD,
    STOP,
    EnumerationSummary,
    brute_force_spanning_trees,
    count_spanning_trees,
    enumerate_spanning_trees,
    guard,
)
from .graphs import (
    Graph,
    SpanningTree,
    UnionFind,
    bridges,
    incidence_matrix,
    is_connected,
    laplacian,
    new_graph,
    tree_from_edges,
    tree_path,
)
from .metrics import (
    FundamentalCycle,
    MetricKey,
    TreeMetricReport,
    fcb_weight,
    fundamental_cycle,
    intersection_number,
    min_fcb,
    total_path_length,
    tree_diameter,
    tree_report,
)
from .pipeline import (
    Collector,
    Processor,
    collector_count,
    collector_filter,
    collector_histogram,
    collector_min_by,
    collector_top_k,
    processor_dot_emit,
    processor_pretty_print,
    run_pipeline,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_GUARD_THRESHOLD",
    "STOP",
    "Collector",
    "EnumerationSummary",
    "FundamentalCycle",
    "Graph",
    "MetricKey",
    "Processor",
    "SpanningTree",
    "TreeMetricReport",
    "UnionFind",
    "active_implementation",
    "bridges",
    "brute_force_spanning_trees",
    "collector_count",
    "collector_filter",
    "collector_histogram",
    "collector_min_by",
    "collector_top_k",
    "count_spanning_trees",
    "enumerate_spanning_trees",
    "fcb_weight",
    "force_pure_python",
    "fundamental_cycle",
    "guard",
    "have_speedups",
    "incidence_matrix",
    "intersection_number",
    "is_connected",
    "laplacian",
    "min_fcb",
    "new_graph",
    "processor_dot_emit",
    "processor_pretty_print",
    "run_pipeline",
    "total_path_length",
    "tree_diameter",
    "tree_from_edges",
    "tree_path",
    "tree_report",
]
