"""Per-tree metrics: fundamental cycles, FCB weight, diameter, total path
length, and the cycle intersection number.

All functions accept either a SpanningTree snapshot or the transient
TreeView handed to pipeline consumers.
"""

from dataclasses import dataclass
from enum import Enum

from . import _kernel
from .errors import NotAChordError
from .graphs import tree_path


class MetricKey(str, Enum):
    FCB_WEIGHT = "fcb_weight"
    DIAMETER = "diameter"
    TOTAL_PATH_LENGTH = "total_path_length"
    INTERSECTION_NUMBER = "intersection_number"


@dataclass(frozen=True)
class FundamentalCycle:
    chord: int
    cycle_edges: frozenset
    length: int


@dataclass(frozen=True)
class TreeMetricReport:
    fcb_weight: int
    diameter: int
    total_path_length: int
    intersection_number: int


def fundamental_cycle(g, t, chord):
    """The unique cycle closed by a chord: the chord plus the tree path."""
    if (t.edge_mask >> chord) & 1:
        raise NotAChordError(f"edge {chord} is a tree edge")
    u, v = g.edges[chord]
    edges = frozenset(tree_path(t, u, v)) | {chord}
    return FundamentalCycle(chord, edges, len(edges))


def fcb_weight(g, t):
    """Sum of fundamental-cycle lengths over all chords."""
    parent, _, depth, tree_edges = t.arrays()
    return _kernel.fcb_weight(g.n, g.m, g._eu, g._ev, parent, depth, tree_edges)


def tree_diameter(t):
    """Longest tree path, in edges."""
    parent, _, depth, _ = t.arrays()
    return _kernel.tree_diameter(t.n, parent, depth)


def total_path_length(t):
    """Sum of tree distances over all unordered vertex pairs."""
    parent, _, depth, _ = t.arrays()
    return _kernel.total_path_length(t.n, parent, depth)


def intersection_number(g, t, *, share_vertices=False):
    """Unordered pairs of fundamental cycles that intersect.

    By default two cycles intersect when they share an edge; pass
    ``share_vertices=True`` to count shared vertices instead.
    """
    if not share_vertices:
        parent, parent_edge, depth, tree_edges = t.arrays()
        return _kernel.intersection_number(
            g.n, g.m, g._eu, g._ev, parent, parent_edge, depth, tree_edges
        )
    mask = t.edge_mask
    vertex_sets = []
    for chord in range(g.m):
        if (mask >> chord) & 1:
            continue
        verts = set(g.edges[chord])
        for e in tree_path(t, *g.edges[chord]):
            verts.update(g.edges[e])
        vertex_sets.append(verts)
    return sum(
        1
        for a in range(len(vertex_sets))
        for b in range(a + 1, len(vertex_sets))
        if vertex_sets[a] & vertex_sets[b]
    )


def tree_report(g, t):
    """All four per-tree metrics in one bundle."""
    return TreeMetricReport(
        fcb_weight=fcb_weight(g, t),
        diameter=tree_diameter(t),
        total_path_length=total_path_length(t),
        intersection_number=intersection_number(g, t),
    )


def metric_value(key, g, t):
    """Evaluate one MetricKey on a tree."""
    key = MetricKey(key)
    if key is MetricKey.FCB_WEIGHT:
        return fcb_weight(g, t)
    if key is MetricKey.DIAMETER:
        return tree_diameter(t)
    if key is MetricKey.TOTAL_PATH_LENGTH:
        return total_path_length(t)
    return intersection_number(g, t)


def min_fcb(g, *, witness_cap=16, guard_threshold=None):
    """Minimum FCB weight over all spanning trees, with witness trees."""
    from .enumeration import DEFAULT_GUARD_THRESHOLD
    from .pipeline import collector_min_by, run_pipeline

    if guard_threshold is None:
        guard_threshold = DEFAULT_GUARD_THRESHOLD
    result = run_pipeline(
        g,
        [collector_min_by(MetricKey.FCB_WEIGHT, witness_cap=witness_cap)],
        [],
        guard_threshold=guard_threshold,
    )
    report = result.reports[0]
    return report.value, report.witnesses
