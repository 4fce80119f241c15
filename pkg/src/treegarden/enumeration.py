"""Exhaustive spanning-tree enumeration, exact counting, and the size guard."""

import time
from array import array
from collections import namedtuple
from dataclasses import dataclass
from itertools import combinations

from . import _kernel
from .errors import DisconnectedError, GuardTrippedError, TooLargeError
from .graphs import SpanningTree, UnionFind, is_connected, laplacian

DEFAULT_GUARD_THRESHOLD = 10**8

#: Return this from a visitor to halt enumeration cleanly.
STOP = object()

BRUTE_FORCE_EDGE_CAP = 20


@dataclass(frozen=True)
class EnumerationSummary:
    trees_visited: int
    elapsed: float
    aborted: bool


class TreeView:
    """Transient view of the enumerator's current tree.

    The backing buffers are rewritten between visitor callbacks; call
    ``freeze()`` to keep a snapshot.
    """

    __slots__ = ("n", "graph", "parent", "parent_edge", "depth", "_tree_edges")

    def __init__(self, graph):
        n = graph.n
        self.n = n
        self.graph = graph
        self.parent = array("i", [0] * n)
        self.parent_edge = array("i", [0] * n)
        self.depth = array("i", [0] * n)
        self._tree_edges = array("i", [0] * max(1, n - 1))

    @property
    def edge_ids(self):
        # the engine includes edges in ascending id order, so this is sorted
        return tuple(self._tree_edges[: self.n - 1])

    @property
    def edge_mask(self):
        mask = 0
        for k in range(self.n - 1):
            mask |= 1 << self._tree_edges[k]
        return mask

    def arrays(self):
        """(parent, parent_edge, depth, tree_edges) as C int buffers."""
        return self.parent, self.parent_edge, self.depth, self._tree_edges

    def freeze(self):
        n = self.n
        return SpanningTree(
            n,
            self.edge_ids,
            list(self.parent),
            list(self.parent_edge),
            list(self.depth),
        )


def enumerate_spanning_trees(
    g,
    visitor,
    *,
    limit=None,
    guard_threshold=DEFAULT_GUARD_THRESHOLD,
    skip_guard=False,
):
    """Invoke ``visitor`` once per spanning tree of ``g``.

    The visitor receives a TreeView that is only valid during the callback;
    returning STOP halts enumeration with ``aborted=True``. The visitation
    order is a deterministic function of the edge ids.
    """
    if not is_connected(g):
        raise DisconnectedError("graph is not connected")
    if not skip_guard:
        count = count_spanning_trees(g)
        if count > guard_threshold:
            raise GuardTrippedError(count, guard_threshold)
    view = TreeView(g)
    parent, parent_edge, depth, tree_edges = view.arrays()

    def callback():
        return visitor(view) is STOP

    start = time.perf_counter()
    visited, aborted = _kernel.run_enumeration(
        g.n, g.m, g._eu, g._ev, parent, parent_edge, depth, tree_edges, callback, limit
    )
    return EnumerationSummary(visited, time.perf_counter() - start, aborted)


def brute_force_spanning_trees(g):
    """All spanning trees by subset check; independent oracle, m <= 20 only."""
    if g.m > BRUTE_FORCE_EDGE_CAP:
        raise TooLargeError(f"brute force capped at {BRUTE_FORCE_EDGE_CAP} edges")
    out = []
    for subset in combinations(range(g.m), g.n - 1):
        uf = UnionFind(g.n)
        ok = True
        for e in subset:
            u, v = g.edges[e]
            if not uf.union(u, v):
                ok = False
                break
        if ok and uf.components == 1:
            out.append(subset)
    return out


def _bareiss_determinant(M):
    """Exact integer determinant by fraction-free elimination."""
    n = len(M)
    if n == 0:
        return 1
    M = [row[:] for row in M]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k] != 0:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = M[k][k]
        for i in range(k + 1, n):
            row_i = M[i]
            row_k = M[k]
            factor = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - factor * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * M[n - 1][n - 1]


def count_spanning_trees(g, *, drop=0):
    """Exact spanning-tree count via a Laplacian cofactor.

    ``drop`` selects which row/column to delete; the result is the same for
    every choice.
    """
    if g.n == 1:
        return 1
    L = laplacian(g)
    minor = [
        [L[i][j] for j in range(g.n) if j != drop]
        for i in range(g.n)
        if i != drop
    ]
    return _bareiss_determinant(minor)


GuardDecision = namedtuple("GuardDecision", ["proceed", "count"])


def guard(g, threshold=DEFAULT_GUARD_THRESHOLD):
    """Decide whether enumerating ``g`` is affordable; refusal is a value."""
    count = count_spanning_trees(g)
    return GuardDecision(count <= threshold, count)
