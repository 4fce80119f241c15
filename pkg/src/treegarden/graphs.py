"""Core graph and tree types.

Vertices are dense integers 0..n-1. Edges are unordered pairs carrying a
dense edge id equal to their position in the construction order; every other
module refers to edges by id. Graphs are simple (no self-loops, no parallel
edges) and immutable after construction.
"""

from array import array
from collections import deque

from .errors import (
    DuplicateEdgeError,
    NotATreeError,
    SelfLoopError,
    UnknownEdgeError,
    VertexOutOfRangeError,
)

MAX_VERTICES = 62  # graph6 short-form bound; enforced by the formats module


class Graph:
    """Immutable simple undirected graph with id-indexed edges."""

    __slots__ = ("n", "edges", "adjacency", "_eu", "_ev")

    def __init__(self, n, edges):
        if n < 1:
            raise VertexOutOfRangeError(n - 1, n)
        seen = set()
        edge_list = []
        adjacency = [[] for _ in range(n)]
        eu = array("i")
        ev = array("i")
        for idx, (u, v) in enumerate(edges):
            u = int(u)
            v = int(v)
            for x in (u, v):
                if not 0 <= x < n:
                    raise VertexOutOfRangeError(x, n)
            if u == v:
                raise SelfLoopError(idx)
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise DuplicateEdgeError(idx)
            seen.add(key)
            edge_list.append((u, v))
            adjacency[u].append((v, idx))
            adjacency[v].append((u, idx))
            eu.append(u)
            ev.append(v)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(edge_list))
        object.__setattr__(self, "adjacency", tuple(tuple(a) for a in adjacency))
        object.__setattr__(self, "_eu", eu)
        object.__setattr__(self, "_ev", ev)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @property
    def m(self):
        return len(self.edges)

    def normalized_edges(self):
        """Edges as (min, max) pairs, in id order."""
        return tuple((u, v) if u < v else (v, u) for u, v in self.edges)

    def has_edge(self, u, v):
        key = (u, v) if u < v else (v, u)
        return key in set(self.normalized_edges())

    def __eq__(self, other):
        # adjacency identity: edge ids and edge order do not matter
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and frozenset(self.normalized_edges()) == frozenset(
            other.normalized_edges()
        )

    def __hash__(self):
        return hash((self.n, frozenset(self.normalized_edges())))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={list(self.edges)!r})"


def new_graph(n, edges):
    """Validate and build a Graph; edge ids follow the input order."""
    return Graph(n, edges)


class UnionFind:
    """Disjoint sets over 0..n-1 with union by rank and path compression."""

    __slots__ = ("parent", "rank", "components")

    def __init__(self, n):
        self.parent = list(range(n))
        self.rank = [0] * n
        self.components = n

    def find(self, x):
        parent = self.parent
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, a, b):
        """Merge the sets of a and b; returns False if already joined."""
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.rank[ra] < self.rank[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        if self.rank[ra] == self.rank[rb]:
            self.rank[ra] += 1
        self.components -= 1
        return True


class SpanningTree:
    """Immutable snapshot of one spanning tree, rooted at vertex 0.

    parent[0] and parent_edge[0] are -1. Walking parent links from any
    vertex reaches the root in depth[v] steps.
    """

    __slots__ = ("n", "edge_ids", "parent", "parent_edge", "depth", "_buf")

    def __init__(self, n, edge_ids, parent, parent_edge, depth):
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edge_ids", tuple(edge_ids))
        object.__setattr__(self, "parent", tuple(parent))
        object.__setattr__(self, "parent_edge", tuple(parent_edge))
        object.__setattr__(self, "depth", tuple(depth))
        object.__setattr__(self, "_buf", None)

    def __setattr__(self, name, value):
        raise AttributeError("SpanningTree is immutable")

    @property
    def edge_mask(self):
        mask = 0
        for e in self.edge_ids:
            mask |= 1 << e
        return mask

    def arrays(self):
        """(parent, parent_edge, depth, tree_edges) as C int buffers."""
        buf = self._buf
        if buf is None:
            buf = (
                array("i", self.parent),
                array("i", self.parent_edge),
                array("i", self.depth),
                array("i", self.edge_ids),
            )
            object.__setattr__(self, "_buf", buf)
        return buf

    def __eq__(self, other):
        if not isinstance(other, SpanningTree):
            return NotImplemented
        return self.n == other.n and self.edge_ids == other.edge_ids

    def __hash__(self):
        return hash((self.n, self.edge_ids))

    def __repr__(self):
        return f"SpanningTree(n={self.n}, edge_ids={list(self.edge_ids)!r})"


def is_connected(g):
    """True iff every vertex is reachable from vertex 0."""
    if g.n == 1:
        return True
    seen = [False] * g.n
    seen[0] = True
    stack = [0]
    count = 1
    while stack:
        u = stack.pop()
        for v, _ in g.adjacency[u]:
            if not seen[v]:
                seen[v] = True
                count += 1
                stack.append(v)
    return count == g.n


def bridges(g):
    """Edge ids whose removal increases the number of components."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    out = set()
    timer = 0
    for start in range(n):
        if disc[start] != -1:
            continue
        # iterative DFS; each frame is (vertex, incoming edge id, adjacency cursor)
        stack = [(start, -1, 0)]
        disc[start] = low[start] = timer
        timer += 1
        while stack:
            u, in_edge, i = stack[-1]
            adj = g.adjacency[u]
            if i < len(adj):
                stack[-1] = (u, in_edge, i + 1)
                v, eid = adj[i]
                if eid == in_edge:
                    continue
                if disc[v] == -1:
                    disc[v] = low[v] = timer
                    timer += 1
                    stack.append((v, eid, 0))
                else:
                    low[u] = min(low[u], disc[v])
            else:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    low[p] = min(low[p], low[u])
                    if low[u] > disc[p]:
                        out.add(in_edge)
    return frozenset(out)


def tree_from_edges(g, edge_ids):
    """Build a SpanningTree from an edge-id set, validating acyclicity and span."""
    ids = sorted(set(int(e) for e in edge_ids))
    if len(ids) != len(list(edge_ids)):
        raise NotATreeError("duplicate edge ids")
    for e in ids:
        if not 0 <= e < g.m:
            raise UnknownEdgeError(f"edge id {e} not in graph")
    if len(ids) != g.n - 1:
        raise NotATreeError(f"expected {g.n - 1} edges, got {len(ids)}")
    uf = UnionFind(g.n)
    for e in ids:
        u, v = g.edges[e]
        if not uf.union(u, v):
            raise NotATreeError(f"edge {e} closes a cycle")
    # n-1 successful unions leave exactly one component, so the set spans
    id_set = set(ids)
    parent = [-1] * g.n
    parent_edge = [-1] * g.n
    depth = [0] * g.n
    seen = [False] * g.n
    seen[0] = True
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for v, eid in g.adjacency[u]:
            if eid in id_set and not seen[v]:
                seen[v] = True
                parent[v] = u
                parent_edge[v] = eid
                depth[v] = depth[u] + 1
                queue.append(v)
    return SpanningTree(g.n, ids, parent, parent_edge, depth)


def tree_path(t, u, v):
    """Edge ids along the unique tree path from u to v (empty iff u == v)."""
    parent = t.parent
    parent_edge = t.parent_edge
    depth = t.depth
    up = []
    down = []
    while depth[u] > depth[v]:
        up.append(parent_edge[u])
        u = parent[u]
    while depth[v] > depth[u]:
        down.append(parent_edge[v])
        v = parent[v]
    while u != v:
        up.append(parent_edge[u])
        u = parent[u]
        down.append(parent_edge[v])
        v = parent[v]
    down.reverse()
    return tuple(up + down)


def laplacian(g):
    """Graph Laplacian as a dense n x n list-of-lists of ints."""
    L = [[0] * g.n for _ in range(g.n)]
    for u, v in g.edges:
        L[u][u] += 1
        L[v][v] += 1
        L[u][v] -= 1
        L[v][u] -= 1
    return L


def incidence_matrix(g):
    """0/1 incidence matrix, n rows (vertices) by m columns (edges)."""
    M = [[0] * g.m for _ in range(g.n)]
    for j, (u, v) in enumerate(g.edges):
        M[u][j] = 1
        M[v][j] = 1
    return M
