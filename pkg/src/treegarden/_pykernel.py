"""Pure-Python kernels: spanning-tree enumeration and per-tree metrics.

This module mirrors the compiled ``_speedups`` extension one-for-one; the
``_kernel`` module picks whichever is available at import time. Everything
here operates on flat int buffers so both implementations can share callers.

Enumeration walks a binary search tree over edge decisions in ascending
edge-id order: the branch that contracts the pivot edge is explored first,
then the branch that discards it, which is only entered when the remaining
edges still connect the contracted graph. Every leaf therefore yields
exactly one spanning tree and the visitation order is a deterministic
function of the edge ids.
"""

import sys


class _Stop(Exception):
    pass


def run_enumeration(n, m, eu, ev, parent, parent_edge, depth, tree_edges, callback, limit):
    """Enumerate all spanning trees, filling the shared tree buffers per tree.

    ``callback()`` is invoked once per tree after the buffers are filled; a
    truthy return stops the enumeration. Returns (trees_visited, aborted).
    """
    ufp = list(range(n))
    ufr = [0] * n
    scratch = [0] * n
    state = {"visited": 0, "aborted": False}

    def find(x):
        while ufp[x] != x:
            x = ufp[x]
        return x

    def fill_tree():
        adj = [[] for _ in range(n)]
        for k in range(n - 1):
            e = tree_edges[k]
            a, b = eu[e], ev[e]
            adj[a].append((b, e))
            adj[b].append((a, e))
        parent[0] = -1
        parent_edge[0] = -1
        depth[0] = 0
        seen = [False] * n
        seen[0] = True
        queue = [0]
        qh = 0
        while qh < len(queue):
            u = queue[qh]
            qh += 1
            for w, e in adj[u]:
                if not seen[w]:
                    seen[w] = True
                    parent[w] = u
                    parent_edge[w] = e
                    depth[w] = depth[u] + 1
                    queue.append(w)

    def emit():
        if limit is not None and state["visited"] >= limit:
            state["aborted"] = True
            raise _Stop
        fill_tree()
        state["visited"] += 1
        if callback():
            state["aborted"] = True
            raise _Stop

    def still_connected(after, comps):
        for v in range(n):
            scratch[v] = v

        def sfind(x):
            while scratch[x] != x:
                x = scratch[x]
            return x

        cnt = comps
        for j in range(after + 1, m):
            a = sfind(find(eu[j]))
            b = sfind(find(ev[j]))
            if a != b:
                scratch[a] = b
                cnt -= 1
                if cnt == 1:
                    return True
        return cnt == 1

    def rec(pos, comps):
        if comps == 1:
            emit()
            return
        i = pos
        while i < m:
            ru = find(eu[i])
            rv = find(ev[i])
            if ru != rv:
                break
            i += 1
        else:
            return  # defensive: callers guarantee connectivity
        # contract branch
        if ufr[ru] < ufr[rv]:
            child, par = ru, rv
            bump = False
        elif ufr[ru] > ufr[rv]:
            child, par = rv, ru
            bump = False
        else:
            child, par = rv, ru
            ufr[ru] += 1
            bump = True
        ufp[child] = par
        tree_edges[n - comps] = i
        rec(i + 1, comps - 1)
        ufp[child] = child
        if bump:
            ufr[par] -= 1
        # discard branch, only when the rest still spans
        if still_connected(i, comps):
            rec(i + 1, comps)

    if m > 0:
        sys.setrecursionlimit(max(sys.getrecursionlimit(), 4 * m + 200))
    try:
        rec(0, n)
    except _Stop:
        pass
    return state["visited"], state["aborted"]


def _tree_mask(tree_edges, count):
    mask = 0
    for k in range(count):
        mask |= 1 << tree_edges[k]
    return mask


def _lift_distance(parent, depth, u, v):
    d = 0
    du, dv = depth[u], depth[v]
    while du > dv:
        u = parent[u]
        du -= 1
        d += 1
    while dv > du:
        v = parent[v]
        dv -= 1
        d += 1
    while u != v:
        u = parent[u]
        v = parent[v]
        d += 2
    return d


def fcb_weight(n, m, eu, ev, parent, depth, tree_edges):
    """Sum of fundamental-cycle lengths over all chords of the tree."""
    mask = _tree_mask(tree_edges, n - 1)
    total = 0
    for j in range(m):
        if (mask >> j) & 1:
            continue
        total += _lift_distance(parent, depth, eu[j], ev[j]) + 1
    return total


def tree_diameter(n, parent, depth):
    """Longest path length in edges, via double traversal."""
    if n == 1:
        return 0
    # farthest vertex from the root is simply the deepest one
    a = 0
    for v in range(n):
        if depth[v] > depth[a]:
            a = v
    adj = [[] for _ in range(n)]
    for v in range(1, n):
        adj[v].append(parent[v])
        adj[parent[v]].append(v)
    dist = [-1] * n
    dist[a] = 0
    queue = [a]
    qh = 0
    best = 0
    while qh < len(queue):
        u = queue[qh]
        qh += 1
        for w in adj[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                if dist[w] > best:
                    best = dist[w]
                queue.append(w)
    return best


def total_path_length(n, parent, depth):
    """Sum of tree distances over unordered vertex pairs.

    Each tree edge separates a subtree of size s from the other n-s
    vertices and contributes s*(n-s) shortest paths.
    """
    size = [1] * n
    order = sorted(range(n), key=lambda v: depth[v], reverse=True)
    total = 0
    for v in order:
        if v == 0:
            continue
        size[parent[v]] += size[v]
        total += size[v] * (n - size[v])
    return total


def intersection_number(n, m, eu, ev, parent, parent_edge, depth, tree_edges):
    """Unordered pairs of fundamental cycles sharing at least one edge."""
    mask = _tree_mask(tree_edges, n - 1)
    cycles = []
    for j in range(m):
        if (mask >> j) & 1:
            continue
        cyc = 1 << j
        u, v = eu[j], ev[j]
        du, dv = depth[u], depth[v]
        while du > dv:
            cyc |= 1 << parent_edge[u]
            u = parent[u]
            du -= 1
        while dv > du:
            cyc |= 1 << parent_edge[v]
            v = parent[v]
            dv -= 1
        while u != v:
            cyc |= 1 << parent_edge[u]
            u = parent[u]
            cyc |= 1 << parent_edge[v]
            v = parent[v]
        cycles.append(cyc)
    count = 0
    for a in range(len(cycles)):
        for b in range(a + 1, len(cycles)):
            if cycles[a] & cycles[b]:
                count += 1
    return count
