# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: spanning-tree enumeration and per-tree metrics.

Mirrors ``_pykernel`` one-for-one. Metric kernels assume the bit-set fast
path (m <= 64, n <= 64); ``_kernel`` routes larger inputs to the pure
implementation.
"""

from cpython cimport array
import array

ctypedef unsigned long long u64

cdef array.array _INT_TEMPLATE = array.array("i", [])


cdef class _Enumerator:
    cdef int n, m
    cdef long long limit, visited
    cdef bint aborted
    cdef object callback
    cdef int[:] eu, ev, parent, parent_edge, depth, tree_edges
    cdef int[:] ufp, ufr, scratch
    cdef int[:] adj_head, adj_next, adj_to, adj_eid, queue, seen

    def __cinit__(self, int n, int m, eu, ev, parent, parent_edge, depth,
                  tree_edges, callback, limit):
        self.n = n
        self.m = m
        self.eu = eu
        self.ev = ev
        self.parent = parent
        self.parent_edge = parent_edge
        self.depth = depth
        self.tree_edges = tree_edges
        self.callback = callback
        self.limit = -1 if limit is None else limit
        self.visited = 0
        self.aborted = False
        self.ufp = array.clone(_INT_TEMPLATE, n, zero=True)
        self.ufr = array.clone(_INT_TEMPLATE, n, zero=True)
        self.scratch = array.clone(_INT_TEMPLATE, n, zero=True)
        self.adj_head = array.clone(_INT_TEMPLATE, n, zero=True)
        self.adj_next = array.clone(_INT_TEMPLATE, max(1, 2 * (n - 1)), zero=True)
        self.adj_to = array.clone(_INT_TEMPLATE, max(1, 2 * (n - 1)), zero=True)
        self.adj_eid = array.clone(_INT_TEMPLATE, max(1, 2 * (n - 1)), zero=True)
        self.queue = array.clone(_INT_TEMPLATE, n, zero=True)
        self.seen = array.clone(_INT_TEMPLATE, n, zero=True)
        cdef int v
        for v in range(n):
            self.ufp[v] = v

    cdef int find(self, int x) noexcept:
        while self.ufp[x] != x:
            x = self.ufp[x]
        return x

    cdef void fill_tree(self) noexcept:
        cdef int n = self.n
        cdef int k, e, a, b, u, w, it, qh, qt, slot
        self.parent[0] = -1
        self.parent_edge[0] = -1
        self.depth[0] = 0
        if n == 1:
            return
        for k in range(n):
            self.adj_head[k] = -1
            self.seen[k] = 0
        slot = 0
        for k in range(n - 1):
            e = self.tree_edges[k]
            a = self.eu[e]
            b = self.ev[e]
            self.adj_to[slot] = b
            self.adj_eid[slot] = e
            self.adj_next[slot] = self.adj_head[a]
            self.adj_head[a] = slot
            slot += 1
            self.adj_to[slot] = a
            self.adj_eid[slot] = e
            self.adj_next[slot] = self.adj_head[b]
            self.adj_head[b] = slot
            slot += 1
        self.seen[0] = 1
        self.queue[0] = 0
        qh = 0
        qt = 1
        while qh < qt:
            u = self.queue[qh]
            qh += 1
            it = self.adj_head[u]
            while it != -1:
                w = self.adj_to[it]
                if not self.seen[w]:
                    self.seen[w] = 1
                    self.parent[w] = u
                    self.parent_edge[w] = self.adj_eid[it]
                    self.depth[w] = self.depth[u] + 1
                    self.queue[qt] = w
                    qt += 1
                it = self.adj_next[it]

    cdef bint still_connected(self, int after, int comps) noexcept:
        cdef int v, j, a, b, cnt
        for v in range(self.n):
            self.scratch[v] = v
        cnt = comps
        for j in range(after + 1, self.m):
            a = self.sfind(self.find(self.eu[j]))
            b = self.sfind(self.find(self.ev[j]))
            if a != b:
                self.scratch[a] = b
                cnt -= 1
                if cnt == 1:
                    return True
        return cnt == 1

    cdef int sfind(self, int x) noexcept:
        while self.scratch[x] != x:
            x = self.scratch[x]
        return x

    cdef int emit(self) except -1:
        # returns 1 to request unwinding, 0 to continue
        if self.limit >= 0 and self.visited >= self.limit:
            self.aborted = True
            return 1
        self.fill_tree()
        self.visited += 1
        if self.callback():
            self.aborted = True
            return 1
        return 0

    cdef int rec(self, int pos, int comps) except -1:
        cdef int i, ru, rv, child, par, r
        cdef bint bump
        if comps == 1:
            return self.emit()
        i = pos
        ru = 0
        rv = 0
        while i < self.m:
            ru = self.find(self.eu[i])
            rv = self.find(self.ev[i])
            if ru != rv:
                break
            i += 1
        if i >= self.m:
            return 0  # defensive: callers guarantee connectivity
        # contract branch
        bump = False
        if self.ufr[ru] < self.ufr[rv]:
            child = ru
            par = rv
        elif self.ufr[ru] > self.ufr[rv]:
            child = rv
            par = ru
        else:
            child = rv
            par = ru
            self.ufr[ru] += 1
            bump = True
        self.ufp[child] = par
        self.tree_edges[self.n - comps] = i
        r = self.rec(i + 1, comps - 1)
        self.ufp[child] = child
        if bump:
            self.ufr[par] -= 1
        if r:
            return 1
        # discard branch, only when the rest still spans
        if self.still_connected(i, comps):
            return self.rec(i + 1, comps)
        return 0


def run_enumeration(int n, int m, eu, ev, parent, parent_edge, depth,
                    tree_edges, callback, limit):
    """Compiled twin of ``_pykernel.run_enumeration``."""
    cdef _Enumerator st = _Enumerator(
        n, m, eu, ev, parent, parent_edge, depth, tree_edges, callback, limit)
    st.rec(0, n)
    return st.visited, st.aborted


cdef u64 _tree_mask(int[:] tree_edges, int count) noexcept:
    cdef u64 mask = 0
    cdef int k
    for k in range(count):
        mask |= (<u64>1) << tree_edges[k]
    return mask


cdef int _lift_distance(int[:] parent, int[:] depth, int u, int v) noexcept:
    cdef int d = 0
    cdef int du = depth[u]
    cdef int dv = depth[v]
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


def fcb_weight(int n, int m, eu_o, ev_o, parent_o, depth_o, tree_edges_o):
    cdef int[:] eu = eu_o
    cdef int[:] ev = ev_o
    cdef int[:] parent = parent_o
    cdef int[:] depth = depth_o
    cdef int[:] tree_edges = tree_edges_o
    cdef u64 mask = _tree_mask(tree_edges, n - 1)
    cdef long long total = 0
    cdef int j
    for j in range(m):
        if (mask >> j) & 1:
            continue
        total += _lift_distance(parent, depth, eu[j], ev[j]) + 1
    return total


def tree_diameter(int n, parent_o, depth_o):
    cdef int[:] parent = parent_o
    cdef int[:] depth = depth_o
    cdef int adj_head[64]
    cdef int adj_next[128]
    cdef int adj_to[128]
    cdef int dist[64]
    cdef int queue[64]
    cdef int v, a, slot, u, w, it, qh, qt, best
    if n == 1:
        return 0
    assert n <= 64
    a = 0
    for v in range(n):
        if depth[v] > depth[a]:
            a = v
    for v in range(n):
        adj_head[v] = -1
        dist[v] = -1
    slot = 0
    for v in range(1, n):
        u = parent[v]
        adj_to[slot] = u
        adj_next[slot] = adj_head[v]
        adj_head[v] = slot
        slot += 1
        adj_to[slot] = v
        adj_next[slot] = adj_head[u]
        adj_head[u] = slot
        slot += 1
    dist[a] = 0
    queue[0] = a
    qh = 0
    qt = 1
    best = 0
    while qh < qt:
        u = queue[qh]
        qh += 1
        it = adj_head[u]
        while it != -1:
            w = adj_to[it]
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                if dist[w] > best:
                    best = dist[w]
                queue[qt] = w
                qt += 1
            it = adj_next[it]
    return best


def total_path_length(int n, parent_o, depth_o):
    cdef int[:] parent = parent_o
    cdef int[:] depth = depth_o
    cdef int size[64]
    cdef int v, d, maxdepth
    cdef long long total = 0
    assert n <= 64
    maxdepth = 0
    for v in range(n):
        size[v] = 1
        if depth[v] > maxdepth:
            maxdepth = depth[v]
    d = maxdepth
    while d > 0:
        for v in range(n):
            if depth[v] == d:
                size[parent[v]] += size[v]
                total += <long long>size[v] * (n - size[v])
        d -= 1
    return total


def intersection_number(int n, int m, eu_o, ev_o, parent_o, parent_edge_o,
                        depth_o, tree_edges_o):
    cdef int[:] eu = eu_o
    cdef int[:] ev = ev_o
    cdef int[:] parent = parent_o
    cdef int[:] parent_edge = parent_edge_o
    cdef int[:] depth = depth_o
    cdef int[:] tree_edges = tree_edges_o
    cdef u64 mask = _tree_mask(tree_edges, n - 1)
    cdef u64 cycles[64]
    cdef u64 cyc
    cdef int j, u, v, du, dv, nc, a, b, count
    assert m <= 64
    nc = 0
    for j in range(m):
        if (mask >> j) & 1:
            continue
        cyc = (<u64>1) << j
        u = eu[j]
        v = ev[j]
        du = depth[u]
        dv = depth[v]
        while du > dv:
            cyc |= (<u64>1) << parent_edge[u]
            u = parent[u]
            du -= 1
        while dv > du:
            cyc |= (<u64>1) << parent_edge[v]
            v = parent[v]
            dv -= 1
        while u != v:
            cyc |= (<u64>1) << parent_edge[u]
            u = parent[u]
            cyc |= (<u64>1) << parent_edge[v]
            v = parent[v]
        cycles[nc] = cyc
        nc += 1
    count = 0
    for a in range(nc):
        for b in range(a + 1, nc):
            if cycles[a] & cycles[b]:
                count += 1
    return count
