# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled (I,F) search kernel.  Same contract as ``_kernel_py.search``."""

from cpython.mem cimport PyMem_Malloc, PyMem_Free


cdef class _State:
    cdef int n, mode, stop, budget_hit, order
    cdef long long budget, limit, nodes, count
    cdef int depth
    cdef int[:] adj_ptr
    cdef int[:] adj
    cdef int[:] fadj_ptr
    cdef int[:] fadj
    cdef int *colors
    cdef int *parent
    cdef int *rank
    cdef int *mark
    cdef int *icount
    cdef int *ccount
    cdef int *hist
    cdef int hist_len
    cdef int *roots
    cdef int *trail
    cdef int trail_len
    cdef list solutions

    def __cinit__(self, int n):
        self.n = n
        m = n if n > 0 else 1
        self.colors = <int *> PyMem_Malloc(m * sizeof(int))
        self.parent = <int *> PyMem_Malloc(m * sizeof(int))
        self.rank = <int *> PyMem_Malloc(m * sizeof(int))
        self.mark = <int *> PyMem_Malloc(m * sizeof(int))
        self.icount = <int *> PyMem_Malloc(m * sizeof(int))
        self.ccount = <int *> PyMem_Malloc(m * sizeof(int))
        self.roots = <int *> PyMem_Malloc(m * sizeof(int))
        self.trail = <int *> PyMem_Malloc(m * sizeof(int))
        self.hist = <int *> PyMem_Malloc(4 * m * sizeof(int))
        self.hist_len = 0
        self.trail_len = 0

    def __dealloc__(self):
        PyMem_Free(self.colors)
        PyMem_Free(self.parent)
        PyMem_Free(self.rank)
        PyMem_Free(self.mark)
        PyMem_Free(self.icount)
        PyMem_Free(self.ccount)
        PyMem_Free(self.roots)
        PyMem_Free(self.trail)
        PyMem_Free(self.hist)

    cdef inline int find(self, int x) nogil:
        while self.parent[x] != x:
            x = self.parent[x]
        return x

    cdef int f_roots(self, int v) nogil:
        """Number of distinct F-neighbour roots written to ``roots``; -1 if v cannot be F."""
        cdef int k = 0, i, j, w, r
        cdef int marked = self.mark[v]
        for i in range(self.fadj_ptr[v], self.fadj_ptr[v + 1]):
            w = self.fadj[i]
            if self.colors[w] == 2:
                r = self.find(w)
                for j in range(k):
                    if self.roots[j] == r:
                        return -1
                self.roots[k] = r
                k += 1
                marked += self.mark[r]
        if marked > 1:
            return -1
        return k

    cdef void union(self, int a, int b) nogil:
        cdef int t
        if self.rank[a] < self.rank[b]:
            t = a
            a = b
            b = t
        self.hist[4 * self.hist_len] = b
        self.hist[4 * self.hist_len + 1] = a
        self.hist[4 * self.hist_len + 2] = self.rank[a]
        self.hist[4 * self.hist_len + 3] = self.mark[a]
        self.hist_len += 1
        self.parent[b] = a
        if self.rank[a] == self.rank[b]:
            self.rank[a] += 1
        if self.mark[b]:
            self.mark[a] = 1

    cdef void undo(self, int k) nogil:
        cdef int b, a
        for _ in range(k):
            self.hist_len -= 1
            b = self.hist[4 * self.hist_len]
            a = self.hist[4 * self.hist_len + 1]
            self.parent[b] = b
            self.rank[a] = self.hist[4 * self.hist_len + 2]
            self.mark[a] = self.hist[4 * self.hist_len + 3]

    cdef void set_color(self, int v, int c) nogil:
        cdef int i, w
        self.colors[v] = c
        for i in range(self.adj_ptr[v], self.adj_ptr[v + 1]):
            w = self.adj[i]
            self.ccount[w] += 1
            if c == 1:
                self.icount[w] += 1

    cdef void clear_color(self, int v) nogil:
        cdef int i, w
        cdef int c = self.colors[v]
        self.colors[v] = 0
        for i in range(self.adj_ptr[v], self.adj_ptr[v + 1]):
            w = self.adj[i]
            self.ccount[w] -= 1
            if c == 1:
                self.icount[w] -= 1

    cdef int forward_ok(self, int v) nogil:
        cdef int i, u
        for i in range(self.adj_ptr[v], self.adj_ptr[v + 1]):
            u = self.adj[i]
            if self.colors[u] == 0 and self.icount[u] > 0 and self.f_roots(u) < 0:
                return 0
        return 1

    cdef list snapshot(self):
        return [self.colors[i] for i in range(self.n)]

    cdef int rec(self, int depth) except -1:
        cdef int v, best = -1, best_key = -1, k, i, r
        cdef int *local
        self.nodes += 1
        if self.budget > 0 and self.nodes > self.budget:
            self.budget_hit = 1
            return 1
        if depth > self.depth:
            self.depth = depth
        for v in range(self.n):
            if self.colors[v] == 0 and self.ccount[v] > best_key:
                best = v
                best_key = self.ccount[v]
                if self.order == 1:
                    break
        if best < 0:
            self.count += 1
            if self.mode == 2:
                self.solutions.append(self.snapshot())
                return 1 if (self.limit > 0 and len(self.solutions) >= self.limit) else 0
            if self.mode == 0:
                self.solutions.append(self.snapshot())
                return 1
            return 0
        v = best
        self.trail[self.trail_len] = v
        self.trail_len += 1
        if self.icount[v] == 0:
            self.set_color(v, 1)
            if self.forward_ok(v) and self.rec(depth + 1):
                return 1
            self.clear_color(v)
        k = self.f_roots(v)
        if k >= 0:
            local = <int *> PyMem_Malloc((k if k > 0 else 1) * sizeof(int))
            for i in range(k):
                local[i] = self.roots[i]
            self.set_color(v, 2)
            for i in range(k):
                self.union(self.find(v), local[i])
            PyMem_Free(local)
            if self.forward_ok(v) and self.rec(depth + 1):
                return 1
            self.undo(k)
            self.clear_color(v)
        self.trail_len -= 1
        return 0


def search(int n, adj_ptr, adj, fadj_ptr, fadj, init, marks, int mode, long long budget, long long limit, int order=0):
    cdef _State s = _State(n)
    cdef int v, i, w, rv, rw
    s.adj_ptr = adj_ptr
    s.adj = adj
    s.fadj_ptr = fadj_ptr
    s.fadj = fadj
    s.mode = mode
    s.order = order
    s.budget = budget
    s.limit = limit
    s.nodes = 0
    s.count = 0
    s.depth = 0
    s.budget_hit = 0
    s.solutions = []
    for v in range(n):
        s.colors[v] = init[v]
        s.parent[v] = v
        s.rank[v] = 0
        s.mark[v] = marks[v]
        s.icount[v] = 0
        s.ccount[v] = 0
    for v in range(n):
        if s.colors[v]:
            for i in range(s.adj_ptr[v], s.adj_ptr[v + 1]):
                w = s.adj[i]
                s.ccount[w] += 1
                if s.colors[v] == 1:
                    s.icount[w] += 1
    for v in range(n):
        if s.colors[v] == 1 and s.icount[v] > 0:
            return 1, 0, 0, 0, [], []
    for v in range(n):
        if s.colors[v] == 2:
            for i in range(s.fadj_ptr[v], s.fadj_ptr[v + 1]):
                w = s.fadj[i]
                if w < v and s.colors[w] == 2:
                    rv = s.find(v)
                    rw = s.find(w)
                    if rv == rw or s.mark[rv] + s.mark[rw] > 1:
                        return 1, 0, 0, 0, [], []
                    s.union(rv, rw)
    for v in range(n):
        if s.colors[v] == 0 and s.icount[v] > 0 and s.f_roots(v) < 0:
            return 1, 0, 0, 0, [], []
    s.hist_len = 0
    s.rec(0)
    trail = [s.trail[i] for i in range(s.trail_len)]
    if s.budget_hit:
        return 2, s.nodes, s.depth, s.count, s.solutions, trail
    return (0 if s.count > 0 else 1), s.nodes, s.depth, s.count, s.solutions, trail
