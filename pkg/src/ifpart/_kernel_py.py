"""Pure-Python (I,F) search kernel; the compiled ``_kernel`` mirrors it exactly.

Colour codes: 0 uncoloured, 1 = I, 2 = F.

Two adjacency structures are passed in CSR form.  ``adj`` carries every
edge and is used for independence of I.  ``fadj`` carries the edges along
which F-vertices are merged in the union-find; an F-merge fails when it
closes a cycle or joins two components that each contain a marked vertex.
Plain partition search passes ``fadj == adj`` and no marks; super-extension
search drops the boundary's own edges from ``fadj`` and marks the boundary.

Modes: 0 first solution, 1 count, 2 enumerate (up to ``limit`` if > 0).
Status: 0 found/complete, 1 no solution, 2 budget exhausted.
Order: 0 picks the uncoloured vertex with most coloured neighbours (least
index on ties), 1 picks the least-index uncoloured vertex.
"""

from __future__ import annotations


class _Budget(Exception):
    pass


def search(n, adj_ptr, adj, fadj_ptr, fadj, init, marks, mode, budget, limit, order=0):
    colors = [int(c) for c in init]
    parent = list(range(n))
    rank = [0] * n
    mark = [int(m) for m in marks]
    icount = [0] * n
    ccount = [0] * n
    history = []
    trail = []
    stats = {"nodes": 0, "depth": 0, "count": 0}
    solutions = []

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    def f_roots(v):
        """Distinct F-neighbour roots of v, or None if v cannot take F."""
        roots = []
        marked = mark[v]
        for i in range(fadj_ptr[v], fadj_ptr[v + 1]):
            w = fadj[i]
            if colors[w] == 2:
                r = find(w)
                if r in roots:
                    return None
                roots.append(r)
                marked += mark[r]
        if marked > 1:
            return None
        return roots

    def union(a, b):
        if rank[a] < rank[b]:
            a, b = b, a
        history.append((b, a, rank[a], mark[a]))
        parent[b] = a
        if rank[a] == rank[b]:
            rank[a] += 1
        if mark[b]:
            mark[a] = 1

    def undo(k):
        for _ in range(k):
            b, a, r, m = history.pop()
            parent[b] = b
            rank[a] = r
            mark[a] = m

    def set_color(v, c):
        colors[v] = c
        for i in range(adj_ptr[v], adj_ptr[v + 1]):
            w = adj[i]
            ccount[w] += 1
            if c == 1:
                icount[w] += 1

    def clear_color(v):
        c = colors[v]
        colors[v] = 0
        for i in range(adj_ptr[v], adj_ptr[v + 1]):
            w = adj[i]
            ccount[w] -= 1
            if c == 1:
                icount[w] -= 1

    def forward_ok(v):
        for i in range(adj_ptr[v], adj_ptr[v + 1]):
            u = adj[i]
            if colors[u] == 0 and icount[u] > 0 and f_roots(u) is None:
                return False
        return True

    # initial state
    for v in range(n):
        if colors[v]:
            for i in range(adj_ptr[v], adj_ptr[v + 1]):
                w = adj[i]
                ccount[w] += 1
                if colors[v] == 1:
                    icount[w] += 1
    for v in range(n):
        if colors[v] == 1 and icount[v] > 0:
            return 1, 0, 0, 0, [], []
    for v in range(n):
        if colors[v] == 2:
            for i in range(fadj_ptr[v], fadj_ptr[v + 1]):
                w = fadj[i]
                if w < v and colors[w] == 2:
                    rv, rw = find(v), find(w)
                    if rv == rw or mark[rv] + mark[rw] > 1:
                        return 1, 0, 0, 0, [], []
                    union(rv, rw)
    for v in range(n):
        if colors[v] == 0 and icount[v] > 0 and f_roots(v) is None:
            return 1, 0, 0, 0, [], []
    history.clear()

    def rec(depth):
        stats["nodes"] += 1
        if budget > 0 and stats["nodes"] > budget:
            raise _Budget
        if depth > stats["depth"]:
            stats["depth"] = depth
        best, best_key = -1, -1
        for v in range(n):
            if colors[v] == 0 and ccount[v] > best_key:
                best, best_key = v, ccount[v]
                if order == 1:
                    break
        if best < 0:
            stats["count"] += 1
            if mode == 2:
                solutions.append(list(colors))
                return limit > 0 and len(solutions) >= limit
            if mode == 0:
                solutions.append(list(colors))
                return True
            return False
        v = best
        trail.append(v)
        if icount[v] == 0:
            set_color(v, 1)
            if forward_ok(v) and rec(depth + 1):
                return True
            clear_color(v)
        roots = f_roots(v)
        if roots is not None:
            set_color(v, 2)
            for r in roots:
                union(find(v), r)
            if forward_ok(v) and rec(depth + 1):
                return True
            undo(len(roots))
            clear_color(v)
        trail.pop()
        return False

    try:
        rec(0)
    except _Budget:
        return 2, stats["nodes"], stats["depth"], stats["count"], solutions, list(trail)
    status = 0 if stats["count"] > 0 else 1
    return status, stats["nodes"], stats["depth"], stats["count"], solutions, list(trail)
