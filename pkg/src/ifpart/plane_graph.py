"""Plane graphs stored as rotation systems.

A vertex's rotation lists its neighbours in clockwise order.  Faces are
traced with the successor rule: the dart ``(u, v)`` is followed by
``(v, w)`` where ``w`` comes right after ``u`` in the rotation at ``v``.
A face walk ``(a, b, c, ...)`` therefore consists of the darts
``(a, b), (b, c), ...`` and closes back on ``a``.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

Edge = tuple[int, int]


class GraphError(ValueError):
    """Base class for invalid plane graph input or operations."""


class AsymmetricRotation(GraphError):
    pass


class LoopOrMultiEdge(GraphError):
    pass


class EulerViolation(GraphError):
    pass


class Disconnected(GraphError):
    pass


class NotACycle(GraphError):
    pass


class NotCoFacial(GraphError):
    pass


class WouldCreateLoop(GraphError):
    pass


class WouldIdentifyEdges(GraphError):
    pass


def edge_key(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def trace_faces(rotations: dict[int, list[int]] | Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Trace every face of a rotation system.

    Works for list-indexed rotations as well as dicts keyed by arbitrary
    vertex ids (surgeries use the latter while vertices are being merged).
    """
    items = rotations.items() if isinstance(rotations, dict) else enumerate(rotations)
    rot = {v: list(nbrs) for v, nbrs in items}
    pos = {v: {w: i for i, w in enumerate(nbrs)} for v, nbrs in rot.items()}
    seen: set[Edge] = set()
    faces = []
    for u in sorted(rot):
        for v in rot[u]:
            if (u, v) in seen:
                continue
            walk = []
            a, b = u, v
            while (a, b) not in seen:
                seen.add((a, b))
                walk.append(a)
                rb = rot[b]
                a, b = b, rb[(pos[b][a] + 1) % len(rb)]
            faces.append(tuple(walk))
    return faces


class PlaneGraph:
    """Immutable simple plane graph with a designated outer face.

    ``outer`` may be a face index, a dart ``(u, v)`` lying on the wanted
    face, or ``None`` for the first face of maximum length.
    """

    __slots__ = ("n", "rotations", "faces", "outer", "_pos", "_face_of", "_edges")

    def __init__(
        self,
        rotations: Sequence[Sequence[int]],
        outer: int | Edge | None = None,
        *,
        require_connected: bool = False,
    ) -> None:
        self.rotations = tuple(tuple(int(w) for w in r) for r in rotations)
        self.n = len(self.rotations)
        self._pos = []
        for v, rot in enumerate(self.rotations):
            pos = {}
            for i, w in enumerate(rot):
                if w == v:
                    raise LoopOrMultiEdge(f"loop at vertex {v}")
                if not 0 <= w < self.n:
                    raise AsymmetricRotation(f"vertex {v} lists unknown neighbour {w}")
                if w in pos:
                    raise LoopOrMultiEdge(f"repeated neighbour {w} at vertex {v}")
                pos[w] = i
            self._pos.append(pos)
        for v, rot in enumerate(self.rotations):
            for w in rot:
                if v not in self._pos[w]:
                    raise AsymmetricRotation(f"{w} in rotation of {v} but not vice versa")

        self.faces = tuple(trace_faces(self.rotations))
        self._face_of = {}
        for fi, walk in enumerate(self.faces):
            k = len(walk)
            for i in range(k):
                self._face_of[(walk[i], walk[(i + 1) % k])] = fi
        self._edges = tuple(
            (v, w) for v, rot in enumerate(self.rotations) for w in sorted(rot) if v < w
        )

        comps = self.components()
        isolated = sum(1 for rot in self.rotations if not rot)
        if self.n - self.m + len(self.faces) + isolated != 2 * len(comps):
            raise EulerViolation(
                f"n={self.n}, m={self.m}, f={len(self.faces)}: rotation system is not planar"
            )
        if require_connected and len(comps) > 1:
            raise Disconnected(f"{len(comps)} components")

        if outer is None:
            self.outer = (
                max(range(len(self.faces)), key=lambda i: (len(self.faces[i]), -i))
                if self.faces
                else None
            )
        elif isinstance(outer, tuple):
            if outer not in self._face_of:
                raise GraphError(f"dart {outer} is not an edge")
            self.outer = self._face_of[outer]
        else:
            if not 0 <= outer < len(self.faces):
                raise GraphError(f"no face {outer}")
            self.outer = outer

    # -- basic queries -------------------------------------------------

    @property
    def m(self) -> int:
        return len(self._edges)

    def edges(self) -> tuple[Edge, ...]:
        return self._edges

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.rotations[v]

    def degree(self, v: int) -> int:
        return len(self.rotations[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._pos[u]

    def face_of(self, u: int, v: int) -> int:
        return self._face_of[(u, v)]

    def next_dart(self, u: int, v: int) -> Edge:
        rot = self.rotations[v]
        return (v, rot[(self._pos[v][u] + 1) % len(rot)])

    @property
    def outer_walk(self) -> tuple[int, ...]:
        return self.faces[self.outer] if self.outer is not None else ()

    def with_outer(self, outer: int | Edge | None) -> "PlaneGraph":
        return PlaneGraph(self.rotations, outer)

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp, queue = [], deque([s])
            while queue:
                v = queue.popleft()
                comp.append(v)
                for w in self.rotations[v]:
                    if not seen[w]:
                        seen[w] = True
                        queue.append(w)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def faces_at(self, v: int) -> list[int]:
        return [self._face_of[(v, w)] for w in self.rotations[v]]

    def face_cycle(self, fi: int) -> tuple[int, ...] | None:
        """The face walk if it is a simple cycle, else ``None``."""
        walk = self.faces[fi]
        return walk if len(walk) >= 3 and len(set(walk)) == len(walk) else None

    def find_face(self, cycle: Sequence[int]) -> int | None:
        """Index of a face whose boundary is exactly ``cycle`` (either direction)."""
        c = tuple(cycle)
        k = len(c)
        for dart in ((c[0], c[1 % k]), (c[1 % k], c[0])):
            fi = self._face_of.get(dart)
            if fi is not None and len(self.faces[fi]) == k and set(self.faces[fi]) == set(c):
                return fi
        return None

    def induced(self, keep: Iterable[int], outer_hint: Sequence[int] = ()) -> tuple["PlaneGraph", list[int | None]]:
        """Subgraph induced by ``keep`` with the embedding restricted to it.

        Returns the subgraph and the old->new index map.  ``outer_hint`` is a
        walk whose surviving darts are tried (in order) for the new outer face.
        """
        keep = sorted(set(keep))
        new = [None] * self.n
        for i, v in enumerate(keep):
            new[v] = i
        rots = [[new[w] for w in self.rotations[v] if new[w] is not None] for v in keep]
        hint = _mapped_dart(outer_hint or self.outer_walk, new, rots)
        return PlaneGraph(rots, hint), new

    def __repr__(self) -> str:
        return f"PlaneGraph(n={self.n}, m={self.m}, faces={len(self.faces)})"

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, PlaneGraph)
            and self.rotations == other.rotations
            and self.outer == other.outer
        )

    def __hash__(self) -> int:
        return hash((self.rotations, self.outer))


def build(n: int, rotations: Sequence[Sequence[int]], outer: int | Edge | None = None, *, require_connected: bool = False) -> PlaneGraph:
    if len(rotations) != n:
        raise GraphError(f"expected {n} rotations, got {len(rotations)}")
    return PlaneGraph(rotations, outer, require_connected=require_connected)


def from_coordinates(points: Sequence[tuple[float, float]], edges: Iterable[Edge], outer: int | Edge | None = None) -> PlaneGraph:
    """Embed a straight-line drawing; rotations are clockwise by angle.

    Crossing edges produce an inconsistent rotation system, which the
    Euler check rejects.
    """
    nbrs: list[list[int]] = [[] for _ in points]
    for u, v in edges:
        nbrs[u].append(v)
        nbrs[v].append(u)
    rots = []
    for v, ws in enumerate(nbrs):
        x0, y0 = points[v]
        rots.append(sorted(ws, key=lambda w: -math.atan2(points[w][1] - y0, points[w][0] - x0)))
    return PlaneGraph(rots, outer)


def cycle_graph(k: int) -> PlaneGraph:
    return PlaneGraph([[(i + 1) % k, (i - 1) % k] for i in range(k)])


def _mapped_dart(walk: Sequence[int], new: Sequence[int | None], rots) -> Edge | None:
    k = len(walk)
    for i in range(k):
        a, b = new[walk[i]], new[walk[(i + 1) % k]]
        if a is not None and b is not None and a != b and b in rots[a]:
            return (a, b)
    return None


# -- cycles -----------------------------------------------------------------


def check_cycle(G: PlaneGraph, cycle: Sequence[int]) -> tuple[int, ...]:
    c = tuple(cycle)
    if len(c) < 3 or len(set(c)) != len(c):
        raise NotACycle(f"{c} is not a cycle")
    for i in range(len(c)):
        if not G.has_edge(c[i], c[(i + 1) % len(c)]):
            raise NotACycle(f"{c[i]}-{c[(i + 1) % len(c)]} is not an edge")
    return c


def cycle_edges(cycle: Sequence[int]) -> set[Edge]:
    k = len(cycle)
    return {edge_key(cycle[i], cycle[(i + 1) % k]) for i in range(k)}


@dataclass(frozen=True)
class Side:
    faces: frozenset[int]
    vertices: frozenset[int]
    edges: frozenset[Edge]


@dataclass(frozen=True)
class Sides:
    inside: Side
    outside: Side


def cycle_sides(G: PlaneGraph, cycle: Sequence[int]) -> Sides:
    """Split faces, vertices and edges by a cycle using dual BFS from the outer face."""
    c = check_cycle(G, cycle)
    on_c = cycle_edges(c)
    out_faces = {G.outer}
    queue = deque([G.outer])
    while queue:
        fi = queue.popleft()
        walk = G.faces[fi]
        k = len(walk)
        for i in range(k):
            u, v = walk[i], walk[(i + 1) % k]
            if edge_key(u, v) in on_c:
                continue
            other = G.face_of(v, u)
            if other not in out_faces:
                out_faces.add(other)
                queue.append(other)
    in_faces = frozenset(range(len(G.faces))) - out_faces
    cset = set(c)
    vin, vout, ein, eout = set(), set(), set(), set()
    for v in range(G.n):
        if v in cset or not G.rotations[v]:
            continue
        (vin if G.face_of(v, G.rotations[v][0]) in in_faces else vout).add(v)
    for u, v in G.edges():
        if (u, v) in on_c:
            continue
        (ein if G.face_of(u, v) in in_faces else eout).add((u, v))
    return Sides(
        Side(frozenset(in_faces), frozenset(vin), frozenset(ein)),
        Side(frozenset(out_faces), frozenset(vout), frozenset(eout)),
    )


def simple_cycles(G: PlaneGraph, max_len: int, min_len: int = 3) -> Iterator[tuple[int, ...]]:
    """All simple cycles with ``min_len <= length <= max_len``, each once.

    Cycles start at their least vertex; the second vertex is smaller than the last.
    """
    rot = G.rotations
    for s in range(G.n):
        path = [s]
        on_path = {s}

        def extend(v: int) -> Iterator[tuple[int, ...]]:
            for w in rot[v]:
                if w == s:
                    if len(path) >= min_len and path[1] < path[-1]:
                        yield tuple(path)
                elif w > s and w not in on_path and len(path) < max_len:
                    path.append(w)
                    on_path.add(w)
                    yield from extend(w)
                    path.pop()
                    on_path.discard(w)

        yield from extend(s)


def cycles_through(G: PlaneGraph, targets: Iterable[int], max_len: int) -> Iterator[tuple[int, ...]]:
    """Cycles of length <= max_len that contain at least one vertex of ``targets``."""
    t = set(targets)
    for c in simple_cycles(G, max_len):
        if t.intersection(c):
            yield c


def has_cycle_of_length(G: PlaneGraph, k: int) -> bool:
    return any(len(c) == k for c in simple_cycles(G, k, k))


def articulation_points(G: PlaneGraph) -> list[int]:
    disc = [-1] * G.n
    low = [0] * G.n
    cut: set[int] = set()
    timer = 0
    for root in range(G.n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        children = 0
        stack = [(root, -1, iter(G.rotations[root]))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] == -1:
                    disc[w] = low[w] = timer
                    timer += 1
                    if v == root:
                        children += 1
                    stack.append((w, v, iter(G.rotations[w])))
                    advanced = True
                    break
                if w != parent:
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if stack:
                p = stack[-1][0]
                low[p] = min(low[p], low[v])
                if p != root and low[v] >= disc[p]:
                    cut.add(p)
        if children > 1:
            cut.add(root)
    return sorted(cut)


# -- surgeries --------------------------------------------------------------


@dataclass(frozen=True)
class DeleteVertices:
    deleted: frozenset[int]


@dataclass(frozen=True)
class IdentifyVertices:
    """Delete ``deleted`` and merge ``b`` into ``a`` across a shared face."""

    deleted: frozenset[int]
    a: int
    b: int
    face: Edge | None = None


@dataclass(frozen=True)
class AddEdge:
    deleted: frozenset[int]
    a: int
    b: int
    face: Edge | None = None


@dataclass(frozen=True)
class IdentifyEdges:
    """Delete ``deleted`` and merge edge ``second`` onto ``first`` (second[i] -> first[i])."""

    deleted: frozenset[int]
    first: Edge
    second: Edge


SurgerySpec = DeleteVertices | IdentifyVertices | AddEdge | IdentifyEdges


@dataclass
class SurgeryResult:
    graph: PlaneGraph
    index_map: list[int | None]
    merged: tuple[int, ...] = ()
    new_edges: tuple[Edge, ...] = ()
    spec: SurgerySpec | None = field(default=None, repr=False)

    def pull_back(self, colors: Sequence[int], uncolored: int = 0) -> list[int]:
        """Colour vertices of the original graph from a colouring of the result."""
        return [uncolored if j is None else colors[j] for j in self.index_map]

    def push(self, colors: Sequence[int], uncolored: int = 0) -> list[int]:
        out = [uncolored] * self.graph.n
        for i, j in enumerate(self.index_map):
            if j is not None and colors[i] != uncolored:
                out[j] = colors[i]
        return out


def _corners(walk: Sequence[int], v: int) -> list[tuple[int, int]]:
    k = len(walk)
    return [(walk[i - 1], walk[(i + 1) % k]) for i in range(k) if walk[i] == v]


def _arc(rot: list[int], start: int, stop: int) -> list[int]:
    """Rotation entries from ``start`` cyclically through ``stop`` inclusive."""
    i = rot.index(start)
    out = []
    while True:
        out.append(rot[i])
        if rot[i] == stop:
            return out
        i = (i + 1) % len(rot)


def _merge(rot: dict[int, list[int]], a: int, b: int, ca: tuple[int, int], cb: tuple[int, int], allow_double: int | None = None) -> None:
    """Merge ``b`` into ``a`` at corners ``ca``/``cb`` (pred, succ) of one face.

    ``allow_double`` names the single shared neighbour whose two parallel
    edges (which must then bound a digon) collapse into one.
    """
    if b in rot[a]:
        raise WouldCreateLoop(f"{a} and {b} are adjacent")
    common = set(rot[a]) & set(rot[b])
    if common - ({allow_double} if allow_double is not None else set()):
        raise WouldIdentifyEdges(f"{a} and {b} share neighbours {sorted(common)}")
    pa, na = ca
    pb, nb = cb
    merged = _arc(rot[a], na, pa) + _arc(rot[b], nb, pb)
    if allow_double is not None and allow_double in common:
        k = len(merged)
        i = next(i for i in range(k) if merged[i] == allow_double and merged[(i + 1) % k] == allow_double)
        del merged[(i + 1) % k]
        rw = rot[allow_double]
        rw.remove(b)
    rot[a] = merged
    for w in rot[b]:
        if w == allow_double and allow_double in common:
            continue
        rw = rot[w]
        rw[rw.index(b)] = a
    del rot[b]
    if allow_double is not None and allow_double in common:
        rw = rot[allow_double]
        assert rw.count(a) == 1


def apply_surgery(G: PlaneGraph, spec: SurgerySpec) -> SurgeryResult:
    """Apply a deletion / identification / edge-insertion surgery.

    The input graph is untouched.  The result keeps the outer face of
    ``G`` when one of its darts survives.
    """
    deleted = set(spec.deleted)
    rot = {v: [w for w in G.rotations[v] if w not in deleted] for v in range(G.n) if v not in deleted}
    merged_into: dict[int, int] = {}
    merged: list[int] = []
    added: list[Edge] = []

    def check_alive(*vs: int) -> None:
        for v in vs:
            if v not in rot:
                raise GraphError(f"vertex {v} is deleted or unknown")

    if isinstance(spec, IdentifyVertices):
        check_alive(spec.a, spec.b)
        if spec.a == spec.b:
            raise WouldCreateLoop("cannot identify a vertex with itself")
        ca, cb = _shared_corners(rot, spec.a, spec.b, spec.face)[0]
        _merge(rot, spec.a, spec.b, ca, cb)
        merged_into[spec.b] = spec.a
        merged.append(spec.a)
    elif isinstance(spec, AddEdge):
        check_alive(spec.a, spec.b)
        if spec.a == spec.b:
            raise WouldCreateLoop("edge would be a loop")
        if spec.b in rot[spec.a]:
            raise WouldIdentifyEdges(f"{spec.a}-{spec.b} already an edge")
        (pa, _), (pb, _) = _shared_corners(rot, spec.a, spec.b, spec.face)[0]
        ra, rb = rot[spec.a], rot[spec.b]
        if ra:
            ra.insert(ra.index(pa) + 1, spec.b)
        else:
            ra.append(spec.b)
        if rb:
            rb.insert(rb.index(pb) + 1, spec.a)
        else:
            rb.append(spec.a)
        added.append(edge_key(spec.a, spec.b))
    elif isinstance(spec, IdentifyEdges):
        (u1, u2), (v1, v2) = spec.first, spec.second
        check_alive(u1, u2, v1, v2)
        if u2 not in rot[u1] or v2 not in rot[v1]:
            raise GraphError("identified pairs must be edges")
        if len({u1, u2, v1, v2}) != 4:
            raise WouldCreateLoop("edges to identify must be disjoint")
        rot = _identify_edges(rot, u1, u2, v1, v2)
        merged_into[v1] = u1
        merged_into[v2] = u2
        merged.extend((u1, u2))
    elif not isinstance(spec, DeleteVertices):
        raise TypeError(f"unknown surgery {spec!r}")

    survivors = sorted(rot)
    new: list[int | None] = [None] * G.n
    for i, v in enumerate(survivors):
        new[v] = i
    for b, a in merged_into.items():
        new[b] = new[a]
    rots = [[new[w] for w in rot[v]] for v in survivors]
    hint = _mapped_dart(G.outer_walk, new, rots)
    graph = PlaneGraph(rots, hint)
    return SurgeryResult(
        graph,
        new,
        tuple(new[v] for v in merged),
        tuple(edge_key(new[a], new[b]) for a, b in added),
        spec,
    )


def _shared_corners(rot, a, b, hint: Edge | None):
    """Pairs of corners of ``a`` and ``b`` lying on one common face."""
    if not rot[a] and not rot[b]:
        raise NotCoFacial(f"{a} and {b} are both isolated")
    out = []
    for walk in trace_faces(rot):
        if hint is not None:
            k = len(walk)
            if not any((walk[i], walk[(i + 1) % k]) == hint for i in range(k)):
                continue
        cas = _corners(walk, a) if rot[a] else [(None, None)]
        cbs = _corners(walk, b) if rot[b] else [(None, None)]
        if (rot[a] and not cas) or (rot[b] and not cbs):
            continue
        out.extend((ca, cb) for ca in cas for cb in cbs)
        if out:
            break
    if not out:
        raise NotCoFacial(f"{a} and {b} share no face")
    return out


def _identify_edges(rot, u1, u2, v1, v2):
    last_error: GraphError | None = None
    for walk in trace_faces(rot):
        if u1 not in walk or v1 not in walk:
            continue
        for ca in _corners(walk, u1):
            for cb in _corners(walk, v1):
                trial = {v: list(ws) for v, ws in rot.items()}
                try:
                    _merge(trial, u1, v1, ca, cb)
                except GraphError as exc:
                    last_error = exc
                    continue
                for w2 in trace_faces(trial):
                    k = len(w2)
                    for i in range(k):
                        if w2[i] != u1:
                            continue
                        p, s = w2[i - 1], w2[(i + 1) % k]
                        if {p, s} != {u2, v2}:
                            continue
                        c_u2 = next(c for c in _corners(w2, u2) if u1 in c)
                        c_v2 = next(c for c in _corners(w2, v2) if u1 in c)
                        t2 = {v: list(ws) for v, ws in trial.items()}
                        try:
                            _merge(t2, u2, v2, c_u2, c_v2, allow_double=u1)
                        except GraphError as exc:
                            last_error = exc
                            continue
                        return t2
    if last_error is not None:
        raise last_error
    raise NotCoFacial("edges do not lie on a common face with matching orientation")


def to_dot(G: PlaneGraph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for fi, walk in enumerate(G.faces):
        tag = " (outer)" if fi == G.outer else ""
        lines.append(f"  // face {fi}{tag}: {' '.join(map(str, walk))}")
    for v in range(G.n):
        lines.append(f'  {v} [label="{v}"];')
    for u, v in G.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def cycles_at(G: PlaneGraph, v: int, max_len: int) -> Iterator[tuple[int, ...]]:
    """Cycles of length <= max_len through ``v``, each once, starting at ``v``."""
    rot = G.rotations
    path = [v]
    on_path = {v}

    def extend(u: int) -> Iterator[tuple[int, ...]]:
        for w in rot[u]:
            if w == v:
                if len(path) >= 3 and path[1] < path[-1]:
                    yield tuple(path)
            elif w not in on_path and len(path) < max_len:
                path.append(w)
                on_path.add(w)
                yield from extend(w)
                path.pop()
                on_path.discard(w)

    yield from extend(v)


def blocks(G: PlaneGraph) -> list[list[int]]:
    """Vertex sets of the biconnected components (bridges give 2-vertex blocks)."""
    disc = [-1] * G.n
    low = [0] * G.n
    out: list[list[int]] = []
    timer = 0
    for root in range(G.n):
        if disc[root] != -1:
            continue
        if not G.rotations[root]:
            out.append([root])
            continue
        disc[root] = low[root] = timer
        timer += 1
        edge_stack: list[Edge] = []
        stack = [(root, -1, iter(G.rotations[root]))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] == -1:
                    disc[w] = low[w] = timer
                    timer += 1
                    edge_stack.append((v, w))
                    stack.append((w, v, iter(G.rotations[w])))
                    advanced = True
                    break
                if w != parent and disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if stack:
                p = stack[-1][0]
                low[p] = min(low[p], low[v])
                if low[v] >= disc[p]:
                    comp: set[int] = set()
                    while edge_stack:
                        e = edge_stack.pop()
                        comp.update(e)
                        if e == (p, v):
                            break
                    out.append(sorted(comp))
    return out


def edge_subgraph(G: PlaneGraph, keep_edges: Iterable[Edge], outer_dart: Edge | None = None) -> tuple[PlaneGraph, list[int | None]]:
    """Subgraph on the endpoints of ``keep_edges`` with the inherited embedding.

    ``outer_dart`` (in old indices) picks the outer face of the result.
    """
    ek = {edge_key(*e) for e in keep_edges}
    verts = sorted({v for e in ek for v in e})
    new: list[int | None] = [None] * G.n
    for i, v in enumerate(verts):
        new[v] = i
    rots = [[new[w] for w in G.rotations[v] if edge_key(v, w) in ek] for v in verts]
    dart = (new[outer_dart[0]], new[outer_dart[1]]) if outer_dart else None
    return PlaneGraph(rots, dart), new
