"""Chords, claws, biclaws and triclaws of embedded cycles, and the graph class built on them."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Iterable, Sequence

from .plane_graph import PlaneGraph, Side, check_cycle, cycle_sides, edge_key, simple_cycles

KINDS = ("chord", "claw", "biclaw", "triclaw")


class WrongLength(ValueError):
    pass


@dataclass(frozen=True)
class CycleStructure:
    kind: str
    anchors: tuple[int, ...]  # cycle vertices, in cell order
    interior: tuple[int, ...]
    cells: tuple[tuple[int, ...], ...]

    @property
    def lengths(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.cells)

    def signature(self) -> tuple[int, ...]:
        return tuple(sorted(self.lengths))

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "anchors": list(self.anchors),
            "interior": list(self.interior),
            "cells": list(self.lengths),
        }


def _cells(C: tuple[int, ...], anchors: list[tuple[int, int | None]], link) -> tuple[tuple[tuple[int, ...], ...], tuple[int, ...]]:
    """Cells cut out of C by anchors ``(cycle vertex, owner)``.

    ``link(o1, o2)`` gives the interior vertices walked from owner ``o2``
    back to owner ``o1``.  Cells start at the least anchor vertex and follow
    the direction of ``C``.
    """
    k = len(C)
    pos = {v: i for i, v in enumerate(C)}
    anchors = sorted(anchors, key=lambda a: pos[a[0]])
    start = min(range(len(anchors)), key=lambda i: anchors[i][0])
    anchors = anchors[start:] + anchors[:start]
    cells = []
    for i, (a, oa) in enumerate(anchors):
        b, ob = anchors[(i + 1) % len(anchors)]
        arc = []
        j = pos[a]
        while True:
            arc.append(C[j])
            if C[j] == b and len(arc) > 1:
                break
            j = (j + 1) % k
        cells.append(tuple(arc) + tuple(link(oa, ob)))
    return tuple(cells), tuple(a for a, _ in anchors)


def find_structures(
    G: PlaneGraph,
    cycle: Sequence[int],
    kinds: Iterable[str] = KINDS,
    sides: Side | None = None,
) -> list[CycleStructure]:
    """Every chord, claw, biclaw and triclaw of ``cycle`` lying inside it."""
    C = check_cycle(G, cycle)
    kinds = set(kinds)
    inside = sides if sides is not None else cycle_sides(G, C).inside
    on_c = set(C)
    vin = sorted(inside.vertices)
    hooks = {v: sorted((w for w in G.rotations[v] if w in on_c)) for v in vin}
    found: list[CycleStructure] = []

    def same_or_adjacent(o1, o2):
        if o1 is None:
            return ()
        return (o1,) if o1 == o2 else (o2, o1)

    if "chord" in kinds:
        for u, v in sorted(inside.edges):
            if u in on_c and v in on_c:
                cells, anchors = _cells(C, [(u, None), (v, None)], lambda a, b: ())
                found.append(CycleStructure("chord", anchors, (), cells))
    if "claw" in kinds:
        for v in vin:
            for trio in combinations(hooks[v], 3):
                cells, anchors = _cells(C, [(a, v) for a in trio], same_or_adjacent)
                found.append(CycleStructure("claw", anchors, (v,), cells))
    if "biclaw" in kinds:
        for u in vin:
            for v in vin:
                if v <= u or not G.has_edge(u, v):
                    continue
                for pu, pv in product(combinations(hooks[u], 2), combinations(hooks[v], 2)):
                    if len(set(pu) | set(pv)) != 4:
                        continue
                    anchors_in = [(a, u) for a in pu] + [(a, v) for a in pv]
                    cells, anchors = _cells(C, anchors_in, same_or_adjacent)
                    found.append(CycleStructure("biclaw", anchors, (u, v), cells))
    if "triclaw" in kinds:
        vin_set = set(vin)
        for u in vin:
            for v in G.rotations[u]:
                if v <= u or v not in vin_set:
                    continue
                for w in G.rotations[v]:
                    if w <= v or w not in vin_set or not G.has_edge(u, w):
                        continue
                    for hu, hv, hw in product(hooks[u], hooks[v], hooks[w]):
                        if len({hu, hv, hw}) != 3:
                            continue
                        cells, anchors = _cells(C, [(hu, u), (hv, v), (hw, w)], same_or_adjacent)
                        found.append(CycleStructure("triclaw", anchors, (u, v, w), ((u, v, w),) + cells))
    order = {k: i for i, k in enumerate(KINDS)}
    found.sort(key=lambda s: (order[s.kind], s.anchors, s.interior))
    return found


def outer_chords(G: PlaneGraph, cycle: Sequence[int]) -> list[tuple[int, int]]:
    """Edges outside ``cycle`` joining two of its non-consecutive vertices."""
    C = check_cycle(G, cycle)
    on_c = set(C)
    outside = cycle_sides(G, C).outside
    return sorted(e for e in outside.edges if e[0] in on_c and e[1] in on_c)


@dataclass(frozen=True)
class CycleClass:
    verdict: str  # good | bad | not_applicable
    witnesses: tuple[CycleStructure, ...] = ()

    def to_json(self) -> dict:
        return {"verdict": self.verdict, "structures": [s.to_json() for s in self.witnesses]}


def classify_cycle(G: PlaneGraph, cycle: Sequence[int]) -> CycleClass:
    C = check_cycle(G, cycle)
    if len(C) > 12:
        return CycleClass("not_applicable")
    bad = find_structures(G, C, ("claw", "biclaw", "triclaw"))
    return CycleClass("bad", tuple(bad)) if bad else CycleClass("good")


def is_good_cycle(G: PlaneGraph, cycle: Sequence[int]) -> bool:
    return classify_cycle(G, cycle).verdict == "good"


def is_special_9cycle(G: PlaneGraph, cycle: Sequence[int]) -> tuple[bool, CycleStructure | None]:
    C = check_cycle(G, cycle)
    if len(C) != 9:
        raise WrongLength(f"special cycles have length 9, got {len(C)}")
    for s in find_structures(G, C, ("chord", "claw")):
        if (s.kind, s.signature()) in (("chord", (3, 8)), ("claw", (5, 5, 5))):
            return True, s
    return False, None


@dataclass
class MembershipReport:
    connected: bool
    cycles4: list[tuple[int, ...]] = field(default_factory=list)
    cycles6: list[tuple[int, ...]] = field(default_factory=list)
    special9: list[tuple[int, ...]] = field(default_factory=list)
    has8: bool = False
    has9: bool = False

    @property
    def in_class(self) -> bool:
        return self.connected and not (self.cycles4 or self.cycles6 or self.special9)

    @property
    def free_469(self) -> bool:
        return not (self.cycles4 or self.cycles6 or self.has9)

    @property
    def free_468(self) -> bool:
        return not (self.cycles4 or self.cycles6 or self.has8)

    def flags(self) -> dict:
        return {"in_G": self.in_class, "free_4_6_9": self.free_469, "free_4_6_8": self.free_468}

    def to_json(self) -> dict:
        return {
            "connected": self.connected,
            "cycles4": [list(c) for c in self.cycles4],
            "cycles6": [list(c) for c in self.cycles6],
            "special9": [list(c) for c in self.special9],
            "has8": self.has8,
            "has9": self.has9,
            **self.flags(),
        }


def class_G_membership(G: PlaneGraph) -> MembershipReport:
    rep = MembershipReport(connected=G.is_connected())
    for c in simple_cycles(G, 9, 4):
        k = len(c)
        if k == 4:
            rep.cycles4.append(c)
        elif k == 6:
            rep.cycles6.append(c)
        elif k == 8:
            rep.has8 = True
        elif k == 9:
            rep.has9 = True
            if is_special_9cycle(G, c)[0]:
                rep.special9.append(c)
    return rep


def in_class(G: PlaneGraph) -> bool:
    return class_G_membership(G).in_class


def triangles(G: PlaneGraph) -> list[tuple[int, int, int]]:
    out = []
    for u in range(G.n):
        for v in G.rotations[u]:
            if v <= u:
                continue
            for w in G.rotations[v]:
                if w > v and G.has_edge(u, w):
                    out.append((u, v, w))
    return out


def _triangle_on(G, X: Sequence[int], closed: bool, apex_ok) -> tuple[tuple[int, int], int] | None:
    xs = set(X)
    k = len(X)
    pairs = [(X[i], X[(i + 1) % k]) for i in range(k if closed else k - 1)]
    for a, b in pairs:
        for w in G.rotations[a]:
            if w not in xs and G.has_edge(b, w) and apex_ok(w):
                return edge_key(a, b), w
    return None


def is_triangular(G: PlaneGraph, X: Sequence[int], closed: bool | None = None):
    """A (shared edge, apex) witness when X shares exactly one edge with a triangle.

    ``closed`` defaults to treating ``X`` as a cycle when its ends are adjacent
    and it has at least three vertices.
    """
    if closed is None:
        closed = len(X) >= 3 and G.has_edge(X[0], X[-1])
    return _triangle_on(G, X, closed, lambda w: True)


def is_ext_triangular(G: PlaneGraph, cycle: Sequence[int]):
    C = check_cycle(G, cycle)
    outside = cycle_sides(G, C).outside.vertices
    return _triangle_on(G, C, True, lambda w: w in outside)


@dataclass(frozen=True)
class SplittingPath:
    path: tuple[int, ...]
    cycles: tuple[tuple[int, ...], tuple[int, ...]]

    @property
    def length(self) -> int:
        return len(self.path) - 1

    @property
    def cycle_lengths(self) -> tuple[int, int]:
        return (len(self.cycles[0]), len(self.cycles[1]))


def splitting_paths(G: PlaneGraph, D: Sequence[int], max_len: int = 5) -> list[SplittingPath]:
    """Paths of 2..max_len edges with both ends on D and the rest inside D."""
    D = check_cycle(G, D)
    inside = cycle_sides(G, D).inside.vertices
    pos = {v: i for i, v in enumerate(D)}
    k = len(D)
    out = []

    def arc(a, b):
        res, j = [], pos[a]
        while True:
            res.append(D[j])
            if D[j] == b:
                return res
            j = (j + 1) % k

    def walk(path):
        v = path[-1]
        for w in G.rotations[v]:
            if w in pos and len(path) >= 2 and w > path[0]:
                P = tuple(path) + (w,)
                inner = P[1:-1]
                c1 = tuple(arc(P[0], w)) + tuple(reversed(inner))
                c2 = tuple(arc(w, P[0])) + tuple(inner)
                out.append(SplittingPath(P, (c1, c2)))
            elif w in inside and w not in path and len(path) < max_len:
                walk(path + [w])

    for a in D:
        walk([a])
    out.sort(key=lambda s: (s.length, s.path))
    return out
