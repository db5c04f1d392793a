"""Named hand-drawn plane graphs: cycle structures, reducible configurations and their hosts.

Every fixture is a straight-line drawing, so the embedding is fixed by the
coordinates below.  Configuration hosts are produced by :func:`radial_host`,
which surrounds a drawn core with attachment vertices and an outer ring.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .plane_graph import PlaneGraph, from_coordinates


class UnknownFixture(KeyError):
    pass


@dataclass(frozen=True)
class Fixture:
    name: str
    graph: PlaneGraph
    labels: Mapping[str, int]
    boundary: tuple[int, ...]
    note: str = ""


def _polygon(k: int, radius: float = 5.0, phase: float = math.pi / 2) -> list[tuple[float, float]]:
    # counter-clockwise from the top
    return [(radius * math.cos(phase + 2 * math.pi * i / k), radius * math.sin(phase + 2 * math.pi * i / k)) for i in range(k)]


def _towards(points, anchors, r):
    x = sum(points[a][0] for a in anchors) / len(anchors)
    y = sum(points[a][1] for a in anchors) / len(anchors)
    norm = math.hypot(x, y) or 1.0
    return (x / norm * r, y / norm * r)


def _cycle_fixture(name, k, interior: Sequence[tuple], interior_edges=(), chords=(), note=""):
    """A k-cycle with interior vertices attached to listed cycle positions.

    Entries are ``(tag, anchors)`` or ``(tag, anchors, point)``.
    """
    pts = _polygon(k)
    labels = {f"c{i}": i for i in range(k)}
    edges = [(i, (i + 1) % k) for i in range(k)] + [tuple(c) for c in chords]
    for tag, anchors, *at in interior:
        idx = len(pts)
        labels[tag] = idx
        if at:
            pts.append(at[0])
        else:
            pts.append(_towards(pts, anchors, 1.6) if len(interior) > 1 else (0.0, 0.0))
        edges.extend((a, idx) for a in anchors)
    for a, b in interior_edges:
        edges.append((labels[a], labels[b]))
    G = from_coordinates(pts, edges, outer=(1, 0))
    return Fixture(name, G, labels, tuple(range(k)), note)


# -- radial hosts ------------------------------------------------------------


@dataclass(frozen=True)
class Spoke:
    """An attachment vertex drawn outward from its core anchors.

    ``external`` puts the vertex on the outer ring; otherwise it stays
    inside and is joined to ``links`` new ring vertices.
    """

    name: str
    anchors: tuple[str, ...]
    external: bool = False
    links: int = 1
    radius: float = 2.6
    shift: float = 0.0


@dataclass
class RadialHost:
    core: dict[str, tuple[float, float]]
    core_edges: list[tuple[str, str]]
    spokes: list[Spoke] = field(default_factory=list)
    ring_links: dict[str, int] = field(default_factory=dict)
    gap: int | Sequence[int] = 1
    ring_radius: float = 8.0

    def build(self) -> Fixture:
        names = list(self.core)
        pts = [self.core[n] for n in names]
        index = {n: i for i, n in enumerate(names)}
        edges = [(index[a], index[b]) for a, b in self.core_edges]
        ring: list[tuple[float, int]] = []  # (angle, vertex)

        def angle_of(p):
            return math.atan2(p[1], p[0]) % (2 * math.pi)

        def add_point(p):
            pts.append(p)
            return len(pts) - 1

        def ring_point(theta):
            return (self.ring_radius * math.cos(theta), self.ring_radius * math.sin(theta))

        def attach(v, theta, links):
            spread = 0.14
            for j in range(links):
                t = theta + spread * (j - (links - 1) / 2)
                r = add_point(ring_point(t))
                edges.append((v, r))
                ring.append((t % (2 * math.pi), r))

        for s in self.spokes:
            base = _towards(self.core, s.anchors, 1.0)
            theta = angle_of(base) + s.shift
            if s.external:
                v = add_point(ring_point(theta))
                ring.append((theta % (2 * math.pi), v))
            else:
                v = add_point((s.radius * math.cos(theta), s.radius * math.sin(theta)))
                attach(v, theta, s.links)
            index[s.name] = v
            edges.extend((index[a], v) for a in s.anchors)
        for name, links in self.ring_links.items():
            attach(index[name], angle_of(self.core[name]), links)

        ring.sort()
        gaps = [self.gap] * len(ring) if isinstance(self.gap, int) else list(self.gap)
        cycle: list[int] = []
        for i, (theta, v) in enumerate(ring):
            cycle.append(v)
            nxt = ring[(i + 1) % len(ring)][0]
            if i == len(ring) - 1:
                nxt += 2 * math.pi
            g = gaps[i % len(gaps)]
            for j in range(g):
                cycle.append(add_point(ring_point(theta + (nxt - theta) * (j + 1) / (g + 1))))
        k = len(cycle)
        edges.extend((cycle[i], cycle[(i + 1) % k]) for i in range(k))
        G = from_coordinates(pts, edges)
        # the ring is drawn counter-clockwise; the unbounded face runs the other way
        outer = G.with_outer((cycle[1], cycle[0]))
        walk = outer.outer_walk
        return Fixture("", outer, index, tuple(walk))


def radial_host(core, core_edges, spokes=(), ring_links=None, gap=1, name="host", note="") -> Fixture:
    fx = RadialHost(dict(core), list(core_edges), list(spokes), dict(ring_links or {}), gap).build()
    return Fixture(name, fx.graph, fx.labels, fx.boundary, note)


def _ring_coords(names: Sequence[str], radius: float, phase: float = math.pi / 2) -> dict[str, tuple[float, float]]:
    k = len(names)
    # clockwise placement
    return {n: (radius * math.cos(phase - 2 * math.pi * i / k), radius * math.sin(phase - 2 * math.pi * i / k)) for i, n in enumerate(names)}


def _path_edges(names: Sequence[str], closed: bool = True):
    k = len(names)
    return [(names[i], names[(i + 1) % k]) for i in range(k if closed else k - 1)]


# -- configuration cores -------------------------------------------------------


def good_path_host(x_links=1, t12=(False, 1), t3=(False, 1), t4=(True, 1), w_links=1, c_links=1, gap=1, t3_is_t4=False, name="good-path") -> Fixture:
    """Face f = [x v1 v2 v3 v4 w c] with the triangle v1 v2 t12 outside f."""
    face = ["x", "v1", "v2", "v3", "v4", "w", "c"]
    core = _ring_coords(face, 1.5)
    spokes = [Spoke("t12", ("v1", "v2"), t12[0], t12[1])]
    if t3_is_t4:
        spokes.append(Spoke("t3", ("v3", "v4"), t3[0], t3[1]))
    else:
        spokes += [Spoke("t3", ("v3",), t3[0], t3[1]), Spoke("t4", ("v4",), t4[0], t4[1])]
    links = {"x": x_links, "w": w_links, "c": c_links}
    fx = radial_host(core, _path_edges(face), spokes, {k: v for k, v in links.items() if v}, gap, name)
    if t3_is_t4:
        fx.labels["t4"] = fx.labels["t3"]
    return fx


def k_face_host(k: int, modes: Sequence[tuple[bool, int]], gap=1, name=None) -> Fixture:
    face = [f"v{i}" for i in range(1, k + 1)]
    core = _ring_coords(face, 1.5)
    spokes = [Spoke(f"t{i}", (f"v{i}",), modes[i - 1][0], modes[i - 1][1]) for i in range(1, k + 1)]
    return radial_host(core, _path_edges(face), spokes, None, gap, name or f"face-{k}")


def three_seven_host(modes: Mapping[str, tuple[bool, int]] | None = None, gap=1, name="three-seven") -> Fixture:
    """Triangle [x z y] glued along xz to the 7-face [x z v1 .. v5]."""
    seven = ["x", "z", "v1", "v2", "v3", "v4", "v5"]
    core = _ring_coords(seven, 1.5)
    # y sits outside the 7-face, beyond the edge xz
    xm = (core["x"][0] + core["z"][0]) / 2
    ym = (core["x"][1] + core["z"][1]) / 2
    core["y"] = (xm * 1.9, ym * 1.9)
    edges = _path_edges(seven) + [("x", "y"), ("z", "y")]
    modes = dict(modes or {})
    outer = {"y'": ("y",), "z'": ("z",), **{f"t{i}": (f"v{i}",) for i in range(1, 6)}}
    spokes = []
    for nm, anchors in outer.items():
        ext, links = modes.get(nm, (False, 1))
        shift = 0.25 if nm == "z'" else 0.0
        spokes.append(Spoke(nm, anchors, ext, links, radius=3.2 if nm == "y'" else 2.6, shift=shift))
    return radial_host(core, edges, spokes, None, gap, name)


def seven_seven_host(modes: Mapping[str, tuple[bool, int]] | None = None, gap=1, name="seven-seven") -> Fixture:
    """7-faces [x u6 .. u1] and [x v1 .. v6] meeting at x, with the triangle x u1 v1."""
    core = {"x": (0.0, 0.0)}
    # the two 7-faces are drawn as heptagons hinged at x: u-side left, v-side right
    def heptagon(cx, names, start):
        r = 1.6
        out = {}
        for i, nm in enumerate(names):
            a = start - 2 * math.pi * (i + 1) / 7
            out[nm] = (cx + r * math.cos(a), r * math.sin(a))
        return out

    # x is the vertex of each heptagon nearest the hinge
    u = heptagon(-1.6, ["u6", "u5", "u4", "u3", "u2", "u1"], 0.0)
    v = heptagon(1.6, ["v1", "v2", "v3", "v4", "v5", "v6"], math.pi)
    core.update(u)
    core.update(v)
    edges = _path_edges(["x", "u6", "u5", "u4", "u3", "u2", "u1"]) + _path_edges(["x", "v1", "v2", "v3", "v4", "v5", "v6"])
    edges.append(("u1", "v1"))
    modes = dict(modes or {})
    spokes = []
    outer = {"t1": ("u1",), **{f"s{i}": (f"u{i}",) for i in range(2, 7)}, **{f"r{i}": (f"v{i}",) for i in range(2, 7)}}
    for nm, anchors in outer.items():
        ext, links = modes.get(nm, (False, 1))
        spokes.append(Spoke(nm, anchors, ext, links, radius=3.6))
    return radial_host(core, edges, spokes, None, gap, name)


def m_nine_host(modes: Mapping[str, tuple[bool, int]] | None = None, gap=1, name="m-nine") -> Fixture:
    """9-face [v1 .. v9] with triangles on v1v2, v3v4, v4v5 and v6v7."""
    face = [f"v{i}" for i in range(1, 10)]
    core = _ring_coords(face, 1.8)
    edges = _path_edges(face)
    for apex, (a, b) in {"t12": ("v1", "v2"), "a": ("v3", "v4"), "z": ("v4", "v5"), "t67": ("v6", "v7")}.items():
        core[apex] = _towards(core, (a, b), 2.6)
        edges += [(apex, a), (apex, b)]
    modes = dict(modes or {})
    spokes = []
    outer = {"ta": ("a",), "tz": ("z",), "tt12": ("t12",), "tt67": ("t67",), "s8": ("v8",), "s9": ("v9",)}
    for nm, anchors in outer.items():
        ext, links = modes.get(nm, (False, 1))
        spokes.append(Spoke(nm, anchors, ext, links, radius=4.2 if nm.startswith("t") else 3.0))
    return radial_host(core, edges, spokes, None, gap, name)


# -- lift verification hosts ----------------------------------------------------
#
# Small hosts for exhaustive lift checks.  They satisfy condition (a) for the
# configuration's surgery but need not lie in the class: the lifts use only
# the local degrees and the fact that the reduced colouring super-extends.

_EXT, _IN1, _IN2 = (True, 1), (False, 1), (False, 2)


def _ring_and_core(n_outer: int, core_pts: Mapping[str, tuple[float, float]], edges, name: str, note="") -> Fixture:
    """Outer cycle o0.. drawn counter-clockwise around a labelled core."""
    pts = _polygon(n_outer, 6.0)
    labels = {f"o{i}": i for i in range(n_outer)}
    for nm, p in core_pts.items():
        labels[nm] = len(pts)
        pts.append(p)
    idx = [(i, (i + 1) % n_outer) for i in range(n_outer)]
    idx += [(labels[a], labels[b]) for a, b in edges]
    G = from_coordinates(pts, idx, outer=(1, 0))
    return Fixture(name, G, labels, tuple(G.outer_walk), note)


def _low_degree_hosts() -> list[Fixture]:
    return [
        _cycle_fixture("pendant", 6, [("u", (0,))]),
        _cycle_fixture("handle", 7, [("u", (0, 3))]),
        _cycle_fixture("hanging-path", 7, [("u", (0,), (0.0, 2.0)), ("w", (), (0.0, 0.0))], interior_edges=[("u", "w")]),
        _cycle_fixture("loose", 5, [("u", (), (0.0, 0.0))]),
    ]


def _separating_cycle_hosts() -> list[Fixture]:
    inner = {f"a{i}": p for i, p in enumerate(_polygon(5, 2.5))}
    spokes = [("o0", "a0"), ("o4", "a2"), ("o6", "a3")]
    pentagon = [(f"a{i}", f"a{(i + 1) % 5}") for i in range(5)]
    one = _ring_and_core(8, {**inner, "u": (0.0, 0.0)}, pentagon + spokes + [("u", "a0"), ("u", "a2")], "pentagon-handle")
    heptagon = {f"a{i}": p for i, p in enumerate(_polygon(7, 2.8))}
    hept = [(f"a{i}", f"a{(i + 1) % 7}") for i in range(7)]
    two = _ring_and_core(
        9,
        {**heptagon, "u": (-0.6, 0.0), "w": (0.6, 0.0)},
        hept + [("o0", "a0"), ("o5", "a4"), ("u", "a1"), ("u", "w"), ("w", "a5"), ("u", "a3")],
        "heptagon-claw",
    )
    return [one, two]


def _cut_vertex_hosts() -> list[Fixture]:
    tri = _cycle_fixture("pendant-triangle", 7, [("v", (0,), (0.0, 2.5)), ("p", (), (-1.0, 0.5)), ("q", (), (1.0, 0.5))], interior_edges=[("v", "p"), ("p", "q"), ("q", "v")])
    on_d = _cycle_fixture("triangle-on-boundary", 6, [("p", (0,), (-1.0, 1.5)), ("q", (0,), (1.0, 1.5))], interior_edges=[("p", "q")])
    bridge = _cycle_fixture("bridge", 6, [("v", (0, 3), (0.0, 1.0)), ("p", (), (0.0, -1.0))], interior_edges=[("v", "p")])
    # an 11-cycle hanging from v: no short cycle passes through v
    pts = _polygon(7, 6.0)
    ring = [(0.0, 0.0)] + [(1.6 * math.cos(2 * math.pi * i / 11), 1.6 * math.sin(2 * math.pi * i / 11) - 1.8) for i in range(1, 11)]
    pts = pts + ring
    edges = [(i, (i + 1) % 7) for i in range(7)] + [(0, 7)]
    loop = list(range(7, 18))
    edges += [(loop[i], loop[(i + 1) % 11]) for i in range(11)]
    pts[7] = (0.0, 0.8)
    G = from_coordinates(pts, edges, outer=(1, 0))
    long = Fixture("long-block", G, {"v": 7}, tuple(G.outer_walk))
    return [tri, on_d, bridge, long]


def verification_hosts(kind: str) -> list[Fixture]:
    """Hosts whose first configuration of ``kind`` exercises every lift branch."""
    if kind == "low-degree":
        return _low_degree_hosts()
    if kind == "separating-good-cycle":
        return _separating_cycle_hosts()
    if kind == "cut-vertex":
        return _cut_vertex_hosts()
    if kind == "good-path":
        return [
            good_path_host(gap=0, t12=_IN1, t3=_IN1, t4=_EXT),
            good_path_host(gap=0, t12=_EXT, t3=_IN1, t4=_IN1),
            good_path_host(gap=0, x_links=2, t12=_IN2, t3=_IN1, t4=_IN1),
        ]
    if kind == "k-face":
        return [
            k_face_host(5, [_IN1, _EXT, _EXT, _IN1, _EXT], gap=0),
            k_face_host(7, [_EXT, _EXT, _EXT, _IN1, _IN1, _IN2, _IN1], gap=1),
        ]
    if kind == "three-seven":
        return [
            three_seven_host({"z'": _IN1, "t1": _IN1, "t3": _IN1, "t5": _IN1}, gap=0),
            three_seven_host({n: _EXT for n in ("y'", "z'", "t1", "t2", "t3", "t4", "t5")}, gap=0),
        ]
    if kind == "seven-seven":
        ext = {n: _EXT for n in ["t1"] + [f"s{i}" for i in range(2, 7)] + [f"r{i}" for i in range(2, 7)]}
        ext.update({"s2": _IN1, "s3": _IN1, "s5": _IN1, "r2": _IN1, "r3": _IN2, "r5": _IN2, "r6": _IN1})
        return [seven_seven_host(ext, gap=0)]
    if kind == "m-nine":
        return [
            m_nine_host({n: _EXT for n in ("ta", "tz", "tt12", "tt67", "s8", "s9")}, gap=0),
            m_nine_host({"s8": _IN1, "tt12": _IN1}, gap=0),
        ]
    raise ValueError(f"unknown configuration kind {kind!r}")


# -- extension fixtures -------------------------------------------------------------
#
# A handle (a, b, m, apex) is a path of m interior vertices from cycle vertex
# a to cycle vertex b (a chord when m == 0); apex, when set, adds a vertex
# forming a triangle on the apex-th edge of that path.  Every entry below is
# in the class, has a good outer cycle of length at most 12 and at most six
# interior vertices.

EXTENSION_SPECS: tuple[tuple[int, tuple[tuple[int, int, int, int | None], ...]], ...] = (
    (5, ((3, 4, 3, None),)),
    (5, ((2, 4, 4, None),)),
    (5, ((1, 3, 4, 4),)),
    (7, ((2, 3, 1, None),)),
    (7, ((0, 2, 2, None),)),
    (7, ((0, 3, 3, None),)),
    (7, ((1, 4, 3, 1),)),
    (7, ((0, 5, 2, None), (2, 4, 2, None))),
    (7, ((4, 6, 4, 0),)),
    (7, ((0, 1, 1, None), (1, 6, 4, None))),
    (8, ((2, 7, 1, None),)),
    (8, ((0, 2, 2, None),)),
    (8, ((1, 2, 1, None), (5, 6, 1, None))),
    (8, ((1, 2, 3, None),)),
    (8, ((3, 4, 3, None), (3, 7, 0, None))),
    (8, ((0, 3, 4, None), (1, 3, 0, None))),
    (8, ((0, 5, 4, None),)),
    (8, ((5, 7, 4, 3),)),
    (8, ((0, 5, 4, None), (0, 7, 1, None))),
    (8, ((0, 6, 4, 0), (1, 4, 1, None))),
    (9, ((1, 7, 1, None),)),
    (9, ((1, 5, 2, None),)),
    (9, ((1, 2, 1, None), (4, 7, 1, None))),
    (9, ((4, 8, 2, 0),)),
    (9, ((0, 2, 4, None),)),
    (9, ((0, 7, 4, 3),)),
    (9, ((1, 2, 1, None), (1, 6, 4, None))),
    (9, ((0, 1, 1, None), (0, 4, 4, 4))),
    (10, ((3, 8, 1, None),)),
    (10, ((6, 8, 2, None),)),
    (10, ((0, 2, 2, None), (0, 6, 0, None))),
    (10, ((1, 7, 3, None),)),
    (10, ((0, 1, 1, None), (3, 5, 2, None))),
    (10, ((0, 5, 4, None), (6, 8, 0, None))),
    (10, ((4, 7, 3, 2),)),
    (10, ((5, 9, 4, 3),)),
    (10, ((3, 9, 4, 3), (7, 9, 0, None))),
    (10, ((0, 4, 2, 2), (5, 9, 2, 1))),
    (11, ((2, 8, 1, None),)),
    (11, ((8, 10, 2, None),)),
    (11, ((2, 9, 0, None), (6, 8, 2, None))),
    (11, ((6, 9, 3, None),)),
    (11, ((1, 3, 2, None), (5, 6, 1, None))),
    (11, ((1, 4, 3, 3),)),
    (11, ((1, 9, 1, None), (5, 6, 3, None))),
    (11, ((5, 10, 4, 1),)),
    (11, ((0, 7, 3, None), (3, 7, 2, 2))),
    (12, ((0, 5, 1, None),)),
    (12, ((1, 9, 0, None), (5, 8, 1, None))),
    (12, ((1, 6, 2, None),)),
    (12, ((7, 8, 1, None), (8, 11, 1, None))),
    (12, ((1, 3, 2, None), (5, 10, 1, None))),
    (12, ((1, 6, 3, None),)),
    (12, ((0, 7, 3, 2),)),
    (12, ((0, 8, 2, 0), (6, 7, 1, None))),
    (12, ((2, 4, 4, 2),)),
    (12, ((1, 4, 4, None), (4, 9, 1, None))),
    (12, ((2, 9, 3, None), (4, 5, 3, None))),
)


def handle_fixture(name: str, k: int, handles) -> Fixture:
    pts = _polygon(k)
    labels = {f"c{i}": i for i in range(k)}
    edges = [(i, (i + 1) % k) for i in range(k)]
    for a, b, m, apex in handles:
        pa, pb = pts[a], pts[b]
        chain = [a]
        for i in range(m):
            t = (i + 1) / (m + 1)
            pts.append((0.8 * (pa[0] + (pb[0] - pa[0]) * t), 0.8 * (pa[1] + (pb[1] - pa[1]) * t)))
            chain.append(len(pts) - 1)
        chain.append(b)
        edges += [(chain[i], chain[i + 1]) for i in range(len(chain) - 1)]
        if apex is not None:
            u, v = chain[apex], chain[apex + 1]
            pts.append((0.3 * (pts[u][0] + pts[v][0]), 0.3 * (pts[u][1] + pts[v][1])))
            edges += [(u, len(pts) - 1), (v, len(pts) - 1)]
    G = from_coordinates(pts, edges, outer=(1, 0))
    return Fixture(name, G, labels, tuple(G.outer_walk), f"{k}-cycle with handles {list(handles)}")


def extension_fixtures() -> list[Fixture]:
    return [handle_fixture(f"ext-{k}-{i:02d}", k, hs) for i, (k, hs) in enumerate(EXTENSION_SPECS)]


# -- configurations inside hosts from the class --------------------------------------


def _modes(names, **overrides):
    out = {n: _EXT for n in names}
    out.update(overrides)
    return out


def _named_configurations():
    seven = ["t1"] + [f"s{i}" for i in range(2, 7)] + [f"r{i}" for i in range(2, 7)]
    return {
        "good-path": lambda: good_path_host(
            x_links=1, w_links=2, c_links=2, t12=_IN2, t3=_IN1, t4=_EXT,
            gap=[2, 2, 3, 2, 1, 2, 3, 3, 1, 3, 2, 3, 2, 2, 3, 2, 2, 1, 3, 2],
        ),
        "face-5": lambda: k_face_host(5, [_IN1, _EXT, _IN1, _IN1, _EXT], gap=2),
        "face-7": lambda: k_face_host(7, [_IN1, _EXT, _IN1, _IN2, _EXT, _IN1, _IN1], gap=2),
        "three-seven": lambda: three_seven_host(
            _modes(["y'", "z'", "t1", "t2", "t3", "t4", "t5"], **{"y'": _IN1, "t1": _IN1, "t2": _IN2, "t4": _IN1, "t5": _IN1}), gap=2
        ),
        "seven-seven": lambda: seven_seven_host(
            _modes(seven, s2=_IN1, r5=_IN1, r6=_IN1),
            gap=[1, 2, 2, 2, 3, 1, 3, 2, 2, 2, 1, 2, 2, 2, 3, 2, 2, 2, 2, 1],
        ),
        "m-nine": lambda: m_nine_host(
            _modes(["ta", "tz", "tt12", "tt67", "s8", "s9"], ta=_IN1, tz=_IN1, s9=_IN1),
            gap=[1, 2, 2, 2, 2, 2, 2, 2, 3, 2, 3, 2, 2, 1, 2, 1, 1, 3, 3, 3],
        ),
        "nested-10-9-3": _nested,
    }


def _nested() -> Fixture:
    """A triangle inside a 9-cycle inside a 10-cycle, each joined to the next by one edge."""
    pts = _polygon(10, 6.0) + _polygon(9, 3.5) + _polygon(3, 1.0)
    edges = [(i, (i + 1) % 10) for i in range(10)]
    edges += [(10 + i, 10 + (i + 1) % 9) for i in range(9)]
    edges += [(19 + i, 19 + (i + 1) % 3) for i in range(3)]
    edges += [(0, 10), (10, 19)]
    G = from_coordinates(pts, edges, outer=(1, 0))
    labels = {**{f"d{i}": i for i in range(10)}, **{f"c{i}": 10 + i for i in range(9)}, **{f"t{i}": 19 + i for i in range(3)}}
    return Fixture("nested-10-9-3", G, labels, tuple(G.outer_walk))


# -- registry ------------------------------------------------------------------


def _structure_fixtures():
    return {
        "chord-38": lambda: _cycle_fixture("chord-38", 9, [], chords=[(0, 2)]),
        "chord-47": lambda: _cycle_fixture("chord-47", 9, [], chords=[(0, 3)]),
        "claw-555": lambda: _cycle_fixture("claw-555", 9, [("u", (0, 3, 6))]),
        "claw-377": lambda: _cycle_fixture("claw-377", 11, [("u", (0, 1, 6))]),
        "claw-557": lambda: _cycle_fixture("claw-557", 11, [("u", (0, 3, 6))]),
        "claw-558": lambda: _cycle_fixture("claw-558", 12, [("u", (0, 3, 6))]),
        "biclaw-3757": lambda: _cycle_fixture("biclaw-3757", 12, [("u", (0, 1)), ("v", (5, 8))], [("u", "v")]),
        "biclaw-5557": lambda: _cycle_fixture("biclaw-5557", 12, [("u", (0, 3)), ("v", (5, 8))], [("u", "v")]),
        "triclaw-3777": lambda: _cycle_fixture("triclaw-3777", 12, [("u", (0,)), ("v", (4,)), ("w", (8,))], [("u", "v"), ("v", "w"), ("w", "u")]),
    }


FIXTURES = {
    **_structure_fixtures(),
    **_named_configurations(),
    **{f"ext-{k}-{i:02d}": (lambda k=k, hs=hs, i=i: handle_fixture(f"ext-{k}-{i:02d}", k, hs)) for i, (k, hs) in enumerate(EXTENSION_SPECS)},
}


def fixture_names() -> list[str]:
    return sorted(FIXTURES)


def build_fixture(name: str) -> Fixture:
    try:
        maker = FIXTURES[name]
    except KeyError:
        raise UnknownFixture(name) from None
    fx = maker()
    return fx if fx.name == name else Fixture(name, fx.graph, fx.labels, fx.boundary, fx.note)
