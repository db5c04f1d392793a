"""Reducible configurations: detection, surgery legality, colouring lifts and guided extension.

Throughout, ``D`` is the outer cycle of the graph and a vertex is
*internal* when it is not on ``D``.  A colouring is a list indexed by vertex
(see :mod:`ifpart.coloring`).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterator, Sequence

from .coloring import (
    F,
    I,
    U,
    GuaranteeViolated,
    boundary_f_path,
    f_linked,
    is_super_extension,
    nicely_color,
    nicely_color_path,
    to_string,
    validate,
)
from .plane_graph import (
    AddEdge,
    DeleteVertices,
    GraphError,
    IdentifyEdges,
    IdentifyVertices,
    NotCoFacial,
    PlaneGraph,
    SurgeryResult,
    SurgerySpec,
    WouldCreateLoop,
    WouldIdentifyEdges,
    apply_surgery,
    blocks,
    check_cycle,
    cycle_edges,
    cycle_sides,
    cycles_at,
    edge_key,
    edge_subgraph,
    simple_cycles,
)
from .solver import (
    BUDGET,
    SOLVED,
    UNSOLVABLE,
    BoundaryColoringInvalid,
    Certificate,
    SearchConfig,
    _boundary_init,
    extend_coloring,
    super_extend_search,
)
from .structures import class_G_membership, find_structures, is_ext_triangular, is_good_cycle

KINDS = (
    "low-degree",
    "separating-good-cycle",
    "cut-vertex",
    "good-path",
    "k-face",
    "three-seven",
    "seven-seven",
    "m-nine",
)


class CaseAnalysisExhausted(RuntimeError):
    """A lift reached a state its case analysis rules out."""


class SurgeryInapplicable(ValueError):
    pass


class NotATriangle(ValueError):
    pass


class HypothesisViolated(ValueError):
    pass


@dataclass(frozen=True)
class Configuration:
    kind: str
    labels: tuple[tuple[str, int], ...]
    removed: tuple[int, ...]
    note: str = ""

    @property
    def label(self) -> dict[str, int]:
        return dict(self.labels)

    def __getitem__(self, key: str) -> int:
        return self.label[key]

    def to_json(self) -> dict:
        return {"kind": self.kind, "labels": self.label, "removed": list(self.removed), "note": self.note}


def _config(kind, labels: dict, removed, note="") -> Configuration:
    return Configuration(kind, tuple(labels.items()), tuple(sorted(removed)), note)


# -- detection ------------------------------------------------------------------


def _third(G: PlaneGraph, v: int, exclude: Sequence[int]) -> int | None:
    rest = [w for w in G.rotations[v] if w not in exclude]
    return rest[0] if len(rest) == 1 else None


def _common(G: PlaneGraph, a: int, b: int, exclude=()) -> list[int]:
    return [w for w in G.rotations[a] if w not in exclude and G.has_edge(b, w)]


def _inner_faces(G: PlaneGraph, k: int) -> Iterator[tuple[int, tuple[int, ...]]]:
    for fi, walk in enumerate(G.faces):
        if fi != G.outer and len(walk) == k and G.face_cycle(fi) is not None:
            yield fi, walk


def _internal3(G, dset, vs) -> bool:
    return all(v not in dset and G.degree(v) == 3 for v in vs)


def detect_low_degree(G: PlaneGraph, D: Sequence[int]) -> list[Configuration]:
    dset = set(D)
    return [_config("low-degree", {"v": v}, (v,)) for v in range(G.n) if v not in dset and G.degree(v) <= 2]


def detect_cut_vertices(G: PlaneGraph, D: Sequence[int]) -> list[Configuration]:
    """Leaf blocks away from ``D``, each with its attaching cut vertex."""
    dset = set(D)
    bl = blocks(G)
    count: dict[int, int] = {}
    for b in bl:
        for v in b:
            count[v] = count.get(v, 0) + 1
    out = []
    for b in bl:
        cuts = [v for v in b if count[v] > 1]
        if len(cuts) != 1 or dset.issubset(b):
            continue
        v = cuts[0]
        out.append(_config("cut-vertex", {"v": v}, [w for w in b if w != v], note=f"block {b}"))
    return out


def detect_separating_good_cycles(G: PlaneGraph, D: Sequence[int], first_only: bool = False) -> list[Configuration]:
    dkey = frozenset(D)
    out = []
    for C in sorted(simple_cycles(G, 12), key=lambda c: (len(c), c)):
        if frozenset(C) == dkey and len(C) == len(D):
            continue
        sides = cycle_sides(G, C)
        if not sides.inside.vertices or not sides.outside.vertices:
            continue
        if find_structures(G, C, ("claw", "biclaw", "triclaw"), sides.inside):
            continue
        labels = {f"c{i}": v for i, v in enumerate(C)}
        out.append(_config("separating-good-cycle", labels, sides.inside.vertices, note=f"length {len(C)}"))
        if first_only:
            break
    return out


def detect_good_paths(G: PlaneGraph, D: Sequence[int]) -> list[Configuration]:
    dset = set(D)
    seen = set()
    out = []
    for _fi, walk in _inner_faces_any(G):
        k = len(walk)
        if k < 6:
            continue
        for seq in (walk, walk[::-1]):
            for i in range(k):
                x, v1, v2, v3, v4, w = (seq[(i + j - 1) % k] for j in range(6))
                if (v1, v2, v3, v4) in seen or not _internal3(G, dset, (v1, v2, v3, v4)):
                    continue
                t12 = _third(G, v1, (x, v2))
                if t12 is None or not G.has_edge(v2, t12) or _third(G, v2, (v1, t12)) != v3:
                    continue
                t3 = _third(G, v3, (v2, v4))
                t4 = _third(G, v4, (v3, w))
                if t3 is None or t4 is None:
                    continue
                core = [x, t12, v1, v2, v3, v4, t3, w]
                if len(set(core)) != len(core) or (t4 in core and t4 != t3):
                    continue
                seen.add((v1, v2, v3, v4))
                labels = dict(x=x, v1=v1, v2=v2, v3=v3, v4=v4, t12=t12, t3=t3, t4=t4, w=w)
                out.append(_config("good-path", labels, (v1, v2, v3, v4)))
    return out


def _inner_faces_any(G):
    for fi, walk in enumerate(G.faces):
        if fi != G.outer and G.face_cycle(fi) is not None:
            yield fi, walk


def detect_k_faces(G: PlaneGraph, D: Sequence[int], ks=(5, 7)) -> list[Configuration]:
    dset = set(D)
    out = []
    for k in ks:
        for fi, walk in _inner_faces(G, k):
            if not _internal3(G, dset, walk):
                continue
            ts = []
            for i, v in enumerate(walk):
                ts.append(_third(G, v, (walk[i - 1], walk[(i + 1) % k])))
            if None in ts or len(set(ts)) != k or set(ts) & set(walk):
                continue
            labelings = []
            for seq, tseq in ((walk, ts), (walk[::-1], ts[::-1])):
                for s in range(k):
                    labelings.append(([seq[(s + j) % k] for j in range(k)], [tseq[(s + j) % k] for j in range(k)]))
            chosen, note = labelings[0], ""
            if k == 5:
                note = "no vertex on two 7+-faces"
                for vs, tt in labelings:
                    others = [len(G.faces[fj]) for fj in G.faces_at(vs[1]) if fj != fi]
                    if len(others) == 2 and min(others) >= 7:
                        chosen, note = (vs, tt), ""
                        break
            vs, tt = chosen
            labels = {f"v{i + 1}": v for i, v in enumerate(vs)}
            labels.update({f"t{i + 1}": t for i, t in enumerate(tt)})
            labels["k"] = k
            out.append(_config("k-face", labels, vs, note))
    return out


def detect_three_seven(G: PlaneGraph, D: Sequence[int]) -> list[Configuration]:
    dset = set(D)
    out, seen = [], set()
    for _fi, tri in _inner_faces(G, 3):
        for i in range(3):
            a, b, c = tri[i], tri[(i + 1) % 3], tri[(i + 2) % 3]
            g = G.faces[G.face_of(b, a)]
            if len(g) != 7 or len(set(g)) != 7 or c in g:
                continue
            degs = {a: G.degree(a), b: G.degree(b)}
            if sorted(degs.values()) != [3, 4]:
                continue
            z = a if degs[a] == 4 else b
            x = b if z == a else a
            y = c
            j = g.index(x)
            seq = [g[(j + s) % 7] for s in range(7)]
            if seq[1] != z:
                seq = [seq[0]] + seq[1:][::-1]
            if seq[1] != z:
                continue
            vs = seq[2:]
            H = [x, y, z] + vs
            if any(v in dset for v in H) or not _internal3(G, dset, [x, y] + vs):
                continue
            key = frozenset(H)
            if key in seen:
                continue
            yp = _third(G, y, (x, z))
            zp = _third(G, z, (x, y, vs[0]))
            ts = [_third(G, vs[i], (seq[i + 1], seq[(i + 3) % 7])) for i in range(5)]
            if yp is None or zp is None or None in ts:
                continue
            seen.add(key)
            labels = dict(x=x, y=y, z=z, **{f"v{i + 1}": v for i, v in enumerate(vs)}, **{"y'": yp, "z'": zp})
            labels.update({f"t{i + 1}": t for i, t in enumerate(ts)})
            out.append(_config("three-seven", labels, H))
    return out


def detect_seven_seven(G: PlaneGraph, D: Sequence[int]) -> list[Configuration]:
    dset = set(D)
    out, seen = [], set()
    for _fi, tri in _inner_faces(G, 3):
        for x in tri:
            for u1 in tri:
                if u1 == x:
                    continue
                v1 = next(w for w in tri if w not in (x, u1))
                if G.degree(x) != 4 or G.degree(u1) != 4 or G.degree(v1) != 3:
                    continue
                # the 7-faces across xu1 and xv1, away from the triangle
                fa = [G.face_of(x, u1), G.face_of(u1, x)]
                fb = [G.face_of(x, v1), G.face_of(v1, x)]
                g1 = next((G.faces[f] for f in fa if len(G.faces[f]) == 7 and v1 not in G.faces[f]), None)
                g2 = next((G.faces[f] for f in fb if len(G.faces[f]) == 7 and u1 not in G.faces[f]), None)
                if g1 is None or g2 is None or set(g1) & set(g2) != {x}:
                    continue
                us = _walk_from(g1, x, u1, last=True)
                vs = _walk_from(g2, x, v1, last=False)
                if us is None or vs is None:
                    continue
                # us = [u6 .. u1], vs = [v1 .. v6]
                H = [x] + us + vs
                if len(set(H)) != 13 or any(v in dset for v in H):
                    continue
                if not _internal3(G, dset, us[:-1] + vs):
                    continue
                key = frozenset(H)
                if key in seen:
                    continue
                t1 = _third(G, u1, (us[-2], x, v1))
                if t1 is None:
                    continue
                seen.add(key)
                labels = {"x": x, **{f"u{6 - i}": u for i, u in enumerate(us)}, **{f"v{i + 1}": v for i, v in enumerate(vs)}, "t1": t1}
                out.append(_config("seven-seven", labels, H))
    return out


def _walk_from(face, x, y, last: bool):
    """Face vertices other than ``x`` ordered so that ``y`` is last (or first)."""
    k = len(face)
    j = face.index(x)
    seq = [face[(j + s) % k] for s in range(1, k)]
    if last and seq[-1] != y:
        seq = seq[::-1]
    if not last and seq[0] != y:
        seq = seq[::-1]
    if (last and seq[-1] != y) or (not last and seq[0] != y):
        return None
    return seq


def detect_m_nine(G: PlaneGraph, D: Sequence[int]) -> list[Configuration]:
    dset = set(D)
    out = []
    for fi, walk in _inner_faces(G, 9):
        found = None
        for seq in (walk, walk[::-1]):
            for s in range(9):
                v = [None] + [seq[(s + j) % 9] for j in range(9)]
                if v[4] in dset or G.degree(v[4]) != 4:
                    continue
                if not _internal3(G, dset, (v[1], v[2], v[3], v[5], v[6], v[7])):
                    continue
                fset = set(walk)
                t12 = _common(G, v[1], v[2], fset)
                a = _common(G, v[3], v[4], fset)
                z = _common(G, v[4], v[5], fset)
                t67 = _common(G, v[6], v[7], fset)
                if not (len(t12) == len(a) == len(z) == len(t67) == 1):
                    continue
                t12, a, z, t67 = t12[0], a[0], z[0], t67[0]
                if len({t12, a, z, t67}) != 4 or set(G.rotations[v[4]]) != {v[3], v[5], a, z}:
                    continue
                if G.find_face((v[3], v[4], a)) is None or G.find_face((v[4], v[5], z)) is None:
                    continue
                labels = {f"v{i}": v[i] for i in range(1, 10)}
                labels.update(t12=t12, a=a, z=z, t67=t67)
                found = _config("m-nine", labels, (v[1], v[2], v[3], v[5], v[6], v[7]))
                break
            if found:
                break
        if found:
            out.append(found)
    return out


_DETECTORS: dict[str, Callable] = {
    "low-degree": detect_low_degree,
    "separating-good-cycle": detect_separating_good_cycles,
    "cut-vertex": detect_cut_vertices,
    "good-path": detect_good_paths,
    "k-face": detect_k_faces,
    "three-seven": detect_three_seven,
    "seven-seven": detect_seven_seven,
    "m-nine": detect_m_nine,
}


def detect_configurations(G: PlaneGraph, D: Sequence[int] | None = None, kinds: Sequence[str] = KINDS) -> list[Configuration]:
    """Every configuration of the listed kinds, in lemma order."""
    D = tuple(D if D is not None else G.outer_walk)
    out = []
    for kind in kinds:
        out.extend(_DETECTORS[kind](G, D))
    return out


# -- surgery and legality ---------------------------------------------------------


def surgery_for(config: Configuration) -> SurgerySpec:
    L = config.label
    removed = frozenset(config.removed)
    if config.kind == "good-path":
        return IdentifyVertices(removed, L["x"], L["t3"])
    if config.kind == "k-face":
        far = L["t3"] if L["k"] == 5 else L["t4"]
        return AddEdge(removed, L["t1"], far)
    if config.kind == "m-nine":
        return IdentifyEdges(removed, (L["v8"], L["v9"]), (L["z"], L["v4"]))
    return DeleteVertices(removed)


@dataclass
class SurgeryLegality:
    cond_a: bool
    cond_b: bool
    merge_edge: bool | None = None
    witnesses: list[dict] = field(default_factory=list)
    parts: list["SurgeryLegality"] = field(default_factory=list)

    @property
    def legal(self) -> bool:
        return self.cond_a and self.cond_b and self.merge_edge is not False and all(p.legal for p in self.parts)

    def to_json(self) -> dict:
        return {
            "legal": self.legal,
            "a": self.cond_a,
            "b": self.cond_b,
            "merge_edge": self.merge_edge,
            "witnesses": self.witnesses,
            "parts": [p.to_json() for p in self.parts],
        }


def _preimages(res: SurgeryResult) -> dict[int, list[int]]:
    pre: dict[int, list[int]] = {}
    for old, new in enumerate(res.index_map):
        if new is not None:
            pre.setdefault(new, []).append(old)
    return pre


def _is_created(cycle, pre, G_minus: PlaneGraph, old_to_minus) -> bool:
    """True when no cycle of the pre-surgery graph maps onto ``cycle``."""
    k = len(cycle)
    choices = [pre[v] for v in cycle]

    def ok(i, prev_first, prev):
        if i == k:
            return G_minus.has_edge(old_to_minus[prev], old_to_minus[prev_first])
        for o in choices[i]:
            if i and not G_minus.has_edge(old_to_minus[prev], old_to_minus[o]):
                continue
            if ok(i + 1, o if i == 0 else prev_first, o):
                return True
        return False

    return not ok(0, None, None)


def _component(G: PlaneGraph, v: int) -> tuple[PlaneGraph, list[int | None]]:
    comp = next(c for c in G.components() if v in c)
    if len(comp) == G.n:
        return G, list(range(G.n))
    return G.induced(comp)


def check_surgery_legality(G: PlaneGraph, D: Sequence[int], spec: SurgerySpec) -> SurgeryLegality:
    """Evaluate conditions (a) and (b) of the deletion-and-identification rule.

    (a) no two vertices of ``D`` are identified and no edge between two of
    them is created; (b) no created cycle has length at most 6, and no
    created 7- or 8-cycle is ext-triangular.  A cycle is created when it
    does not come from a cycle of the graph minus the deleted set.
    Identifying two edges is judged through its two vertex
    identifications together with the short-cycle condition on the edges.
    """
    dset = set(D)
    if not spec.deleted or set(spec.deleted) & dset:
        raise SurgeryInapplicable("surgeries delete a nonempty set of internal vertices")
    if isinstance(spec, IdentifyEdges):
        (u1, u2), (v1, v2) = spec.first, spec.second
        parts = [
            check_surgery_legality(G, D, IdentifyVertices(spec.deleted, u1, v1)),
            check_surgery_legality(G, D, IdentifyVertices(spec.deleted, u2, v2)),
        ]
        minus = apply_surgery(G, DeleteVertices(spec.deleted))
        m = minus.index_map
        short = []
        for a, b in (spec.first, spec.second):
            na, nb = m[a], m[b]
            hit = next((c for c in cycles_at(minus.graph, na, 8) if nb in (c[1], c[-1])), None)
            short.append(hit is not None)
        merge_ok = not all(short)
        out = SurgeryLegality(True, True, merge_ok, [], parts)
        if not merge_ok:
            out.witnesses.append({"reason": "both edges on 8- cycles"})
        try:
            res = apply_surgery(G, spec)
        except (WouldIdentifyEdges, WouldCreateLoop) as exc:
            out.cond_b = False
            out.witnesses.append({"reason": "multi-edge or loop", "detail": str(exc)})
            return out
        except NotCoFacial as exc:
            raise SurgeryInapplicable(str(exc)) from None
        chords = _new_boundary_edges(G, D, res)
        if chords:
            out.cond_a = False
            out.witnesses.append({"reason": "new edge between boundary vertices", "edges": [list(e) for e in chords]})
        out.cond_b = _scan_created(G, spec, res, out.witnesses)
        return out

    cond_a = True
    witnesses: list[dict] = []
    if isinstance(spec, (IdentifyVertices, AddEdge)) and spec.a in dset and spec.b in dset:
        cond_a = False
        witnesses.append({"reason": "both ends on D", "vertices": [spec.a, spec.b]})
    try:
        res = apply_surgery(G, spec)
    except (WouldIdentifyEdges, WouldCreateLoop) as exc:
        witnesses.append({"reason": "multi-edge or loop", "detail": str(exc)})
        return SurgeryLegality(cond_a, False, None, witnesses)
    except NotCoFacial as exc:
        raise SurgeryInapplicable(str(exc)) from None
    chords = _new_boundary_edges(G, D, res)
    if chords:
        cond_a = False
        witnesses.append({"reason": "new edge between boundary vertices", "edges": [list(e) for e in chords]})
    cond_b = _scan_created(G, spec, res, witnesses)
    return SurgeryLegality(cond_a, cond_b, None, witnesses)


def _new_boundary_edges(G: PlaneGraph, D: Sequence[int], res: SurgeryResult) -> list[tuple[int, int]]:
    m = res.index_map
    dn = {m[v] for v in D}
    old = {edge_key(m[u], m[v]) for u, v in G.edges() if u in D and v in D}
    return sorted(e for e in res.graph.edges() if e[0] in dn and e[1] in dn and e not in old)


def _scan_created(G, spec, res: SurgeryResult, witnesses) -> bool:
    G2 = res.graph
    hubs = set(res.merged) | {v for e in res.new_edges for v in e}
    if not hubs:
        return True
    minus = apply_surgery(G, DeleteVertices(spec.deleted))
    pre = _preimages(res)
    new_edges = set(res.new_edges)
    ok = True
    seen = set()
    for h in sorted(hubs):
        for c in cycles_at(G2, h, 8):
            key = frozenset(cycle_edges(c))
            if key in seen:
                continue
            seen.add(key)
            uses_new = bool(cycle_edges(c) & new_edges)
            if not uses_new and not _is_created(c, pre, minus.graph, minus.index_map):
                continue
            if len(c) <= 6:
                ok = False
                witnesses.append({"reason": "created short cycle", "cycle": list(c)})
            elif len(c) in (7, 8):
                H, new = _component(G2, c[0])
                tri = is_ext_triangular(H, [new[v] for v in c])
                if tri is not None:
                    ok = False
                    witnesses.append({"reason": "created ext-triangular cycle", "cycle": list(c)})
    return ok


# -- lifts ------------------------------------------------------------------------


class _Lift:
    """Colouring under construction plus the branch log of one lift."""

    def __init__(self, G: PlaneGraph, D: Sequence[int], colors: Sequence[int], kind: str) -> None:
        self.G = G
        self.D = list(D)
        self.c = [int(x) for x in colors]
        self.kind = kind
        self.branches: list[str] = []

    def fail(self, why: str):
        raise CaseAnalysisExhausted(f"{self.kind}: {why} (branches so far {self.branches})")

    def nice(self, v: int) -> None:
        try:
            self.c = [int(x) for x in nicely_color(self.G, self.c, v, self.D)]
        except GuaranteeViolated as exc:
            self.fail(str(exc))

    def path(self, verts: Sequence[int], mode: str, ignore=()) -> None:
        try:
            self.c = [int(x) for x in nicely_color_path(self.G, self.c, verts, mode, self.D, ignore)]
        except GuaranteeViolated as exc:
            self.fail(str(exc))

    def clear(self, verts) -> None:
        for v in verts:
            self.c[v] = U

    def linked(self, u: int, v: int) -> bool:
        return f_linked(self.G, self.c, self.D, u, v)

    def broken(self) -> bool:
        """Whether the partial colouring has a conflict, an F-cycle or a boundary-joining F-path."""
        return not validate(self.G, self.c).ok or boundary_f_path(self.G, self.D, self.c) is not None

    def note(self, branch: str) -> None:
        self.branches.append(branch)


def _other(c: int) -> int:
    return F if c == I else I


def _good_path_steps(st: _Lift, x, v1, v2, v3, t3, t12, v4=None, tag="") -> None:
    c = st.c
    if v4 is not None:
        st.nice(v4)
    st.nice(v3)
    c = st.c
    if c[x] != c[t3]:
        st.fail(f"{tag}identified vertices {x} and {t3} differ")
    alpha, beta, gamma = c[x], c[t12], c[v3]
    if alpha == I:
        c[v1], c[v2] = F, _other(beta)
        st.note(tag + "i")
    elif beta == I:
        c[v1] = c[v2] = F
        st.note(tag + "ii")
    elif gamma == I:
        c[v1], c[v2] = I, F
        st.note(tag + "iii")
    else:
        if not st.linked(x, t12):
            c[v1] = F
            st.note(tag + "iv-a")
        elif not st.linked(t12, t3):
            c[v1] = I
            st.note(tag + "iv-b")
        else:
            st.fail(f"{tag}both pairs around t12 are F-linked")
        c[v2] = _other(c[v1])


def _lift_good_path(st: _Lift, L) -> None:
    _good_path_steps(st, L["x"], L["v1"], L["v2"], L["v3"], L["t3"], L["t12"], v4=L["v4"])


def _lift_k_face(st: _Lift, L) -> None:
    k = L["k"]
    vs = [L[f"v{i}"] for i in range(1, k + 1)]
    ts = [L[f"t{i}"] for i in range(1, k + 1)]
    c = st.c
    if all(c[t] == F for t in ts):
        last = 2 if k == 5 else 3
        for p in range(last):
            if not st.linked(ts[p], ts[p + 1]):
                pattern = [F, F] + [I if j % 2 == 0 else F for j in range(k - 2)]
                for j in range(k):
                    c[vs[(p + j) % k]] = pattern[j]
                st.note(f"all-F/p={p + 1}")
                return
        st.fail("every consecutive pair of the leading attachments is F-linked")
    q = next(i for i, t in enumerate(ts) if c[t] == I)
    order = [vs[(q + j) % k] for j in range(1, k)]
    st.path(order, "I")
    st.c[vs[q]] = F
    st.note("some-I")


def _lift_three_seven(st: _Lift, L) -> None:
    x, y, z = L["x"], L["y"], L["z"]
    vs = [L[f"v{i}"] for i in range(1, 6)]
    path = vs[::-1] + [z, y]
    st.path(path, "I")
    c = st.c
    if c[y] == I or c[z] == I:
        c[x] = F
        if all(c[v] == F for v in [z] + vs):
            c[x], c[y] = I, F
            st.note("yz-I/F-cycle")
        else:
            st.note("yz-I")
        return
    if c[vs[4]] == F:
        c[x] = I
        st.note("v5-F")
        return
    if c[L["y'"]] == F:
        c[y], c[x] = I, F
        st.note("y'-F")
        return
    st.clear(path)
    st.path(path, "F")
    st.c[x] = _other(st.c[z])
    st.note("F-nicely")


def _lift_seven_seven(st: _Lift, L) -> None:
    x, t1 = L["x"], L["t1"]
    P1 = [L[f"u{i}"] for i in range(6, 0, -1)]
    P2 = [L[f"v{i}"] for i in range(6, 0, -1)]
    u1, v1, v2 = L["u1"], L["v1"], L["v2"]
    st.path(P1, "I")
    if all(st.c[u] == F for u in P1):
        st.path(P2, "F")
        if st.c[v1] == F:
            st.note("P1-F")
        else:
            st.c[v1] = F
            st.note("P1-F/v1-reassigned")
        st.c[x] = I
        return
    st.path(P2, "I")
    if all(st.c[v] == F for v in P2):
        if st.c[u1] != I:
            st.fail("P2 is an F-path but u1 is not I")
        st.clear(P1)
        st.path(P1, "F", ignore=[(u1, v1)])
        st.c[x] = I
        st.note("P2-F")
        return
    c = st.c
    if not (c[u1] == F and c[v1] == F):
        c[x] = F
        st.note("u1v1-not-both-F")
        return
    if c[v2] == F:
        c[v1], c[x] = I, F
        st.note("v2-F")
        return
    if c[t1] == F:
        st.clear(P1)
        st.path(P1, "F")
        st.c[x] = F
        st.note("t1-F")
        return
    st.clear(P2)
    st.path(P2, "F")
    st.c[x] = F
    if st.broken():
        st.clear([x, v1])
        st.clear(P1)
        st.path(P1, "F")
        st.c[x], st.c[v1] = I, F
        st.note("P2-recolor/repair")
    else:
        st.note("P2-recolor")


def _lift_m_nine(st: _Lift, L) -> None:
    _good_path_steps(st, L["v9"], L["v1"], L["v2"], L["v3"], L["v4"], L["t12"], tag="S1:")
    _good_path_steps(st, L["v8"], L["v7"], L["v6"], L["v5"], L["z"], L["t67"], tag="S2:")
    if st.broken():
        st.note("S2-contradiction")
        st.fail("colouring both strips left an F-cycle or a boundary-joining F-path")


def _lift_low_degree(st: _Lift, L) -> None:
    v = L["v"]
    st.nice(v)
    st.note(f"deg-{st.G.degree(v)}/{'I' if st.c[v] == I else 'F'}")


_LIFTS = {
    "low-degree": _lift_low_degree,
    "good-path": _lift_good_path,
    "k-face": _lift_k_face,
    "three-seven": _lift_three_seven,
    "seven-seven": _lift_seven_seven,
    "m-nine": _lift_m_nine,
}

Extender = Callable[[PlaneGraph, Sequence[int], Sequence[int]], "list[int] | None"]


def _oracle_extender(G: PlaneGraph, D: Sequence[int], phi0: Sequence[int]) -> list[int] | None:
    cert = super_extend_search(G, D, phi0)
    return cert.coloring if cert.solved else None


@dataclass
class LiftResult:
    colors: list[int]
    branches: list[str]


def lift_coloring(
    config: Configuration,
    G: PlaneGraph,
    colors: Sequence[int],
    D: Sequence[int] | None = None,
    extender: Extender | None = None,
) -> LiftResult:
    """Extend a colouring pulled back from the reduced graph over the removed vertices.

    ``colors`` is indexed by the vertices of ``G`` and leaves exactly the
    removed vertices uncoloured.  Decomposition kinds complete their
    piece through ``extender`` (the exact search by default).
    """
    D = tuple(D if D is not None else G.outer_walk)
    st = _Lift(G, D, colors, config.kind)
    for v in config.removed:
        if st.c[v] != U:
            raise ValueError(f"removed vertex {v} is already coloured")
    if config.kind in _LIFTS:
        _LIFTS[config.kind](st, config.label)
    elif config.kind == "separating-good-cycle":
        _lift_inside_cycle(st, config, extender or _oracle_extender)
    elif config.kind == "cut-vertex":
        _lift_block(st, config, extender or _oracle_extender)
    else:
        raise ValueError(f"unknown configuration kind {config.kind!r}")
    if any(st.c[v] == U for v in config.removed):
        st.fail("lift left vertices uncoloured")
    return LiftResult(st.c, st.branches)


def _side_dart(G: PlaneGraph, C: Sequence[int], faces: frozenset[int]) -> tuple[int, int]:
    """A dart of ``C`` whose face lies in ``faces``."""
    a, b = C[0], C[1]
    return (a, b) if G.face_of(a, b) in faces else (b, a)


def _closed_side(G: PlaneGraph, C: Sequence[int], inside: bool):
    """``int[C]`` (or ``ext[C]``) with ``C`` bounding its outer face."""
    sides = cycle_sides(G, C)
    side = sides.inside if inside else sides.outside
    other = sides.outside if inside else sides.inside
    keep = set(cycle_edges(C)) | set(side.edges)
    dart = _side_dart(G, C, other.faces)
    H, new = edge_subgraph(G, keep, dart)
    return H, new, side


def _run_piece(st: _Lift, H: PlaneGraph, new, C: Sequence[int], extender: Extender) -> None:
    old = {j: i for i, j in enumerate(new) if j is not None}
    phi = [U] * H.n
    for v in C:
        phi[new[v]] = st.c[v]
    sub = extender(H, [new[v] for v in C], phi)
    if sub is None:
        st.fail(f"piece bounded by {list(C)} did not extend")
    for j, col in enumerate(sub):
        i = old[j]
        if st.c[i] == U:
            st.c[i] = col
        elif st.c[i] != col:
            st.fail(f"piece recoloured vertex {i}")


def _lift_inside_cycle(st: _Lift, config: Configuration, extender: Extender) -> None:
    L = config.label
    C = [L[f"c{i}"] for i in range(len(L))]
    H, new, _side = _closed_side(st.G, C, inside=True)
    _run_piece(st, H, new, C, extender)
    st.note("inside-extended")


def outermost_cycles_at(G: PlaneGraph, v: int, max_len: int = 10) -> tuple[int, ...] | None:
    """A cycle through ``v`` of length <= max_len lying inside no other such cycle."""
    best, best_in = None, None
    cands = []
    for c in cycles_at(G, v, max_len):
        cands.append((c, cycle_sides(G, c).inside.faces))
    for c, fin in cands:
        if any(fin < other for _, other in cands):
            continue
        if best is None or (len(fin), tuple(-x for x in c)) > (len(best_in), tuple(-x for x in best)):
            best, best_in = c, fin
    return best


def _lift_block(st: _Lift, config: Configuration, extender: Extender) -> None:
    G = st.G
    v = config["v"]
    B = sorted(set(config.removed) | {v})
    bset = set(B)
    rot = G.rotations[v]
    # the rest of G sits in the block's face at the corner between these two neighbours
    k = len(rot)
    j = next(i for i, w in enumerate(rot) if w not in bset)
    i = j
    while rot[i % k] not in bset:
        i -= 1
    b_prev = rot[i % k]
    keep = [e for e in G.edges() if e[0] in bset and e[1] in bset]
    if len(B) == 2:
        u = next(w for w in B if w != v)
        st.nice(u)
        st.note("bridge")
        return
    Bg, new = edge_subgraph(G, keep, (b_prev, v))
    old = {jj: ii for ii, jj in enumerate(new) if jj is not None}
    nv = new[v]
    C = outermost_cycles_at(Bg, nv, 10)
    fixed = [U] * Bg.n
    fixed[nv] = st.c[v]
    if C is not None:
        sub, snew = Bg.induced(C)
        init = [U] * sub.n
        init[snew[nv]] = st.c[v]
        cert = extend_coloring(sub, init)
        if not cert.solved:
            st.fail("no colouring of the short cycle through the cut vertex")
        for w in C:
            st.c[old[w]] = cert.coloring[snew[w]]
        sides = cycle_sides(Bg, C)
        # inside and outside pieces are cut from the block, not from G
        for inside, side in ((True, sides.inside), (False, sides.outside)):
            if not side.vertices and not side.edges:
                continue
            H, hnew, _ = _closed_side(Bg, C, inside)
            _run_block_piece(st, H, hnew, old, C, extender)
        st.note("outermost-cycle")
        return
    # no short cycle through v: close a triangle on the outer face of the block
    walk = Bg.outer_walk
    pos = walk.index(nv)
    p, s = walk[pos - 1], walk[(pos + 1) % len(walk)]
    res = apply_surgery(Bg, AddEdge(frozenset(), p, s, (walk[pos - 1], nv)))
    T = (res.index_map[nv], res.index_map[p], res.index_map[s])
    fi = res.graph.find_face(T)
    H = res.graph.with_outer(fi)
    init = [U] * H.n
    init[T[0]] = st.c[v]
    tri, tnew = H.induced(T)
    tinit = [U] * 3
    tinit[tnew[T[0]]] = st.c[v]
    cert = extend_coloring(tri, tinit)
    for w in T:
        init[w] = cert.coloring[tnew[w]]
    sub = extender(H, list(T), init)
    if sub is None:
        st.fail("block with a closing triangle did not extend")
    back = {res.index_map[w]: w for w in range(Bg.n)}
    for jj, col in enumerate(sub):
        st.c[old[back[jj]]] = col
    st.note("closing-triangle")


def _run_block_piece(st: _Lift, H, hnew, old, C, extender) -> None:
    phi = [U] * H.n
    for w in C:
        phi[hnew[w]] = st.c[old[w]]
    sub = extender(H, [hnew[w] for w in C], phi)
    if sub is None:
        st.fail("block piece did not extend")
    back = {j: i for i, j in enumerate(hnew) if j is not None}
    for j, col in enumerate(sub):
        g = old[back[j]]
        if st.c[g] == U:
            st.c[g] = col
        elif st.c[g] != col:
            st.fail(f"block piece recoloured vertex {g}")


# -- reduction --------------------------------------------------------------------


@dataclass
class Reduction:
    config: Configuration
    spec: SurgerySpec
    result: SurgeryResult
    boundary: tuple[int, ...]

    def push(self, phi0: Sequence[int]) -> list[int]:
        return self.result.push(phi0)

    def pull(self, colors: Sequence[int]) -> list[int]:
        out = self.result.pull_back(colors)
        for v in self.config.removed:
            out[v] = U
        return out


def reduce_configuration(G: PlaneGraph, D: Sequence[int], config: Configuration) -> Reduction:
    spec = surgery_for(config)
    res = apply_surgery(G, spec)
    Dn = tuple(res.index_map[v] for v in D)
    return Reduction(config, spec, res, Dn)


def instance_ok(G: PlaneGraph, D: Sequence[int]) -> tuple[bool, str]:
    """Whether ``(G, D)`` meets the hypotheses of the extension claim."""
    try:
        check_cycle(G, D)
    except GraphError:
        return False, "boundary is not a cycle"
    if len(G.outer_walk) != len(D) or set(G.outer_walk) != set(D):
        return False, "boundary does not bound the outer face"
    rep = class_G_membership(G)
    if not rep.in_class:
        return False, "graph is not in the class"
    if len(D) > 12 or not is_good_cycle(G, D):
        return False, "boundary is not a good cycle"
    return True, ""


def _boundary_problem(G: PlaneGraph, D: Sequence[int], phi0: Sequence[int]) -> str:
    """Why ``(G, D, phi0)`` is not a well-formed extension instance ("" when it is)."""
    try:
        check_cycle(G, D)
    except GraphError:
        return "boundary is not a cycle"
    if len(G.outer_walk) != len(D) or set(G.outer_walk) != set(D):
        return "boundary does not bound the outer face"
    try:
        _boundary_init(G, D, phi0)
    except BoundaryColoringInvalid:
        return "boundary colouring is not an (I,F)-colouring"
    return ""


# -- guided extension ---------------------------------------------------------------


class _Unsolvable(Exception):
    """Raised once a deletion shows that no super-extension exists."""


@dataclass
class _Audit:
    steps: list[dict] = field(default_factory=list)
    fallbacks: int = 0
    nodes: int = 0
    budget_hit: bool = False
    kinds: tuple[str, ...] = KINDS

    def log(self, depth, case, **kw):
        self.steps.append({"depth": depth, "case": case, **kw})


def _restrict(G: PlaneGraph, keep: Sequence[int], D: Sequence[int]):
    H, new = G.induced(keep, outer_hint=D)
    return H, new


def guided_extend(
    G: PlaneGraph,
    D: Sequence[int] | None,
    phi0: Sequence[int],
    config: SearchConfig | None = None,
    strict: bool = False,
    relaxed: bool = False,
    kinds: Sequence[str] = KINDS,
) -> Certificate:
    """Super-extend ``phi0`` following the reducible-configuration recursion.

    Each step removes a configuration, extends on the smaller instance and
    lifts the colouring back; when nothing applies the exact search is
    used and the fallback is recorded in the audit trail.

    Outside the hypotheses (``G`` not in the class, or ``D`` long or bad)
    the exact search answers directly, ``strict`` raises instead, and
    ``relaxed`` runs the recursion anyway.  Lifts stay sound there; only
    the promise that some configuration applies is lost.  ``kinds`` sets
    which configurations are tried, in order; every order is sound.
    """
    cfg = config or SearchConfig()
    D = tuple(D if D is not None else G.outer_walk)
    _boundary_init(G, D, phi0)
    unknown = set(kinds) - set(KINDS)
    if unknown:
        raise ValueError(f"unknown configuration kinds {sorted(unknown)}")
    audit = _Audit(kinds=tuple(kinds))
    ok, why = instance_ok(G, D)
    if not ok:
        if strict:
            raise HypothesisViolated(why)
        audit.log(0, "hypothesis-violated", reason=why)
    if not ok and not relaxed:
        phi = _oracle(G, D, list(phi0), 0, audit, cfg, why)
        outcome = SOLVED if phi is not None else (BUDGET if audit.budget_hit else UNSOLVABLE)
        return Certificate(outcome, phi, audit.nodes, 0, audit.steps, "guided", audit.fallbacks)
    phi = _extend(G, D, list(phi0), 0, audit, cfg)
    if phi is None:
        outcome = BUDGET if audit.budget_hit else UNSOLVABLE
        return Certificate(outcome, None, audit.nodes, 0, audit.steps, "guided", audit.fallbacks)
    check = is_super_extension(G, D, phi0, phi)
    if not check.ok:
        raise CaseAnalysisExhausted(f"guided result is not a super-extension: {check.reason}")
    depth = max((s["depth"] for s in audit.steps), default=0)
    return Certificate(SOLVED, phi, audit.nodes, depth, audit.steps, "guided", audit.fallbacks)


def _oracle(G, D, phi0, depth, audit: _Audit, cfg, reason) -> list[int] | None:
    audit.fallbacks += 1
    cert = super_extend_search(G, D, phi0, cfg)
    audit.nodes += cert.nodes
    if cert.outcome == BUDGET:
        audit.budget_hit = True
    audit.log(depth, "oracle", reason=reason, fallback=True, outcome=cert.outcome)
    return cert.coloring if cert.solved else None


def _extend(G: PlaneGraph, D: Sequence[int], phi0: list[int], depth: int, audit: _Audit, cfg: SearchConfig) -> list[int] | None:
    dset = set(D)
    interior = [v for v in range(G.n) if v not in dset]
    if not interior:
        audit.log(depth, "base")
        return [phi0[v] if v in dset else U for v in range(G.n)]

    comps = G.components()
    if len(comps) > 1:
        main = next(c for c in comps if D[0] in c)
        out = [U] * G.n
        for comp in comps:
            if comp is main:
                continue
            H, new = G.induced(comp)
            cert = extend_coloring(H, [U] * H.n, cfg)
            audit.nodes += cert.nodes
            if not cert.solved:
                return None
            for v in comp:
                out[v] = cert.coloring[new[v]]
        audit.log(depth, "detached-components", count=len(comps) - 1)
        H, new = _restrict(G, main, D)
        sub = _extend(H, [new[v] for v in D], [phi0[v] for v in main], depth + 1, audit, cfg)
        if sub is None:
            return None
        for v in main:
            out[v] = sub[new[v]]
        return out

    def recurse(Gr: PlaneGraph, Dr, phir):
        why = _boundary_problem(Gr, Dr, phir)
        if why:
            return None, why
        return _extend(Gr, Dr, phir, depth + 1, audit, cfg), ""

    def extender(Hs: PlaneGraph, Ds, phis):
        why = _boundary_problem(Hs, Ds, phis)
        if why:
            return _oracle(Hs, Ds, phis, depth + 1, audit, cfg, f"piece: {why}")
        return _extend(Hs, Ds, list(phis), depth + 1, audit, cfg)

    for kind in audit.kinds:
        if kind == "separating-good-cycle":
            candidates = detect_separating_good_cycles(G, D, first_only=True)
        else:
            candidates = _DETECTORS[kind](G, D)
        for conf in candidates:
            try:
                result = _try_config(G, D, phi0, conf, depth, audit, recurse, extender)
            except _Unsolvable:
                audit.log(depth, conf.kind, unsolvable=True)
                return None
            if result is not None:
                return result
    return _oracle(G, D, phi0, depth, audit, cfg, "no configuration applied")


def _try_config(G, D, phi0, conf: Configuration, depth, audit: _Audit, recurse, extender):
    spec = surgery_for(conf)
    if not isinstance(spec, DeleteVertices):
        try:
            legality = check_surgery_legality(G, D, spec)
        except SurgeryInapplicable as exc:
            audit.log(depth, conf.kind, skipped=str(exc))
            return None
        if not legality.legal:
            audit.log(depth, conf.kind, skipped="illegal surgery", witnesses=legality.witnesses[:3])
            return None
    try:
        red = reduce_configuration(G, D, conf)
    except GraphError as exc:
        audit.log(depth, conf.kind, skipped=str(exc))
        return None
    sub, why = recurse(red.result.graph, red.boundary, red.push(phi0))
    if sub is None:
        audit.log(depth, conf.kind, skipped=why or "reduced instance did not extend")
        if not why and isinstance(spec, DeleteVertices) and not audit.budget_hit:
            # a super-extension of G restricts to one of G - S
            raise _Unsolvable
        return None
    pulled = red.pull(sub)
    try:
        lifted = lift_coloring(conf, G, pulled, D, extender)
    except CaseAnalysisExhausted as exc:
        audit.log(depth, conf.kind, error=str(exc))
        return None
    check = is_super_extension(G, D, phi0, lifted.colors)
    audit.log(depth, conf.kind, labels=conf.label, branches=lifted.branches, surgery=type(spec).__name__, verified=check.ok)
    if not check.ok:
        return None
    return lifted.colors


# -- outermost short cycle ------------------------------------------------------------


def find_outermost_short_cycle(G: PlaneGraph, T: Sequence[int], max_len: int = 10) -> tuple[int, ...]:
    """The cycle of length <= max_len containing the triangle ``T`` inside that lies inside no other such cycle."""
    T = tuple(T)
    if len(T) != 3 or len(set(T)) != 3 or not all(G.has_edge(T[i], T[(i + 1) % 3]) for i in range(3)):
        raise NotATriangle(f"{T} is not a triangle")
    tri_faces = cycle_sides(G, T).inside.faces
    tset = set(T)
    cands = []
    for c in simple_cycles(G, max_len):
        sides = cycle_sides(G, c)
        if not tset <= set(c) | sides.inside.vertices:
            continue
        if not tri_faces <= sides.inside.faces:
            continue
        cands.append((c, sides.inside.faces))
    best, best_in = T, tri_faces
    for c, fin in cands:
        if any(fin < other for _, other in cands):
            continue
        if len(fin) > len(best_in) or (len(fin) == len(best_in) and len(c) > len(best)):
            best, best_in = c, fin
    return tuple(best)


# -- exhaustive lift verification ------------------------------------------------------


GOOD_PATH_BRANCHES = ("i", "ii", "iii", "iv-a", "iv-b")

# every branch a passing run must reach, and those it must never reach
EXPECTED_BRANCHES: dict[str, tuple[str, ...]] = {
    "low-degree": ("deg-1/I", "deg-1/F", "deg-2/I", "deg-2/F"),
    "separating-good-cycle": ("inside-extended",),
    "cut-vertex": ("bridge", "outermost-cycle", "closing-triangle"),
    "good-path": GOOD_PATH_BRANCHES,
    "k-face": ("all-F/p=1", "all-F/p=2", "all-F/p=3", "some-I"),
    "three-seven": ("yz-I", "yz-I/F-cycle", "v5-F", "y'-F", "F-nicely"),
    "seven-seven": ("P1-F", "P1-F/v1-reassigned", "P2-F", "u1v1-not-both-F", "v2-F", "t1-F", "P2-recolor", "P2-recolor/repair"),
    "m-nine": tuple(f"S{j}:{b}" for j in (1, 2) for b in GOOD_PATH_BRANCHES),
}
UNREACHABLE_BRANCHES: dict[str, tuple[str, ...]] = {"m-nine": ("S2-contradiction",)}


@dataclass
class LemmaReport:
    kind: str
    hosts: list[dict] = field(default_factory=list)
    branches: dict[str, int] = field(default_factory=dict)
    failures: list[dict] = field(default_factory=list)
    checked: int = 0

    @property
    def missing(self) -> list[str]:
        return [b for b in EXPECTED_BRANCHES.get(self.kind, ()) if not self.branches.get(b)]

    @property
    def unreachable_hit(self) -> list[str]:
        return [b for b in UNREACHABLE_BRANCHES.get(self.kind, ()) if self.branches.get(b)]

    @property
    def ok(self) -> bool:
        return not self.failures and self.checked > 0 and not self.missing and not self.unreachable_hit

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "ok": self.ok,
            "cases_enumerated": self.checked,
            "branches": dict(sorted(self.branches.items())),
            "missing_branches": self.missing,
            "unreachable_branches": {b: self.branches.get(b, 0) for b in UNREACHABLE_BRANCHES.get(self.kind, ())},
            "fixtures": self.hosts,
            "failures": self.failures[:20],
        }


def verify_lift_on_host(
    G: PlaneGraph, D: Sequence[int], config: Configuration, report: LemmaReport, limit: int = 0, name: str = ""
) -> None:
    """Lift every super-extension of the reduced graph, for every boundary colouring."""
    from .solver import all_super_extensions, boundary_colorings

    red = reduce_configuration(G, D, config)
    Gr, Dr = red.result.graph, red.boundary
    entry = {"host": name, "n": G.n, "boundary": len(D), "labels": config.label, "checked": 0, "vacuous": 0}
    for phi0 in boundary_colorings(G, D):
        pushed = red.push(phi0)
        if any(phi0[u] != phi0[v] for u, v in _merged_pairs(red, D)) or not validate(Gr, pushed).ok:
            # the pushed boundary colouring is not an (I,F)-colouring of the reduced boundary
            entry["vacuous"] += 1
            continue
        for sub in all_super_extensions(Gr, Dr, pushed, limit=limit):
            pulled = red.pull(sub)
            report.checked += 1
            entry["checked"] += 1
            try:
                res = lift_coloring(config, G, pulled, D)
            except CaseAnalysisExhausted as exc:
                report.failures.append({"host": name, "phi0": to_string(phi0), "reduced": to_string(sub), "error": str(exc)})
                continue
            for b in res.branches:
                report.branches[b] = report.branches.get(b, 0) + 1
            check = is_super_extension(G, D, phi0, res.colors)
            if not check.ok:
                report.failures.append(
                    {"host": name, "phi0": to_string(phi0), "lifted": to_string(res.colors), "branches": res.branches, "error": check.reason}
                )
    report.hosts.append(entry)


def _merged_pairs(red: Reduction, D) -> list[tuple[int, int]]:
    first: dict[int, int] = {}
    pairs = []
    for v in D:
        j = red.result.index_map[v]
        if j in first:
            pairs.append((first[j], v))
        else:
            first[j] = v
    return pairs


def verify_lemma_reducibility(kind: str, limit: int = 0) -> LemmaReport:
    """Exhaustively check the colouring lift of ``kind`` on a family of small hosts."""
    from .fixtures import verification_hosts

    if kind not in KINDS:
        raise ValueError(f"unknown configuration kind {kind!r}")
    report = LemmaReport(kind)
    for fx in verification_hosts(kind):
        G, D = fx.graph, fx.boundary
        confs = _DETECTORS[kind](G, D)
        if not confs:
            report.failures.append({"host": fx.name, "error": "configuration not found"})
            continue
        verify_lift_on_host(G, D, confs[0], report, limit, fx.name)
    return report
