import random

import pytest

from ifpart.coloring import F, I, U, from_string, is_super_extension, validate
from ifpart.fixtures import build_fixture, verification_hosts
from ifpart.plane_graph import IdentifyVertices, apply_surgery, cycle_graph, cycles_at, from_coordinates
from ifpart.reducer import (
    KINDS,
    HypothesisViolated,
    NotATriangle,
    check_surgery_legality,
    detect_configurations,
    find_outermost_short_cycle,
    guided_extend,
    instance_ok,
    lift_coloring,
    reduce_configuration,
    surgery_for,
    verify_lemma_reducibility,
)
from ifpart.solver import UNSOLVABLE, all_super_extensions, super_extend_search
from ifpart.structures import in_class

from conftest import cycle_with, polygon

NAMED = {
    "good-path": "good-path",
    "face-5": "k-face",
    "face-7": "k-face",
    "three-seven": "three-seven",
    "seven-seven": "seven-seven",
    "m-nine": "m-nine",
}


def random_boundary(G, D, rng):
    sub, new = G.induced(D)
    while True:
        cols = [rng.choice((I, F)) for _ in D]
        sc = [U] * sub.n
        for v, c in zip(D, cols):
            sc[new[v]] = c
        if validate(sub, sc).ok:
            full = [U] * G.n
            for v, c in zip(D, cols):
                full[v] = c
            return full


# -- detection ------------------------------------------------------------------


@pytest.mark.parametrize("name,kind", sorted(NAMED.items()))
def test_named_fixture_detected_once(name, kind):
    fx = build_fixture(name)
    found = detect_configurations(fx.graph, fx.boundary, [kind])
    assert len(found) == 1
    assert in_class(fx.graph)


def test_good_path_labels():
    fx = build_fixture("good-path")
    [conf] = detect_configurations(fx.graph, fx.boundary, ["good-path"])
    for key in ("x", "v1", "v2", "v3", "v4", "t12", "t3", "t4"):
        assert conf[key] == fx.labels[key], key


def test_face_5_is_all_internal_cubic():
    fx = build_fixture("face-5")
    [conf] = detect_configurations(fx.graph, fx.boundary, ["k-face"])
    vs = [conf[f"v{i}"] for i in range(1, 6)]
    assert conf["k"] == 5
    assert all(fx.graph.degree(v) == 3 and v not in fx.boundary for v in vs)
    assert fx.graph.find_face(vs) is not None


def test_plain_cycle_has_nothing():
    assert detect_configurations(cycle_graph(9), tuple(range(9))) == []


def test_low_degree_detection(c9_claw):
    g = cycle_with(9, claws=[(0, 4)])
    [conf] = detect_configurations(g, tuple(range(9)), ["low-degree"])
    assert conf["v"] == 9
    assert detect_configurations(c9_claw, tuple(range(9)), ["low-degree"]) == []


def _check_invariants(G, D, conf):
    dset = set(D)
    assert not set(conf.removed) & dset
    if conf.kind == "low-degree":
        assert G.degree(conf["v"]) <= 2
    elif conf.kind in ("good-path", "k-face"):
        n = 4 if conf.kind == "good-path" else conf["k"]
        vs = [conf[f"v{i}"] for i in range(1, n + 1)]
        assert all(G.degree(v) == 3 for v in vs)
        assert all(G.has_edge(a, b) for a, b in zip(vs, vs[1:]))
    elif conf.kind == "cut-vertex":
        assert conf["v"] not in conf.removed


@pytest.mark.parametrize("kind", KINDS)
def test_detected_configurations_meet_definitions(kind):
    for fx in verification_hosts(kind):
        confs = detect_configurations(fx.graph, fx.boundary, [kind])
        assert confs, fx.name
        for conf in confs:
            _check_invariants(fx.graph, fx.boundary, conf)


# -- surgery legality ------------------------------------------------------------


def _path_across(k=14, inner=6):
    """A k-cycle with an interior path of ``inner`` vertices joining 0 to k/2.

    The last vertex is a pendant on the path, there to be deleted.
    """
    pts = polygon(k)
    top, bottom = pts[0], pts[k // 2]
    for i in range(1, inner + 1):
        t = i / (inner + 1)
        pts.append((top[0] + t * (bottom[0] - top[0]) + 0.3 * (-1) ** i, top[1] + t * (bottom[1] - top[1])))
    path = [0] + list(range(k, k + inner)) + [k // 2]
    pendant = len(pts)
    pts.append((pts[path[3]][0] + 1.0, pts[path[3]][1]))
    edges = [(i, (i + 1) % k) for i in range(k)] + list(zip(path, path[1:])) + [(path[3], pendant)]
    return from_coordinates(pts, edges, outer=(1, 0)), tuple(range(k)), path, pendant


def test_good_path_surgery_is_legal():
    fx = build_fixture("good-path")
    [conf] = detect_configurations(fx.graph, fx.boundary, ["good-path"])
    leg = check_surgery_legality(fx.graph, fx.boundary, surgery_for(conf))
    assert leg.legal and leg.cond_a and leg.cond_b


def test_identifying_boundary_vertices_fails_a():
    G, D, _, pendant = _path_across()
    leg = check_surgery_legality(G, D, IdentifyVertices(frozenset({pendant}), 2, 5))
    assert not leg.cond_a and not leg.legal


def test_short_created_cycle_fails_b():
    G, D, path, pendant = _path_across()
    # path[1] and path[6] are five steps apart along the interior path
    leg = check_surgery_legality(G, D, IdentifyVertices(frozenset({pendant}), path[1], path[6]))
    assert leg.cond_a and not leg.cond_b
    assert any(len(w["cycle"]) == 5 for w in leg.witnesses)


def test_legal_surgery_creates_no_short_cycles():
    # ground truth: scan every cycle through the merged vertex
    fx = build_fixture("good-path")
    [conf] = detect_configurations(fx.graph, fx.boundary, ["good-path"])
    res = apply_surgery(fx.graph, surgery_for(conf))
    assert list(cycles_at(res.graph, res.merged[0], 6)) == []


# -- lifts and reductions -----------------------------------------------------------


def test_reduction_push_pull_round_trip():
    fx = build_fixture("three-seven")
    [conf] = detect_configurations(fx.graph, fx.boundary, ["three-seven"])
    red = reduce_configuration(fx.graph, fx.boundary, conf)
    assert red.result.graph.n == fx.graph.n - len(conf.removed)
    phi = [I if i % 3 == 0 else F for i in range(fx.graph.n)]
    back = red.pull(red.push(phi))
    assert all(back[v] == phi[v] for v in range(fx.graph.n) if v not in conf.removed)


def test_lift_good_path_case_alpha_I():
    host = verification_hosts("good-path")[0]
    G, D = host.graph, host.boundary
    conf = detect_configurations(G, D, ["good-path"])[0]
    red = reduce_configuration(G, D, conf)
    seen = set()
    rng = random.Random(3)
    for _ in range(40):
        phi0 = random_boundary(red.result.graph, red.boundary, rng)
        for sub in all_super_extensions(red.result.graph, red.boundary, phi0, limit=20):
            pulled = red.pull(sub)
            out = lift_coloring(conf, G, pulled, D, lambda H, Dh, ph: super_extend_search(H, Dh, ph).coloring)
            assert is_super_extension(G, D, pulled, out.colors).ok
            if out.branches[0] == "i":
                # alpha = I: v1 is F and v2 differs from t12
                assert out.colors[conf["v1"]] == F
                assert out.colors[conf["v2"]] != out.colors[conf["t12"]]
            seen.update(out.branches)
    assert "i" in seen


@pytest.mark.parametrize("kind", ["low-degree", "good-path", "k-face"])
def test_lemma_report_shape(kind):
    rep = verify_lemma_reducibility(kind)
    body = rep.to_json()
    assert rep.ok and body["cases_enumerated"] > 0 and not body["failures"]
    assert not body["missing_branches"]


def test_m_nine_contradiction_branch_unreachable():
    rep = verify_lemma_reducibility("m-nine")
    assert rep.ok and rep.to_json()["unreachable_branches"] == {"S2-contradiction": 0}


# -- guided extension -----------------------------------------------------------------


def test_c9_claw_is_outside_the_hypotheses(c9_claw):
    D = tuple(range(9))
    ok, why = instance_ok(c9_claw, D)
    assert not ok and "class" in why
    phi0 = from_string("IFFFFFIFFU")
    cert = guided_extend(c9_claw, D, phi0)
    assert cert.trail[0]["case"] == "hypothesis-violated"
    assert cert.outcome == super_extend_search(c9_claw, D, phi0).outcome
    with pytest.raises(HypothesisViolated):
        guided_extend(c9_claw, D, phi0, strict=True)


def test_c9_claw_instance_without_extension(c9_claw):
    # u sees an I anchor, so it is F, joining the two F anchors through the interior
    phi0 = from_string("IFFFIFFIFU")
    assert super_extend_search(c9_claw, range(9), phi0).outcome == UNSOLVABLE
    assert guided_extend(c9_claw, range(9), phi0).outcome == UNSOLVABLE


def test_nested_instance_needs_no_fallback():
    fx = build_fixture("nested-10-9-3")
    assert instance_ok(fx.graph, fx.boundary)[0]
    rng = random.Random(0)
    for _ in range(20):
        phi0 = random_boundary(fx.graph, fx.boundary, rng)
        cert = guided_extend(fx.graph, fx.boundary, phi0)
        assert cert.fallbacks == 0
        assert cert.solved == super_extend_search(fx.graph, fx.boundary, phi0).solved
        if cert.solved:
            assert is_super_extension(fx.graph, fx.boundary, phi0, cert.coloring).ok


@pytest.mark.parametrize("name,kind", sorted(NAMED.items()))
def test_guided_lifts_each_configuration(name, kind):
    fx = build_fixture(name)
    G, D = fx.graph, fx.boundary
    order = (kind,) + tuple(k for k in KINDS if k != kind)
    rng = random.Random(11)
    lifted = 0
    # outside the hypotheses a reduced instance may fail to extend; sample until lifts show up
    for _ in range(100):
        if lifted >= 3:
            break
        phi0 = random_boundary(G, D, rng)
        cert = guided_extend(G, D, phi0, relaxed=True, kinds=order)
        oracle = super_extend_search(G, D, phi0)
        assert cert.solved == oracle.solved
        if cert.solved:
            assert is_super_extension(G, D, phi0, cert.coloring).ok
        lifted += sum(1 for s in cert.trail if s["case"] == kind and s.get("verified"))
    assert lifted > 0


def test_separating_cycle_split_in_audit():
    host = verification_hosts("separating-good-cycle")[0]
    G, D = host.graph, host.boundary
    order = ("separating-good-cycle",) + tuple(k for k in KINDS if k != "separating-good-cycle")
    phi0 = random_boundary(G, D, random.Random(5))
    cert = guided_extend(G, D, phi0, relaxed=True, kinds=order)
    steps = [s for s in cert.trail if s["case"] == "separating-good-cycle" and s.get("verified")]
    assert cert.solved and steps
    assert steps[0]["branches"] == ["inside-extended"]


def test_unknown_kind_rejected(c9):
    with pytest.raises(ValueError):
        guided_extend(c9, range(9), from_string("IFFIFFIFF"), kinds=["no-such-kind"])


# -- outermost short cycle ---------------------------------------------------------------


def test_outermost_k3(k3):
    assert set(find_outermost_short_cycle(k3, (0, 1, 2))) == {0, 1, 2}


def test_outermost_nested():
    fx = build_fixture("nested-10-9-3")
    T = tuple(fx.labels[t] for t in ("t0", "t1", "t2"))
    assert len(find_outermost_short_cycle(fx.graph, T)) == 10


def test_outermost_ignores_long_cycles():
    # a triangle hanging inside an 11-cycle
    pts = polygon(11) + [(0.0, 1.0)]
    g = from_coordinates(pts, [(i, (i + 1) % 11) for i in range(11)] + [(0, 11), (1, 11)], outer=(1, 0))
    assert set(find_outermost_short_cycle(g, (0, 1, 11))) == {0, 1, 11}


def test_not_a_triangle(c9):
    with pytest.raises(NotATriangle):
        find_outermost_short_cycle(c9, (0, 1, 2))
