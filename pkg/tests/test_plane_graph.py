import pytest

from ifpart.plane_graph import (
    AddEdge,
    DeleteVertices,
    Disconnected,
    EulerViolation,
    GraphError,
    IdentifyVertices,
    LoopOrMultiEdge,
    PlaneGraph,
    WouldCreateLoop,
    apply_surgery,
    articulation_points,
    blocks,
    build,
    cycle_sides,
    from_coordinates,
    has_cycle_of_length,
    simple_cycles,
    to_dot,
    trace_faces,
)

from conftest import cycle_with


def test_k3_faces(k3):
    assert (k3.n, k3.m) == (3, 3)
    assert sorted(len(f) for f in k3.faces) == [3, 3]


def test_c9_faces(c9):
    assert [len(f) for f in c9.faces] == [9, 9]


def test_c9_claw_faces(c9_claw):
    lengths = sorted(len(f) for f in c9_claw.faces)
    assert lengths == [5, 5, 5, 9]
    assert len(c9_claw.faces[c9_claw.outer]) == 9


def test_euler_holds_on_random_graphs():
    from ifpart.corpus import load_corpus

    for g in load_corpus()[:100]:
        comps = len(g.components())
        assert g.n - g.m + len(g.faces) == 1 + comps


def test_asymmetric_rotation_rejected():
    with pytest.raises(GraphError):
        build(3, [[1, 2], [2], [0, 1]])


def test_multi_edge_rejected():
    with pytest.raises(LoopOrMultiEdge):
        build(2, [[1, 1], [0, 0]])


def test_crossing_drawing_rejected():
    pts = [(0, 0), (2, 0), (2, 2), (0, 2)]
    with pytest.raises(EulerViolation):
        from_coordinates(pts, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3)])


def test_require_connected():
    with pytest.raises(Disconnected):
        PlaneGraph([[1], [0], [3], [2]], require_connected=True)


def test_outer_face_selection(c9_claw):
    g = c9_claw.with_outer((0, 1))
    assert len(g.faces[g.outer]) == 5
    assert g.faces == c9_claw.faces


def test_trace_faces_darts_used_once(c9_claw):
    faces = trace_faces(c9_claw.rotations)
    darts = [(f[i], f[(i + 1) % len(f)]) for f in faces for i in range(len(f))]
    assert len(darts) == len(set(darts)) == 2 * c9_claw.m


def test_cycle_sides_plain(c9):
    sides = cycle_sides(c9, tuple(range(9)))
    assert not sides.inside.vertices and not sides.outside.vertices
    assert len(sides.inside.faces) == 1 and len(sides.outside.faces) == 1


def test_cycle_sides_claw(c9_claw):
    sides = cycle_sides(c9_claw, tuple(range(9)))
    assert set(sides.inside.vertices) == {9}
    assert sorted(len(c9_claw.faces[f]) for f in sides.inside.faces) == [5, 5, 5]
    cell = (0, 1, 2, 3, 9)
    inner = cycle_sides(c9_claw, cell)
    assert not inner.inside.vertices and len(inner.inside.faces) == 1


def test_simple_cycles_c9_claw(c9_claw):
    lengths = sorted(len(c) for c in simple_cycles(c9_claw, 12))
    # three 5-cells, three 8-cycles (two cells), the 9-cycle
    assert lengths == [5, 5, 5, 8, 8, 8, 9]
    assert has_cycle_of_length(c9_claw, 8) and not has_cycle_of_length(c9_claw, 6)


def test_articulation_points_and_blocks():
    # two triangles sharing vertex 2
    g = from_coordinates([(0, 0), (1, 1), (2, 0), (3, 1), (4, 0)], [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)])
    assert articulation_points(g) == [2]
    assert sorted(sorted(b) for b in blocks(g)) == [[0, 1, 2], [2, 3, 4]]


def test_delete_claw_vertex(c9_claw):
    res = apply_surgery(c9_claw, DeleteVertices(frozenset({9})))
    assert (res.graph.n, res.graph.m) == (9, 9)
    assert [len(f) for f in res.graph.faces] == [9, 9]
    assert res.index_map[9] is None


def test_identify_good_path_fixture():
    from ifpart.fixtures import build_fixture
    from ifpart.reducer import detect_configurations, surgery_for

    fx = build_fixture("good-path")
    conf = detect_configurations(fx.graph, fx.boundary, ["good-path"])[0]
    spec = surgery_for(conf)
    assert isinstance(spec, IdentifyVertices)
    res = apply_surgery(fx.graph, spec)
    assert res.graph.n == fx.graph.n - 5
    assert res.graph.n - res.graph.m + len(res.graph.faces) == 2


def test_identify_edges_m_nine_fixture():
    from ifpart.fixtures import build_fixture
    from ifpart.reducer import detect_configurations, surgery_for

    fx = build_fixture("m-nine")
    conf = detect_configurations(fx.graph, fx.boundary, ["m-nine"])[0]
    spec = surgery_for(conf)
    res = apply_surgery(fx.graph, spec)
    assert res.graph.n == fx.graph.n - len(spec.deleted) - 2
    assert res.index_map[conf["z"]] == res.index_map[conf["v8"]]


def test_identify_adjacent_refused(c9):
    with pytest.raises(WouldCreateLoop):
        apply_surgery(c9, IdentifyVertices(frozenset(), 0, 1))


def test_add_edge_splits_face(c9):
    res = apply_surgery(c9, AddEdge(frozenset(), 0, 4))
    assert sorted(len(f) for f in res.graph.faces) == [5, 6, 9]


def test_pull_back_and_push(c9_claw):
    res = apply_surgery(c9_claw, DeleteVertices(frozenset({9})))
    colors = [1 + (i % 2) for i in range(9)]
    back = res.pull_back(colors)
    assert back[:9] == colors and back[9] == 0
    assert res.push(back) == colors


def test_dot_export(c9_claw):
    text = to_dot(c9_claw)
    assert text.startswith("graph G {") and text.count("--") == c9_claw.m


def test_chord_drawing_is_plane():
    g = cycle_with(7, chords=[(0, 2)])
    assert sorted(len(f) for f in g.faces) == [3, 6, 7]
