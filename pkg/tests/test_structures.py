import random

import pytest

from ifpart.fixtures import build_fixture
from ifpart.plane_graph import cycle_graph, from_coordinates
from ifpart.structures import (
    WrongLength,
    class_G_membership,
    classify_cycle,
    find_structures,
    in_class,
    is_ext_triangular,
    is_good_cycle,
    is_special_9cycle,
    is_triangular,
    outer_chords,
    splitting_paths,
    triangles,
)

from conftest import cycle_with, polygon
from structgen import OFFSET, random_instance

C9 = tuple(range(9))


def test_chord_38():
    g = cycle_with(9, chords=[(0, 2)])
    [s] = find_structures(g, C9)
    assert s.kind == "chord" and s.signature() == (3, 8)


def test_claw_555(c9_claw):
    [s] = find_structures(c9_claw, C9)
    assert s.kind == "claw" and s.lengths == (5, 5, 5) and s.interior == (9,)


def test_triclaw_3777_fixture():
    fx = build_fixture("triclaw-3777")
    [s] = find_structures(fx.graph, fx.boundary)
    assert s.kind == "triclaw" and s.signature() == (3, 7, 7, 7)


@pytest.mark.parametrize(
    "name,kind,cells",
    [
        ("chord-38", "chord", (3, 8)),
        ("chord-47", "chord", (4, 7)),
        ("claw-555", "claw", (5, 5, 5)),
        ("claw-377", "claw", (3, 7, 7)),
        ("claw-557", "claw", (5, 5, 7)),
        ("claw-558", "claw", (5, 5, 8)),
        ("biclaw-3757", "biclaw", (3, 5, 7, 7)),
        ("biclaw-5557", "biclaw", (5, 5, 5, 7)),
        ("triclaw-3777", "triclaw", (3, 7, 7, 7)),
    ],
)
def test_structure_fixtures(name, kind, cells):
    fx = build_fixture(name)
    found = find_structures(fx.graph, fx.boundary)
    assert [(s.kind, s.signature()) for s in found] == [(kind, cells)]
    assert sum(cells) == len(fx.boundary) + OFFSET[kind]


def test_biclaw_cell_order_follows_cycle():
    fx = build_fixture("biclaw-3757")
    [s] = find_structures(fx.graph, fx.boundary)
    assert s.lengths == (3, 7, 5, 7)


def test_random_cell_sums():
    rng = random.Random(7)
    for _ in range(300):
        G, C, kind, anchors, cells = random_instance(rng)
        [s] = find_structures(G, C, [kind])
        assert sorted(s.lengths) == cells
        assert sum(s.lengths) == len(C) + OFFSET[kind]
        assert set(s.anchors) == set(anchors)


def test_chord_only_cycle_is_good():
    assert classify_cycle(cycle_with(9, chords=[(0, 2)]), C9).verdict == "good"


def test_claw_377_is_bad():
    fx = build_fixture("claw-377")
    cls = classify_cycle(fx.graph, fx.boundary)
    assert cls.verdict == "bad" and cls.witnesses[0].signature() == (3, 7, 7)


def test_long_cycle_not_applicable():
    g = cycle_graph(13)
    assert classify_cycle(g, range(13)).verdict == "not_applicable"
    assert not is_good_cycle(g, range(13))


def test_special_9cycles(c9_claw):
    assert is_special_9cycle(cycle_with(9, chords=[(0, 2)]), C9)[0]
    assert not is_special_9cycle(cycle_with(9, chords=[(0, 3)]), C9)[0]
    ok, wit = is_special_9cycle(c9_claw, C9)
    assert ok and wit.kind == "claw"
    with pytest.raises(WrongLength):
        is_special_9cycle(cycle_graph(8), range(8))


def test_chord_47_flags_a_4_cycle():
    rep = class_G_membership(cycle_with(9, chords=[(0, 3)]))
    assert rep.cycles4 and not rep.special9 and not rep.in_class


def test_membership_examples(k3):
    assert in_class(k3)
    assert not in_class(cycle_with(9, chords=[(0, 2)]))
    flags = class_G_membership(cycle_graph(5)).flags()
    assert flags == {"in_G": True, "free_4_6_9": True, "free_4_6_8": True}
    assert not class_G_membership(cycle_graph(4)).in_class


def test_c9_claw_never_in_class(c9_claw):
    # the (5,5,5)-claw makes the 9-cycle special
    rep = class_G_membership(c9_claw)
    assert rep.special9 and not rep.in_class


def test_disconnected_not_in_class():
    from ifpart.plane_graph import PlaneGraph

    g = PlaneGraph([[1, 2], [2, 0], [0, 1], [4, 5], [5, 3], [3, 4]])
    assert not class_G_membership(g).in_class


def _seven_with_triangle(inside: bool):
    pts = polygon(7)
    apex = (0.5 * (pts[0][0] + pts[1][0]), 0.5 * (pts[0][1] + pts[1][1]))
    scale = 0.6 if inside else 1.4
    pts.append((apex[0] * scale, apex[1] * scale))
    edges = [(i, (i + 1) % 7) for i in range(7)] + [(0, 7), (1, 7)]
    # pin the outer face: with the triangle inside, the 8-face would be longest
    return from_coordinates(pts, edges, outer=(2, 1))


def test_triangular_predicates(c9_claw):
    cell = (0, 1, 2, 3, 9)
    assert not is_triangular(c9_claw, cell)
    assert not is_ext_triangular(c9_claw, cell)
    out = _seven_with_triangle(inside=False)
    assert is_ext_triangular(out, tuple(range(7)))
    ins = _seven_with_triangle(inside=True)
    assert is_triangular(ins, tuple(range(7)))
    assert not is_ext_triangular(ins, tuple(range(7)))


def test_triangles_listed(k3, c9_claw):
    assert len(triangles(k3)) == 1
    assert triangles(c9_claw) == []


def test_splitting_paths_claw(c9_claw):
    paths = splitting_paths(c9_claw, C9, max_len=2)
    assert len(paths) == 3
    for p in paths:
        assert len(p.path) == 3 and p.path[1] == 9
        assert sorted(p.cycle_lengths) == [5, 8]
        assert sum(p.cycle_lengths) == 9 + 2 * 2


def test_outer_chords():
    # chord drawn outside the 7-cycle bounded by the inner faces
    fx = build_fixture("chord-38")
    assert outer_chords(fx.graph, fx.boundary) == []
