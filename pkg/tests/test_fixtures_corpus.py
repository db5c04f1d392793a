import json
import shutil

import pytest

from ifpart.corpus import (
    CorpusManifest,
    ManifestMismatch,
    RunReport,
    agreement_sweep,
    bundled_corpus_path,
    extension_instances,
    load_corpus,
    manifest_path,
    theorem_sweep,
)
from ifpart.fixtures import UnknownFixture, build_fixture, extension_fixtures, fixture_names
from ifpart.planar_code import parse_planar_code, serialize_planar_code
from ifpart.plane_graph import check_cycle
from ifpart.structures import is_special_9cycle


@pytest.mark.parametrize("name", fixture_names())
def test_fixture_builds(name):
    fx = build_fixture(name)
    g = fx.graph
    assert g.n - g.m + len(g.faces) == 1 + len(g.components())
    check_cycle(g, fx.boundary)
    [again] = parse_planar_code(serialize_planar_code([g]))
    assert again.rotations == g.rotations


def test_required_fixture_names():
    names = set(fixture_names())
    for need in ("chord-38", "claw-555", "biclaw-3757", "triclaw-3777", "good-path", "face-5", "face-7", "three-seven", "seven-seven", "m-nine", "nested-10-9-3"):
        assert need in names


def test_unknown_fixture():
    with pytest.raises(UnknownFixture):
        build_fixture("no-such-figure")


def test_claw_555_special():
    fx = build_fixture("claw-555")
    assert is_special_9cycle(fx.graph, fx.boundary)[0]


def test_extension_fixtures_shape():
    fxs = extension_fixtures()
    assert len(fxs) >= 20
    for fx in fxs:
        assert fx.graph.n - len(fx.boundary) <= 6


def test_manifest_matches_bundled_corpus():
    path = bundled_corpus_path()
    m = CorpusManifest.load(manifest_path(path))
    assert m.count == len(load_corpus()) == 500
    assert m.to_json() == CorpusManifest.build(path).to_json()


def test_manifest_detects_tampering(tmp_path):
    src = bundled_corpus_path()
    dst = tmp_path / "c.plc"
    shutil.copy(src, dst)
    m = CorpusManifest.load(manifest_path(src))
    data = bytearray(dst.read_bytes())
    # swap the first graph's first two neighbour entries (still parses)
    i = len(b">>planar_code<<") + 1
    data[i], data[i + 1] = data[i + 1], data[i]
    dst.write_bytes(bytes(data))
    with pytest.raises(ManifestMismatch):
        m.verify(dst)


def test_manifest_detects_wrong_flags(tmp_path):
    path = bundled_corpus_path()
    obj = CorpusManifest.load(manifest_path(path)).to_json()
    obj["graphs"][0]["in_G"] = not obj["graphs"][0]["in_G"]
    (tmp_path / "m.json").write_text(json.dumps(obj))
    with pytest.raises(ManifestMismatch):
        CorpusManifest.load(tmp_path / "m.json").verify(path)


def test_theorem_sweep_idempotent_and_parallel():
    graphs = load_corpus()[:60]
    a = theorem_sweep(graphs)
    b = theorem_sweep(graphs)
    c = theorem_sweep(graphs, workers=2)
    assert a.results == b.results == c.results
    s = a.summary()
    assert s["solved"] + s["unsolvable"] + s["budget_exceeded"] == s["applicable"]
    assert a.exit_code == 0


def test_run_report_exit_codes():
    r = RunReport()
    r.add({"applicable": True, "outcome": "budget_exceeded"})
    assert r.exit_code == 3
    r.add({"applicable": True, "outcome": "unsolvable"})
    assert r.exit_code == 2
    r.add({"applicable": False, "outcome": "unsolvable"})
    assert r.applicable == 2


def test_extension_instances_are_rooted_at_good_cycles():
    for g in load_corpus()[:40]:
        for h, D in extension_instances(g):
            assert tuple(h.outer_walk) == D and len(D) <= 12 and h.n > len(D)


def test_agreement_on_a_slice():
    rep = agreement_sweep(load_corpus()[:25], per_graph=2, seed=1)
    assert rep.applicable > 0
    assert all(e["agree"] and e["verified"] for e in rep.results)
