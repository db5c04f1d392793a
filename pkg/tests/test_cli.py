import json
import subprocess
import sys

import pytest

from ifpart.cli import main
from ifpart.corpus import bundled_corpus_path
from ifpart.fixtures import build_fixture, fixture_names
from ifpart.planar_code import parse_planar_code, serialize_planar_code

K3 = b">>planar_code<<" + bytes([3, 2, 3, 0, 3, 1, 0, 1, 2, 0])


@pytest.fixture
def k3_file(tmp_path):
    p = tmp_path / "k3.plc"
    p.write_bytes(K3)
    return str(p)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_solve_k3_json(capsys, k3_file):
    code, out, _ = run(capsys, "solve", k3_file, "--format", "json")
    lines = out.strip().splitlines()
    assert code == 0 and len(lines) == 1
    body = json.loads(lines[0])
    assert body["outcome"] == "solved" and body["applicable"]


def test_solve_is_deterministic(capsys, k3_file):
    first = run(capsys, "solve", k3_file, "--format", "json", "--trail")[1]
    assert first == run(capsys, "solve", k3_file, "--format", "json", "--trail")[1]


def test_check_text(capsys, k3_file):
    code, out, _ = run(capsys, "check", k3_file)
    assert code == 0 and "in_G=yes" in out


def test_out_flag(capsys, k3_file, tmp_path):
    target = tmp_path / "out.ndjson"
    assert main(["solve", k3_file, "--format", "json", "--out", str(target)]) == 0
    assert json.loads(target.read_text())["outcome"] == "solved"


def test_budget_exit_code(capsys, tmp_path):
    g = max(parse_planar_code(bundled_corpus_path().read_bytes()), key=lambda h: h.n)
    p = tmp_path / "big.plc"
    p.write_bytes(serialize_planar_code([g]))
    code, out, _ = run(capsys, "solve", str(p), "--budget", "1")
    assert code == 3 and "budget_exceeded" in out


def test_unsolvable_covered_graph_exits_2(capsys, tmp_path, monkeypatch):
    # no covered graph is unsolvable, so fake the search result
    import ifpart.solver as solver

    real = solver.find_partition
    monkeypatch.setattr(solver, "find_partition", lambda g, cfg=None: solver.Certificate("unsolvable"))
    p = tmp_path / "k3.plc"
    p.write_bytes(K3)
    code, _, _ = run(capsys, "solve", str(p))
    monkeypatch.setattr(solver, "find_partition", real)
    assert code == 2


def test_usage_errors(capsys, k3_file):
    assert run(capsys, "solve", "/nonexistent.plc")[0] == 64
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 64
    with pytest.raises(SystemExit) as exc:
        main(["solve", k3_file, "--format", "xml"])
    assert exc.value.code == 64


def test_parse_error(capsys, tmp_path):
    p = tmp_path / "bad.plc"
    p.write_bytes(b">>planar_code<<" + bytes([3, 2, 9, 0]))
    code, _, err = run(capsys, "solve", str(p))
    assert code == 65 and "bad.plc" in err


def test_extend_both_engines(capsys, tmp_path):
    fx = build_fixture(next(n for n in fixture_names() if n.startswith("ext-9-")))
    p = tmp_path / "ext.plc"
    p.write_bytes(serialize_planar_code([fx.graph]))
    D = list(fx.graph.outer_walk)
    boundary = "".join("I" if i % 3 == 0 else "F" for i in range(len(D)))
    for engine in ("guided", "oracle"):
        code, out, _ = run(capsys, "extend", str(p), "--boundary", boundary, "--engine", engine, "--format", "json")
        body = json.loads(out)
        assert code == 0 and body["outcome"] == "solved" and body["engine"] == engine
        assert "".join(body["coloring"][v] for v in D) == boundary
    code, out, _ = run(capsys, "extend", "three-seven", "--boundary", "IF" * 12, "--relaxed", "--format", "json", "--trail")
    assert json.loads(out)["trail"][0]["case"] == "hypothesis-violated"
    code, _, err = run(capsys, "extend", str(p), "--boundary", "II" + "F" * (len(D) - 2))
    assert code == 64 and "boundary" in err


def test_detect_fixture_name(capsys):
    code, out, _ = run(capsys, "detect", "seven-seven", "--kind", "seven-seven", "--format", "json")
    body = json.loads(out)
    assert code == 0 and [c["kind"] for c in body["configurations"]] == ["seven-seven"]


def test_verify_lemma_good_path(capsys):
    code, out, _ = run(capsys, "verify-lemma", "good-path")
    assert code == 0 and out.startswith("good-path: pass")


def test_corpus_theorem_strict(capsys):
    code, out, _ = run(capsys, "corpus", str(bundled_corpus_path()), "--theorem", "--strict", "--format", "json")
    lines = [json.loads(x) for x in out.splitlines()]
    summary = lines[-1]["summary"]
    assert code == 0 and summary["unsolvable"] == 0 and summary["applicable"] == summary["solved"]
    assert all(e["manifest_agrees"] for e in lines[:-1])
    # wall time appears only in the footer
    assert all("wall_time" not in e for e in lines[:-1])


def test_corpus_summary(capsys):
    code, out, _ = run(capsys, "corpus", str(bundled_corpus_path()))
    assert code == 0 and out.startswith("500 graphs")


def test_structures_command(capsys, tmp_path):
    fx = build_fixture("claw-555")
    p = tmp_path / "claw.plc"
    p.write_bytes(serialize_planar_code([fx.graph]))
    cyc = ",".join(str(v) for v in fx.boundary)
    code, out, _ = run(capsys, "structures", str(p), "--cycle", cyc, "--format", "json")
    body = json.loads(out)
    assert code == 0 and body["verdict"] == "bad" and body["structures"][0]["cells"] == [5, 5, 5]
    assert run(capsys, "structures", str(p), "--cycle", "0,1,5")[0] == 64


def test_fixture_export(capsys, tmp_path):
    plc, dot = tmp_path / "f.plc", tmp_path / "f.dot"
    code, _, _ = run(capsys, "fixture", "m-nine", "--export", str(plc), "--dot", str(dot))
    assert code == 0
    [g] = parse_planar_code(plc.read_bytes())
    assert g.rotations == build_fixture("m-nine").graph.rotations
    assert dot.read_text().startswith("graph m_nine {")
    assert run(capsys, "fixture", "nope")[0] == 64


def test_console_script_module():
    proc = subprocess.run([sys.executable, "-m", "ifpart.cli", "fixture"], capture_output=True, text=True)
    assert proc.returncode == 0 and "claw-555" in proc.stdout.split()
