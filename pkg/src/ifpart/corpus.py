"""Bundled graph corpora: manifests, theorem sweeps and extension cross-checks."""

from __future__ import annotations

import hashlib
import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from importlib import resources
from pathlib import Path
from typing import Iterable, Sequence

from .coloring import is_super_extension, to_string
from .plane_graph import PlaneGraph
from .planar_code import parse_planar_code, serialize_planar_code
from .solver import BUDGET, SOLVED, UNSOLVABLE, SearchConfig, boundary_colorings, is_cycle_boundary, super_extend_search, verify_theorem
from .structures import class_G_membership, is_good_cycle

CORPUS_NAME = "corpus.plc"


class ManifestMismatch(ValueError):
    pass


def bundled_corpus_path() -> Path:
    return Path(str(resources.files("ifpart") / "data" / CORPUS_NAME))


def _records(graphs: Sequence[PlaneGraph]) -> list[bytes]:
    # re-encode one graph at a time; a byte-exact round trip makes these slices of the file
    header = len(serialize_planar_code([]))
    return [serialize_planar_code([g])[header:] for g in graphs]


@dataclass
class GraphEntry:
    index: int
    n: int
    m: int
    in_G: bool
    free_4_6_9: bool
    free_4_6_8: bool
    sha256: str


@dataclass
class CorpusManifest:
    path: str
    count: int
    sha256: str
    graphs: list[GraphEntry] = field(default_factory=list)

    @classmethod
    def build(cls, path: str | Path) -> "CorpusManifest":
        data = Path(path).read_bytes()
        graphs = parse_planar_code(data)
        entries = []
        for i, (g, rec) in enumerate(zip(graphs, _records(graphs))):
            flags = class_G_membership(g).flags()
            entries.append(GraphEntry(i, g.n, g.m, flags["in_G"], flags["free_4_6_9"], flags["free_4_6_8"], hashlib.sha256(rec).hexdigest()))
        return cls(Path(path).name, len(graphs), hashlib.sha256(data).hexdigest(), entries)

    def to_json(self) -> dict:
        return {"path": self.path, "count": self.count, "sha256": self.sha256, "graphs": [asdict(e) for e in self.graphs]}

    @classmethod
    def from_json(cls, obj: dict) -> "CorpusManifest":
        return cls(obj["path"], obj["count"], obj["sha256"], [GraphEntry(**e) for e in obj["graphs"]])

    def save(self, path: str | Path) -> None:
        Path(path).write_text(json.dumps(self.to_json(), indent=1) + "\n")

    @classmethod
    def load(cls, path: str | Path) -> "CorpusManifest":
        return cls.from_json(json.loads(Path(path).read_text()))

    def verify(self, corpus_path: str | Path, recompute_flags: bool = True) -> None:
        """Raise ManifestMismatch unless the file matches the recorded counts, checksums and flags."""
        fresh = CorpusManifest.build(corpus_path)
        if fresh.count != self.count or fresh.sha256 != self.sha256:
            raise ManifestMismatch(f"count/checksum differ: {fresh.count} vs {self.count}")
        for old, new in zip(self.graphs, fresh.graphs):
            if old.sha256 != new.sha256:
                raise ManifestMismatch(f"graph {old.index}: record checksum differs")
            if recompute_flags and (old.in_G, old.free_4_6_9, old.free_4_6_8) != (new.in_G, new.free_4_6_9, new.free_4_6_8):
                raise ManifestMismatch(f"graph {old.index}: class flags differ")


def manifest_path(corpus_path: str | Path) -> Path:
    return Path(corpus_path).with_suffix(".json")


def load_corpus(path: str | Path | None = None) -> list[PlaneGraph]:
    return parse_planar_code(Path(path or bundled_corpus_path()).read_bytes())


# -- theorem sweep ----------------------------------------------------------------


@dataclass
class RunReport:
    results: list[dict] = field(default_factory=list)
    applicable: int = 0
    solved: int = 0
    unsolvable: int = 0
    budget_exceeded: int = 0
    fallbacks: int = 0
    wall_time: float = 0.0

    def add(self, entry: dict) -> None:
        self.results.append(entry)
        if not entry.get("applicable", True):
            return
        self.applicable += 1
        outcome = entry["outcome"]
        if outcome == SOLVED:
            self.solved += 1
        elif outcome == UNSOLVABLE:
            self.unsolvable += 1
        elif outcome == BUDGET:
            self.budget_exceeded += 1
        self.fallbacks += entry.get("fallbacks", 0)

    @property
    def exit_code(self) -> int:
        if self.unsolvable:
            return 2
        if self.budget_exceeded:
            return 3
        return 0

    def summary(self) -> dict:
        return {
            "applicable": self.applicable,
            "solved": self.solved,
            "unsolvable": self.unsolvable,
            "budget_exceeded": self.budget_exceeded,
            "fallbacks": self.fallbacks,
            "wall_time": round(self.wall_time, 3),
        }


def _theorem_job(args) -> dict:
    index, g, cfg = args
    rep = verify_theorem(g, cfg)
    return {"index": index, **rep.to_json()}


def theorem_sweep(
    graphs: Sequence[PlaneGraph],
    config: SearchConfig | None = None,
    workers: int = 1,
    manifest: CorpusManifest | None = None,
) -> RunReport:
    """Run the partition search over ``graphs``, flagging those the theorem covers.

    Applicability is always recomputed from the graph.  A manifest, when
    given, only contributes a consistency check on the recorded flags.
    """
    cfg = config or SearchConfig()
    start = time.perf_counter()
    jobs = [(i, g, cfg) for i, g in enumerate(graphs)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            entries = list(pool.map(_theorem_job, jobs, chunksize=8))
    else:
        entries = [_theorem_job(j) for j in jobs]
    report = RunReport()
    for e in entries:
        if manifest is not None:
            rec = manifest.graphs[e["index"]]
            e["manifest_agrees"] = (rec.in_G, rec.free_4_6_9, rec.free_4_6_8) == (
                e["flags"]["in_G"],
                e["flags"]["free_4_6_9"],
                e["flags"]["free_4_6_8"],
            )
        report.add(e)
    report.wall_time = time.perf_counter() - start
    return report


# -- engine agreement -----------------------------------------------------------------


def good_boundary(g: PlaneGraph, max_len: int = 12) -> tuple[int, ...] | None:
    """The outer cycle when it is a good cycle of length at most ``max_len``."""
    D = is_cycle_boundary(g)
    if D is None or len(D) > max_len or not is_good_cycle(g, D):
        return None
    return D


def extension_instances(g: PlaneGraph, max_len: int = 12) -> list[tuple[PlaneGraph, tuple[int, ...]]]:
    """``g`` re-rooted at each facial cycle that is good, short and leaves vertices inside."""
    out = []
    for fi in range(len(g.faces)):
        if g.face_cycle(fi) is None:
            continue
        h = g.with_outer(fi)
        D = good_boundary(h, max_len)
        if D is not None and len(D) < h.n and h.is_connected():
            out.append((h, D))
    return out


def agreement_sweep(graphs: Iterable[PlaneGraph], per_graph: int = 3, seed: int = 0, config: SearchConfig | None = None) -> RunReport:
    """Compare the guided engine with the exact search on random boundary colourings."""
    from .reducer import guided_extend, instance_ok

    rng = random.Random(seed)
    report = RunReport()
    start = time.perf_counter()
    instances = [(i, g, D) for i, g0 in enumerate(graphs) for g, D in extension_instances(g0)]
    for index, g, D in instances:
        hypotheses = instance_ok(g, D)[0]
        choices = boundary_colorings(g, D)
        for phi0 in rng.sample(choices, min(per_graph, len(choices))):
            oracle = super_extend_search(g, D, phi0, config)
            guided = guided_extend(g, D, phi0, config)
            verified = guided.solved and is_super_extension(g, D, phi0, guided.coloring).ok
            report.add(
                {
                    "index": index,
                    "outer": list(D),
                    "boundary": to_string([phi0[v] for v in D]),
                    "outcome": guided.outcome,
                    "oracle": oracle.outcome,
                    "agree": guided.solved == oracle.solved,
                    "verified": verified or not guided.solved,
                    "fallbacks": guided.fallbacks,
                    "hypotheses": hypotheses,
                }
            )
    report.wall_time = time.perf_counter() - start
    return report
