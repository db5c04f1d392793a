"""Command-line interface.

Exit codes: 0 success, 2 a graph covered by the theorem went unsolved (or a
lemma check failed), 3 search budget exceeded, 64 usage error, 65 input
could not be parsed.
"""

from __future__ import annotations

import argparse
import json
import sys
from contextlib import contextmanager
from pathlib import Path
from typing import Iterator, TextIO

from . import __version__
from .coloring import U, from_string, to_string
from .corpus import CorpusManifest, ManifestMismatch, manifest_path, theorem_sweep
from .fixtures import UnknownFixture, build_fixture, fixture_names
from .plane_graph import GraphError, PlaneGraph, to_dot
from .planar_code import PlanarCodeError, read_planar_code, serialize_planar_code
from .reducer import KINDS, detect_configurations, guided_extend, verify_lemma_reducibility
from .solver import BoundaryColoringInvalid, SearchConfig, default_budget, is_cycle_boundary, super_extend_search, verify_theorem
from .structures import class_G_membership, classify_cycle

EX_OK, EX_UNSOLVED, EX_BUDGET, EX_USAGE, EX_DATAERR = 0, 2, 3, 64, 65


class UsageError(Exception):
    pass


class DataError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EX_USAGE, f"{self.prog}: error: {message}\n")


def _load(path: str) -> list[PlaneGraph]:
    if path in fixture_names():
        return [build_fixture(path).graph]
    p = Path(path)
    if not p.exists():
        raise UsageError(f"no such file or fixture: {path}")
    try:
        return read_planar_code(p)
    except (PlanarCodeError, GraphError) as exc:
        raise DataError(f"{path}: {exc}") from None


class Emitter:
    """Writes one JSON object per line, or plain text."""

    def __init__(self, fmt: str, stream: TextIO) -> None:
        self.fmt = fmt
        self.stream = stream

    def emit(self, obj: dict, text: str) -> None:
        if self.fmt == "json":
            self.stream.write(json.dumps(obj, sort_keys=True) + "\n")
        else:
            self.stream.write(text + "\n")


@contextmanager
def _output(path: str | None) -> Iterator[TextIO]:
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w") as fh:
            yield fh


def _config(args) -> SearchConfig:
    return SearchConfig(budget=args.budget if args.budget is not None else default_budget())


def _worst(codes) -> int:
    codes = list(codes)
    if EX_UNSOLVED in codes:
        return EX_UNSOLVED
    if EX_BUDGET in codes:
        return EX_BUDGET
    return EX_OK


# -- commands -----------------------------------------------------------------


def cmd_check(args, out: Emitter) -> int:
    for i, g in enumerate(_load(args.file)):
        rep = class_G_membership(g)
        flags = rep.flags()
        text = f"graph {i}: n={g.n} m={g.m} " + " ".join(f"{k}={'yes' if v else 'no'}" for k, v in flags.items())
        out.emit({"index": i, "n": g.n, "m": g.m, **rep.to_json()}, text)
    return EX_OK


def cmd_solve(args, out: Emitter) -> int:
    codes = []
    for i, g in enumerate(_load(args.file)):
        rep = verify_theorem(g, _config(args))
        cert = rep.certificate
        code = cert.exit_code if rep.applicable or cert.outcome == "budget_exceeded" else EX_OK
        codes.append(code)
        body = {"index": i, "applicable": rep.applicable, "flags": rep.flags, **cert.to_json()}
        if not args.trail:
            body.pop("trail")
        col = to_string(cert.coloring) if cert.coloring else "-"
        out.emit(body, f"graph {i}: {cert.outcome} {col}")
    return _worst(codes)


def _boundary_coloring(g: PlaneGraph, D, text: str) -> list[int]:
    try:
        cols = from_string(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if len(cols) == len(D):
        full = [U] * g.n
        for v, c in zip(D, cols):
            full[v] = c
        return full
    if len(cols) == g.n:
        return cols
    raise UsageError(f"--boundary needs {len(D)} colours (outer cycle order) or {g.n} (one per vertex)")


def cmd_extend(args, out: Emitter) -> int:
    codes = []
    for i, g in enumerate(_load(args.file)):
        if args.outer is not None:
            if not 0 <= args.outer < len(g.faces):
                raise UsageError(f"graph {i} has no face {args.outer}")
            g = g.with_outer(args.outer)
        D = is_cycle_boundary(g)
        if D is None:
            raise DataError(f"graph {i}: the outer face is not bounded by a cycle")
        phi0 = _boundary_coloring(g, D, args.boundary)
        try:
            if args.engine == "guided":
                cert = guided_extend(g, D, phi0, _config(args), relaxed=args.relaxed)
            else:
                cert = super_extend_search(g, D, phi0, _config(args))
        except BoundaryColoringInvalid as exc:
            raise UsageError(str(exc)) from None
        codes.append(cert.exit_code)
        body = {"index": i, "outer": list(D), **cert.to_json()}
        if not args.trail:
            body.pop("trail")
        col = to_string(cert.coloring) if cert.coloring else "-"
        out.emit(body, f"graph {i}: {cert.outcome} {col} (engine {cert.engine}, fallbacks {cert.fallbacks})")
    return _worst(codes)


def cmd_detect(args, out: Emitter) -> int:
    kinds = KINDS if args.kind is None else (args.kind,)
    for i, g in enumerate(_load(args.file)):
        D = tuple(g.outer_walk)
        confs = detect_configurations(g, D, kinds)
        body = {"index": i, "outer": list(D), "configurations": [c.to_json() for c in confs]}
        lines = [f"graph {i}: {len(confs)} configuration(s)"] + [f"  {c.kind} {c.label}" for c in confs]
        out.emit(body, "\n".join(lines))
    return EX_OK


def cmd_verify_lemma(args, out: Emitter) -> int:
    kinds = KINDS if args.kind == "all" else (args.kind,)
    codes = []
    for kind in kinds:
        rep = verify_lemma_reducibility(kind)
        codes.append(EX_OK if rep.ok else EX_UNSOLVED)
        status = "pass" if rep.ok else "FAIL"
        branches = ", ".join(f"{b}:{n}" for b, n in sorted(rep.branches.items()))
        text = f"{kind}: {status} ({rep.checked} lifts; {branches})"
        if rep.missing:
            text += f"; missing {rep.missing}"
        out.emit(rep.to_json(), text)
    return _worst(codes)


def cmd_corpus(args, out: Emitter) -> int:
    graphs = _load(args.file)
    mpath = manifest_path(args.file)
    manifest = CorpusManifest.load(mpath) if mpath.exists() else None
    if args.strict:
        if manifest is None:
            raise DataError(f"--strict needs a manifest at {mpath}")
        try:
            manifest.verify(args.file)
        except ManifestMismatch as exc:
            raise DataError(str(exc)) from None
    if not args.theorem:
        m = manifest or CorpusManifest.build(args.file)
        counts = {k: sum(1 for e in m.graphs if getattr(e, k)) for k in ("in_G", "free_4_6_9", "free_4_6_8")}
        out.emit({"path": m.path, "count": m.count, "sha256": m.sha256, **counts}, f"{m.count} graphs; " + ", ".join(f"{k}={v}" for k, v in counts.items()))
        return EX_OK
    report = theorem_sweep(graphs, _config(args), workers=args.workers, manifest=manifest)
    for e in report.results:
        out.emit(e, f"graph {e['index']}: {'applicable' if e['applicable'] else 'not covered'} {e['outcome']}")
    summary = report.summary()
    out.emit({"summary": summary}, " ".join(f"{k}={v}" for k, v in summary.items()))
    return report.exit_code


def cmd_structures(args, out: Emitter) -> int:
    graphs = _load(args.file)
    if not 0 <= args.index < len(graphs):
        raise UsageError(f"--index {args.index} out of range")
    g = graphs[args.index]
    try:
        cycle = [int(x) for x in args.cycle.replace(",", " ").split()]
    except ValueError:
        raise UsageError("--cycle takes a comma-separated vertex list") from None
    try:
        cls = classify_cycle(g, cycle)
    except GraphError as exc:
        raise UsageError(str(exc)) from None
    lines = [f"cycle of length {len(cycle)}: {cls.verdict}"]
    lines += [f"  {s.kind} at {list(s.anchors)} cells {list(s.lengths)}" for s in cls.witnesses]
    out.emit({"cycle": cycle, **cls.to_json()}, "\n".join(lines))
    return EX_OK


def cmd_fixture(args, out: Emitter) -> int:
    if args.name is None:
        for name in fixture_names():
            out.emit({"name": name}, name)
        return EX_OK
    try:
        fx = build_fixture(args.name)
    except UnknownFixture:
        raise UsageError(f"unknown fixture {args.name!r}") from None
    if args.export:
        Path(args.export).write_bytes(serialize_planar_code([fx.graph]))
    if args.dot:
        Path(args.dot).write_text(to_dot(fx.graph, fx.name.replace("-", "_")))
    body = {"name": fx.name, "n": fx.graph.n, "m": fx.graph.m, "boundary": list(fx.boundary), "labels": dict(fx.labels), "note": fx.note}
    out.emit(body, f"{fx.name}: n={fx.graph.n} m={fx.graph.m} boundary={list(fx.boundary)}")
    return EX_OK


# -- entry point ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="text")
    common.add_argument("--budget", type=int, default=None, help="search node budget (default: $IFPART_BUDGET or unlimited)")
    common.add_argument("--out", default=None, help="write output here instead of stdout")

    p = _Parser(prog="ifpart", description="(I,F)-partitions of plane graphs", parents=[common])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("check", parents=[common], help="class membership of each graph")
    s.add_argument("file")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("solve", parents=[common], help="find an (I,F)-partition of each graph")
    s.add_argument("file")
    s.add_argument("--trail", action="store_true", help="include the search trail")
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("extend", parents=[common], help="super-extend a colouring of the outer cycle")
    s.add_argument("file")
    s.add_argument("--boundary", required=True, help="colours of the outer cycle, e.g. IFFIFFIFF")
    s.add_argument("--engine", choices=("guided", "oracle"), default="guided")
    s.add_argument("--outer", type=int, default=None, help="use this face index as the outer face")
    s.add_argument("--relaxed", action="store_true", help="guided engine: recurse even when the graph or boundary breaks the hypotheses")
    s.add_argument("--trail", action="store_true", help="include the audit trail")
    s.set_defaults(func=cmd_extend)

    s = sub.add_parser("detect", parents=[common], help="list reducible configurations")
    s.add_argument("file")
    s.add_argument("--kind", choices=KINDS, default=None)
    s.set_defaults(func=cmd_detect)

    s = sub.add_parser("verify-lemma", parents=[common], help="exhaustively check a configuration's colouring lift")
    s.add_argument("kind", choices=KINDS + ("all",))
    s.set_defaults(func=cmd_verify_lemma)

    s = sub.add_parser("corpus", parents=[common], help="corpus summary or theorem sweep")
    s.add_argument("file")
    s.add_argument("--theorem", action="store_true", help="run the partition search on every graph")
    s.add_argument("--strict", action="store_true", help="verify the manifest checksums and class flags first")
    s.add_argument("--workers", type=int, default=1)
    s.set_defaults(func=cmd_corpus)

    s = sub.add_parser("structures", parents=[common], help="chords, claws, biclaws and triclaws of a cycle")
    s.add_argument("file")
    s.add_argument("--cycle", required=True, help="comma-separated vertices of the cycle")
    s.add_argument("--index", type=int, default=0, help="graph index within the file")
    s.set_defaults(func=cmd_structures)

    s = sub.add_parser("fixture", parents=[common], help="list or export named fixtures")
    s.add_argument("name", nargs="?")
    s.add_argument("--export", metavar="PATH", help="write the fixture as planar_code")
    s.add_argument("--dot", metavar="PATH", help="write the fixture as DOT")
    s.set_defaults(func=cmd_fixture)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        with _output(args.out) as stream:
            return args.func(args, Emitter(args.format, stream))
    except UsageError as exc:
        print(f"ifpart: {exc}", file=sys.stderr)
        return EX_USAGE
    except DataError as exc:
        print(f"ifpart: {exc}", file=sys.stderr)
        return EX_DATAERR
    except BrokenPipeError:
        # downstream closed early (e.g. piped into head)
        sys.stderr.close()
        return EX_OK


if __name__ == "__main__":
    sys.exit(main())
