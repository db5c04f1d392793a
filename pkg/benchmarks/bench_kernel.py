"""Compare the compiled search kernel with its pure-Python twin.

    python benchmarks/bench_kernel.py [--repeat N]

Both backends must return identical results; timings are best-of-N.
"""

from __future__ import annotations

import argparse
import time

from ifpart import kernel
from ifpart.corpus import load_corpus
from ifpart.fixtures import build_fixture, extension_fixtures
from ifpart.plane_graph import cycle_graph
from ifpart.solver import SearchConfig, all_super_extensions, boundary_colorings, enumerate_colorings, find_partition


def _partition_all(graphs, backend):
    cfg = SearchConfig(backend=backend)
    return [find_partition(g, cfg).coloring for g in graphs]


def _count_cycles(backend):
    return [enumerate_colorings(cycle_graph(k), backend=backend) for k in range(3, 19)]


def _extensions(fixtures, backend):
    total = 0
    for fx in fixtures:
        for phi0 in boundary_colorings(fx.graph, fx.boundary):
            total += len(all_super_extensions(fx.graph, fx.boundary, phi0, backend=backend))
    return total


def _best(fn, repeat):
    best, out = float("inf"), None
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t)
    return best, out


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if kernel.BACKEND != "cython":
        raise SystemExit("compiled kernel not built; run `pip install -e . --no-build-isolation` first")

    corpus = load_corpus()
    ext = extension_fixtures()[:12] + [build_fixture("m-nine")]
    workloads = [
        ("partition search, bundled corpus", lambda b: _partition_all(corpus, b)),
        ("colouring counts, cycles 3..18", _count_cycles),
        ("all super-extensions, 13 fixtures", lambda b: _extensions(ext, b)),
    ]
    print(f"{'workload':36} {'cython':>10} {'python':>10} {'speedup':>8}")
    for name, fn in workloads:
        tc, rc = _best(lambda: fn("cython"), args.repeat)
        tp, rp = _best(lambda: fn("python"), args.repeat)
        if rc != rp:
            raise SystemExit(f"{name}: backends disagree")
        print(f"{name:36} {tc * 1e3:9.1f}ms {tp * 1e3:9.1f}ms {tp / tc:7.1f}x")


if __name__ == "__main__":
    main()
