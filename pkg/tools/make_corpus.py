"""Regenerate the bundled corpus of small connected plane graphs.

Graphs are grown edge by edge from a random spanning tree or a random
Hamiltonian cycle; an edge is kept
when the graph stays planar and, for the restricted families, when it closes
no cycle of a forbidden length.  The embedding comes from networkx's
planarity test.  Output: src/ifpart/data/corpus.plc and its manifest.

    python3 tools/make_corpus.py [--seed 2024] [--out src/ifpart/data/corpus.plc]
"""

from __future__ import annotations

import argparse
import random
from pathlib import Path

import networkx as nx

from ifpart.corpus import CorpusManifest, manifest_path
from ifpart.plane_graph import PlaneGraph
from ifpart.planar_code import serialize_planar_code
from ifpart.structures import class_G_membership

# family -> (forbidden cycle lengths while growing, how many graphs)
FAMILIES = {
    "free-4-6-9": ((4, 6, 9), 160),
    "free-4-6-8": ((4, 6, 8), 120),
    "class-G": ((4, 6), 160),
    "any": ((), 60),
}


def closes_forbidden(g: nx.Graph, u: int, v: int, lengths) -> bool:
    if not lengths:
        return False
    cutoff = max(lengths) - 1
    return any(len(p) in lengths for p in nx.all_simple_paths(g, u, v, cutoff=cutoff))


def grow(rng: random.Random, n: int, lengths, fill: float, start: str) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(range(n))
    order = list(range(n))
    rng.shuffle(order)
    if start == "cycle":
        nx.add_cycle(g, order)
    else:
        for i in range(1, n):
            g.add_edge(order[i], order[rng.randrange(i)])
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n) if not g.has_edge(u, v)]
    rng.shuffle(pairs)
    for u, v in pairs[: int(len(pairs) * fill)]:
        if closes_forbidden(g, u, v, lengths):
            continue
        g.add_edge(u, v)
        if not nx.check_planarity(g)[0]:
            g.remove_edge(u, v)
    return g


def to_plane(g: nx.Graph) -> PlaneGraph:
    ok, emb = nx.check_planarity(g)
    assert ok
    return PlaneGraph([list(emb.neighbors_cw_order(v)) for v in range(g.number_of_nodes())])


def family_ok(name: str, pg: PlaneGraph) -> bool:
    flags = class_G_membership(pg).flags()
    return {"free-4-6-9": flags["free_4_6_9"], "free-4-6-8": flags["free_4_6_8"], "class-G": flags["in_G"], "any": True}[name]


def build(seed: int) -> list[PlaneGraph]:
    rng = random.Random(seed)
    out: list[PlaneGraph] = []
    seen: set[tuple] = set()
    for name, (lengths, count) in FAMILIES.items():
        made = 0
        while made < count:
            n = rng.randint(3, 14)
            start = rng.choice(["tree", "cycle"])
            if start == "cycle" and n in lengths:
                continue
            g = grow(rng, n, lengths, rng.choice([0.3, 0.6, 1.0]), start)
            pg = to_plane(g)
            if pg.rotations in seen or not family_ok(name, pg):
                continue
            seen.add(pg.rotations)
            out.append(pg)
            made += 1
    return out


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=2024)
    ap.add_argument("--out", default="src/ifpart/data/corpus.plc")
    args = ap.parse_args()
    graphs = build(args.seed)
    path = Path(args.out)
    path.write_bytes(serialize_planar_code(graphs))
    CorpusManifest.build(path).save(manifest_path(path))
    print(f"wrote {len(graphs)} graphs to {path}")


if __name__ == "__main__":
    main()
