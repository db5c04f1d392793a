"""Reading and writing the planar_code binary format (one-byte variant)."""

from __future__ import annotations

from pathlib import Path
from typing import Iterable

from .plane_graph import GraphError, PlaneGraph

HEADER = b">>planar_code<<"


class PlanarCodeError(ValueError):
    pass


class BadHeader(PlanarCodeError):
    pass


class TruncatedRecord(PlanarCodeError):
    pass


class VertexOutOfRange(PlanarCodeError):
    pass


class UnsupportedOrder(PlanarCodeError):
    pass


class TooLarge(PlanarCodeError):
    pass


def parse_planar_code(data: bytes) -> list[PlaneGraph]:
    """Decode every graph in ``data``; the header is optional."""
    pos = 0
    if data.startswith(b">>"):
        if not data.startswith(HEADER):
            end = data.find(b"<<")
            raise BadHeader(f"unsupported header {data[: end + 2 if end >= 0 else 20]!r}")
        pos = len(HEADER)
    graphs = []
    size = len(data)
    while pos < size:
        n = data[pos]
        pos += 1
        if n == 0:
            raise UnsupportedOrder(f"record at byte {pos - 1} uses the two-byte encoding or n=0")
        rotations = []
        for v in range(n):
            nbrs = []
            while True:
                if pos >= size:
                    raise TruncatedRecord(f"graph {len(graphs)} ends inside vertex {v}")
                b = data[pos]
                pos += 1
                if b == 0:
                    break
                if b > n:
                    raise VertexOutOfRange(f"graph {len(graphs)}: neighbour {b} > n={n}")
                nbrs.append(b - 1)
            rotations.append(nbrs)
        try:
            graphs.append(PlaneGraph(rotations))
        except GraphError as exc:
            raise type(exc)(f"graph {len(graphs)}: {exc}") from exc
    return graphs


def serialize_planar_code(graphs: Iterable[PlaneGraph]) -> bytes:
    out = bytearray(HEADER)
    for g in graphs:
        if g.n > 255 or g.n == 0:
            raise TooLarge(f"cannot encode a graph with n={g.n} in one-byte planar_code")
        out.append(g.n)
        for rot in g.rotations:
            out.extend(w + 1 for w in rot)
            out.append(0)
    return bytes(out)


def read_planar_code(path: str | Path) -> list[PlaneGraph]:
    return parse_planar_code(Path(path).read_bytes())


def write_planar_code(path: str | Path, graphs: Iterable[PlaneGraph]) -> None:
    Path(path).write_bytes(serialize_planar_code(graphs))
