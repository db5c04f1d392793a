"""Exact (I,F) search: partitions, colouring counts and super-extensions."""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from . import kernel
from .coloring import F, I, U, to_string, validate
from .plane_graph import PlaneGraph, check_cycle
from .structures import class_G_membership

SOLVED, UNSOLVABLE, BUDGET = "solved", "unsolvable", "budget_exceeded"
EXIT_CODES = {SOLVED: 0, UNSOLVABLE: 2, BUDGET: 3}
MAX_ENUMERATION_ORDER = 24


class TooLargeForEnumeration(ValueError):
    pass


class BoundaryColoringInvalid(ValueError):
    pass


def default_budget() -> int:
    try:
        return int(os.environ.get("IFPART_BUDGET", "0"))
    except ValueError:
        return 0


@dataclass(frozen=True)
class SearchConfig:
    """``order`` is ``"most-colored"`` (default) or ``"input"``; budget 0 means unlimited."""

    order: str = "most-colored"
    budget: int = field(default_factory=default_budget)
    backend: str | None = None

    @property
    def order_code(self) -> int:
        if self.order not in ("most-colored", "input"):
            raise ValueError(f"unknown vertex order {self.order!r}")
        return 0 if self.order == "most-colored" else 1


@dataclass
class Certificate:
    outcome: str
    coloring: list[int] | None = None
    nodes: int = 0
    max_depth: int = 0
    trail: list = field(default_factory=list)
    engine: str = "oracle"
    fallbacks: int = 0

    @property
    def solved(self) -> bool:
        return self.outcome == SOLVED

    @property
    def exit_code(self) -> int:
        return EXIT_CODES[self.outcome]

    def to_json(self) -> dict:
        return {
            "outcome": self.outcome,
            "engine": self.engine,
            "coloring": to_string(self.coloring) if self.coloring is not None else None,
            "stats": {"nodes": self.nodes, "max_depth": self.max_depth, "fallbacks": self.fallbacks},
            "trail": self.trail,
        }


def _certificate(result, engine="oracle") -> Certificate:
    status, nodes, depth, _count, sols, trail = result
    if status == 0:
        coloring = list(sols[0])
        steps = [{"vertex": v, "color": "I" if coloring[v] == I else "F"} for v in trail]
        return Certificate(SOLVED, coloring, nodes, depth, steps, engine)
    return Certificate(UNSOLVABLE if status == 1 else BUDGET, None, nodes, depth, [], engine)


def find_partition(G: PlaneGraph, config: SearchConfig | None = None) -> Certificate:
    """Backtracking search for an (I,F)-partition of ``G``."""
    cfg = config or SearchConfig()
    res = kernel.run(G, [U] * G.n, budget=cfg.budget, order=cfg.order_code, backend=cfg.backend)
    return _certificate(res)


def extend_coloring(G: PlaneGraph, fixed: Sequence[int], config: SearchConfig | None = None) -> Certificate:
    """Complete a partial colouring to a full (I,F)-colouring (no boundary condition)."""
    cfg = config or SearchConfig()
    res = kernel.run(G, fixed, budget=cfg.budget, order=cfg.order_code, backend=cfg.backend)
    return _certificate(res)


def enumerate_colorings(G: PlaneGraph, backend: str | None = None) -> int:
    """Exact number of (I,F)-colourings of ``G``."""
    if G.n > MAX_ENUMERATION_ORDER:
        raise TooLargeForEnumeration(f"n={G.n} > {MAX_ENUMERATION_ORDER}")
    return kernel.run(G, [U] * G.n, mode=kernel.MODE_COUNT, backend=backend)[3]


def iter_colorings(G: PlaneGraph, backend: str | None = None) -> Iterator[list[int]]:
    if G.n > MAX_ENUMERATION_ORDER:
        raise TooLargeForEnumeration(f"n={G.n} > {MAX_ENUMERATION_ORDER}")
    yield from kernel.run(G, [U] * G.n, mode=kernel.MODE_ALL, backend=backend)[4]


def _boundary_init(G: PlaneGraph, D: Sequence[int], phi0) -> list[int]:
    init = [U] * G.n
    for v in D:
        c = phi0[v]
        if c not in (I, F):
            raise BoundaryColoringInvalid(f"boundary vertex {v} is uncoloured")
        init[v] = int(c)
    sub, new = G.induced(D)
    sub_colors = [U] * sub.n
    for v in D:
        sub_colors[new[v]] = init[v]
    verdict = validate(sub, sub_colors)
    if not verdict.ok:
        raise BoundaryColoringInvalid(f"boundary colouring is not an (I,F)-colouring: {verdict.kind}")
    return init


def super_extend_search(G: PlaneGraph, D: Sequence[int], phi0, config: SearchConfig | None = None) -> Certificate:
    """Complete search for a super-extension of ``phi0`` (a colouring of ``G[V(D)]``)."""
    cfg = config or SearchConfig()
    init = _boundary_init(G, D, phi0)
    res = kernel.run(G, init, boundary=D, budget=cfg.budget, order=cfg.order_code, backend=cfg.backend)
    return _certificate(res)


def all_super_extensions(G: PlaneGraph, D: Sequence[int], phi0, limit: int = 0, backend: str | None = None) -> list[list[int]]:
    init = _boundary_init(G, D, phi0)
    return kernel.run(G, init, boundary=D, mode=kernel.MODE_ALL, limit=limit, backend=backend)[4]


def boundary_colorings(G: PlaneGraph, D: Sequence[int]) -> list[list[int]]:
    """All (I,F)-colourings of ``G[V(D)]``, as full-length lists (U off ``D``)."""
    D = list(D)
    sub, new = G.induced(D)
    out = []
    for sc in iter_colorings(sub):
        full = [U] * G.n
        for v in D:
            full[v] = sc[new[v]]
        out.append(full)
    return out


@dataclass
class TheoremReport:
    flags: dict
    applicable: bool
    certificate: Certificate

    @property
    def falsified(self) -> bool:
        return self.applicable and self.certificate.outcome == UNSOLVABLE

    def to_json(self) -> dict:
        return {
            "flags": self.flags,
            "applicable": self.applicable,
            "outcome": self.certificate.outcome,
            "coloring": to_string(self.certificate.coloring) if self.certificate.coloring else None,
            "nodes": self.certificate.nodes,
        }


def verify_theorem(G: PlaneGraph, config: SearchConfig | None = None) -> TheoremReport:
    """Check the partition claim on ``G`` whenever one of the covered classes contains it."""
    rep = class_G_membership(G)
    flags = rep.flags()
    applicable = any(flags.values())
    cert = find_partition(G, config)
    if cert.solved:
        assert validate(G, cert.coloring, require_total=True).ok
    return TheoremReport(flags, applicable, cert)


def is_cycle_boundary(G: PlaneGraph) -> tuple[int, ...] | None:
    """The outer face walk when it is a simple cycle."""
    if G.outer is None:
        return None
    walk = G.outer_walk
    try:
        return check_cycle(G, walk)
    except ValueError:
        return None
