"""(I,F)-colourings: validity, super-extensions, F-linkage and the nice colouring rules.

Colourings are plain lists indexed by vertex holding ``U``, ``I`` or ``F``.
Uncoloured vertices count as non-F everywhere.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import IntEnum
from typing import Iterable, Sequence

from .plane_graph import Edge, PlaneGraph, edge_key


class Color(IntEnum):
    U = 0
    I = 1
    F = 2


U, I, F = Color.U, Color.I, Color.F
_SYMBOL = {0: "U", 1: "I", 2: "F"}


class ColoringError(ValueError):
    pass


class AlreadyColored(ColoringError):
    pass


class NonMonochromaticNeighborhood(ColoringError):
    pass


class GuaranteeViolated(ColoringError):
    """A nice-colouring step produced a conflict the rule should have avoided."""


def to_string(colors: Sequence[int]) -> str:
    return "".join(_SYMBOL[int(c)] for c in colors)


def from_string(text: str) -> list[int]:
    try:
        return [int(Color[ch]) for ch in text.strip()]
    except KeyError as exc:
        raise ColoringError(f"bad colour symbol {exc.args[0]!r}") from None


class _DSU:
    def __init__(self, n: int) -> None:
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[rb] = ra
        return True


# -- validity ---------------------------------------------------------------


@dataclass(frozen=True)
class Verdict:
    kind: str  # valid | invalid_independence | invalid_forest | incomplete
    witness: tuple[int, ...] = ()

    @property
    def ok(self) -> bool:
        return self.kind == "valid"

    def to_json(self) -> dict:
        return {"verdict": self.kind, "witness": list(self.witness)}


def find_f_cycle(G: PlaneGraph, colors: Sequence[int]) -> tuple[int, ...] | None:
    dsu = _DSU(G.n)
    for u, v in G.edges():
        if colors[u] == F and colors[v] == F and not dsu.union(u, v):
            path = _path(G, colors, u, v, skip_edge=(u, v))
            return tuple(path)
    return None


def validate(G: PlaneGraph, colors: Sequence[int], require_total: bool = False) -> Verdict:
    for u, v in G.edges():
        if colors[u] == I and colors[v] == I:
            return Verdict("invalid_independence", (u, v))
    cyc = find_f_cycle(G, colors)
    if cyc is not None:
        return Verdict("invalid_forest", cyc)
    if require_total and any(c == U for c in colors):
        return Verdict("incomplete", tuple(v for v, c in enumerate(colors) if c == U))
    return Verdict("valid")


def _path(G, colors, s, t, skip_edge=None, allowed=None, skip_edges=frozenset()) -> list[int] | None:
    """Shortest path of F-vertices from s to t (BFS)."""
    skip = edge_key(*skip_edge) if skip_edge else None
    prev = {s: None}
    queue = deque([s])
    while queue:
        v = queue.popleft()
        if v == t:
            out = []
            while v is not None:
                out.append(v)
                v = prev[v]
            return out[::-1]
        for w in G.rotations[v]:
            if w in prev or colors[w] != F:
                continue
            e = edge_key(v, w)
            if e == skip or e in skip_edges:
                continue
            if allowed is not None and w not in allowed:
                continue
            prev[w] = v
            queue.append(w)
    return None


def f_components(G: PlaneGraph, colors: Sequence[int], skip_edges: Iterable[Edge] = ()) -> list[int]:
    """Component label per vertex over F-vertices (``-1`` for non-F)."""
    skip = set(skip_edges)
    dsu = _DSU(G.n)
    for u, v in G.edges():
        if colors[u] == F and colors[v] == F and (u, v) not in skip:
            dsu.union(u, v)
    return [dsu.find(v) if colors[v] == F else -1 for v in range(G.n)]


def boundary_edges(G: PlaneGraph, boundary: Iterable[int]) -> set[Edge]:
    b = set(boundary)
    return {(u, v) for u, v in G.edges() if u in b and v in b}


def boundary_f_path(G: PlaneGraph, boundary: Sequence[int], colors: Sequence[int]) -> tuple[int, ...] | None:
    """An F-path avoiding the boundary's own edges that joins two boundary vertices."""
    skip = boundary_edges(G, boundary)
    comp = f_components(G, colors, skip)
    seen: dict[int, int] = {}
    for b in boundary:
        if comp[b] < 0:
            continue
        if comp[b] in seen:
            return tuple(_path(G, colors, seen[comp[b]], b, skip_edges=skip))
        seen[comp[b]] = b
    return None


def defect_measure(G: PlaneGraph, colors: Sequence[int], boundary: Sequence[int] = ()) -> tuple[int, int, int]:
    """(I-conflicts, independent F-cycles, excess boundary attachments)."""
    conflicts = sum(1 for u, v in G.edges() if colors[u] == I and colors[v] == I)
    fv = sum(1 for c in colors if c == F)
    fe = [(u, v) for u, v in G.edges() if colors[u] == F and colors[v] == F]
    comps = len({c for c in f_components(G, colors) if c >= 0})
    cyclomatic = len(fe) - fv + comps
    excess = 0
    if boundary:
        comp = f_components(G, colors, boundary_edges(G, boundary))
        counts: dict[int, int] = {}
        for b in boundary:
            if comp[b] >= 0:
                counts[comp[b]] = counts.get(comp[b], 0) + 1
        excess = sum(k - 1 for k in counts.values())
    return conflicts, cyclomatic, excess


# -- super-extension --------------------------------------------------------


@dataclass(frozen=True)
class ExtensionCheck:
    ok: bool
    reason: str | None = None  # invalid | restriction_mismatch | f_path
    witness: tuple[int, ...] = ()

    def __bool__(self) -> bool:
        return self.ok

    def to_json(self) -> dict:
        return {"ok": self.ok, "reason": self.reason, "witness": list(self.witness)}


def is_super_extension(
    G: PlaneGraph,
    H: Sequence[int],
    phi0: Sequence[int] | dict[int, int],
    phi: Sequence[int],
) -> ExtensionCheck:
    """Whether ``phi`` super-extends the colouring ``phi0`` of ``G[H]``.

    ``phi0`` may be a full-length list (only entries on ``H`` are read) or a
    mapping from the vertices of ``H`` to colours.
    """
    verdict = validate(G, phi, require_total=True)
    if not verdict.ok:
        return ExtensionCheck(False, "invalid", verdict.witness)
    for h in H:
        want = phi0[h]
        if phi[h] != want:
            return ExtensionCheck(False, "restriction_mismatch", (h,))
    path = boundary_f_path(G, list(H), phi)
    if path is not None:
        return ExtensionCheck(False, "f_path", path)
    return ExtensionCheck(True)


def f_linked(G: PlaneGraph, colors: Sequence[int], boundary: Iterable[int], u: int, v: int) -> bool:
    """F-linkage of ``(u, v)`` relative to the external vertices ``boundary``.

    Either an F-path joins them, or they reach two distinct external
    vertices by vertex-disjoint F-paths.  A vertex on the boundary reaches
    itself by the trivial path.
    """
    if u == v:
        raise ValueError("f_linked needs two distinct vertices")
    if colors[u] != F or colors[v] != F:
        return False
    comp = f_components(G, colors)
    if comp[u] == comp[v]:
        return True
    external = {comp[b] for b in boundary if comp[b] >= 0}
    return comp[u] in external and comp[v] in external


# -- nice colouring ----------------------------------------------------------


def _colored_neighbors(G, colors, v, ignore: set[Edge]):
    return [w for w in G.rotations[v] if colors[w] != U and edge_key(v, w) not in ignore]


def _post_check(G, before, after, boundary, what):
    b = defect_measure(G, before, boundary)
    a = defect_measure(G, after, boundary)
    if any(x > y for x, y in zip(a, b)):
        raise GuaranteeViolated(f"{what}: defects {b} -> {a}")


def nicely_color(
    G: PlaneGraph,
    colors: Sequence[int],
    v: int,
    boundary: Sequence[int] = (),
    check: bool = True,
) -> list[int]:
    """Colour ``v`` with I unless it already sees an I-neighbour.

    With ``check`` and at most two coloured neighbours, the result is
    verified to add no conflict, F-cycle or boundary-joining F-path.
    """
    if colors[v] != U:
        raise AlreadyColored(f"vertex {v} is already coloured")
    out = list(colors)
    out[v] = F if any(colors[w] == I for w in G.rotations[v]) else I
    if check and len(_colored_neighbors(G, colors, v, set())) <= 2:
        _post_check(G, colors, out, boundary, f"nicely colouring {v}")
    return out


def path_alphas(G: PlaneGraph, colors: Sequence[int], path: Sequence[int], ignore: Iterable[Edge] = ()) -> list[int]:
    """The common colour of each path vertex's coloured neighbours (``U`` if none)."""
    ig = {edge_key(*e) for e in ignore}
    alphas = []
    for v in path:
        seen = {colors[w] for w in _colored_neighbors(G, colors, v, ig)}
        if len(seen) > 1:
            raise NonMonochromaticNeighborhood(f"vertex {v} sees both I and F")
        alphas.append(seen.pop() if seen else U)
    return alphas


def nicely_color_path(
    G: PlaneGraph,
    colors: Sequence[int],
    path: Sequence[int],
    mode: str,
    boundary: Sequence[int] = (),
    ignore: Iterable[Edge] = (),
    check: bool = True,
) -> list[int]:
    """I-nicely (``mode="I"``) or F-nicely (``mode="F"``) colour a directed path.

    Vertices whose coloured neighbours are I are forced to F.  The other
    vertices take alternating colours in path order, starting with
    ``mode``; forced vertices do not advance the alternation.  ``ignore``
    lists edges whose far end is disregarded when reading neighbour colours.
    """
    if mode not in ("I", "F"):
        raise ValueError("mode must be 'I' or 'F'")
    for v in path:
        if colors[v] != U:
            raise AlreadyColored(f"vertex {v} is already coloured")
    alphas = path_alphas(G, colors, path, ignore)
    out = list(colors)
    nxt = I if mode == "I" else F
    for v, a in zip(path, alphas):
        if a == I:
            out[v] = F
        else:
            out[v] = nxt
            nxt = F if nxt == I else I
    if check:
        _post_check(G, colors, out, boundary, f"{mode}-nicely colouring {list(path)}")
    return out


def path_admissible(G: PlaneGraph, colors: Sequence[int], path: Sequence[int], boundary: Sequence[int] = ()) -> bool:
    """Whether ``path`` meets the conditions under which nice path colouring is safe.

    The path must be an induced path of uncoloured non-boundary vertices,
    each seeing monochromatic coloured neighbours, and at most one of them
    when that colour is F.
    """
    bset = set(boundary)
    pset = set(path)
    if len(pset) != len(path) or pset & bset:
        return False
    for i, v in enumerate(path):
        if colors[v] != U:
            return False
        for w in G.rotations[v]:
            if w in pset and abs(path.index(w) - i) != 1:
                return False
        if i and not G.has_edge(path[i - 1], v):
            return False
        seen = [colors[w] for w in G.rotations[v] if colors[w] != U]
        if len(set(seen)) > 1:
            return False
        if seen and seen[0] == F and len(seen) > 1:
            return False
    return True


# -- incremental colouring with rollback -------------------------------------


class Coloring:
    """Partial colouring with incremental validity tracking and LIFO undo.

    The union-find over F-vertices uses union by rank without path
    compression so that every union can be undone exactly.
    """

    def __init__(self, G: PlaneGraph, colors: Sequence[int] | None = None) -> None:
        self.G = G
        self.colors = [U] * G.n
        self._parent = list(range(G.n))
        self._rank = [0] * G.n
        self.conflicts = 0
        self.f_cycles = 0
        self.f_edges = 0
        self._log: list[tuple] = []
        for v, c in enumerate(colors or ()):
            if c != U:
                self.assign(v, c)
        self._log.clear()

    def _find(self, x: int) -> int:
        while self._parent[x] != x:
            x = self._parent[x]
        return x

    def assign(self, v: int, c: int) -> None:
        if self.colors[v] != U:
            raise AlreadyColored(f"vertex {v} is already coloured")
        c = Color(c)
        unions, cycles, conflicts = [], 0, 0
        self.colors[v] = c
        nbrs = self.G.rotations[v]
        if c == I:
            conflicts = sum(1 for w in nbrs if self.colors[w] == I)
        elif c == F:
            for w in nbrs:
                if self.colors[w] != F:
                    continue
                self.f_edges += 1
                a, b = self._find(v), self._find(w)
                if a == b:
                    cycles += 1
                    continue
                if self._rank[a] < self._rank[b]:
                    a, b = b, a
                unions.append((b, a, self._rank[a]))
                self._parent[b] = a
                if self._rank[a] == self._rank[b]:
                    self._rank[a] += 1
        self.conflicts += conflicts
        self.f_cycles += cycles
        self._log.append((v, unions, cycles, conflicts))

    def undo(self) -> int:
        v, unions, cycles, conflicts = self._log.pop()
        if self.colors[v] == F:
            self.f_edges -= sum(1 for w in self.G.rotations[v] if self.colors[w] == F)
        for b, a, r in reversed(unions):
            self._parent[b] = b
            self._rank[a] = r
        self.conflicts -= conflicts
        self.f_cycles -= cycles
        self.colors[v] = U
        return v

    def unassign(self, v: int) -> None:
        """Uncolour any vertex; rebuilds unless ``v`` was coloured last."""
        if self._log and self._log[-1][0] == v:
            self.undo()
            return
        colors = list(self.colors)
        colors[v] = U
        self.__init__(self.G, colors)

    @property
    def valid(self) -> bool:
        return self.conflicts == 0 and self.f_cycles == 0

    def f_component_count(self) -> int:
        return sum(1 for v in range(self.G.n) if self.colors[v] == F and self._find(v) == v)

    def f_vertex_count(self) -> int:
        return sum(1 for c in self.colors if c == F)

    def __str__(self) -> str:
        return to_string(self.colors)
