"""Backend selection for the (I,F) search kernel.

The compiled extension is used when it was built; otherwise (or when
``IFPART_PURE_PYTHON`` is set) the pure-Python twin is used.
"""

from __future__ import annotations

import os
from array import array
from typing import Sequence

from . import _kernel_py
from .plane_graph import PlaneGraph

if os.environ.get("IFPART_PURE_PYTHON"):
    _compiled = None
else:
    try:
        from . import _kernel as _compiled
    except ImportError:  # extension not built
        _compiled = None

BACKEND = "cython" if _compiled is not None else "python"

MODE_FIRST, MODE_COUNT, MODE_ALL = 0, 1, 2


def _csr(n: int, nbrs: Sequence[Sequence[int]]) -> tuple[array, array]:
    ptr = array("i", [0] * (n + 1))
    flat = array("i")
    for v in range(n):
        flat.extend(nbrs[v])
        ptr[v + 1] = len(flat)
    return ptr, flat


def run(
    G: PlaneGraph,
    init: Sequence[int],
    *,
    boundary: Sequence[int] = (),
    mode: int = MODE_FIRST,
    budget: int = 0,
    limit: int = 0,
    order: int = 0,
    backend: str | None = None,
):
    """Run the kernel on ``G``.

    ``boundary`` vertices are marked and the edges among them are dropped
    from the forest structure, which turns plain partition search into
    super-extension search.
    """
    n = G.n
    adj_ptr, adj = _csr(n, G.rotations)
    bset = set(boundary)
    if bset:
        fnbrs = [[w for w in G.rotations[v] if not (v in bset and w in bset)] for v in range(n)]
        fadj_ptr, fadj = _csr(n, fnbrs)
    else:
        fadj_ptr, fadj = adj_ptr, adj
    marks = array("i", [1 if v in bset else 0 for v in range(n)])
    colors = array("i", [int(c) for c in init])
    impl = _pick(backend)
    return impl.search(n, adj_ptr, adj, fadj_ptr, fadj, colors, marks, mode, budget, limit, order)


def _pick(backend: str | None):
    if backend is None:
        return _compiled if _compiled is not None else _kernel_py
    if backend == "python":
        return _kernel_py
    if backend == "cython":
        if _compiled is None:
            raise RuntimeError("compiled kernel is not available")
        return _compiled
    raise ValueError(f"unknown backend {backend!r}")
