from functools import cache
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from ifpart import kernel
from ifpart.coloring import F, I, U, from_string, is_super_extension, validate
from ifpart.corpus import load_corpus
from ifpart.plane_graph import PlaneGraph, cycle_graph, from_coordinates
from ifpart.solver import (
    BUDGET,
    SOLVED,
    UNSOLVABLE,
    BoundaryColoringInvalid,
    SearchConfig,
    TooLargeForEnumeration,
    all_super_extensions,
    boundary_colorings,
    enumerate_colorings,
    extend_coloring,
    find_partition,
    iter_colorings,
    super_extend_search,
    verify_theorem,
)

from conftest import cycle_with

BACKENDS = ["python"] + (["cython"] if kernel.BACKEND == "cython" else [])


@cache
def corpus():
    return load_corpus()


def brute_count(G):
    return sum(1 for cols in product((I, F), repeat=G.n) if validate(G, cols).ok)


def independent_sets_of_cycle(n):
    # Lucas numbers: L(n) = L(n-1) + L(n-2), L(1)=1, L(2)=3
    a, b = 2, 1
    for _ in range(n - 1):
        a, b = b, a + b
    return b


@pytest.mark.parametrize("backend", BACKENDS)
def test_counts(k3, backend):
    assert enumerate_colorings(PlaneGraph([[]]), backend=backend) == 2
    assert enumerate_colorings(k3, backend=backend) == 3
    assert enumerate_colorings(cycle_graph(9), backend=backend) == 75
    assert enumerate_colorings(cycle_graph(12), backend=backend) == 321


@pytest.mark.parametrize("n", range(3, 13))
def test_cycle_counts_against_brute_force(n):
    g = cycle_graph(n)
    assert enumerate_colorings(g) == brute_count(g) == independent_sets_of_cycle(n) - 1


def test_iter_matches_count(c9_claw):
    cols = list(iter_colorings(c9_claw))
    assert len(cols) == enumerate_colorings(c9_claw) == brute_count(c9_claw)
    assert all(validate(c9_claw, c, require_total=True).ok for c in cols)


def test_enumeration_limit():
    with pytest.raises(TooLargeForEnumeration):
        enumerate_colorings(cycle_graph(30))


@pytest.mark.parametrize("backend", BACKENDS)
def test_find_partition_small(k3, backend):
    cert = find_partition(k3, SearchConfig(backend=backend))
    assert cert.outcome == SOLVED and sorted(cert.coloring) == [I, F, F]
    assert find_partition(cycle_graph(9)).solved


def test_trail_replays_to_coloring(c9_claw):
    cert = find_partition(c9_claw)
    for step in cert.trail:
        assert "IF"[cert.coloring[step["vertex"]] - 1] == step["color"]


def test_extend_and_unsolvable(k3):
    cert = extend_coloring(k3, [F, F, U])
    assert cert.solved and cert.coloring[2] == I
    assert extend_coloring(k3, [I, U, I]).outcome == UNSOLVABLE
    k4 = from_coordinates([(0, 0), (4, 0), (2, 4), (2, 1)], [(0, 1), (1, 2), (2, 0), (0, 3), (1, 3), (2, 3)])
    assert find_partition(k4).outcome == UNSOLVABLE


def test_budget():
    g = max(corpus(), key=lambda h: h.n)
    cert = find_partition(g, SearchConfig(budget=1))
    assert cert.outcome == BUDGET and cert.exit_code == 3


def test_input_order():
    assert find_partition(cycle_graph(9), SearchConfig(order="input")).solved
    with pytest.raises(ValueError):
        find_partition(cycle_graph(9), SearchConfig(order="random"))


def test_c9_every_boundary_extends(c9):
    cols = boundary_colorings(c9, range(9))
    assert len(cols) == 75
    for phi0 in cols:
        cert = super_extend_search(c9, range(9), phi0)
        assert cert.solved and cert.coloring == phi0


def test_invalid_boundary(c9):
    with pytest.raises(BoundaryColoringInvalid):
        super_extend_search(c9, range(9), [I, I] + [F] * 7)
    with pytest.raises(BoundaryColoringInvalid):
        super_extend_search(c9, range(9), [F] * 9)
    with pytest.raises(BoundaryColoringInvalid):
        super_extend_search(c9, range(9), [U] + [F] * 8)


def test_super_extensions_match_brute_force(c9_claw):
    D = tuple(range(9))
    for phi0 in boundary_colorings(c9_claw, D):
        found = {tuple(c) for c in all_super_extensions(c9_claw, D, phi0)}
        brute = set()
        for c in (I, F):
            phi = list(phi0)
            phi[9] = c
            if is_super_extension(c9_claw, D, phi0, phi).ok:
                brute.add(tuple(phi))
        assert found == brute


def test_verify_theorem_examples():
    rep = verify_theorem(cycle_with(9, chords=[(0, 2)]))
    assert not rep.flags["in_G"] and not rep.flags["free_4_6_9"]
    rep = verify_theorem(cycle_with(8, chords=[(0, 3)]))
    assert not rep.applicable
    g = next(h for h in corpus() if verify_theorem(h).flags["in_G"])
    rep = verify_theorem(g)
    assert rep.applicable and rep.certificate.solved and not rep.falsified


def test_certificate_json(k3):
    body = find_partition(k3).to_json()
    assert body["outcome"] == "solved" and set(body["stats"]) == {"nodes", "max_depth", "fallbacks"}
    assert from_string(body["coloring"]) == find_partition(k3).coloring


@pytest.mark.skipif(len(BACKENDS) < 2, reason="compiled kernel not built")
@settings(max_examples=80, deadline=None)
@given(st.integers(0, 499), st.sampled_from(["most-colored", "input"]))
def test_backends_agree(index, order):
    g = corpus()[index]
    a = find_partition(g, SearchConfig(order=order, backend="python"))
    b = find_partition(g, SearchConfig(order=order, backend="cython"))
    assert (a.outcome, a.coloring, a.nodes) == (b.outcome, b.coloring, b.nodes)
    if g.n <= 16:
        assert enumerate_colorings(g, backend="python") == enumerate_colorings(g, backend="cython")
