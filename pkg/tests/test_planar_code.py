from functools import cache

import pytest
from hypothesis import given, settings, strategies as st

from ifpart.corpus import bundled_corpus_path, load_corpus
from ifpart.planar_code import HEADER, BadHeader, TruncatedRecord, VertexOutOfRange, parse_planar_code, serialize_planar_code

K3_RECORD = bytes([3, 2, 3, 0, 3, 1, 0, 1, 2, 0])


def test_parse_k3_without_header():
    [g] = parse_planar_code(K3_RECORD)
    assert (g.n, g.m) == (3, 3)


def test_parse_empty():
    assert parse_planar_code(b"") == []
    assert parse_planar_code(HEADER) == []


def test_two_records():
    gs = parse_planar_code(HEADER + K3_RECORD + K3_RECORD)
    assert len(gs) == 2 and all((g.n, g.m) == (3, 3) for g in gs)


def test_serialize_k3():
    [g] = parse_planar_code(K3_RECORD)
    assert serialize_planar_code([g]) == HEADER + K3_RECORD
    assert serialize_planar_code([]) == HEADER


def test_bad_header():
    with pytest.raises(BadHeader):
        parse_planar_code(b">>planar_code be<<" + K3_RECORD)


def test_truncated():
    with pytest.raises(TruncatedRecord):
        parse_planar_code(K3_RECORD[:-2])


def test_vertex_out_of_range():
    with pytest.raises(VertexOutOfRange):
        parse_planar_code(bytes([3, 2, 4, 0, 3, 1, 0, 1, 2, 0]))


@cache
def corpus():
    return load_corpus()


def test_corpus_round_trip_bytes():
    data = bundled_corpus_path().read_bytes()
    assert serialize_planar_code(parse_planar_code(data)) == data


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(0, 499), min_size=1, max_size=8))
def test_round_trip_any_selection(indices):
    gs = [corpus()[i] for i in indices]
    again = parse_planar_code(serialize_planar_code(gs))
    assert [g.rotations for g in again] == [g.rotations for g in gs]
