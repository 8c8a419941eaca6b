import json

import pytest
from hypothesis import given

from multiedge.counting import a_n
from multiedge.trees import (
    DAryMultiEdgeTree,
    DAryTree,
    MultiEdgeTree,
    OracleCeilingError,
    enumerate_dary,
    enumerate_dary_multi,
    enumerate_multi_edge,
    iter_dary,
    iter_dary_multi,
    iter_multi_edge,
    parse_dary,
    parse_tree,
    stats,
)

from conftest import SAMPLE_MULTI, SAMPLE_DARY, multi_edge_trees


def test_single_vertex():
    s = stats(MultiEdgeTree())
    assert (s.height, s.vertices, s.leaves) == (0, 1, 1)
    assert s.children_histogram == {0: 1}


def test_double_edge_counts_once_for_height():
    t = MultiEdgeTree([(2, MultiEdgeTree())])
    s = stats(t)
    assert (s.height, s.vertices, t.size) == (1, 2, 2)


def test_sample_multi_edge_tree():
    t = parse_tree(SAMPLE_MULTI)
    s = stats(t)
    assert s.height == 3
    assert s.vertices == 12
    assert t.max_outdegree == 5
    DAryMultiEdgeTree(t, 5)
    with pytest.raises(ValueError):
        DAryMultiEdgeTree(t, 4)


def test_invalid_multiplicity():
    with pytest.raises(ValueError):
        MultiEdgeTree([(0, MultiEdgeTree())])


def test_dary_positions_validated():
    leaf = DAryTree(3)
    DAryTree(3, [(1, leaf), (3, leaf)])
    for bad in ([(2, leaf), (2, leaf)], [(3, leaf), (1, leaf)], [(4, leaf)], [(0, leaf)]):
        with pytest.raises(ValueError):
            DAryTree(3, bad)
    with pytest.raises(TypeError):
        DAryTree(3, [(1, DAryTree(2))])


@pytest.mark.parametrize("text", ["()", "(2:(),1:())", SAMPLE_MULTI, " ( 1 : ( ) ) "])
def test_parse_roundtrip(text):
    t = parse_tree(text)
    assert parse_tree(t.to_text()) == t
    assert t.to_text() == "".join(text.split())


@pytest.mark.parametrize("bad", ["", "(", ")", "(1:)", "(1:(),)", "(1:()2:())", "(:())", "()()", "(x:())", "(0:())"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        parse_tree(bad)


def test_parse_dary():
    t = parse_dary(SAMPLE_DARY, 5)
    assert t.d == 5 and t.vertices == 12
    with pytest.raises(ValueError):
        parse_dary(SAMPLE_DARY, 4)


def test_parse_deep_chain():
    n = 3000
    text = "(1:" * n + "()" + ")" * n
    t = parse_tree(text)
    assert t.height == n and t.size == n
    assert stats(t).leaves == 1


def test_stats_json():
    d = json.loads(stats(parse_tree("(2:(),1:())")).to_json())
    assert d == {"height": 1, "vertices": 3, "leaves": 2, "children_histogram": {"0": 2, "2": 1}}


@pytest.mark.parametrize("n, expected", [(0, 1), (1, 1), (2, 3), (3, 10), (4, 36), (5, 137)])
def test_enumerate_multi_edge_counts(n, expected):
    assert enumerate_multi_edge(n) == expected


def test_enumerate_multi_edge_visits_distinct_valid_trees():
    for n in range(8):
        seen = set()
        count = enumerate_multi_edge(n, seen.add)
        assert count == len(seen) == a_n(n)
        assert all(t.size == n for t in seen)


def test_generation_order_is_deterministic():
    first = [t.to_text() for t in iter_multi_edge(3)]
    assert first == [t.to_text() for t in iter_multi_edge(3)]
    # multiplicity of the first link varies slowest
    assert first[0] == "(1:(),1:(),1:())"
    assert first[-1] == "(3:())"


def test_ceiling():
    with pytest.raises(OracleCeilingError):
        enumerate_multi_edge(11)
    with pytest.raises(OracleCeilingError):
        enumerate_dary(2, 4, ceiling=3)
    assert enumerate_multi_edge(3, ceiling=3) == 10


def test_dary_multi_small():
    assert enumerate_dary_multi(2, 2) == 2
    assert {t.to_text() for t in iter_dary_multi(2, 2)} == {"(1:())", "(2:())"}
    assert enumerate_dary_multi(2, 3) == 5
    for n in range(1, 8):
        assert enumerate_dary_multi(1, n) == 1


def test_dary_small():
    assert enumerate_dary(2, 3) == 5
    assert enumerate_dary(3, 2) == 3
    assert enumerate_dary(1, 6) == 1


def test_sample_dary_subtrees_are_enumerated():
    # The full d=5, n=12 family is out of reach; each root subtree of the
    # sample tree must appear among the enumerated trees of its own size.
    target = parse_dary(SAMPLE_DARY, 5)
    assert target.vertices == 12
    for _, sub in target.children:
        assert sub in set(iter_dary(5, sub.vertices))


@given(multi_edge_trees)
def test_stats_invariants(t):
    s = stats(t)
    assert sum(s.children_histogram.values()) == s.vertices
    assert (s.height == 0) == (s.vertices == 1)
    assert s.height <= t.size
    is_simple_chain = all(len(v.children) <= 1 for v in t.nodes()) and all(
        m == 1 for v in t.nodes() for m, _ in v.children
    )
    assert (s.height == t.size) == is_simple_chain
    assert parse_tree(t.to_text()) == t
