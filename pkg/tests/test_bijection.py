import pytest
from hypothesis import given

from multiedge.bijection import from_dary, to_dary
from multiedge.trees import (
    DAryMultiEdgeTree,
    DAryTree,
    MultiEdgeTree,
    iter_dary,
    iter_dary_multi,
    parse_dary,
    parse_tree,
    stats,
)

from conftest import SAMPLE_MULTI, SAMPLE_DARY, multi_edge_trees

LEAF = MultiEdgeTree()


def positions(t):
    return [p for p, _ in t.children]


def test_single_child_multiplicity_three():
    t = DAryMultiEdgeTree(MultiEdgeTree([(3, LEAF)]), 5)
    assert positions(to_dary(t)) == [3]


def test_prefix_sums():
    t = DAryMultiEdgeTree(MultiEdgeTree([(1, LEAF), (3, LEAF), (1, LEAF)]), 5)
    assert positions(to_dary(t)) == [1, 4, 5]


def test_sample_pair_maps_both_ways():
    image = to_dary(DAryMultiEdgeTree(parse_tree(SAMPLE_MULTI), 5))
    assert image == parse_dary(SAMPLE_DARY, 5)
    assert from_dary(image).tree == parse_tree(SAMPLE_MULTI)


@pytest.mark.parametrize(
    "pos, mults",
    [([1], [1]), ([1, 4, 5], [1, 3, 1]), ([2, 3], [2, 1])],
)
def test_from_dary_differences(pos, mults):
    leaf = DAryTree(5)
    t = DAryTree(5, [(p, leaf) for p in pos])
    assert [m for m, _ in from_dary(t).tree.children] == mults


def test_degree_bound_enforced():
    t = MultiEdgeTree([(2, LEAF), (2, LEAF)])
    with pytest.raises(ValueError):
        to_dary(t, 3)
    # a deep violation is found too
    deep = MultiEdgeTree([(1, t)])
    with pytest.raises(ValueError):
        to_dary(deep, 3)
    assert positions(to_dary(t, 4)) == [2, 4]


def test_bare_tree_needs_d():
    with pytest.raises(ValueError):
        to_dary(MultiEdgeTree())


@pytest.mark.parametrize("d", [1, 2, 3])
@pytest.mark.parametrize("n", range(1, 7))
def test_image_is_exactly_the_dary_family(d, n):
    multi = list(iter_dary_multi(d, n))
    images = [to_dary(t) for t in multi]
    assert len(set(images)) == len(multi)
    assert set(images) == set(iter_dary(d, n))
    for t, img in zip(multi, images):
        assert from_dary(img) == t
        assert stats(t) == stats(img)


@given(multi_edge_trees)
def test_roundtrip_random(t):
    d = max(1, t.max_outdegree)
    img = to_dary(t, d)
    back = from_dary(img)
    assert back.tree == t and back.d == d
    assert to_dary(back) == img
    assert stats(img) == stats(t)
