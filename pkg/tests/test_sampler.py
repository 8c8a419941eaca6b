from collections import Counter

import pytest
from scipy.stats import chisquare

from multiedge.counting import a_n, count_vertices_eq, height_table
from multiedge.sampler import (
    Rng,
    sample_composition,
    sample_plane_tree,
    sample_tree,
    sample_trees,
)
from multiedge.trees import MultiEdgeTree, iter_multi_edge

ALPHA = 0.001


def chi2_pvalue(counts: Counter, probs: dict) -> float:
    keys = sorted(probs)
    total = sum(counts.values())
    assert set(counts) <= set(keys)
    obs = [counts.get(k, 0) for k in keys]
    exp = [probs[k] * total for k in keys]
    return chisquare(obs, exp).pvalue


def test_trivial_sizes():
    for seed in range(5):
        assert sample_tree(0, seed) == MultiEdgeTree()
        assert sample_tree(1, seed).to_text() == "(1:())"


def test_determinism():
    assert [t.to_text() for t in sample_trees(12, 20, 7)] == [t.to_text() for t in sample_trees(12, 20, 7)]
    assert sample_tree(40, 123) == sample_tree(40, 123)
    assert [t.to_text() for t in sample_trees(12, 20, 7)] != [t.to_text() for t in sample_trees(12, 20, 8)]


def test_raw_stream_is_pcg64():
    from numpy.random import PCG64

    r, ref = Rng(99), PCG64(99)
    assert [r._word() for _ in range(1500)] == [int(ref.random_raw()) for _ in range(1500)]


def test_randbelow_large_range():
    r = Rng(3)
    m = 5**500 + 17
    draws = [r.randbelow(m) for _ in range(200)]
    assert all(0 <= x < m for x in draws)
    # top bit position used: roughly half the draws exceed m/2
    assert 60 < sum(x > m // 2 for x in draws) < 140


def test_size_always_exact():
    for n in (2, 5, 17, 100, 500):
        for t in sample_trees(n, 20, n):
            assert t.size == n


def test_plane_tree_k1_and_k3():
    assert sample_plane_tree(1, 0) == MultiEdgeTree()
    rng = Rng(11)
    counts = Counter(sample_plane_tree(3, rng).to_text() for _ in range(100_000))
    assert set(counts) == {"(1:(1:()))", "(1:(),1:())"}
    for c in counts.values():
        # 3 sigma of a fair binomial at 1e5 draws
        assert abs(c - 50_000) < 3 * (100_000 * 0.25) ** 0.5


def test_plane_tree_k5_uniform():
    rng = Rng(5)
    shapes = {t.to_text() for t in iter_multi_edge(4) if t.vertices == 5}
    assert len(shapes) == 14
    counts = Counter(sample_plane_tree(5, rng).to_text() for _ in range(100_000))
    assert set(counts) == shapes
    assert chi2_pvalue(counts, {s: 1 / 14 for s in shapes}) > ALPHA


def test_composition():
    rng = Rng(1)
    assert sample_composition(3, 1, rng) == [3]
    assert sample_composition(3, 3, rng) == [1, 1, 1]
    counts = Counter(tuple(sample_composition(4, 2, rng)) for _ in range(30_000))
    assert set(counts) == {(1, 3), (2, 2), (3, 1)}
    assert chi2_pvalue(counts, {c: 1 / 3 for c in counts}) > ALPHA
    with pytest.raises(ValueError):
        sample_composition(3, 4, rng)
    with pytest.raises(ValueError):
        sample_composition(3, 0, rng)


def test_full_uniformity_n5():
    # every one of the 137 trees of size 5 is equally likely
    trees = {t.to_text() for t in iter_multi_edge(5)}
    counts = Counter(t.to_text() for t in sample_trees(5, 60_000, 2024))
    assert set(counts) == trees
    assert chi2_pvalue(counts, {s: 1 / len(trees) for s in trees}) > ALPHA


def test_height_distribution_n6():
    table = height_table(6)
    probs = {h: c / a_n(6) for h, c in table.nonzero().items()}
    counts = Counter(t.height for t in sample_trees(6, 100_000, 6))
    assert chi2_pvalue(counts, probs) > ALPHA


def test_vertex_marginal_n8():
    probs = {k: count_vertices_eq(8, k) / a_n(8) for k in range(2, 10)}
    counts = Counter(t.vertices for t in sample_trees(8, 100_000, 8))
    assert chi2_pvalue(counts, probs) > ALPHA


def test_large_size_is_fast_and_exact():
    import time

    t0 = time.perf_counter()
    t = sample_tree(5000, 7)
    assert t.size == 5000
    assert time.perf_counter() - t0 < 5
