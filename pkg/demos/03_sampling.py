"""
Uniform random multi-edge trees
===============================

Draw trees of a given size uniformly and compare an observed histogram with
the exact distribution.
"""

from collections import Counter

from scipy.stats import chisquare

from multiedge import a_n, height_table, sample_tree, sample_trees

# Sampling is reproducible from an integer seed.
print(sample_tree(20, seed=1))
assert sample_tree(20, seed=1) == sample_tree(20, seed=1)

# Large sizes are cheap: the size is exact and the tree is built in linear time.
big = sample_tree(5000, seed=7)
print("size", big.size, "vertices", big.vertices, "height", big.height)

# Height histogram at n = 8 against the exact height profile.
n, count = 8, 20_000
obs = Counter(t.height for t in sample_trees(n, count, seed=2024))
table = height_table(n)
hs = sorted(table.nonzero())
expected = [count * table.count_eq(h) / a_n(n) for h in hs]
print(chisquare([obs[h] for h in hs], expected))
