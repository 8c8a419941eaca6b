"""
From multi-edge trees to d-ary trees
====================================

Out-degree bounded multi-edge trees correspond to pruned d-ary trees with the
same shape statistics.
"""

from multiedge import DAryMultiEdgeTree, from_dary, parse_tree, stats, to_dary
from multiedge.counting import fuss_catalan
from multiedge.trees import enumerate_dary_multi

# A tree whose vertices have out-degree at most 5 (multiplicities summed).
t = DAryMultiEdgeTree(parse_tree("(1:(1:(2:(),1:()),2:(1:())),3:(1:(),1:(2:()),3:()))"), d=5)
image = to_dary(t)

# Each multiplicity becomes the gap between consecutive slot positions.
print("multi-edge:", t.to_text())
print("5-ary:     ", image.to_text())
print(stats(t).to_json())
assert stats(t) == stats(image)
assert from_dary(image) == t

# So the number of d-ary multi-edge trees with n vertices is a
# Fuss-Catalan number.
for d in (2, 3, 5):
    print(d, [enumerate_dary_multi(d, n) for n in range(1, 7)], [fuss_catalan(d, n) for n in range(1, 7)])
