"""
Counting multi-edge trees exactly
=================================

Totals, height profiles and vertex profiles, each checked against an
independent computation.
"""

from collections import Counter

from multiedge import counting
from multiedge.trees import iter_multi_edge

# The first terms of the counting sequence, and the same numbers as a b-file.
print([counting.a_n(n) for n in range(11)])
print(counting.bfile(5))

# A tree's size counts multiplicities, so a single edge of multiplicity 3 is
# one of the 10 trees of size 3.
for t in iter_multi_edge(3):
    print(t.to_text(), "height", t.height, "vertices", t.vertices)

# Height profile of size 8, three ways: closed formula, truncated series and
# exhaustive enumeration.
n = 8
formula = counting.height_table(n, "formula")
series = counting.height_table(n, "series")
brute = Counter(t.height for t in iter_multi_edge(n))
print(formula.to_csv())
assert formula == series
assert formula.nonzero() == dict(brute)

# Vertex profile: sums back to the total, and the exact mean is close to
# 4n/5 + 9/10 already at moderate n.
vt = counting.vertex_table(n)
print(vt.to_csv())
assert vt.total == counting.a_n(n)
mean, var = counting.vertex_moments_exact(100)
print("n=100 mean", float(mean), "variance", float(var))

# Exact expected height at a size far beyond enumeration.
print("E(H_400) =", float(counting.expected_height_exact(400)))
