"""
Asymptotic laws against exact values
====================================

The conformal map, the theta-type series behind the height distribution, and
the validation reports comparing each law with exact counts.
"""

import numpy as np

from multiedge import asymptotics as asy
from multiedge.counting import a_n, expected_height_exact
from multiedge.validation import CLAIMS, run_claim

# upsilon is the generating function of all trees minus 1; its Taylor
# coefficients are the counts themselves.
print(np.round(asy.maclaurin_coefficients(asy.upsilon, 8), 6))
print([a_n(n) for n in range(8)])

# The two forms of G agree; each is well conditioned on its own side.
for alpha in (0.5, 1.0, 2.0):
    print(alpha, asy.g_alpha(alpha, "primal"), asy.g_alpha(alpha, "dual"))

# Expected height: exact vs leading terms.
for n in (100, 200, 400):
    print(n, float(expected_height_exact(n)), asy.expected_height_asym(n))

# Every packaged claim, with its verdict.
for name in sorted(CLAIMS):
    rep = run_claim(name)
    print(f"{name:18s} {rep.verdict}  {rep.tolerance}")
