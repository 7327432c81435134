# %% [markdown]
# Twist product against the Rieffel product
#
# For J with a single entry theta the two products coincide.  With an
# exact theta the check is an identity in the cyclotomic field.

# %%
from fractions import Fraction

from isotwist import equivalence_check
from isotwist.corpus import random_pairs

pairs = random_pairs(50, seed=7)

for theta in (Fraction(1, 4), Fraction(1, 3), 0.1379):
    reports = [equivalence_check(a, b, theta) for a, b in pairs]
    worst = max(r.residual for r in reports)
    print(f"theta={theta!s:8} all equal: {all(reports)}  max residual {worst:.2e}")
