# %% [markdown]
# The theta-deformed four-sphere
#
# Generators alpha, beta carry degrees (1, 0) and (0, 1); x is real of degree
# zero.  After the twist alpha and beta commute up to lam, and the radius
# alpha alpha* + beta beta* + x^2 stays central.

# %%
from fractions import Fraction

from isotwist import DeformationParams, sphere_relations

for theta in (Fraction(1, 5), 0.1379):
    print(f"theta = {theta}")
    for name, r in sphere_relations(DeformationParams(theta)).items():
        print(f"  {name:40s} {r:.1e}")
