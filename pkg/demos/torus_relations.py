# %% [markdown]
# Noncommutative torus from a twist
#
# Start from the commutative Laurent polynomials in U, V and deform the
# product with theta = 1/4.  The phase lam = i is exact.

# %%
from fractions import Fraction

from isotwist import DeformationParams, Element, torus_relations, torus_table, twist_product
from isotwist.expr import evaluate_text

t = torus_table()
U, V = Element.generator(t, "U"), Element.generator(t, "V")
p = DeformationParams(Fraction(1, 4))

print("U * V =", twist_product(U, V, p))
print("V * U =", twist_product(V, U, p))

# %% [markdown]
# Every relation residual is zero.

# %%
for name, r in torus_relations(p).items():
    print(f"{name:22s} {r}")

# %%
# the same computation through the expression language
print(evaluate_text("U*V - i*V*U", t, p))
print(evaluate_text("(U*V)^2", t, p))
