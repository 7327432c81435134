# %% [markdown]
# The first-order term of the Rieffel product
#
# a *_{tJ} b - ab behaves like (t / 2 pi i) {a, b} + O(t^2).  The printed
# order is the slope of the log error against log t.

# %%
from fractions import Fraction

from isotwist import JMap, first_order_study, poisson_bracket, torus_table
from isotwist.expr import evaluate_text
from isotwist.twist import DeformationParams

t = torus_table()
p0 = DeformationParams(0)
a = evaluate_text("U.V + 2*V", t, p0)
b = evaluate_text("U^2 - i*V^-1", t, p0)
J = JMap.skew(Fraction(1, 3))

print("{a, b} =", poisson_bracket(a, b, J))

# %%
study = first_order_study(a, b, J)
for row in study.rows():
    print(row)
print("observed order", round(study.order, 4))
