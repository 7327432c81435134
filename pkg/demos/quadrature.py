# %% [markdown]
# Oscillatory integral with a Gaussian regulator
#
# The formal integral over R^2 x R^2 of the character product against
# exp(-2 pi i y.x) is regularized by exp(-pi eps(|x|^2+|y|^2)); as eps shrinks it
# approaches the closed-form phase of the Rieffel product.

# %%
from isotwist.numeric import convergence_study, is_monotone

rows, exact = convergence_study((1, 0), (0, 1), 0.25, (1e-2, 1e-3, 1e-4))
print("closed form", exact)
for r in rows:
    print(f"eps={r.epsilon:.0e}  value={r.value:.6f}  error={r.error:.2e}")
print("monotone:", is_monotone(rows))
