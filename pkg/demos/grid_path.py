# %% [markdown]
# Grid evaluation of the Rieffel product
#
# Sample on an N x N torus grid, go to Fourier coefficients with an FFT,
# apply the twisted convolution and compare against the symbolic product.

# %%
import numpy as np

from isotwist import JMap, analyze, grid_rieffel_product, rieffel_product, synthesize
from isotwist.corpus import random_torus_element
from isotwist.graded import max_difference

rng = np.random.default_rng(3)
a = random_torus_element(rng, max_degree=6)
b = random_torus_element(rng, max_degree=6)
J = JMap.theta_map(0.1379)

grid = grid_rieffel_product(synthesize(a, 32), synthesize(b, 32), J)
symbolic = rieffel_product(a, b, J)
print(f"grid vs symbolic: {max_difference(analyze(grid), symbolic):.2e}")
