"""Seeded random elements for property runs."""
from __future__ import annotations

import numpy as np

from .graded import Element, GeneratorTable, Monomial, torus_table
from .phase import Cyclotomic


def random_torus_element(
    rng: np.random.Generator,
    max_terms: int = 20,
    max_degree: int = 8,
    exact: bool = True,
    table: GeneratorTable | None = None,
) -> Element:
    """Random Laurent polynomial in U, V with degrees in ``[-max_degree, max_degree]``.

    Exact coefficients are nonzero Gaussian integers with parts in [-3, 3];
    otherwise complex floats uniform in the unit square.
    """
    table = table or torus_table()
    u, v = table.index("U"), table.index("V")
    terms = []
    for _ in range(int(rng.integers(1, max_terms + 1))):
        exps = [0] * len(table)
        exps[u], exps[v] = (int(x) for x in rng.integers(-max_degree, max_degree + 1, 2))
        if exact:
            re, im = 0, 0
            while re == 0 and im == 0:
                re, im = (int(x) for x in rng.integers(-3, 4, 2))
            c = Cyclotomic.gaussian(re, im)
        else:
            re, im = rng.uniform(-1, 1, 2)
            c = complex(re, im)
        terms.append(Monomial(c, tuple(exps), table))
    return Element(table, terms).normalize()


def random_pairs(n: int, seed: int = 0, **kw) -> list[tuple[Element, Element]]:
    rng = np.random.default_rng(seed)
    return [(random_torus_element(rng, **kw), random_torus_element(rng, **kw)) for _ in range(n)]
