from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from isotwist.graded import Element, Monomial, sphere4_table, torus_table
from isotwist.phase import Cyclotomic

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

THETAS = [Fraction(0), Fraction(1, 4), Fraction(1, 3), 0.1379]


@pytest.fixture
def torus():
    return torus_table()


@pytest.fixture
def sphere():
    return sphere4_table()


def mono(table, n1, n2, c=1):
    """U^n1 V^n2 with coefficient c in the torus table."""
    return Element.monomial(table, {"U": n1, "V": n2}, c)


gaussian = st.tuples(st.integers(-4, 4), st.integers(-4, 4)).filter(lambda t: t != (0, 0))


@st.composite
def torus_elements(draw, max_terms=5, max_degree=6):
    t = torus_table()
    n = draw(st.integers(1, max_terms))
    terms = []
    for _ in range(n):
        n1 = draw(st.integers(-max_degree, max_degree))
        n2 = draw(st.integers(-max_degree, max_degree))
        re, im = draw(gaussian)
        terms.append(Monomial(Cyclotomic.gaussian(re, im), (n1, 0, n2, 0), t))
    return Element(t, terms).normalize()


# -- acceptance reporting --------------------------------------------------

_ACCEPTANCE: list[str] = []


def record(name: str, ok: bool, detail: str = "") -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] {name}" + (f" -- {detail}" if detail else "")
    _ACCEPTANCE.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE:
            terminalreporter.write_line(line)
