import cmath
import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import THETAS, mono, torus_elements
from isotwist.errors import DomainError
from isotwist.graded import Element, generator_action, max_difference
from isotwist.numeric import QuadratureSpec, regularized_oscillatory_phase
from isotwist.phase import Cyclotomic, exp2pi
from isotwist.rieffel import (
    JMap,
    equivalence_check,
    first_order_study,
    poisson_bracket,
    reduced_poisson_bracket,
    rieffel_phase,
    rieffel_product,
)
from isotwist.twist import DeformationParams, twist_product

I = Cyclotomic.gaussian(0, 1)
GENERIC = JMap(Fraction(1, 4), Fraction(1, 3), Fraction(-1, 6), Fraction(1, 12))
SKEW = JMap.skew(Fraction(2, 5))

rational_j = st.builds(
    JMap, *[st.fractions(min_value=-2, max_value=2, max_denominator=6) for _ in range(4)]
)
skew_j = st.fractions(min_value=-2, max_value=2, max_denominator=6).map(JMap.skew)


# -- JMap ------------------------------------------------------------------------

def test_jmap_predicates():
    J = JMap.theta_map(Fraction(1, 4))
    assert J.is_theta_form() and not J.is_skew()
    assert JMap.theta_map(0).is_skew()
    assert SKEW.is_skew() and not SKEW.is_theta_form()
    assert not GENERIC.is_skew()


def test_jmap_parse():
    J = JMap.parse("0,1/4;-1/4,0")
    assert J.entries == (0, Fraction(1, 4), Fraction(-1, 4), 0) and J.exact and J.is_skew()
    assert not JMap.parse("0,0.25;0,0").exact
    for bad in ["1,2,3", "1,2;3", "a,b;c,d"]:
        with pytest.raises(DomainError):
            JMap.parse(bad)
    with pytest.raises(DomainError):
        JMap(1j)


# -- phase -----------------------------------------------------------------------

@pytest.mark.parametrize("theta", THETAS)
def test_phase_examples(theta):
    J = JMap.theta_map(theta)
    assert rieffel_phase((1, 0), (0, 1), J) == exp2pi(theta)
    assert rieffel_phase((0, 1), (1, 0), J) == 1


def test_phase_against_quadrature():
    # independent oracle: the regularized oscillatory integral itself
    q = QuadratureSpec.default(1e-4, 0.1, 3)
    approx = regularized_oscillatory_phase((2, 0), (0, 3), 0.1, q)
    closed = complex(rieffel_phase((2, 0), (0, 3), JMap.theta_map(0.1)))
    assert abs(closed - cmath.exp(2j * math.pi * 0.6)) < 1e-14
    assert abs(approx - closed) <= 1e-2


@given(st.tuples(*[st.integers(-6, 6)] * 4), st.tuples(*[st.integers(-6, 6)] * 2), rational_j)
def test_phase_biadditive(degs, c, J):
    a, b = degs[:2], degs[2:]
    ab = (a[0] + b[0], a[1] + b[1])
    assert rieffel_phase(ab, c, J) == rieffel_phase(a, c, J) * rieffel_phase(b, c, J)
    assert rieffel_phase(c, ab, J) == rieffel_phase(c, a, J) * rieffel_phase(c, b, J)


# -- product ---------------------------------------------------------------------

def test_product_examples(torus):
    U, V = Element.generator(torus, "U"), Element.generator(torus, "V")
    assert rieffel_product(U, V, JMap.theta_map(Fraction(1, 4))) == (U * V).scale(I)
    th = Fraction(1, 3)
    assert rieffel_product(U, V, JMap.skew(th)) == (U * V).scale(exp2pi(th))
    assert rieffel_product(V, U, JMap.skew(th)) == (U * V).scale(exp2pi(-th))


@given(torus_elements(), torus_elements())
def test_zero_map_is_undeformed(a, b):
    assert rieffel_product(a, b, JMap()) == a * b


@given(torus_elements(), torus_elements(), torus_elements(), rational_j, st.integers(-3, 3))
def test_product_bilinear(a, b, c, J, k):
    z = Cyclotomic.gaussian(k, 2)
    assert rieffel_product(a.scale(z) + b, c, J) == rieffel_product(a, c, J).scale(z) + rieffel_product(b, c, J)
    assert rieffel_product(c, a.scale(z) + b, J) == rieffel_product(c, a, J).scale(z) + rieffel_product(c, b, J)


@given(torus_elements(3, 10), torus_elements(3, 10), torus_elements(3, 10), rational_j)
def test_product_associative(a, b, c, J):
    lhs = rieffel_product(rieffel_product(a, b, J), c, J)
    assert lhs == rieffel_product(a, rieffel_product(b, c, J), J)


@given(torus_elements(3, 10), torus_elements(3, 10), torus_elements(3, 10))
def test_product_associative_float(a, b, c):
    J = JMap(0.31, -1.7, 0.05, 2.2)
    lhs = rieffel_product(rieffel_product(a, b, J), c, J)
    rhs = rieffel_product(a, rieffel_product(b, c, J), J)
    assert max_difference(lhs, rhs) <= 1e-11 * (1 + lhs.max_abs())


@pytest.mark.parametrize("theta", THETAS)
@given(a=torus_elements(), b=torus_elements())
def test_reduces_to_right_twist(theta, a, b):
    p = DeformationParams(theta)
    got = rieffel_product(a, b, JMap.theta_map(theta))
    want = twist_product(a, b, p)
    assert got == want if p.exact else max_difference(got, want) <= 1e-12


def test_mismatched_tables(torus, sphere):
    with pytest.raises(DomainError):
        rieffel_product(Element.one(torus), Element.one(sphere), GENERIC)


# -- equivalence check -------------------------------------------------------------

def test_equivalence_examples(torus):
    U, V = Element.generator(torus, "U"), Element.generator(torus, "V")
    rep = equivalence_check(U, V, Fraction(1, 4))
    assert rep and rep.exact and rep.residual == 0
    rep = equivalence_check(U, V, 0)
    assert rep and rep.residual == 0
    rep = equivalence_check(U + V.scale(0.5 + 0.5j), V, 0.1379)
    assert rep and not rep.exact and rep.residual <= 1e-12


# -- Poisson bracket ---------------------------------------------------------------

def test_poisson_examples(torus):
    U, V = Element.generator(torus, "U"), Element.generator(torus, "V")
    th = 0.3
    P = poisson_bracket(U, V, JMap.theta_map(th))
    assert max_difference(P, (U * V).scale(-4 * math.pi**2 * th)) <= 1e-12
    assert len(poisson_bracket(mono(torus, 2, 5), Element.scalar(torus, 3), GENERIC)) == 0
    S = JMap.skew(th)
    assert max_difference(poisson_bracket(U, V, S), (U * V).scale(-4 * math.pi**2 * th)) <= 1e-12
    assert max_difference(poisson_bracket(V, U, S), (U * V).scale(4 * math.pi**2 * th)) <= 1e-12


@pytest.mark.parametrize(
    "da,db,J",
    [
        ((1, 0), (0, 1), JMap.theta_map(0.3)),
        ((2, -1), (1, 3), JMap(0.1, -0.2, 0.15, 0.05)),
        ((-3, 2), (1, 1), JMap.skew(0.45)),
    ],
)
def test_poisson_finite_difference(torus, da, db, J):
    # (a x_{tJ} b - ab) * 2 pi i / t at t = 1e-5 should match P to 1e-4 relative
    a, b = mono(torus, *da), mono(torus, *db)
    t = 1e-5
    fd = (rieffel_product(a, b, J.scaled(t)) - a * b).scale(2j * math.pi / t)
    P = poisson_bracket(a, b, J)
    assert max_difference(fd, P) <= 1e-4 * P.max_abs()


def _bracket_by_actions(a, b, J):
    # literal sum over the dual basis: (J r_i . p) a times p_i b
    p1a, p2a = generator_action(1, a), generator_action(2, a)
    out = Element.zero(a.table)
    for i, (c1, c2) in enumerate([(J.j11, J.j21), (J.j12, J.j22)], start=1):
        out = out + (p1a.scale(c1) + p2a.scale(c2)) * generator_action(i, b)
    return out


@given(torus_elements(), torus_elements(), rational_j)
def test_bracket_is_sum_of_infinitesimal_actions(a, b, J):
    assert reduced_poisson_bracket(a, b, J) == _bracket_by_actions(a, b, J)


@given(torus_elements(), torus_elements())
def test_bracket_float_map(a, b):
    J = JMap(0.3, -1.25, 0.5, 2.0)
    got, want = reduced_poisson_bracket(a, b, J), _bracket_by_actions(a, b, J)
    assert max_difference(got, want) <= 1e-12 * (1 + want.max_abs())


@given(torus_elements(), torus_elements())
def test_poisson_matches_degree_formula(a, b):
    J = GENERIC
    want = Element.zero(a.table)
    for da, ea in a.components().items():
        for db, eb in b.components().items():
            want = want + (ea * eb).scale(J.pairing(da, db))
    assert reduced_poisson_bracket(a, b, J) == want


@given(torus_elements(), torus_elements(), torus_elements(), rational_j, st.integers(-3, 3))
def test_poisson_bilinear(a, b, c, J, k):
    z = Cyclotomic.gaussian(1, k)
    P = reduced_poisson_bracket
    assert P(a.scale(z) + b, c, J) == P(a, c, J).scale(z) + P(b, c, J)
    assert P(c, a.scale(z) + b, J) == P(c, a, J).scale(z) + P(c, b, J)


@given(torus_elements(3), torus_elements(3), torus_elements(3), skew_j)
def test_poisson_laws_for_skew_maps(a, b, c, J):
    P = reduced_poisson_bracket
    assert P(a, b, J) == -P(b, a, J)
    assert P(a, b * c, J) == P(a, b, J) * c + b * P(a, c, J)
    assert (P(a, P(b, c, J), J) + P(b, P(c, a, J), J) + P(c, P(a, b, J), J)).is_zero()


@given(torus_elements(3), torus_elements(3), torus_elements(3))
def test_poisson_laws_with_constant(a, b, c):
    J = JMap.skew(0.37)
    P = poisson_bracket
    scale = 1 + a.max_abs() * b.max_abs() * c.max_abs() * 1e4
    assert max_difference(P(a, b, J), -P(b, a, J)) <= 1e-9 * scale
    jac = P(a, P(b, c, J), J) + P(b, P(c, a, J), J) + P(c, P(a, b, J), J)
    assert jac.max_abs() <= 1e-7 * scale


def test_non_skew_brackets_are_not_antisymmetric(torus):
    U, V = Element.generator(torus, "U"), Element.generator(torus, "V")
    J = JMap.theta_map(Fraction(1, 2))
    assert reduced_poisson_bracket(U, V, J) != -reduced_poisson_bracket(V, U, J)


# -- first-order expansion -----------------------------------------------------------

@pytest.mark.parametrize(
    "da,db,J",
    [
        ((1, 0), (0, 1), JMap.theta_map(Fraction(1, 4))),
        ((3, -2), (1, 4), JMap.skew(0.7)),
        ((2, 1), (-1, 2), GENERIC),
    ],
)
def test_first_order_is_second_order_accurate(torus, da, db, J):
    study = first_order_study(mono(torus, *da), mono(torus, *db), J)
    assert study.steps[0] == 1e-2 and study.steps[-1] == 1e-4
    assert study.order >= 1.9
    assert all(b < a for a, b in zip(study.errors, study.errors[1:]))


def test_first_order_vanishing_remainder(torus):
    study = first_order_study(mono(torus, 0, 3), mono(torus, 0, 1), JMap.theta_map(0.5))
    assert study.order == math.inf and max(study.errors) == 0
