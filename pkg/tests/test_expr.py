from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from isotwist.errors import DomainError, ParseError
from isotwist.expr import Add, Gen, Neg, Power, Product, Scalar, Sub, evaluate, evaluate_text, parse, to_string
from isotwist.graded import Element, sphere4_table, torus_table
from isotwist.phase import Cyclotomic
from isotwist.twist import DeformationParams, twist_product

T = torus_table()
QUARTER = DeformationParams(Fraction(1, 4))
I = Cyclotomic.gaussian(0, 1)


# -- parser examples ------------------------------------------------------------------

def test_parse_examples():
    U, V = Gen("U"), Gen("V")
    assert parse("U*V - i.V*U") == Sub(
        Product(U, V, True), Product(Scalar(Fraction(0), Fraction(1)), Product(V, U, True), False)
    )
    assert parse("U^-2 . V") == Product(Power(U, -2), V, False)
    with pytest.raises(ParseError) as info:
        parse("U*(V")
    assert info.value.offset == 4
    assert "offset 4" in str(info.value)


def test_numbers_are_exact():
    assert parse("0.25") == Scalar(Fraction(1, 4))
    assert parse("3/4") == Scalar(Fraction(3, 4))
    assert parse("(1/2,-3)") == Scalar(Fraction(1, 2), Fraction(-3))


def test_star_suffix():
    assert parse("U*") == Gen("U", True)
    assert parse("U* + V") == Add(Gen("U", True), Gen("V"))
    assert parse("U**V") == Product(Gen("U", True), Gen("V"), True)
    assert parse("(U*)^2") == Power(Gen("U", True), 2)
    assert parse("U * V") == Product(Gen("U"), Gen("V"), True)
    assert parse("U*V") == Product(Gen("U"), Gen("V"), True)


def test_precedence():
    assert parse("U.V*U") == Product(Gen("U"), Product(Gen("V"), Gen("U"), True), False)
    assert parse("U*V.U") == Product(Product(Gen("U"), Gen("V"), True), Gen("U"), False)
    assert parse("U + V.U") == Add(Gen("U"), Product(Gen("V"), Gen("U"), False))
    assert parse("-U^2") == Neg(Power(Gen("U"), 2))
    assert parse("U-V-U") == Sub(Sub(Gen("U"), Gen("V")), Gen("U"))


@pytest.mark.parametrize(
    "text,offset",
    [("", 0), ("U +", 3), ("U V", 2), ("(U", 2), ("U^x", 2), ("U^1.5", 2), ("U & V", 2), ("(U, V)", 2), ("i*", 0)],
)
def test_syntax_errors(text, offset):
    with pytest.raises(ParseError) as info:
        parse(text)
    assert info.value.offset == offset


# -- round trip -------------------------------------------------------------------------

fractions = st.fractions(min_value=-5, max_value=5, max_denominator=8)
leaves = st.one_of(
    st.builds(Scalar, fractions, fractions),
    st.builds(Scalar, fractions.map(abs)),
    st.builds(Gen, st.sampled_from(["U", "V"]), st.booleans()),
)


def _trees(children):
    return st.one_of(
        st.builds(Neg, children),
        st.builds(Add, children, children),
        st.builds(Sub, children, children),
        st.builds(Product, children, children, st.booleans()),
        st.builds(Power, children, st.integers(0, 3)),
        st.builds(Power, st.builds(Gen, st.sampled_from(["U", "V"]), st.booleans()), st.integers(-3, -1)),
    )


trees = st.recursive(leaves, _trees, max_leaves=8)


@given(trees)
def test_print_parse_round_trip(t):
    assert parse(to_string(t)) == t


@given(trees, trees, st.sampled_from([Fraction(1, 4), Fraction(1, 3), 0.1379]))
def test_compositional(x, y, theta):
    p = DeformationParams(theta)
    whole = evaluate(Product(x, y, True), T, p)
    parts = twist_product(evaluate(x, T, p), evaluate(y, T, p), p)
    if p.exact:
        assert whole == parts
    else:
        assert (whole - parts).max_abs() <= 1e-9 * (1 + parts.max_abs())


# -- evaluation -----------------------------------------------------------------------------

def test_eval_examples():
    U, V = Element.generator(T, "U"), Element.generator(T, "V")
    assert evaluate_text("U*V", T, QUARTER) == (U * V).scale(I)
    assert len(evaluate_text("U*V - (0,1).V*U", T, QUARTER)) == 0
    for th in (0, Fraction(1, 3), 0.1379):
        assert evaluate_text("U.V", T, DeformationParams(th)) == U * V


def test_scalars_commute():
    a = evaluate_text("(2,1).U*V", T, QUARTER)
    b = evaluate_text("U*V.(2,1)", T, QUARTER)
    c = evaluate_text("(2,1)*U*V", T, QUARTER)
    assert a == b == c


def test_deformed_powers_and_inverse():
    p = DeformationParams(Fraction(1, 5))
    for text in ["U.V", "(U.V)^2", "U^3.V^-2", "V*U"]:
        m = evaluate_text(text, T, p)
        inv = evaluate(Power(parse(text), -1), T, p)
        assert twist_product(m, inv, p) == Element.one(T)
        assert twist_product(inv, m, p) == Element.one(T)
    # U.V squared under the twist picks up lam
    uv = evaluate_text("U.V", T, p)
    assert evaluate_text("(U.V)^2", T, p) == (uv * uv).scale(p.lam)


def test_adjoints_evaluate():
    e = evaluate_text("U*.U", T, QUARTER)
    assert e.degree == (0, 0) and len(e) == 1
    assert e != Element.one(T)  # U* is a separate symbol from U^-1


def test_eval_errors():
    with pytest.raises(DomainError):
        evaluate_text("W", T, QUARTER)
    S = sphere4_table()
    with pytest.raises(DomainError):
        evaluate_text("alpha^-1", S, QUARTER)
    with pytest.raises(DomainError):
        evaluate_text("(U+V)^-1", T, QUARTER)
    assert evaluate_text("x*x* + 1", S, QUARTER) == evaluate_text("x.x + 1", S, QUARTER)
