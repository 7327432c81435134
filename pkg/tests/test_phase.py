import cmath
import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from isotwist.phase import Cyclotomic, cyclotomic_polynomial, exp2pi


def totient(n):
    return sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 6, 8, 12, 20, 36, 40])
def test_cyclotomic_polynomial_roots(n):
    poly = cyclotomic_polynomial(n)
    assert len(poly) - 1 == totient(n)
    assert poly[-1] == 1
    # brute force: the primitive n-th roots are exactly its zeros
    for k in range(1, n + 1):
        z = cmath.exp(2j * math.pi * k / n)
        val = np.polyval(poly[::-1], z)
        if math.gcd(k, n) == 1:
            assert abs(val) < 1e-9
        else:
            assert abs(val) > 1e-6


def test_known_small_polynomials():
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)


def test_roots_of_unity_exact():
    z3 = exp2pi(Fraction(1, 3))
    assert isinstance(z3, Cyclotomic)
    assert (1 + z3 + z3 * z3).is_zero()
    assert z3**3 == 1
    assert exp2pi(Fraction(1, 4)) == Cyclotomic.gaussian(0, 1)
    assert exp2pi(Fraction(5, 4)) == exp2pi(Fraction(1, 4))
    assert exp2pi(Fraction(-1, 4)) == Cyclotomic.gaussian(0, -1)


def test_float_exponent_gives_complex():
    z = exp2pi(0.1379)
    assert isinstance(z, complex)
    assert abs(z - cmath.exp(2j * math.pi * 0.1379)) < 1e-15


def test_levels_interoperate():
    i = Cyclotomic.gaussian(0, 1)
    w = exp2pi(Fraction(1, 12))
    assert w**3 == i
    assert (w * w) ** 6 == 1
    assert w.conjugate() == w.inverse()


phases = st.fractions(max_denominator=24).map(lambda f: exp2pi(f))
smallq = st.tuples(st.integers(-3, 3), st.integers(-3, 3), st.fractions(max_denominator=12))


def combo(t):
    re, im, f = t
    return Cyclotomic.gaussian(re, im) * exp2pi(f) + exp2pi(f * 2)


@given(smallq, smallq)
def test_arithmetic_matches_complex(s, t):
    a, b = combo(s), combo(t)
    for exact, approx in [
        (a + b, complex(a) + complex(b)),
        (a - b, complex(a) - complex(b)),
        (a * b, complex(a) * complex(b)),
        (a.conjugate(), complex(a).conjugate()),
    ]:
        assert abs(complex(exact) - approx) < 1e-9


@given(smallq)
def test_inverse(s):
    a = combo(s)
    if a.is_zero():
        return
    assert a * a.inverse() == 1


def test_gaussian_detection():
    assert exp2pi(Fraction(1, 2)).as_gaussian() == (-1, 0)
    assert exp2pi(Fraction(1, 3)).as_gaussian() is None
    assert Cyclotomic.gaussian(Fraction(1, 2), 3).as_gaussian() == (Fraction(1, 2), 3)


def test_mixing_with_float_falls_back_to_complex():
    z = Cyclotomic.gaussian(1, 1) * 0.5
    assert isinstance(z, complex) and z == 0.5 + 0.5j
