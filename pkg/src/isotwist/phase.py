"""Exact arithmetic with roots of unity.

Phases ``exp(2*pi*i*r)`` for rational ``r`` live in a cyclotomic field
``Q(zeta_L)``.  :class:`Cyclotomic` stores such a number in the power basis
``1, zeta, ..., zeta**(phi(L)-1)`` reduced modulo the cyclotomic polynomial,
which makes equality and the zero test exact.  The level ``L`` is always a
multiple of 4 so that ``i = zeta**(L//4)`` is available.
"""
from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache
from numbers import Complex, Rational, Real

__all__ = ["Cyclotomic", "exp2pi", "is_exact", "as_fraction"]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of the n-th cyclotomic polynomial, lowest degree first."""
    num = [-1] + [0] * (n - 1) + [1]  # x**n - 1
    for d in range(1, n):
        if n % d == 0:
            num = _exact_div(num, cyclotomic_polynomial(d))
    return tuple(num)


def _exact_div(num: list[int], den: tuple[int, ...]) -> list[int]:
    # den is monic, so the quotient stays integral
    num = list(num)
    dq = len(den) - 1
    out = [0] * (len(num) - dq)
    for k in range(len(out) - 1, -1, -1):
        c = num[k + dq]
        out[k] = c
        if c:
            for j, dj in enumerate(den):
                num[k + j] -= c * dj
    assert not any(num[:dq]), "non-exact cyclotomic division"
    return out


class _Level:
    """Precomputed tables for Q(zeta_L)."""

    __slots__ = ("L", "phi", "red", "powers", "conj")

    def __init__(self, L: int):
        poly = cyclotomic_polynomial(L)
        phi = len(poly) - 1
        red: list[tuple[int, ...]] = []
        cur = [0] * phi
        cur[0] = 1
        for _ in range(L):
            red.append(tuple(cur))
            # multiply by zeta and fold zeta**phi = -sum(poly[j] zeta**j)
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                for j in range(phi):
                    cur[j] -= top * poly[j]
        self.L = L
        self.phi = phi
        self.red = red
        self.powers = tuple(_unit(k, L) for k in range(phi))
        self.conj = tuple(red[(-k) % L] for k in range(phi))


def _unit(k: int, L: int) -> complex:
    # quarter turns are exact so Gaussian integers convert without rounding noise
    k %= L
    if (4 * k) % L == 0:
        return (1, 1j, -1, -1j)[4 * k // L]
    return cmath.exp(2j * math.pi * k / L)


@lru_cache(maxsize=None)
def _level(L: int) -> _Level:
    return _Level(L)


def _lcm(a: int, b: int) -> int:
    return a * b // math.gcd(a, b)


def as_fraction(x) -> Fraction | None:
    """Return ``x`` as a Fraction if it is an exact rational, else None."""
    if isinstance(x, bool):
        return Fraction(int(x))
    if isinstance(x, Rational):
        return Fraction(x)
    return None


def is_exact(x) -> bool:
    return isinstance(x, Cyclotomic) or as_fraction(x) is not None


class Cyclotomic:
    """An exact element of ``Q(zeta_L)`` with ``zeta = exp(2*pi*i/L)``."""

    __slots__ = ("level", "coords", "_z")

    def __init__(self, level: int, coords):
        if level % 4:
            raise ValueError("cyclotomic level must be a multiple of 4")
        coords = tuple(coords)
        if len(coords) != _level(level).phi:
            raise ValueError(f"Q(zeta_{level}) needs {_level(level).phi} coordinates")
        self.level = level
        self.coords = coords
        self._z = None

    @classmethod
    def _new(cls, level: int, coords: tuple) -> Cyclotomic:
        # trusted constructor: coords already canonical for this level
        self = object.__new__(cls)
        self.level = level
        self.coords = coords
        self._z = None
        return self

    @classmethod
    def reduce(cls, level: int, dense) -> Cyclotomic:
        """Reduce ``sum dense[k] * zeta**k`` (k < level) to canonical form."""
        lv = _level(level)
        phi = lv.phi
        acc = list(dense[:phi])
        red = lv.red
        for k in range(phi, len(dense)):
            c = dense[k]
            if c:
                for j, r in enumerate(red[k % level]):
                    if r:
                        acc[j] += c * r
        return cls._new(level, tuple(acc))

    # -- constructors -----------------------------------------------------
    @classmethod
    def from_powers(cls, level: int, powers) -> Cyclotomic:
        """Build ``sum c * zeta**k`` from an iterable of ``(k, c)`` pairs."""
        lv = _level(level)
        acc = [0] * lv.phi
        red = lv.red
        for k, c in powers:
            if c:
                for j, r in enumerate(red[k % level]):
                    if r:
                        acc[j] += c * r
        return cls(level, acc)

    @classmethod
    def root(cls, level: int, k: int = 1) -> Cyclotomic:
        """``zeta_level ** k``."""
        return cls(level, _level(level).red[k % level])

    @classmethod
    def rational(cls, x) -> Cyclotomic:
        phi = _level(4).phi
        return cls(4, (x,) + (0,) * (phi - 1))

    @classmethod
    def gaussian(cls, re, im=0) -> Cyclotomic:
        return cls(4, (re, im))

    @classmethod
    def coerce(cls, x) -> Cyclotomic | None:
        if isinstance(x, Cyclotomic):
            return x
        f = as_fraction(x)
        if f is not None:
            return cls.rational(_simplify(f))
        return None

    # -- structure --------------------------------------------------------
    def lift(self, level: int) -> Cyclotomic:
        if level == self.level:
            return self
        if level % self.level:
            raise ValueError(f"cannot embed Q(zeta_{self.level}) into Q(zeta_{level})")
        step = level // self.level
        return Cyclotomic.from_powers(level, ((k * step, c) for k, c in enumerate(self.coords)))

    def _aligned(self, other: Cyclotomic) -> tuple[Cyclotomic, Cyclotomic]:
        if other.level == self.level:
            return self, other
        L = _lcm(self.level, other.level)
        return self.lift(L), other.lift(L)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def as_gaussian(self) -> tuple[Fraction, Fraction] | None:
        """Return ``(re, im)`` as Fractions when the number lies in Q(i)."""
        z = complex(self)
        re = Fraction(z.real).limit_denominator(10**9)
        im = Fraction(z.imag).limit_denominator(10**9)
        if Cyclotomic.gaussian(re, im) == self:
            return re, im
        return None

    def conjugate(self) -> Cyclotomic:
        lv = _level(self.level)
        acc = [0] * lv.phi
        for c, r in zip(self.coords, lv.conj):
            if c:
                for j, rj in enumerate(r):
                    if rj:
                        acc[j] += c * rj
        return Cyclotomic(self.level, [_simplify(x) for x in acc])

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        if type(other) is Cyclotomic and other.level == self.level:
            return Cyclotomic._new(self.level, tuple(x + y for x, y in zip(self.coords, other.coords)))
        o = Cyclotomic.coerce(other)
        if o is None:
            return complex(self) + other
        a, b = self._aligned(o)
        return Cyclotomic(a.level, [x + y for x, y in zip(a.coords, b.coords)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic._new(self.level, tuple(-x for x in self.coords))

    def __pos__(self):
        return self

    def __sub__(self, other):
        if type(other) is Cyclotomic and other.level == self.level:
            return Cyclotomic._new(self.level, tuple(x - y for x, y in zip(self.coords, other.coords)))
        o = Cyclotomic.coerce(other)
        if o is None:
            return complex(self) - other
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        t = type(other)
        if t is int or t is Fraction:
            return Cyclotomic._new(self.level, tuple(_simplify(x * other) for x in self.coords))
        o = Cyclotomic.coerce(other)
        if o is None:
            return complex(self) * other
        a, b = self._aligned(o)
        lv = _level(a.level)
        conv = [0] * (2 * lv.phi - 1)
        for i, x in enumerate(a.coords):
            if x:
                for j, y in enumerate(b.coords):
                    if y:
                        conv[i + j] += x * y
        return Cyclotomic.from_powers(a.level, enumerate(conv))

    __rmul__ = __mul__

    def __truediv__(self, other):
        f = as_fraction(other)
        if f is not None:
            return Cyclotomic(self.level, [_simplify(Fraction(x) / f) for x in self.coords])
        o = Cyclotomic.coerce(other)
        if o is not None:
            return self * o.inverse()
        return complex(self) / other

    def __rtruediv__(self, other):
        return Cyclotomic.coerce(other) * self.inverse() if is_exact(other) else other / complex(self)

    def inverse(self) -> Cyclotomic:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        # product of all nontrivial Galois conjugates is the adjugate
        L = self.level
        adj = Cyclotomic.rational(1).lift(L)
        for k in range(2, L):
            if math.gcd(k, L) == 1:
                adj = adj * self._galois(k)
        norm = (self * adj).coords[0]
        return adj / norm

    def _galois(self, k: int) -> Cyclotomic:
        return Cyclotomic.from_powers(self.level, ((j * k, c) for j, c in enumerate(self.coords)))

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return complex(self) ** n
        if n < 0:
            return self.inverse() ** (-n)
        result = Cyclotomic.rational(1).lift(self.level)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- comparisons and conversions --------------------------------------
    def __eq__(self, other):
        if type(other) is Cyclotomic and other.level == self.level:
            return self.coords == other.coords
        o = Cyclotomic.coerce(other)
        if o is None:
            if isinstance(other, Complex):
                return complex(self) == other
            return NotImplemented
        a, b = self._aligned(o)
        return a.coords == b.coords

    __hash__ = None  # type: ignore[assignment]

    def __complex__(self) -> complex:
        z = self._z
        if z is None:
            z = 0j
            for c, p in zip(self.coords, _level(self.level).powers):
                if c:
                    z += (c if type(c) is int else float(c)) * p
            self._z = z
        return z

    def __abs__(self) -> float:
        return abs(complex(self))

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __repr__(self) -> str:
        terms = [f"{c}*z^{k}" if k else f"{c}" for k, c in enumerate(self.coords) if c]
        return f"Cyclotomic[{self.level}]({' + '.join(terms) or '0'})"


def _simplify(x):
    if type(x) is Fraction and x.denominator == 1:
        return x.numerator
    return x


def exp2pi(r) -> Cyclotomic | complex:
    """``exp(2*pi*i*r)``: exact for rational ``r``, a float complex otherwise."""
    f = as_fraction(r)
    if f is None:
        if not isinstance(r, Real):
            raise TypeError(f"phase exponent must be real, got {r!r}")
        return cmath.exp(2j * math.pi * float(r))
    f = f - math.floor(f)
    L = _lcm(4, f.denominator)
    return Cyclotomic.root(L, f.numerator * (L // f.denominator))
