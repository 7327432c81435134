"""Deformation by an action of R^2 with a 2x2 matrix J, evaluated on homogeneous elements.

For a linear map ``J: V' -> V`` (a real 2x2 matrix, column k the image of the
k-th dual basis vector) the oscillatory-integral product of homogeneous
``a, b`` collapses to ``ab * exp(2*pi*i * da^T J db)``.  The kernel sign is
fixed so that ``J e1 = 0, J e2 = theta p1`` reproduces the right twist with
``lam = exp(2*pi*i*theta)``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Real

from .errors import DomainError
from .graded import Element, max_difference, phased_product, weighted_product
from .phase import as_fraction, exp2pi
from .twist import Convention, DeformationParams, parse_theta, twist_product

__all__ = [
    "JMap",
    "rieffel_phase",
    "rieffel_product",
    "poisson_bracket",
    "reduced_poisson_bracket",
    "equivalence_check",
    "EquivalenceReport",
    "first_order_study",
    "FirstOrderStudy",
]

EQUIV_TOL = 1e-12


def _num(x):
    f = as_fraction(x)
    if f is not None:
        return f
    if isinstance(x, Real):
        return float(x)
    raise DomainError(f"J entries must be real, got {x!r}")


@dataclass(frozen=True)
class JMap:
    """Real 2x2 matrix ``[[j11, j12], [j21, j22]]``; not required to be skew."""

    j11: Fraction | float = 0
    j12: Fraction | float = 0
    j21: Fraction | float = 0
    j22: Fraction | float = 0

    def __post_init__(self):
        for name in ("j11", "j12", "j21", "j22"):
            object.__setattr__(self, name, _num(getattr(self, name)))

    @classmethod
    def theta_map(cls, theta) -> JMap:
        """``J e1 = 0``, ``J e2 = theta p1``."""
        return cls(0, theta, 0, 0)

    @classmethod
    def skew(cls, theta) -> JMap:
        return cls(0, theta, -_num(theta), 0)

    @classmethod
    def parse(cls, text: str) -> JMap:
        """Row-major ``"a,b;c,d"``; entries like ``1/4`` are kept exact."""
        try:
            rows = [r.split(",") for r in text.split(";")]
            if len(rows) != 2 or any(len(r) != 2 for r in rows):
                raise ValueError
            vals = [parse_theta(x) for r in rows for x in r]
        except ValueError:
            raise DomainError(f"cannot parse J map {text!r}; expected 'a,b;c,d'") from None
        return cls(*vals)

    @property
    def entries(self) -> tuple:
        return (self.j11, self.j12, self.j21, self.j22)

    @property
    def exact(self) -> bool:
        return all(isinstance(x, Fraction) for x in self.entries)

    def is_skew(self) -> bool:
        return self.j11 == 0 and self.j22 == 0 and self.j12 == -self.j21

    def is_theta_form(self) -> bool:
        return self.j11 == 0 and self.j21 == 0 and self.j22 == 0

    def scaled(self, t) -> JMap:
        return JMap(*(x * t for x in self.entries))

    def pairing(self, da, db):
        """Quadratic form ``da^T J db``."""
        return (
            da[0] * (self.j11 * db[0] + self.j12 * db[1])
            + da[1] * (self.j21 * db[0] + self.j22 * db[1])
        )


def rieffel_phase(da, db, J: JMap):
    """``exp(2*pi*i * da^T J db)``; exact when J has rational entries."""
    return exp2pi(J.pairing(da, db))


def rieffel_product(a: Element, b: Element, J: JMap) -> Element:
    return phased_product(a, b, J.entries, rate=1 if J.exact else 1.0)


def reduced_poisson_bracket(a: Element, b: Element, J: JMap) -> Element:
    """``sum_i (J r_i . p) a * (p_i b)`` without the ``(2 pi i)^2`` factor.

    On homogeneous terms each infinitesimal generator ``p_j`` is the weight
    ``n_j``, so the sum collapses to ``(da^T J db) ab``.  With rational J this
    is exact, which is what the Poisson-law checks use.
    """
    return weighted_product(a, b, J.entries)


def poisson_bracket(a: Element, b: Element, J: JMap) -> Element:
    """``P(a, b) = (2 pi i)^2 (n_a^T J n_b) ab`` extended bilinearly."""
    return reduced_poisson_bracket(a, b, J).scale(-4 * math.pi**2)


@dataclass
class EquivalenceReport:
    theta: Fraction | float
    residual: float
    exact: bool
    passed: bool

    def __bool__(self) -> bool:
        return self.passed


def equivalence_check(a: Element, b: Element, theta) -> EquivalenceReport:
    """Compare the right twist with the Rieffel product for ``J_theta``."""
    p = DeformationParams(theta, Convention.RIGHT)
    tw = twist_product(a, b, p)
    rf = rieffel_product(a, b, JMap.theta_map(p.theta))
    res = max_difference(tw, rf)
    exact = p.exact and a.is_exact() and b.is_exact()
    passed = tw == rf if exact else res <= EQUIV_TOL
    return EquivalenceReport(p.theta, res, exact, passed)


@dataclass
class FirstOrderStudy:
    steps: list[float]
    errors: list[float]
    order: float

    def rows(self) -> list[dict]:
        return [{"t": t, "error": e} for t, e in zip(self.steps, self.errors)]


def _default_steps() -> list[float]:
    steps, t = [], 1e-2
    while t > 1e-4:
        steps.append(t)
        t /= 2
    steps.append(1e-4)
    return steps


def first_order_study(a: Element, b: Element, J: JMap, steps=None) -> FirstOrderStudy:
    """Remainder of the first-order expansion ``a x_{tJ} b = ab + (t/2 pi i) P(a,b) + O(t^2)``.

    ``order`` is the log-log slope between the largest and smallest step;
    it is ``inf`` when the remainder vanishes identically.
    """
    steps = list(steps or _default_steps())
    Jf = JMap(*(float(x) for x in J.entries))
    ab = a * b
    P = poisson_bracket(a, b, Jf)
    errors = []
    for t in steps:
        lhs = rieffel_product(a, b, Jf.scaled(t))
        rem = lhs - ab - P.scale(t / (2j * math.pi))
        errors.append(rem.max_abs())
    e0, e1 = errors[0], errors[-1]
    if e0 == 0 or e1 == 0:
        order = math.inf
    else:
        order = math.log(e0 / e1) / math.log(steps[0] / steps[-1])
    return FirstOrderStudy(steps, errors, order)
