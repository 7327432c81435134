"""The isospectral twisted product on torus-graded algebras.

For homogeneous ``a`` of degree ``(a1, a2)`` and ``b`` of degree
``(b1, b2)`` the right twist is ``a * b = ab * lam**(a1*b2)`` with
``lam = exp(2*pi*i*theta)``; the left twist uses ``lam**(a2*b1)``.  Both
extend bilinearly.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Real
from operator import add

from .errors import DomainError
from .graded import (
    Bidegree,
    Element,
    GeneratorTable,
    involution,
    max_difference,
    phased_product,
    sphere4_table,
    torus_table,
)
from .phase import Cyclotomic, as_fraction, exp2pi

__all__ = [
    "Convention",
    "DeformationParams",
    "TensorTerm",
    "twist_product",
    "psi_apply",
    "multiply_tensor",
    "twisted_product_via_psi",
    "deformed_involution",
    "is_central",
    "CentralityReport",
    "torus_relations",
    "sphere_relations",
]


class Convention(enum.Enum):
    RIGHT = "right"
    LEFT = "left"


_FORMS = {Convention.RIGHT: (0, 1, 0, 0), Convention.LEFT: (0, 0, 1, 0)}


def parse_theta(text: str) -> Fraction | float:
    """``"p/q"`` or an integer gives an exact Fraction; a decimal gives a float."""
    text = text.strip()
    if "/" in text or text.lstrip("+-").isdigit():
        return Fraction(text)
    return float(text)


@dataclass(frozen=True)
class DeformationParams:
    """Deformation parameter ``theta``; ``lam = exp(2*pi*i*theta)`` is derived.

    A Fraction (or int) ``theta`` selects exact root-of-unity arithmetic.
    """

    theta: Fraction | float
    convention: Convention = Convention.RIGHT
    lam: Cyclotomic | complex = field(init=False, compare=False)

    def __post_init__(self):
        theta = self.theta
        if isinstance(theta, str):
            theta = parse_theta(theta)
        f = as_fraction(theta)
        if f is not None:
            theta = f
        elif isinstance(theta, Real):
            theta = float(theta)
        else:
            raise DomainError(f"theta must be real, got {theta!r}")
        object.__setattr__(self, "theta", theta)
        object.__setattr__(self, "convention", Convention(self.convention))
        object.__setattr__(self, "lam", exp2pi(theta))

    @property
    def exact(self) -> bool:
        return isinstance(self.theta, Fraction)

    def form(self) -> tuple[int, int, int, int]:
        return _FORMS[self.convention]

    def exponent(self, da, db) -> int:
        """Power of lam attached to the pair of degrees."""
        if self.convention is Convention.RIGHT:
            return da[0] * db[1]
        return da[1] * db[0]

    def lam_power(self, m: int):
        if self.exact:
            return exp2pi(self.theta * m)
        return self.lam**m


def twist_product(a: Element, b: Element, p: DeformationParams) -> Element:
    """Deformed product ``a * b`` under the twist ``p``."""
    if p.exact:
        return phased_product(a, b, p.form(), rate=p.theta)
    return phased_product(a, b, p.form(), base=p.lam)


@dataclass(frozen=True)
class TensorTerm:
    """``scalar * (left ⊗ right)`` with homogeneous ``left`` and ``right``."""

    scalar: object
    left: Element
    right: Element


def _psi_blocks(a: Element, b: Element, p: DeformationParams, sign: int):
    # homogeneous component pairs with the exponent of lam that Psi**sign attaches
    a._check(b)
    cb = sorted(b.components().items())
    for da, ea in sorted(a.components().items()):
        for db, eb in cb:
            yield sign * p.exponent(da, db), ea, eb


def psi_apply(a: Element, b: Element, p: DeformationParams, inverse: bool = False) -> list[TensorTerm]:
    """Apply ``Psi = lam**(-p1 ⊗ p2)`` (or its inverse) to ``a ⊗ b``.

    The tensor is split into homogeneous components first; each pair of
    components picks up ``lam**(-+ n1(left) n2(right))``.
    """
    return [TensorTerm(p.lam_power(k), ea, eb) for k, ea, eb in _psi_blocks(a, b, p, 1 if inverse else -1)]


def multiply_tensor(terms: list[TensorTerm], table: GeneratorTable) -> Element:
    """The undeformed multiplication ``m`` applied termwise to a formal tensor."""
    result = Element.zero(table)
    for t in terms:
        result = result + (t.left * t.right).scale(t.scalar)
    return result


def twisted_product_via_psi(a: Element, b: Element, p: DeformationParams) -> Element:
    """Deformed product as ``m(Psi^{-1} (a ⊗ b))``.

    Same result as ``multiply_tensor(psi_apply(a, b, p, inverse=True))``,
    evaluated block by block: each pair of homogeneous components is
    multiplied and scaled by its eigenvalue of ``Psi^{-1}``, with the phase
    kept as an index into the roots of unity when theta is rational.
    """
    blocks = _psi_blocks(a, b, p, 1)
    if p.exact and a.is_exact() and b.is_exact():
        return _psi_exact(blocks, a, b, p.theta)
    lam = complex(p.lam)
    acc: dict[tuple[int, ...], complex] = {}
    for k, ea, eb in blocks:
        s = lam**k
        for ka, ca in ea.items():
            ca = complex(ca) * s
            for kb, cb in eb.items():
                key = tuple(map(add, ka, kb))
                acc[key] = acc.get(key, 0) + ca * complex(cb)
    return Element._raw(a.table, acc).normalize()


def _psi_exact(blocks, a: Element, b: Element, theta: Fraction) -> Element:
    q = theta.denominator
    levels = {c.level for _, c in a.items()} | {c.level for _, c in b.items()}
    L = math.lcm(4, q, *levels)
    unit = theta.numerator * (L // q)  # lam = zeta_L ** unit

    def sparse(e: Element) -> dict:
        return {k: [(j, v) for j, v in enumerate(c.lift(L).coords) if v] for k, c in e.items()}

    sa, sb = sparse(a), sparse(b)
    acc: dict[tuple[int, ...], list] = {}
    for k, ea, eb in blocks:
        s = (k * unit) % L
        right = [(kb, sb[kb]) for kb, _ in eb.items()]
        for ka, _ in ea.items():
            left = sa[ka]
            for kb, cb in right:
                key = tuple(map(add, ka, kb))
                d = acc.get(key)
                if d is None:
                    d = acc[key] = [0] * L
                for ja, va in left:
                    for jb, vb in cb:
                        d[(ja + jb + s) % L] += va * vb
    out = {key: Cyclotomic.reduce(L, d) for key, d in acc.items()}
    return Element._raw(a.table, out).normalize()


def deformed_involution(e: Element, p: DeformationParams) -> Element:
    """Adjoint for the deformed product.

    A term of degree ``(n1, n2)`` is sent to its undeformed adjoint times
    ``lam**(n1*n2)``, which makes the map anti-multiplicative for both
    twist conventions.
    """
    out = Element.zero(e.table)
    for d, comp in e.components().items():
        out = out + involution(comp).scale(p.lam_power(d[0] * d[1]))
    return out


@dataclass
class CentralityReport:
    central: bool
    failures: list[int]

    def __bool__(self) -> bool:
        return self.central


def is_central(e: Element, basis: list[Element], p: DeformationParams) -> CentralityReport:
    """Whether ``e`` twist-commutes with every element of ``basis``."""
    bad = [i for i, f in enumerate(basis) if twist_product(e, f, p) != twist_product(f, e, p)]
    return CentralityReport(not bad, bad)


_residual = max_difference


def torus_relations(p: DeformationParams, table: GeneratorTable | None = None) -> dict[str, float]:
    """Residuals of the defining relations of the noncommutative torus.

    Each entry is the max coefficient modulus of (lhs - rhs); zero means
    the relation holds.  Under the left twist the phase sits on ``V * U``.
    """
    t = table or torus_table()
    U, V = Element.generator(t, "U"), Element.generator(t, "V")
    uv, vu = twist_product(U, V, p), twist_product(V, U, p)
    lam = p.lam_power(1)
    if p.convention is Convention.LEFT:
        return {
            "V ⋆ U = lam UV": _residual(vu, (U * V).scale(lam)),
            "U ⋆ V = UV": _residual(uv, U * V),
            "V ⋆ U = lam U ⋆ V": _residual(vu, uv.scale(lam)),
        }
    return {
        "U ⋆ V = lam UV": _residual(uv, (U * V).scale(lam)),
        "V ⋆ U = UV": _residual(vu, U * V),
        "U ⋆ V = lam V ⋆ U": _residual(uv, vu.scale(lam)),
    }


def sphere_relations(p: DeformationParams) -> dict[str, float]:
    """Residuals of the theta-sphere commutation relations and radius centrality."""
    t = sphere4_table()
    al, be, x = (Element.generator(t, n) for n in ("alpha", "beta", "x"))
    als, bes = Element.generator(t, "alpha*"), Element.generator(t, "beta*")
    lam, lam_bar = p.lam_power(1), p.lam_power(-1)
    if p.convention is Convention.LEFT:
        lam, lam_bar = lam_bar, lam

    def tp(f, g):
        return twist_product(f, g, p)

    radius = al * als + be * bes + x * x
    rep = is_central(radius, [al, be, x, als, bes], p)
    return {
        "alpha ⋆ beta = lam beta ⋆ alpha": _residual(tp(al, be), tp(be, al).scale(lam)),
        "alpha ⋆ beta* = lam^-1 beta* ⋆ alpha": _residual(tp(al, bes), tp(bes, al).scale(lam_bar)),
        "alpha* ⋆ beta = lam^-1 beta ⋆ alpha*": _residual(tp(als, be), tp(be, als).scale(lam_bar)),
        "alpha* ⋆ beta* = lam beta* ⋆ alpha*": _residual(tp(als, bes), tp(bes, als).scale(lam)),
        "x central": float(not is_central(x, [al, be, als, bes], p)),
        "radius central": float(not rep),
    }
