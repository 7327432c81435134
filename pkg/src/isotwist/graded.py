"""The undeformed commutative Z^2-graded *-algebra.

Elements are finite sums of monomials in a fixed set of generators.  Every
generator carries a torus weight (a :class:`Bidegree`); a monomial's degree is
the weighted sum of its exponents.  The additive group R^2 acts on a term of
degree ``(n1, n2)`` by the phase ``exp(2*pi*i*(x1*n1 + x2*n2))``.

Coefficients are either exact (:class:`~isotwist.phase.Cyclotomic`, which
covers integers, rationals, Gaussian rationals and rational roots of unity)
or ordinary float ``complex`` values.  Exact inputs stay exact through every
operation whose phases are rational.
"""
from __future__ import annotations

import functools
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Complex
from operator import add
from typing import Iterable, Iterator, Mapping, NamedTuple

from .errors import DomainError
from .phase import Cyclotomic, as_fraction, exp2pi

PRUNE_TOL = 1e-12


class Bidegree(NamedTuple):
    """Torus weight ``(n1, n2)`` of a homogeneous element."""

    n1: int
    n2: int

    def __add__(self, other) -> Bidegree:  # type: ignore[override]
        return Bidegree(self.n1 + other[0], self.n2 + other[1])

    def __sub__(self, other) -> Bidegree:
        return Bidegree(self.n1 - other[0], self.n2 - other[1])

    def __neg__(self) -> Bidegree:
        return Bidegree(-self.n1, -self.n2)

    def __mul__(self, k) -> Bidegree:  # type: ignore[override]
        return Bidegree(self.n1 * k, self.n2 * k)

    __rmul__ = __mul__


ZERO_DEGREE = Bidegree(0, 0)


@dataclass(frozen=True)
class Generator:
    name: str
    degree: Bidegree
    invertible: bool = False
    hermitian: bool = False

    def __post_init__(self):
        object.__setattr__(self, "degree", Bidegree(*self.degree))
        if not self.name.isidentifier() or self.name == "i":
            raise DomainError(f"invalid generator name {self.name!r}")
        if self.hermitian and self.degree != ZERO_DEGREE:
            raise DomainError(f"hermitian generator {self.name} must have degree (0,0)")


@dataclass(frozen=True)
class GeneratorTable:
    """Ordered generator presentation.

    Each non-hermitian generator ``g`` gets a second exponent slot for its
    adjoint ``g*`` of degree ``-degree(g)``; hermitian generators are their
    own adjoint.  Exponent tuples are indexed by slot.
    """

    generators: tuple[Generator, ...]
    slots: tuple[str, ...] = field(init=False, repr=False, compare=False)
    slot_degrees: tuple[Bidegree, ...] = field(init=False, repr=False, compare=False)
    slot_invertible: tuple[bool, ...] = field(init=False, repr=False, compare=False)
    star_of: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        gens = tuple(self.generators)
        names = [g.name for g in gens]
        if len(set(names)) != len(names):
            raise DomainError("generator names must be unique")
        slots, degs, inv, star = [], [], [], []
        for g in gens:
            slots.append(g.name)
            degs.append(g.degree)
            inv.append(g.invertible)
            if g.hermitian:
                star.append(len(slots) - 1)
            else:
                slots.append(g.name + "*")
                degs.append(-g.degree)
                inv.append(g.invertible)
                star.extend([len(slots) - 1, len(slots) - 2])
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "slots", tuple(slots))
        object.__setattr__(self, "slot_degrees", tuple(degs))
        object.__setattr__(self, "slot_invertible", tuple(inv))
        object.__setattr__(self, "star_of", tuple(star))

    def __len__(self) -> int:
        return len(self.slots)

    def index(self, slot: str) -> int:
        """Exponent slot of ``slot``; ``x*`` resolves to ``x`` for hermitian ``x``."""
        try:
            return self.slots.index(slot)
        except ValueError:
            pass
        if slot.endswith("*") and slot[:-1] in self.slots:
            i = self.slots.index(slot[:-1])
            if self.star_of[i] == i:
                return i
        raise DomainError(f"unknown generator {slot!r}")

    def degree_of(self, exps: tuple[int, ...]) -> Bidegree:
        n1 = n2 = 0
        for k, d in zip(exps, self.slot_degrees):
            if k:
                n1 += k * d[0]
                n2 += k * d[1]
        return Bidegree(n1, n2)

    def check_exps(self, exps: tuple[int, ...]) -> None:
        if len(exps) != len(self.slots):
            raise DomainError(f"expected {len(self.slots)} exponents, got {len(exps)}")
        for k, name, inv in zip(exps, self.slots, self.slot_invertible):
            if k < 0 and not inv:
                raise DomainError(f"negative power of non-invertible generator {name}")

    def exps_from_map(self, exps: Mapping[str, int]) -> tuple[int, ...]:
        out = [0] * len(self.slots)
        for name, k in exps.items():
            out[self.index(name)] += int(k)
        t = tuple(out)
        self.check_exps(t)
        return t

    # -- JSON ------------------------------------------------------------
    @classmethod
    def from_json(cls, doc) -> GeneratorTable:
        if isinstance(doc, (str, bytes)):
            doc = json.loads(doc)
        try:
            gens = [
                Generator(
                    g["name"],
                    Bidegree(*map(int, g["degree"])),
                    bool(g.get("invertible", False)),
                    bool(g.get("hermitian", False)),
                )
                for g in doc["generators"]
            ]
        except (KeyError, TypeError) as exc:
            raise DomainError(f"malformed generator table: {exc}") from None
        return cls(tuple(gens))

    def to_json(self) -> dict:
        return {
            "generators": [
                {"name": g.name, "degree": list(g.degree), "invertible": g.invertible, "hermitian": g.hermitian}
                for g in self.generators
            ]
        }


def load_table(path) -> GeneratorTable:
    with open(path, encoding="utf-8") as fh:
        return GeneratorTable.from_json(json.load(fh))


def torus_table() -> GeneratorTable:
    """Laurent polynomials in invertible U (degree (1,0)) and V (degree (0,1))."""
    return GeneratorTable((Generator("U", Bidegree(1, 0), True), Generator("V", Bidegree(0, 1), True)))


def sphere4_table() -> GeneratorTable:
    """alpha (1,0), beta (0,1) and the hermitian central coordinate x."""
    return GeneratorTable(
        (
            Generator("alpha", Bidegree(1, 0)),
            Generator("beta", Bidegree(0, 1)),
            Generator("x", ZERO_DEGREE, hermitian=True),
        )
    )


# -- coefficients ---------------------------------------------------------

def as_coefficient(c):
    """Coerce a scalar to the coefficient representation.

    Integers and Fractions become exact; floats and complex become ``complex``.
    """
    if isinstance(c, Cyclotomic):
        return c
    f = as_fraction(c)
    if f is not None:
        return Cyclotomic.rational(f.numerator if f.denominator == 1 else f)
    if isinstance(c, Complex):
        return complex(c)
    raise TypeError(f"not a scalar: {c!r}")


def _negligible(c) -> bool:
    if isinstance(c, Cyclotomic):
        co = c.coords
        if not any(co):
            return True
        if c.level == 4 and type(co[0]) is int and type(co[1]) is int:
            return False  # nonzero Gaussian integer
        return abs(complex(c)) < PRUNE_TOL
    return c == 0 or abs(c) < PRUNE_TOL


def _fmt_coeff(c) -> str:
    if isinstance(c, Cyclotomic):
        g = c.as_gaussian()
        if g is None:
            return f"({complex(c):.6g})"
        re, im = g
        if im == 0:
            return str(re)
        if re == 0:
            return "i" if im == 1 else "-i" if im == -1 else f"{im}i"
        return f"({re}{'+' if im > 0 else '-'}{abs(im)}i)"
    if c.imag == 0:
        return f"{c.real:.6g}"
    return f"({c:.6g})"


# -- monomials and elements -----------------------------------------------

@dataclass(frozen=True)
class Monomial:
    coeff: object
    exps: tuple[int, ...]
    table: GeneratorTable = field(compare=False)

    def __post_init__(self):
        object.__setattr__(self, "coeff", as_coefficient(self.coeff))
        object.__setattr__(self, "exps", tuple(int(k) for k in self.exps))
        self.table.check_exps(self.exps)

    @classmethod
    def from_map(cls, table: GeneratorTable, exps: Mapping[str, int], coeff=1) -> Monomial:
        return cls(coeff, table.exps_from_map(exps), table)

    @property
    def degree(self) -> Bidegree:
        return self.table.degree_of(self.exps)

    @property
    def exps_map(self) -> dict[str, int]:
        return {s: k for s, k in zip(self.table.slots, self.exps) if k}

    def __str__(self) -> str:
        return _fmt_term(self.table, self.exps, self.coeff)


def _fmt_word(table: GeneratorTable, exps) -> str:
    parts = [s if k == 1 else f"{s}^{k}" for s, k in zip(table.slots, exps) if k]
    return "·".join(parts)


def _fmt_term(table, exps, c) -> str:
    word = _fmt_word(table, exps)
    if not word:
        return _fmt_coeff(c)
    return word if c == 1 else f"{_fmt_coeff(c)}·{word}"


class Element:
    """Finite sum of monomials over a :class:`GeneratorTable`.

    Like terms are summed on construction; :meth:`normalize` additionally
    drops coefficients below ``PRUNE_TOL``.  ``a * b`` is the *undeformed*
    commutative product; the deformed products live in :mod:`isotwist.twist`
    and :mod:`isotwist.rieffel`.
    """

    __slots__ = ("table", "_terms")

    def __init__(self, table: GeneratorTable, terms: Iterable[Monomial] = ()):
        self.table = table
        acc: dict[tuple[int, ...], object] = {}
        for m in terms:
            if m.table != table:
                raise DomainError("monomial over a different generator table")
            if m.exps in acc:
                acc[m.exps] = acc[m.exps] + m.coeff
            else:
                acc[m.exps] = m.coeff
        self._terms = acc

    @classmethod
    def _raw(cls, table: GeneratorTable, terms: dict) -> Element:
        e = cls.__new__(cls)
        e.table = table
        e._terms = terms
        return e

    # -- construction helpers ------------------------------------------
    @classmethod
    def zero(cls, table: GeneratorTable) -> Element:
        return cls._raw(table, {})

    @classmethod
    def scalar(cls, table: GeneratorTable, c=1) -> Element:
        return cls(table, [Monomial(c, (0,) * len(table), table)]).normalize()

    one = scalar

    @classmethod
    def monomial(cls, table: GeneratorTable, exps: Mapping[str, int] | None = None, coeff=1) -> Element:
        return cls(table, [Monomial.from_map(table, exps or {}, coeff)]).normalize()

    @classmethod
    def generator(cls, table: GeneratorTable, name: str, power: int = 1) -> Element:
        return cls.monomial(table, {name: power})

    # -- inspection ----------------------------------------------------
    @property
    def terms(self) -> list[Monomial]:
        """Monomials in canonical (lexicographic exponent) order."""
        return [Monomial(self._terms[k], k, self.table) for k in sorted(self._terms)]

    def items(self) -> Iterator[tuple[tuple[int, ...], object]]:
        return iter(self._terms.items())

    def coeff(self, exps: Mapping[str, int] | tuple[int, ...] = ()):
        key = exps if isinstance(exps, tuple) and len(exps) == len(self.table) else self.table.exps_from_map(dict(exps))
        return self._terms.get(key, 0)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self.terms)

    def is_zero(self) -> bool:
        return not self.normalize()._terms

    def degrees(self) -> set[Bidegree]:
        return {self.table.degree_of(k) for k in self._terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    @property
    def degree(self) -> Bidegree:
        degs = self.degrees()
        if len(degs) != 1:
            raise DomainError("element is not homogeneous")
        return next(iter(degs))

    def components(self) -> dict[Bidegree, Element]:
        """Split into homogeneous components keyed by degree."""
        out: dict[Bidegree, dict] = {}
        for k, c in self._terms.items():
            out.setdefault(self.table.degree_of(k), {})[k] = c
        return {d: Element._raw(self.table, t) for d, t in out.items()}

    def is_exact(self) -> bool:
        return all(isinstance(c, Cyclotomic) for c in self._terms.values())

    def max_abs(self) -> float:
        return max((abs(c) for c in self._terms.values()), default=0.0)

    # -- normalization and arithmetic ------------------------------------
    def normalize(self) -> Element:
        return Element._raw(self.table, {k: c for k, c in self._terms.items() if not _negligible(c)})

    def _check(self, other: Element) -> None:
        if not isinstance(other, Element):
            raise TypeError(f"expected Element, got {type(other).__name__}")
        if other.table != self.table:
            raise DomainError("elements over different generator tables")

    def __add__(self, other):
        if not isinstance(other, Element):
            other = Element.scalar(self.table, other)
        self._check(other)
        acc = dict(self._terms)
        for k, c in other._terms.items():
            acc[k] = acc[k] + c if k in acc else c
        return Element._raw(self.table, acc).normalize()

    __radd__ = __add__

    def __neg__(self):
        return Element._raw(self.table, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Element):
            other = Element.scalar(self.table, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> Element:
        c = as_coefficient(c)
        return Element._raw(self.table, {k: v * c for k, v in self._terms.items()}).normalize()

    def __mul__(self, other):
        if isinstance(other, Element):
            return phased_product(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, n: int) -> Element:
        if n < 0:
            if len(self._terms) != 1:
                raise DomainError("only monomials have inverses")
            (k, c), = self._terms.items()
            inv = tuple(-x for x in k)
            self.table.check_exps(inv)
            return Element._raw(self.table, {inv: 1 / c}) ** (-n)
        out = Element.one(self.table)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, Element):
            if self.table != other.table:
                return False
            return self._terms == other._terms or self.normalize()._terms == other.normalize()._terms
        if isinstance(other, Complex):
            return self == Element.scalar(self.table, other)
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(_fmt_term(self.table, k, self._terms[k]) for k in sorted(self._terms))

    def __repr__(self) -> str:
        return f"Element({self})"

    # -- JSON ------------------------------------------------------------
    def to_json(self) -> dict:
        return {
            "terms": [
                {"coeff": coeff_to_json(m.coeff), "exps": m.exps_map}
                for m in self.terms
            ]
        }

    @classmethod
    def from_json(cls, doc, table: GeneratorTable) -> Element:
        if isinstance(doc, (str, bytes)):
            doc = json.loads(doc)
        return cls(
            table,
            [Monomial.from_map(table, t.get("exps", {}), coeff_from_json(t["coeff"])) for t in doc["terms"]],
        )


def max_difference(a: Element, b: Element) -> float:
    """Largest coefficient modulus of ``a - b``, computed without pruning."""
    a._check(b)
    keys = a._terms.keys() | b._terms.keys()
    best = 0.0
    for k in keys:
        x, y = a._terms.get(k), b._terms.get(k)
        if x is not None and y is not None and type(x) is type(y) is Cyclotomic and x == y:
            continue
        d = x if y is None else -y if x is None else x - y
        if isinstance(d, Cyclotomic) and d.is_zero():
            continue
        best = max(best, abs(d))
    return best


def coeff_to_json(c) -> list:
    if isinstance(c, Cyclotomic):
        g = c.as_gaussian()
        if g is not None and g[0].denominator == 1 and g[1].denominator == 1:
            return [int(g[0]), int(g[1])]
        c = complex(c)
    return [c.real, c.imag]


def coeff_from_json(pair):
    re, im = pair
    if isinstance(re, int) and isinstance(im, int):
        return Cyclotomic.gaussian(re, im)
    return complex(float(re), float(im))


# -- the bilinear kernel --------------------------------------------------

def _lcm(*xs: int) -> int:
    out = 1
    for x in xs:
        out = out * x // math.gcd(out, x)
    return out


def phased_product(a: Element, b: Element, form=None, rate=0, base=None) -> Element:
    """Bilinear product with a degree-dependent phase.

    Each pair of terms multiplies as in the commutative algebra and is
    scaled by ``exp(2*pi*i*rate*Q)`` where ``Q = da . form . db`` is the
    quadratic pairing of the two degrees (``form`` is row-major
    ``(f11, f12, f21, f22)``).  If ``base`` is given the phase is
    ``base**Q`` instead, which needs integer ``Q``.  With rational ``rate``
    and ``form`` and exact coefficients the result is exact.
    """
    a._check(b)
    table = a.table
    if form is None:
        form = (0, 0, 0, 0)
        rate = 0
        base = None
    if base is None and a.is_exact() and b.is_exact():
        try:
            integral = _integral_form(rate, tuple(form))
        except TypeError:  # unhashable entries
            integral = None
        if integral is not None:
            return _exact_kernel(a, b, integral)
    return _float_kernel(a, b, form, rate, base)


@functools.lru_cache(maxsize=256)
def _integral_form(rate, form) -> tuple[int, tuple[int, ...]] | None:
    """``rate * form`` as ``(D, integer entries)`` over a common denominator D."""
    r = as_fraction(rate)
    fs = [as_fraction(f) for f in form]
    if r is None or any(f is None for f in fs):
        return None
    scaled = [r * f for f in fs]
    D = _lcm(*(f.denominator for f in scaled))
    return D, tuple(int(f * D) for f in scaled)


def _integer_terms(e: Element, L: int):
    """Terms of ``e`` lifted to level L as sparse integer coordinates over one denominator."""
    degree_of = e.table.degree_of
    lifted = [(k, c.lift(L).coords) for k, c in e._terms.items()]
    den = _lcm(*(v.denominator for _, co in lifted for v in co if v))
    terms = [
        (k, degree_of(k), [(j, v.numerator * (den // v.denominator)) for j, v in enumerate(co) if v])
        for k, co in lifted
    ]
    return den, terms


def _collect(table: GeneratorTable, acc: dict, L: int, den: int) -> Element:
    # dense integer accumulators -> canonical exact coefficients divided by den
    out = {}
    for key, d in acc.items():
        c = Cyclotomic.reduce(L, d)
        if any(c.coords):
            if den != 1:
                c = Cyclotomic._new(L, tuple(_simplify_fraction(x, den) for x in c.coords))
            if not _negligible(c):
                out[key] = c
    return Element._raw(table, out)


def _simplify_fraction(x: int, den: int):
    if not x:
        return 0
    f = Fraction(x, den)
    return f.numerator if f.denominator == 1 else f


def _exact_kernel(a: Element, b: Element, integral) -> Element:
    D, (g11, g12, g21, g22) = integral
    levels = {c.level for c in a._terms.values()} | {c.level for c in b._terms.values()}
    L = _lcm(4, D, *levels)
    step = L // D
    den_a, A = _integer_terms(a, L)
    den_b, B = _integer_terms(b, L)
    acc: dict[tuple[int, ...], list] = {}
    for ea, (a1, a2), ca in A:
        u1 = a1 * g11 + a2 * g21
        u2 = a1 * g12 + a2 * g22
        for eb, (b1, b2), cb in B:
            s = ((u1 * b1 + u2 * b2) % D) * step
            key = tuple(map(add, ea, eb))
            d = acc.get(key)
            if d is None:
                d = acc[key] = [0] * L
            for ka, va in ca:
                for kb, vb in cb:
                    d[(ka + kb + s) % L] += va * vb
    return _collect(a.table, acc, L, den_a * den_b)


def _float_kernel(a: Element, b: Element, form, rate, base) -> Element:
    table = a.table
    f11, f12, f21, f22 = form
    cache: dict = {}
    twopi_r = 2 * math.pi * float(rate)

    def phase(q):
        p = cache.get(q)
        if p is None:
            if base is not None:
                p = base**q
            else:
                p = complex(math.cos(twopi_r * q), math.sin(twopi_r * q))
            cache[q] = p
        return p

    A = [(k, table.degree_of(k), complex(c)) for k, c in a._terms.items()]
    B = [(k, table.degree_of(k), complex(c)) for k, c in b._terms.items()]
    acc: dict[tuple[int, ...], complex] = {}
    for ea, (a1, a2), ca in A:
        u1 = a1 * f11 + a2 * f21
        u2 = a1 * f12 + a2 * f22
        for eb, (b1, b2), cb in B:
            q = u1 * b1 + u2 * b2
            key = tuple(map(add, ea, eb))
            v = ca * cb if q == 0 else ca * cb * phase(q)
            acc[key] = acc.get(key, 0) + v
    return Element._raw(table, {k: c for k, c in acc.items() if abs(c) >= PRUNE_TOL})


def weighted_product(a: Element, b: Element, form) -> Element:
    """Bilinear product scaling each pair of terms by ``da . form . db``.

    This is the shape of a bracket built from two infinitesimal actions.
    Exact for rational ``form`` and exact coefficients.
    """
    a._check(b)
    table = a.table
    degree_of = table.degree_of
    integral = None
    if a.is_exact() and b.is_exact():
        try:
            integral = _integral_form(1, tuple(form))
        except TypeError:
            integral = None
    if integral is None:
        f11, f12, f21, f22 = (float(x) for x in form)
        acc: dict = {}
        B = [(k, degree_of(k), complex(c)) for k, c in b._terms.items()]
        for ka, ca in a._terms.items():
            a1, a2 = degree_of(ka)
            u1, u2 = a1 * f11 + a2 * f21, a1 * f12 + a2 * f22
            ca = complex(ca)
            for kb, (b1, b2), cb in B:
                w = u1 * b1 + u2 * b2
                if w:
                    key = tuple(map(add, ka, kb))
                    acc[key] = acc.get(key, 0) + w * ca * cb
        return Element._raw(table, acc).normalize()
    D, (g11, g12, g21, g22) = integral
    levels = {c.level for c in a._terms.values()} | {c.level for c in b._terms.values()}
    L = _lcm(4, *levels)

    den_a, A = _integer_terms(a, L)
    den_b, B = _integer_terms(b, L)
    acc = {}
    for ka, (a1, a2), ca in A:
        u1, u2 = a1 * g11 + a2 * g21, a1 * g12 + a2 * g22
        for kb, (b1, b2), cb in B:
            w = u1 * b1 + u2 * b2
            if not w:
                continue
            key = tuple(map(add, ka, kb))
            d = acc.get(key)
            if d is None:
                d = acc[key] = [0] * L
            for ja, va in ca:
                for jb, vb in cb:
                    d[(ja + jb) % L] += w * va * vb
    return _collect(table, acc, L, D * den_a * den_b)


# -- operations -------------------------------------------------------------

def monomial_mul(m1: Monomial, m2: Monomial) -> Monomial:
    """Undeformed product of two monomials."""
    if m1.table != m2.table:
        raise DomainError("monomials over different generator tables")
    return Monomial(m1.coeff * m2.coeff, tuple(map(add, m1.exps, m2.exps)), m1.table)


def element_normalize(e: Element) -> Element:
    return e.normalize()


def act(x, e: Element) -> Element:
    """The R^2 action: a term of degree (n1, n2) picks up exp(2*pi*i*(x1*n1 + x2*n2))."""
    x1, x2 = x
    out = {}
    for k, c in e._terms.items():
        n1, n2 = e.table.degree_of(k)
        out[k] = c * exp2pi(x1 * n1 + x2 * n2)
    return Element._raw(e.table, out).normalize()


def generator_action(j: int, e: Element) -> Element:
    """Infinitesimal generator p_j: scales a term of degree (n1, n2) by n_j."""
    if j not in (1, 2):
        raise DomainError("axis index must be 1 or 2")
    out = {}
    for k, c in e._terms.items():
        n = e.table.degree_of(k)[j - 1]
        out[k] = c * n
    return Element._raw(e.table, out).normalize()


def involution(e: Element) -> Element:
    """Undeformed *-operation: conjugate coefficients and swap g with g*."""
    star = e.table.star_of
    out = {}
    for k, c in e._terms.items():
        ks = [0] * len(k)
        for i, x in enumerate(k):
            if x:
                ks[star[i]] += x
        out[tuple(ks)] = c.conjugate()
    return Element._raw(e.table, out).normalize()
