"""Expression language for elements of a deformed algebra.

Grammar (whitespace is insignificant except around the star suffix)::

    expr    := term (('+' | '-') term)*
    term    := dterm ('.' dterm)*          undeformed product
    dterm   := unary ('*' unary)*          deformed (twisted) product
    unary   := '-' unary | power
    power   := primary ('^' ['-'] digits)*
    primary := number | 'i' | name ['*'] | '(' expr ')' | '(' real ',' real ')'

Numbers are integers, decimals (``0.25``) or rationals (``1/4``) and are kept
exact.  ``name*`` is the adjoint generator; a ``*`` written directly after a
name is read as the adjoint suffix when the next character cannot start an
operand (end, space, or one of ``)+-*.^,``).  So ``U*V`` is a product, while
``U* + V`` and ``U**V`` involve the adjoint ``U*``.  Powers use the deformed
product.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, ParseError
from .graded import Element, GeneratorTable
from .phase import Cyclotomic
from .twist import DeformationParams, twist_product

__all__ = [
    "Scalar",
    "Gen",
    "Neg",
    "Add",
    "Sub",
    "Product",
    "Power",
    "parse",
    "to_string",
    "evaluate",
    "evaluate_text",
]


@dataclass(frozen=True)
class Scalar:
    re: Fraction
    im: Fraction = Fraction(0)


@dataclass(frozen=True)
class Gen:
    name: str
    star: bool = False

    @property
    def slot(self) -> str:
        return self.name + "*" if self.star else self.name


@dataclass(frozen=True)
class Neg:
    operand: object


@dataclass(frozen=True)
class Add:
    left: object
    right: object


@dataclass(frozen=True)
class Sub:
    left: object
    right: object


@dataclass(frozen=True)
class Product:
    left: object
    right: object
    deformed: bool


@dataclass(frozen=True)
class Power:
    base: object
    exponent: int


_NUM = re.compile(r"\d+(?:\.\d+|/\d+)?")
_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_STAR_FOLLOW = set(")+-*.^,") | {" ", "\t", "\n", "\r"}


@dataclass
class _Tok:
    kind: str  # num, name, star_name, op, end
    text: str
    pos: int


def _tokenize(text: str) -> list[_Tok]:
    toks = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        m = _NUM.match(text, i)
        if m:
            toks.append(_Tok("num", m.group(), i))
            i = m.end()
            continue
        m = _NAME.match(text, i)
        if m:
            j = m.end()
            if j < n and text[j] == "*" and (j + 1 == n or text[j + 1] in _STAR_FOLLOW):
                toks.append(_Tok("star_name", m.group(), i))
                i = j + 1
            else:
                toks.append(_Tok("name", m.group(), i))
                i = j
            continue
        if ch in "+-*.^(),":
            toks.append(_Tok("op", ch, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    toks.append(_Tok("end", "", n))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def take(self) -> _Tok:
        t = self.toks[self.i]
        self.i += 1
        return t

    def at(self, op: str) -> bool:
        return self.tok.kind == "op" and self.tok.text == op

    def expect(self, op: str) -> None:
        if not self.at(op):
            raise ParseError(f"expected {op!r}", self.tok.pos)
        self.take()

    def expr(self):
        node = self.term()
        while self.at("+") or self.at("-"):
            op = self.take().text
            rhs = self.term()
            node = Add(node, rhs) if op == "+" else Sub(node, rhs)
        return node

    def term(self):
        node = self.dterm()
        while self.at("."):
            self.take()
            node = Product(node, self.dterm(), deformed=False)
        return node

    def dterm(self):
        node = self.unary()
        while self.at("*"):
            self.take()
            node = Product(node, self.unary(), deformed=True)
        return node

    def unary(self):
        if self.at("-"):
            self.take()
            return Neg(self.unary())
        return self.power()

    def power(self):
        node = self.primary()
        while self.at("^"):
            self.take()
            sign = 1
            if self.at("-"):
                self.take()
                sign = -1
            t = self.tok
            if t.kind != "num" or not t.text.isdigit():
                raise ParseError("expected integer exponent", t.pos)
            self.take()
            node = Power(node, sign * int(t.text))
        return node

    def primary(self):
        t = self.tok
        if t.kind == "num":
            self.take()
            return Scalar(Fraction(t.text))
        if t.kind == "name":
            self.take()
            return Scalar(Fraction(0), Fraction(1)) if t.text == "i" else Gen(t.text)
        if t.kind == "star_name":
            self.take()
            if t.text == "i":
                raise ParseError("'i' is the imaginary unit and has no adjoint suffix", t.pos)
            return Gen(t.text, star=True)
        if self.at("("):
            self.take()
            inner = self.expr()
            if self.at(","):
                comma = self.take()
                im = self.expr()
                re_v, im_v = _real_literal(inner), _real_literal(im)
                if re_v is None or im_v is None:
                    raise ParseError("complex literal needs real number parts", comma.pos)
                self.expect(")")
                return Scalar(re_v, im_v)
            self.expect(")")
            return inner
        if t.kind == "end":
            raise ParseError("unexpected end of input", t.pos)
        raise ParseError(f"unexpected {t.text!r}", t.pos)


def _real_literal(node) -> Fraction | None:
    if isinstance(node, Scalar) and node.im == 0:
        return node.re
    if isinstance(node, Neg):
        v = _real_literal(node.operand)
        return None if v is None else -v
    return None


def parse(text: str):
    """Parse ``text`` into an expression tree; raises :class:`ParseError`."""
    p = _Parser(text)
    node = p.expr()
    if p.tok.kind != "end":
        raise ParseError(f"unexpected {p.tok.text!r}", p.tok.pos)
    return node


def _fmt_num(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def to_string(node) -> str:
    """Fully parenthesized source text; ``parse(to_string(t)) == t``."""
    if isinstance(node, Scalar):
        if node.im == 0 and node.re >= 0:
            return _fmt_num(node.re)
        return f"({_fmt_num(node.re)},{_fmt_num(node.im)})"
    if isinstance(node, Gen):
        return node.slot
    if isinstance(node, Neg):
        return f"-({to_string(node.operand)})"
    if isinstance(node, Add):
        return f"({to_string(node.left)} + {to_string(node.right)})"
    if isinstance(node, Sub):
        return f"({to_string(node.left)} - {to_string(node.right)})"
    if isinstance(node, Product):
        op = "*" if node.deformed else "."
        return f"({to_string(node.left)} {op} {to_string(node.right)})"
    if isinstance(node, Power):
        return f"({to_string(node.base)})^{node.exponent}"
    raise TypeError(f"not an expression node: {node!r}")


def _star_inverse(e: Element, p: DeformationParams) -> Element:
    if len(e) != 1:
        raise DomainError("negative powers need a monomial base")
    inv = e ** -1
    # right inverse for the twist: m * m' = 1 needs the lam**(a1*a2) correction
    d = e.degree
    return inv.scale(p.lam_power(p.exponent(d, d)))


def evaluate(node, table: GeneratorTable, p: DeformationParams) -> Element:
    """Evaluate bottom-up; ``*`` dispatches to the twisted product."""
    if isinstance(node, Scalar):
        return Element.scalar(table, Cyclotomic.gaussian(node.re, node.im))
    if isinstance(node, Gen):
        return Element.generator(table, node.slot)
    if isinstance(node, Neg):
        return -evaluate(node.operand, table, p)
    if isinstance(node, Add):
        return evaluate(node.left, table, p) + evaluate(node.right, table, p)
    if isinstance(node, Sub):
        return evaluate(node.left, table, p) - evaluate(node.right, table, p)
    if isinstance(node, Product):
        a = evaluate(node.left, table, p)
        b = evaluate(node.right, table, p)
        return twist_product(a, b, p) if node.deformed else a * b
    if isinstance(node, Power):
        base = evaluate(node.base, table, p)
        k = node.exponent
        if k < 0:
            base, k = _star_inverse(base, p), -k
        out = Element.one(table)
        for _ in range(k):
            out = twist_product(out, base, p)
        return out
    raise TypeError(f"not an expression node: {node!r}")


def evaluate_text(text: str, table: GeneratorTable, p: DeformationParams) -> Element:
    return evaluate(parse(text), table, p).normalize()
