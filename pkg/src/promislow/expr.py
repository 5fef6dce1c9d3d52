"""Expression grammar for ring elements.

    expr    := signed (('+' | '-') signed)*
    signed  := '-' signed | product
    product := power ('*' power)*
    power   := atom ('^' exponent)?
    exponent:= ['-'] INT | '(' ['-'] INT ')'
    atom    := INT | SYMBOL | '(' expr ')'

Precedence is ``^`` > ``*`` > unary minus > binary ``+``/``-``.  Symbols are
x, y, z, v, w, a, b, ab and t.  See FORMATS.md for the full contract.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from .algebra import DEFAULT_MODULUS, LaurentPoly, variables
from .group import BBAR, QElement, T, section
from .groupring import RingElemD, RingElemP

SYMBOLS = ("x", "y", "z", "v", "w", "a", "b", "ab", "t")


class ExprSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class OddHalfExponent(ValueError):
    """A v or w power left K[x, y, z] where an element of K[P] was needed."""


# AST


@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Sym:
    name: str


@dataclass(frozen=True)
class Neg:
    operand: "Expression"


@dataclass(frozen=True)
class BinOp:
    op: str  # '+', '-', '*'
    left: "Expression"
    right: "Expression"


@dataclass(frozen=True)
class Pow:
    base: "Expression"
    exponent: int


Expression = Union[Num, Sym, Neg, BinOp, Pow]

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z]+)|(.))")


def tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if match is None:
            break
        start = match.start(match.lastindex)
        if match.group(1):
            tokens.append(("INT", match.group(1), start))
        elif match.group(2):
            name = match.group(2)
            if name not in SYMBOLS:
                raise ExprSyntaxError(f"unknown symbol {name!r}", start)
            tokens.append(("SYM", name, start))
        else:
            ch = match.group(3)
            if ch not in "+-*^()":
                raise ExprSyntaxError(f"unexpected character {ch!r}", start)
            tokens.append((ch, ch, start))
        pos = match.end()
    tokens.append(("EOF", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.i = 0

    def peek(self) -> str:
        return self.tokens[self.i][0]

    def take(self, kind: str) -> tuple[str, str, int]:
        tok = self.tokens[self.i]
        if tok[0] != kind:
            found = "end of input" if tok[0] == "EOF" else repr(tok[1])
            raise ExprSyntaxError(f"expected {kind!r}, found {found}", tok[2])
        self.i += 1
        return tok

    def parse(self) -> Expression:
        node = self.expr()
        self.take("EOF")
        return node

    def expr(self) -> Expression:
        node = self.signed()
        while self.peek() in ("+", "-"):
            op = self.take(self.peek())[0]
            node = BinOp(op, node, self.signed())
        return node

    def signed(self) -> Expression:
        if self.peek() == "-":
            self.take("-")
            return Neg(self.signed())
        return self.product()

    def product(self) -> Expression:
        node = self.power()
        while self.peek() == "*":
            self.take("*")
            node = BinOp("*", node, self.power())
        return node

    def power(self) -> Expression:
        node = self.atom()
        if self.peek() == "^":
            self.take("^")
            node = Pow(node, self.exponent())
        return node

    def exponent(self) -> int:
        paren = self.peek() == "("
        if paren:
            self.take("(")
        sign = 1
        if self.peek() == "-":
            self.take("-")
            sign = -1
        value = sign * int(self.take("INT")[1])
        if paren:
            self.take(")")
        return value

    def atom(self) -> Expression:
        kind, value, pos = self.tokens[self.i]
        if kind == "INT":
            self.i += 1
            return Num(int(value))
        if kind == "SYM":
            self.i += 1
            return Sym(value)
        if kind == "(":
            self.i += 1
            node = self.expr()
            self.take(")")
            return node
        found = "end of input" if kind == "EOF" else repr(value)
        raise ExprSyntaxError(f"expected a number, symbol or '(', found {found}", pos)


def parse_expression(text: str) -> Expression:
    return _Parser(text).parse()


# printing with minimal parentheses; levels: 0 sum, 1 signed, 2 product, 3 power/atom


def to_text(node: Expression) -> str:
    return _print(node, 0)


def _print(node: Expression, level: int) -> str:
    if isinstance(node, Num):
        return str(node.value)
    if isinstance(node, Sym):
        return node.name
    if isinstance(node, Pow):
        text, own = f"{_print(node.base, 4)}^{node.exponent}", 3
    elif isinstance(node, Neg):
        text, own = "-" + _print(node.operand, 1), 1
    elif node.op == "*":
        text, own = f"{_print(node.left, 2)}*{_print(node.right, 3)}", 2
    else:
        text, own = f"{_print(node.left, 0)} {node.op} {_print(node.right, 1)}", 0
    return f"({text})" if own < level else text


# evaluation


def _parity_check(f: LaurentPoly) -> RingElemP:
    if not f.is_integral():
        raise OddHalfExponent(f"{f} has an odd power of v or w")
    return RingElemP.scalar(f)


class _PEvaluator:
    """Evaluate into LaurentPoly while commutative, K[P] once a or b appears."""

    def __init__(self, modulus: int):
        self.modulus = modulus
        self.vars = variables(modulus)

    def promote(self, val) -> RingElemP:
        return _parity_check(val) if isinstance(val, LaurentPoly) else val

    def eval(self, node: Expression):
        m = self.modulus
        if isinstance(node, Num):
            return LaurentPoly.constant(node.value, m)
        if isinstance(node, Sym):
            if node.name in self.vars:
                return self.vars[node.name]
            if node.name == "t":
                raise ValueError("symbol 't' belongs to K[D_inf], not K[P]")
            return RingElemP.from_group(section(QElement.from_label(node.name)), modulus=m)
        if isinstance(node, Neg):
            return -self.eval(node.operand)
        if isinstance(node, Pow):
            base = self.eval(node.base)
            try:
                return base ** node.exponent
            except ZeroDivisionError as exc:
                raise ValueError(str(exc)) from None
        left, right = self.eval(node.left), self.eval(node.right)
        if not (isinstance(left, LaurentPoly) and isinstance(right, LaurentPoly)):
            left, right = self.promote(left), self.promote(right)
        if node.op == "+":
            return left + right
        if node.op == "-":
            return left - right
        return left * right


def parse_ring_element(text: str, modulus: int = DEFAULT_MODULUS) -> RingElemP:
    """Parse text into an element of K[P]; ``a*a`` etc. are normalized through P."""
    value = _PEvaluator(modulus).eval(parse_expression(text))
    return _parity_check(value) if isinstance(value, LaurentPoly) else value


def parse_poly(text: str, modulus: int = DEFAULT_MODULUS) -> LaurentPoly:
    """Parse a polynomial in v, w, z (x, y as sugar); group symbols are rejected."""
    value = _PEvaluator(modulus).eval(parse_expression(text))
    if not isinstance(value, LaurentPoly):
        raise ValueError(f"{text!r} is not a commutative polynomial")
    return value


def parse_dihedral_element(text: str, modulus: int = DEFAULT_MODULUS) -> RingElemD:
    """Parse an element of K[D_inf] in the symbols t and b."""

    def ev(node: Expression) -> RingElemD:
        if isinstance(node, Num):
            return RingElemD.from_exponents({0: node.value}, {}, modulus)
        if isinstance(node, Sym):
            if node.name == "t":
                return RingElemD.from_group(T, modulus=modulus)
            if node.name == "b":
                return RingElemD.from_group(BBAR, modulus=modulus)
            raise ValueError(f"symbol {node.name!r} is not in K[D_inf]")
        if isinstance(node, Neg):
            return -ev(node.operand)
        if isinstance(node, Pow):
            base = ev(node.base)
            terms = list(base.terms())
            if node.exponent < 0:
                if len(terms) != 1 or terms[0][1] != 1:
                    raise ValueError("negative powers need a group element")
                base = RingElemD.from_group(terms[0][0].inverse(), modulus=modulus)
            out = RingElemD.one(modulus)
            for _ in range(abs(node.exponent)):
                out = out * base
            return out
        left, right = ev(node.left), ev(node.right)
        if node.op == "+":
            return left + right
        if node.op == "-":
            return left - right
        return left * right

    return ev(parse_expression(text))

