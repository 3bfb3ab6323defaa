"""Parse and print polynomial and rational-function expressions.

Grammar (infix, no implicit multiplication):

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor ('*' factor)*           (also '/' in rational mode)
    factor := base ('^' uint)?
    base   := number | var | '(' expr ')'
    number := uint ('/' uint)?

Printing uses a fixed canonical term order (graded, descending), so equal
polynomials always render to the same string and render/parse round-trips.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .algebra import Polynomial, RationalFunction, UnivariatePolynomial
from .errors import ParseError

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|([-+*/^()]))")
_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            raise ParseError(f"unexpected character {stripped[0]!r}", len(text) - len(stripped))
        if m.group(1) is not None:
            tokens.append(("num", m.group(1), m.start(1)))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), m.start(2)))
        else:
            tokens.append(("op", m.group(3), m.start(3)))
        pos = m.end()
    return tokens


class _Parser:
    """Recursive-descent parser; values are Polynomial or RationalFunction."""

    def __init__(self, text: str, variables: tuple[str, ...], rational_var: str | None):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0
        self.vars = variables
        self.rational_var = rational_var

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None, len(self.text))

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expect_op(self, op: str):
        kind, val, pos = self.take()
        if kind != "op" or val != op:
            raise ParseError(f"expected {op!r}", pos)

    def _const(self, value: Fraction):
        if self.rational_var is not None:
            return RationalFunction.from_const(self.rational_var, value)
        return Polynomial.constant(value, self.vars)

    def _var_value(self, name: str, pos: int):
        if self.rational_var is not None:
            if name != self.rational_var:
                raise ParseError(f"undeclared variable {name!r}", pos)
            return RationalFunction(UnivariatePolynomial.identity(name))
        if name not in self.vars:
            raise ParseError(f"undeclared variable {name!r}", pos)
        return Polynomial.variable(name).with_vars(self.vars)

    def parse(self):
        value = self.expr()
        kind, val, pos = self.peek()
        if kind is not None:
            raise ParseError(f"unexpected {val!r}", pos)
        return value

    def expr(self):
        kind, val, _ = self.peek()
        negate = False
        if kind == "op" and val in "+-":
            self.take()
            negate = val == "-"
        value = self.term()
        if negate:
            value = -value
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                rhs = self.term()
                value = value - rhs if val == "-" else value + rhs
            else:
                return value

    def term(self):
        value = self.factor()
        while True:
            kind, val, pos = self.peek()
            if kind == "op" and val == "*":
                self.take()
                value = value * self.factor()
            elif kind == "op" and val == "/":
                if self.rational_var is None:
                    raise ParseError("division is only allowed between integer literals", pos)
                self.take()
                rhs = self.factor()
                if rhs.num.is_zero:
                    raise ParseError("division by zero", pos)
                value = value / rhs
            else:
                return value

    def factor(self):
        value = self.base()
        kind, val, _ = self.peek()
        if kind == "op" and val == "^":
            self.take()
            kind, val, pos = self.take()
            if kind != "num":
                raise ParseError("exponent must be a non-negative integer", pos)
            value = value**int(val)
        return value

    def base(self):
        kind, val, pos = self.take()
        if kind == "num":
            value = Fraction(int(val))
            # Fold "p/q" literals in polynomial mode, where '/' is otherwise illegal.
            if self.rational_var is None:
                k2, v2, _ = self.peek()
                if k2 == "op" and v2 == "/":
                    k3, v3, p3 = self.tokens[self.i + 1] if self.i + 1 < len(self.tokens) else (None, None, pos)
                    if k3 == "num":
                        self.i += 2
                        if int(v3) == 0:
                            raise ParseError("zero denominator in rational literal", p3)
                        value /= int(v3)
                    else:
                        raise ParseError("division is only allowed between integer literals", p3)
            return self._const(value)
        if kind == "name":
            return self._var_value(val, pos)
        if kind == "op" and val == "(":
            inner = self.expr()
            self.expect_op(")")
            return inner
        if kind == "op" and val == "-":
            return -self.base()
        raise ParseError("expected a number, variable or parenthesized expression", pos)


def _check_text(text: str) -> str:
    if not isinstance(text, str) or not text.strip():
        raise ParseError("empty expression")
    return text


def _check_vars(variables) -> tuple[str, ...]:
    vs = tuple(variables)
    if len(set(vs)) != len(vs):
        raise ParseError("duplicate variable names")
    for v in vs:
        if not _IDENT.match(v):
            raise ParseError(f"invalid variable name {v!r}")
    return vs


def parse_polynomial(text: str, variables) -> Polynomial:
    """Parse an expression into the canonical expanded polynomial."""
    vs = _check_vars(variables)
    value = _Parser(_check_text(text), vs, None).parse()
    return value.with_vars(vs)


def parse_rational_function(text: str, variable: str) -> RationalFunction:
    """Parse a ratio of polynomials in one variable, reduced to coprime form."""
    (var,) = _check_vars([variable])
    return _Parser(_check_text(text), (var,), var).parse()


def _format_coefficient(c: Fraction) -> str:
    return str(c)


def _monomial_text(variables, exps) -> str:
    parts = []
    for v, e in zip(variables, exps):
        if e == 1:
            parts.append(v)
        elif e > 1:
            parts.append(f"{v}^{e}")
    return "*".join(parts)


def render_polynomial(p) -> str:
    """Canonical text for a polynomial: graded order, descending."""
    if isinstance(p, UnivariatePolynomial):
        p = p.to_polynomial()
    if p.is_zero:
        return "0"
    pieces = []
    for exps, coeff in p.sorted_terms():
        mono = _monomial_text(p.vars, exps)
        mag = abs(coeff)
        if not mono:
            body = _format_coefficient(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{_format_coefficient(mag)}*{mono}"
        if not pieces:
            pieces.append(body if coeff > 0 else f"-{body}")
        else:
            pieces.append(f" + {body}" if coeff > 0 else f" - {body}")
    return "".join(pieces)


def _parenthesize(text: str) -> str:
    if " + " in text or " - " in text or text.startswith("-"):
        return f"({text})"
    return text


def render_rational_function(rf: RationalFunction) -> str:
    num = render_polynomial(rf.num.to_polynomial())
    if rf.is_polynomial:
        return num
    den = render_polynomial(rf.den.to_polynomial())
    return f"{_parenthesize(num)}/{_parenthesize(den)}"
