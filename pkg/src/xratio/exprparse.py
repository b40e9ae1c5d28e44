"""Parser and serializer glue for field/ring expressions.

Grammar (recursive descent, one token of lookahead):

    expr   := '-'? term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := base ('^' nat)?
    base   := number | 'i' | identifier | '(' expr ')'

Numbers are nonnegative integers (rationals are spelled with '/'), 'i' is
the field's canonical square root of -1 and is rejected with a position
when the field has none, identifiers must be ring variables.  The result is
a RatFunc, so '/' is exact division in the fraction field; dividing by a
semantically zero subexpression is a parse-time error with a position.

Serialization is the inverse direction: MultiPoly.__str__ and
RatFunc.__str__ emit canonical graded-lex text that this parser accepts, so
round-tripping is an identity (tested property).
"""

from __future__ import annotations

import re

from .fields import Field, FieldElement, XratioError
from .poly import Ring
from .ratfunc import RatFunc, rat


class ParseError(XratioError):
    def __init__(self, message, pos):
        super().__init__(f"{message} (position {pos})")
        self.pos = pos


_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|([+\-*/^()]))")


def tokenize(text: str):
    """List of (kind, value, pos); kinds: num, ident, op, end."""
    out = []
    k = 0
    while k < len(text):
        m = _TOKEN_RE.match(text, k)
        if not m or m.end() == m.start():
            stripped = text[k:].lstrip()
            if not stripped:
                break
            pos = len(text) - len(stripped)
            raise ParseError(f"unexpected character {stripped[0]!r}", pos)
        if m.group(1):
            out.append(("num", int(m.group(1)), m.start(1)))
        elif m.group(2):
            out.append(("ident", m.group(2), m.start(2)))
        else:
            out.append(("op", m.group(3), m.start(3)))
        k = m.end()
    out.append(("end", None, len(text)))
    return out


def identifiers_in(text: str):
    """Variable names mentioned in an expression ('i' is not a variable)."""
    return {v for kind, v, _ in tokenize(text) if kind == "ident" and v != "i"}


class _Parser:
    def __init__(self, text, ring):
        self.text = text
        self.ring = ring
        self.tokens = tokenize(text)
        self.k = 0

    def peek(self):
        return self.tokens[self.k]

    def take(self):
        t = self.tokens[self.k]
        self.k += 1
        return t

    def expect_op(self, op):
        kind, v, pos = self.take()
        if kind != "op" or v != op:
            raise ParseError(f"expected {op!r}", pos)

    def parse(self) -> RatFunc:
        f = self.expr()
        kind, v, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected token {v!r}", pos)
        return f

    def expr(self) -> RatFunc:
        negate = False
        kind, v, _ = self.peek()
        if kind == "op" and v == "-":
            self.take()
            negate = True
        acc = self.term()
        if negate:
            acc = -acc
        while True:
            kind, v, _ = self.peek()
            if kind == "op" and v in "+-":
                self.take()
                t = self.term()
                acc = acc + t if v == "+" else acc - t
            else:
                return acc

    def term(self) -> RatFunc:
        acc = self.factor()
        while True:
            kind, v, pos = self.peek()
            if kind == "op" and v in "*/":
                self.take()
                f = self.factor()
                if v == "*":
                    acc = acc * f
                else:
                    if f.is_zero():
                        raise ParseError("division by a zero expression", pos)
                    acc = acc / f
            else:
                return acc

    def factor(self) -> RatFunc:
        b = self.base()
        kind, v, pos = self.peek()
        if kind == "op" and v == "^":
            self.take()
            kind, n, pos = self.take()
            if kind != "num":
                raise ParseError("exponent must be a nonnegative integer", pos)
            return b ** n
        return b

    def base(self) -> RatFunc:
        kind, v, pos = self.take()
        if kind == "num":
            return rat(self.ring, v)
        if kind == "ident":
            if v == "i":
                s = self.ring.field.sqrt_minus_one()
                if s is None:
                    raise ParseError(
                        f"'i' is undefined: {self.ring.field.name} has no square root of -1", pos)
                return rat(self.ring, s)
            if v not in self.ring._index:
                raise ParseError(f"unknown variable {v!r}", pos)
            return RatFunc(self.ring, self.ring.var(v))
        if kind == "op" and v == "(":
            f = self.expr()
            self.expect_op(")")
            return f
        raise ParseError(f"unexpected token {v!r}", pos)


def parse_expression(text: str, ring: Ring) -> RatFunc:
    return _Parser(text, ring).parse()


def parse_scalar(text: str, field: Field) -> FieldElement:
    """Parse a constant expression (no variables) into a field element."""
    f = parse_expression(text, Ring(field, ()))
    return f.num.constant_value() / f.den.constant_value()
