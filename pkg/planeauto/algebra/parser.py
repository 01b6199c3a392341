"""Parser for polynomial expressions in x, y and the field generator t.

Grammar::

    expr   := term (("+" | "-") term)*
    term   := unary (("*" | "/") unary)*
    unary  := ("+" | "-") unary | power
    power  := atom ("^" INTEGER)?
    atom   := INTEGER | "x" | "y" | "t" | "(" expr ")"

Division is only allowed by constants.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from planeauto.algebra.field import FieldSpec
from planeauto.algebra.limits import limits
from planeauto.algebra.plane_poly import PlanePoly
from planeauto.exceptions import PolySyntaxError, ResourceCapExceeded

_TOKEN = re.compile(r"\s*(?:(\d+)|([xyt])|(\^|\*|/|\+|-|\(|\)))")


@dataclass
class Token:
    kind: str
    text: str
    position: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        match = _TOKEN.match(text, pos)
        if not match or match.end() == pos:
            raise PolySyntaxError(f"unexpected character {text[pos]!r}", pos, text)
        start = match.start(match.lastindex)
        if match.group(1):
            tokens.append(Token("int", match.group(1), start))
        elif match.group(2):
            tokens.append(Token("var", match.group(2), start))
        else:
            tokens.append(Token("op", match.group(3), start))
        pos = match.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, spec: FieldSpec):
        self.text = text
        self.spec = spec
        self.tokens = tokenize(text)
        self.index = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def advance(self) -> Token:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def error(self, message: str, token: Token | None = None) -> PolySyntaxError:
        token = token or self.current
        return PolySyntaxError(message, token.position, self.text)

    def expect(self, text: str) -> Token:
        if self.current.text != text:
            found = self.current.text or "end of input"
            raise self.error(f"expected {text!r}, found {found!r}")
        return self.advance()

    def parse(self) -> PlanePoly:
        if self.current.kind == "end":
            raise self.error("empty expression")
        result = self.expr()
        if self.current.kind != "end":
            raise self.error(f"unexpected {self.current.text!r}")
        return result

    def expr(self) -> PlanePoly:
        result = self.term()
        while self.current.text in ("+", "-"):
            op = self.advance().text
            rhs = self.term()
            result = result + rhs if op == "+" else result - rhs
        return result

    def term(self) -> PlanePoly:
        result = self.unary()
        while self.current.text in ("*", "/"):
            op_token = self.advance()
            rhs = self.unary()
            if op_token.text == "*":
                result = result * rhs
            else:
                if not rhs.is_constant() or not rhs:
                    raise self.error("division by a non-constant or zero", op_token)
                result = result / rhs.constant_value()
        return result

    def unary(self) -> PlanePoly:
        if self.current.text == "-":
            self.advance()
            return -self.unary()
        if self.current.text == "+":
            self.advance()
            return self.unary()
        return self.power()

    def power(self) -> PlanePoly:
        base = self.atom()
        if self.current.text == "^":
            self.advance()
            token = self.current
            if token.kind != "int":
                raise self.error("exponent must be a nonnegative integer literal")
            self.advance()
            exponent = int(token.text)
            if exponent > limits.exponent_cap:
                raise ResourceCapExceeded(
                    f"exponent {exponent} at position {token.position} exceeds the cap",
                    cap="exponent",
                    limit=limits.exponent_cap,
                )
            return base**exponent
        return base

    def atom(self) -> PlanePoly:
        token = self.current
        if token.kind == "int":
            self.advance()
            return PlanePoly.constant(self.spec, int(token.text))
        if token.kind == "var":
            self.advance()
            if token.text == "x":
                return PlanePoly.x(self.spec)
            if token.text == "y":
                return PlanePoly.y(self.spec)
            if self.spec.is_rationals:
                raise self.error("the generator t is not defined over Q", token)
            return PlanePoly.constant(self.spec, self.spec.gen())
        if token.text == "(":
            self.advance()
            inner = self.expr()
            self.expect(")")
            return inner
        found = token.text or "end of input"
        raise self.error(f"unexpected {found!r}")


def parse_poly(text: str, spec: FieldSpec) -> PlanePoly:
    """Parse ``text`` into a canonical ``PlanePoly`` over ``spec``."""
    return _Parser(text, spec).parse()
