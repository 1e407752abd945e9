"""Recursive-descent parser for polynomial expressions.

Grammar::

    expr     := term (('+' | '-') term)*
    term     := factor ('*' factor)*
    factor   := base ('^' natural)?
    base     := rational | ident | '(' expr ')' | '-' factor
    rational := integer ('/' positive-integer)?

There is no implicit multiplication. Identifiers are an ASCII letter
followed by letters, digits or underscores.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from gmpy2 import mpq

from .poly import Polynomial, VarSet


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        self.line = line
        self.column = column
        super().__init__(f"{message} (line {line}, column {column})")


class UnknownIdentifier(ParseError):
    pass


class BadExponent(ParseError):
    pass


_TOKEN = re.compile(
    r"(?P<ws>[ \t\r\n]+)|(?P<num>[0-9]+)|(?P<ident>[A-Za-z][A-Za-z0-9_]*)|(?P<op>[-+*/^()])"
)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    column: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos, line, col = 0, 1, 1
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        chunk = m.group()
        if kind != "ws":
            tokens.append(Token(kind, chunk, line, col))
        for ch in chunk:
            if ch == "\n":
                line, col = line + 1, 1
            else:
                col += 1
        pos = m.end()
    tokens.append(Token("end", "", line, col))
    return tokens


class _Parser:
    def __init__(self, text: str, varset: VarSet):
        self.toks = tokenize(text)
        self.i = 0
        self.vs = varset

    def peek(self) -> Token:
        return self.toks[self.i]

    def take(self) -> Token:
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, text: str) -> Token:
        t = self.take()
        if t.text != text:
            raise ParseError(f"expected {text!r}, found {t.text or 'end of input'!r}", t.line, t.column)
        return t

    def parse(self) -> Polynomial:
        if self.peek().kind == "end":
            t = self.peek()
            raise ParseError("empty expression", t.line, t.column)
        p = self.expr()
        t = self.peek()
        if t.kind != "end":
            raise ParseError(f"unexpected {t.text!r}", t.line, t.column)
        return p

    def expr(self) -> Polynomial:
        p = self.term()
        while self.peek().text in ("+", "-"):
            op = self.take().text
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self) -> Polynomial:
        p = self.factor()
        while self.peek().text == "*":
            self.take()
            p = p * self.factor()
        return p

    def factor(self) -> Polynomial:
        p = self.base()
        if self.peek().text == "^":
            self.take()
            t = self.take()
            if t.kind != "num":
                raise BadExponent("exponent must be a non-negative integer literal", t.line, t.column)
            p = p ** int(t.text)
        return p

    def base(self) -> Polynomial:
        t = self.take()
        if t.kind == "num":
            value = mpq(int(t.text))
            if self.peek().text == "/":
                self.take()
                d = self.take()
                if d.kind != "num" or int(d.text) == 0:
                    raise ParseError("denominator must be a positive integer", d.line, d.column)
                value = mpq(int(t.text), int(d.text))
            return Polynomial.constant(self.vs, value)
        if t.kind == "ident":
            if t.text not in self.vs:
                raise UnknownIdentifier(f"unknown identifier {t.text!r}", t.line, t.column)
            return Polynomial.variable(self.vs, t.text)
        if t.text == "(":
            p = self.expr()
            self.expect(")")
            return p
        if t.text == "-":
            return -self.factor()
        raise ParseError(f"unexpected {t.text or 'end of input'!r}", t.line, t.column)


def parse_polynomial(text: str, varset: VarSet) -> Polynomial:
    return _Parser(text, varset).parse()
