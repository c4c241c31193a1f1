"""Text and JSON formats for ordinals.

Expression grammar (whitespace is ignored)::

    expr   := term ('+' term)*
    term   := factor ('*' factor)*
    factor := atom ('^' factor)?
    atom   := NAT | 'w' | '(' expr ')'

``^`` binds tightest and associates to the right.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Union

from .core import OMEGA, Ordinal, add, mul, nat, power
from .errors import MalformedCNF, OrdinalSyntaxError, SchemaError


@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Omega:
    pass


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "OrdExpr"
    right: "OrdExpr"


OrdExpr = Union[Num, Omega, BinOp]


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, expected):
        offset = len(self.text[: self.pos].encode("utf-8"))
        raise OrdinalSyntaxError(self.text, offset, expected, self.text[self.pos : self.pos + 1])

    def peek(self) -> str:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expr(self):
        node = self.term()
        while self.peek() == "+":
            self.pos += 1
            node = BinOp("+", node, self.term())
        return node

    def term(self):
        node = self.factor()
        while self.peek() == "*":
            self.pos += 1
            node = BinOp("*", node, self.factor())
        return node

    def factor(self):
        node = self.atom()
        if self.peek() == "^":
            self.pos += 1
            return BinOp("^", node, self.factor())
        return node

    def atom(self):
        c = self.peek()
        if c == "w":
            self.pos += 1
            return Omega()
        if c == "(":
            self.pos += 1
            node = self.expr()
            if self.peek() != ")":
                self.error({"')'", "'+'", "'*'", "'^'"})
            self.pos += 1
            return node
        if "0" <= c <= "9":
            start = self.pos
            while self.pos < len(self.text) and "0" <= self.text[self.pos] <= "9":
                self.pos += 1
            return Num(int(self.text[start : self.pos]))
        self.error({"natural number", "'w'", "'('"})


def parse(text: str) -> OrdExpr:
    p = _Parser(text)
    node = p.expr()
    if p.peek():
        p.error({"'+'", "'*'", "'^'", "end of input"})
    return node


def eval_expr(e: OrdExpr) -> Ordinal:
    if isinstance(e, Num):
        return nat(e.value)
    if isinstance(e, Omega):
        return OMEGA
    left, right = eval_expr(e.left), eval_expr(e.right)
    if e.op == "+":
        return add(left, right)
    if e.op == "*":
        return mul(left, right)
    return power(left, right)


def parse_ordinal(text: str) -> Ordinal:
    return eval_expr(parse(text))


def print_canonical(x: Ordinal) -> str:
    return str(x)


# -- JSON --------------------------------------------------------------------


def to_data(x: Ordinal) -> list:
    return [[to_data(e), str(c)] for e, c in x.terms]


def from_data(data) -> Ordinal:
    if not isinstance(data, list):
        raise SchemaError(f"expected a list of terms, got {type(data).__name__}")
    terms = []
    for term in data:
        if not (isinstance(term, list) and len(term) == 2):
            raise SchemaError(f"term {term!r} is not an [exponent, coefficient] pair")
        exp, coeff = term
        if not (isinstance(coeff, str) and coeff.isascii() and coeff.isdigit()):
            raise SchemaError(f"coefficient {coeff!r} is not a decimal string")
        terms.append((from_data(exp), int(coeff)))
    try:
        return Ordinal(terms)
    except MalformedCNF as exc:
        raise SchemaError(str(exc)) from exc


def to_json(x: Ordinal) -> str:
    return json.dumps(to_data(x), separators=(",", ":"))


def from_json(s: str) -> Ordinal:
    try:
        data = json.loads(s)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc}") from exc
    return from_data(data)
