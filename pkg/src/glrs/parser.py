"""Recursive-descent parser for the expression grammar used in spec files.

    equation := sum ['=' sum]              (lhs = rhs is read as lhs - rhs)
    sum      := tprod (('+' | '-') tprod)*
    tprod    := term ('@' term)*           (tensor product of legs)
    term     := unary (('*' | '/') unary)*
    unary    := ('-' | '+') unary | power
    power    := atom ['^' exponent]
    exponent := ['-'|'+'] INT | '(' ['-'|'+'] INT ['/' INT] ')'
    atom     := INT | IDENT | '(' sum ')'

Parsing yields a small AST of tuples; `evaluate` folds it with a name resolver,
so the same grammar serves Scalars, NCPolys and tensors.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Callable

from .errors import ParseError

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*'*)|(.))")


def tokenize(text: str) -> list[tuple[str, str, int]]:
    toks = []
    pos = 0
    n = len(text)
    while pos < n:
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        if m.group(1) is not None:
            toks.append(("int", m.group(1), m.start(1)))
        elif m.group(2) is not None:
            toks.append(("name", m.group(2), m.start(2)))
        elif m.group(3) is not None:
            ch = m.group(3)
            if ch not in "+-*/^()@=":
                raise ParseError(f"unexpected character {ch!r}", column=m.start(3) + 1)
            toks.append(("op", ch, m.start(3)))
        pos = m.end()
    toks.append(("end", "", len(text)))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        what = "end of input" if tok[0] == "end" else repr(tok[1])
        raise ParseError(f"{msg}, found {what}", column=tok[2] + 1)

    def expect(self, op):
        t = self.peek()
        if t[0] != "op" or t[1] != op:
            self.error(f"expected {op!r}")
        return self.take()

    def is_op(self, *ops):
        t = self.peek()
        return t[0] == "op" and t[1] in ops

    def equation(self):
        lhs = self.sum()
        if self.is_op("="):
            self.take()
            rhs = self.sum()
            lhs = ("sub", lhs, rhs)
        if self.peek()[0] != "end":
            self.error("unexpected trailing input")
        return lhs

    def sum(self):
        node = self.tprod()
        while self.is_op("+", "-"):
            op = self.take()[1]
            rhs = self.tprod()
            node = ("add" if op == "+" else "sub", node, rhs)
        return node

    def tprod(self):
        node = self.term()
        if not self.is_op("@"):
            return node
        legs = [node]
        while self.is_op("@"):
            self.take()
            legs.append(self.term())
        return ("tensor", legs)

    def term(self):
        node = self.unary()
        while self.is_op("*", "/"):
            op = self.take()[1]
            rhs = self.unary()
            node = ("mul" if op == "*" else "div", node, rhs)
        return node

    def unary(self):
        if self.is_op("-"):
            self.take()
            return ("neg", self.unary())
        if self.is_op("+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        node = self.atom()
        if self.is_op("^"):
            self.take()
            node = ("pow", node, self.exponent())
        return node

    def _signed_int(self):
        sign = 1
        if self.is_op("-", "+"):
            sign = -1 if self.take()[1] == "-" else 1
        t = self.peek()
        if t[0] != "int":
            self.error("expected integer exponent")
        self.take()
        return sign * int(t[1])

    def exponent(self):
        if self.is_op("("):
            self.take()
            num = self._signed_int()
            den = 1
            if self.is_op("/"):
                self.take()
                t = self.peek()
                if t[0] != "int":
                    self.error("expected integer denominator")
                self.take()
                den = int(t[1])
                if den == 0:
                    self.error("zero denominator in exponent", t)
            self.expect(")")
            return Fraction(num, den)
        return Fraction(self._signed_int())

    def atom(self):
        t = self.peek()
        if t[0] == "int":
            self.take()
            return ("num", Fraction(int(t[1])))
        if t[0] == "name":
            self.take()
            return ("name", t[1], t[2])
        if self.is_op("("):
            self.take()
            node = self.sum()
            self.expect(")")
            return node
        self.error("expected a number, a name or '('")


def parse(text: str):
    """Parse an expression (optionally an equation) into an AST."""
    return _Parser(text).equation()


def names_in(ast) -> list[tuple[str, int]]:
    """All identifiers with their 0-based offsets."""
    out = []
    stack = [ast]
    while stack:
        node = stack.pop()
        if node[0] == "name":
            out.append((node[1], node[2]))
        elif node[0] == "tensor":
            stack.extend(node[1])
        elif node[0] in ("add", "sub", "mul", "div"):
            stack.extend((node[1], node[2]))
        elif node[0] in ("neg", "pow"):
            stack.append(node[1])
    return sorted(out, key=lambda t: t[1])


def evaluate(ast, resolve: Callable, number: Callable, tensor: Callable | None = None):
    """Fold an AST.  `resolve(name, offset)` gives the value of an identifier,
    `number(Fraction)` lifts a literal, `tensor(list)` combines legs."""
    kind = ast[0]
    if kind == "num":
        return number(ast[1])
    if kind == "name":
        return resolve(ast[1], ast[2])
    if kind == "neg":
        return -evaluate(ast[1], resolve, number, tensor)
    if kind == "tensor":
        if tensor is None:
            raise ParseError("tensor product '@' not allowed here")
        return tensor([evaluate(x, resolve, number, tensor) for x in ast[1]])
    if kind == "pow":
        return evaluate(ast[1], resolve, number, tensor) ** ast[2]
    a = evaluate(ast[1], resolve, number, tensor)
    b = evaluate(ast[2], resolve, number, tensor)
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    if kind == "div":
        return a / b
    raise ParseError(f"unknown node {kind}")


def parse_poly(text: str, params, letters, definitions=None):
    """Parse an NCPoly (or a tensor of NCPolys when '@' occurs).  Names in
    `params` are scalar parameters, names in `letters` are generators and
    `definitions` maps further names to NCPolys; anything else is an
    undeclared symbol."""
    from .ncpoly import NCPoly, tensor
    from .scalar import Scalar

    params, letters = set(params), set(letters)
    definitions = definitions or {}

    def resolve(name, offset):
        if name in definitions:
            return definitions[name]
        if name in letters:
            return NCPoly.letter(name)
        if name in params:
            return NCPoly.const(Scalar.param(name))
        raise ParseError(f"undeclared symbol {name!r}", column=offset + 1)

    return evaluate(parse(text), resolve, NCPoly.const, tensor)
