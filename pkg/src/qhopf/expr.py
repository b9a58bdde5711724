"""A small expression language for algebra elements.

Grammar::

    expr    := ['-'] term (('+' | '-') term)*
    term    := factor (factor | '/' factor)*        juxtaposition is the product
    factor  := atom ('^' ['-'] uint | "'")*
    atom    := ident | 'q' | uint | '(' expr ')'

Identifiers are single letters of the selected algebra, so ``ad`` reads as
``a d``.  The postfix apostrophe is the adjoint.  Negative powers and
division are only allowed for scalar (generator-free) operands.
"""
from __future__ import annotations

from dataclasses import dataclass

from .algebras import get
from .ncpoly import NCPoly, star
from .qrat import QRat


class ExprSyntaxError(ValueError):
    def __init__(self, message, column):
        self.column = column
        super().__init__(f"column {column}: {message}")


class ExprError(ValueError):
    """Well-formed input that cannot be evaluated in the chosen algebra."""


# -- AST ------------------------------------------------------------------------------

@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Q:
    pass


@dataclass(frozen=True)
class Gen:
    name: str


@dataclass(frozen=True)
class Neg:
    arg: object


@dataclass(frozen=True)
class Add:
    left: object
    right: object


@dataclass(frozen=True)
class Sub:
    left: object
    right: object


@dataclass(frozen=True)
class Mul:
    left: object
    right: object


@dataclass(frozen=True)
class Div:
    left: object
    right: object


@dataclass(frozen=True)
class Pow:
    base: object
    exp: int


@dataclass(frozen=True)
class Adj:
    arg: object


# -- lexer ----------------------------------------------------------------------------

def _tokens(src: str):
    i = 0
    while i < len(src):
        ch = src[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < len(src) and src[j].isdigit():
                j += 1
            yield ("int", src[i:j], i + 1)
            i = j
        elif ch.isalpha():
            yield ("ident", ch, i + 1)
            i += 1
        elif ch in "+-^'()/":
            yield (ch, ch, i + 1)
            i += 1
        else:
            raise ExprSyntaxError(f"unexpected character {ch!r}", i + 1)
    yield ("end", "", len(src) + 1)


class _Parser:
    def __init__(self, src):
        self.toks = list(_tokens(src))
        self.pos = 0

    @property
    def tok(self):
        return self.toks[self.pos]

    def take(self):
        t = self.tok
        self.pos += 1
        return t

    def expr(self):
        if self.tok[0] == "-":
            self.take()
            node = Neg(self.term())
        else:
            node = self.term()
        while self.tok[0] in ("+", "-"):
            op, _, col = self.take()
            if self.tok[0] == "end":
                raise ExprSyntaxError(f"{op!r} needs a right operand", col)
            rhs = self.term()
            node = Add(node, rhs) if op == "+" else Sub(node, rhs)
        return node

    def _starts_atom(self):
        return self.tok[0] in ("ident", "int", "(")

    def term(self):
        node = self.factor()
        while True:
            if self.tok[0] == "/":
                col = self.take()[2]
                if self.tok[0] == "end":
                    raise ExprSyntaxError("'/' needs a divisor", col)
                node = Div(node, self.factor())
            elif self._starts_atom():
                node = Mul(node, self.factor())
            else:
                return node

    def factor(self):
        node = self.atom()
        while self.tok[0] in ("^", "'"):
            kind, _, col = self.take()
            if kind == "'":
                node = Adj(node)
                continue
            sign = 1
            if self.tok[0] == "-":
                self.take()
                sign = -1
            if self.tok[0] != "int":
                raise ExprSyntaxError("'^' must be followed by an integer exponent", col)
            node = Pow(node, sign * int(self.take()[1]))
        return node

    def atom(self):
        kind, text, col = self.tok
        if kind == "int":
            self.take()
            return Num(int(text))
        if kind == "ident":
            self.take()
            return Q() if text == "q" else Gen(text)
        if kind == "(":
            self.take()
            node = self.expr()
            if self.tok[0] != ")":
                raise ExprSyntaxError("unmatched '('", col)
            self.take()
            return node
        raise ExprSyntaxError(f"expected an operand, found {text or 'end of input'!r}", col)


def parse(src: str, algebra: str | None = None):
    """Parse ``src``; with ``algebra`` given, identifiers are checked against it."""
    p = _Parser(src)
    node = p.expr()
    if p.tok[0] != "end":
        raise ExprSyntaxError(f"unexpected {p.tok[1]!r}", p.tok[2])
    if algebra is not None:
        pres = get(algebra)
        allowed = {x for x in pres.letters if not x.endswith("*")}
        for name, col in _idents(src):
            if name != "q" and name not in allowed:
                raise ExprSyntaxError(f"unknown identifier {name!r} for {algebra}", col)
    return node


def _idents(src):
    return [(t[1], t[2]) for t in _tokens(src) if t[0] == "ident"]


# -- pretty printer -----------------------------------------------------------------

_SUM, _TERM, _FACTOR, _ATOM = range(4)


def pretty(node) -> str:
    return _pp(node, _SUM, True)


def _pp(node, level, lead=False):
    """Print ``node`` so it parses back at grammar ``level``.

    ``lead`` marks the leftmost position of a sum, the only place a bare
    leading minus is allowed.
    """
    if isinstance(node, Num):
        return str(node.value)
    if isinstance(node, Q):
        return "q"
    if isinstance(node, Gen):
        return node.name
    if isinstance(node, Neg):
        s = "-" + _pp(node.arg, _TERM)
        return s if (lead and level <= _SUM) else f"({s})"
    if isinstance(node, (Add, Sub)):
        op = " + " if isinstance(node, Add) else " - "
        s = _pp(node.left, _SUM, True) + op + _pp(node.right, _TERM)
        return s if level <= _SUM else f"({s})"
    if isinstance(node, (Mul, Div)):
        left = _pp(node.left, _TERM)
        right = _pp(node.right, _FACTOR)
        s = f"{left} {right}" if isinstance(node, Mul) else f"{left}/{right}"
        return s if level <= _TERM else f"({s})"
    if isinstance(node, (Pow, Adj)):
        base = _pp(node.base if isinstance(node, Pow) else node.arg, _ATOM)
        s = f"{base}^{node.exp}" if isinstance(node, Pow) else base + "'"
        return s  # postfix chains are always atoms
    raise TypeError(f"not an expression node: {node!r}")


# -- evaluation ----------------------------------------------------------------------

def evaluate(node, algebra: str):
    """Value of ``node`` in ``algebra`` as an NCPoly."""
    pres = get(algebra)
    value = _eval(node, pres)
    return value if isinstance(value, NCPoly) else NCPoly.scalar(pres, value)


def _eval(node, pres):
    if isinstance(node, Num):
        return QRat(node.value)
    if isinstance(node, Q):
        return QRat.q(1)
    if isinstance(node, Gen):
        if node.name not in pres.letters or node.name.endswith("*"):
            raise ExprError(f"{node.name!r} is not a generator of {pres.name}")
        return NCPoly.gen(pres, node.name)
    if isinstance(node, Neg):
        return -_eval(node.arg, pres)
    if isinstance(node, (Add, Sub, Mul)):
        a, b = _eval(node.left, pres), _eval(node.right, pres)
        if isinstance(a, QRat) and isinstance(b, NCPoly):
            a = NCPoly.scalar(pres, a)
        if isinstance(node, Add):
            return a + b
        if isinstance(node, Sub):
            return a - b
        return a * b
    if isinstance(node, Div):
        a, b = _eval(node.left, pres), _eval(node.right, pres)
        if isinstance(b, NCPoly):
            raise ExprError("division by a non-scalar")
        if b.is_zero():
            raise ExprError("division by zero")
        return a * b.inverse()
    if isinstance(node, Pow):
        base = _eval(node.base, pres)
        if node.exp < 0 and isinstance(base, NCPoly):
            raise ExprError("negative power of a non-scalar")
        if node.exp < 0 and base.is_zero():
            raise ExprError("negative power of zero")
        return base ** node.exp
    if isinstance(node, Adj):
        value = _eval(node.arg, pres)
        return value if isinstance(value, QRat) else star(value)
    raise TypeError(f"not an expression node: {node!r}")


def parse_poly(src: str, algebra: str) -> NCPoly:
    return evaluate(parse(src, algebra), algebra)
