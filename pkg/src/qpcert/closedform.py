"""Closed-form integer expressions in one variable n.

Grammar (whitespace insignificant, +/-/* left associative):

    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := atom ('^' POSINT)?
    atom   := INT | 'n' | '(' expr ')' | '-' atom
            | ('floor' | 'round' | 'trunc') '(' expr '/' POSINT ')'

'trunc' is accepted as an alias of 'floor' (they agree for non-negative
arguments, which is where certification windows live; the library
semantics are floor toward -inf for all n).  Divisors inside floor/round
must be positive integer literals.  floor rounds toward -inf; round is
nearest-integer with ties going half-up.

Every well-formed expression is integer-valued at every integer n, and is
a quasi-polynomial in n; expr_to_qp computes that quasi-polynomial
exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .polynomial import Poly
from .quasipoly import QuasiPoly


class ExprSyntaxError(ValueError):
    """Parse failure; `offset` is the byte position in the input."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"syntax error at offset {offset}: {message}")
        self.offset = offset


class DivisorNotLiteral(ExprSyntaxError):
    """The divisor inside floor/round was not a positive integer literal."""


class Expr:
    """Base class for expression AST nodes."""

    __slots__ = ()

    def __str__(self):
        return format_expr(self)


@dataclass(frozen=True)
class Const(Expr):
    value: int


@dataclass(frozen=True)
class Var(Expr):
    pass


@dataclass(frozen=True)
class Neg(Expr):
    operand: Expr


@dataclass(frozen=True)
class Add(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Sub(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Mul(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Pow(Expr):
    base: Expr
    exponent: int

    def __post_init__(self):
        if self.exponent < 1:
            raise ValueError("Pow exponent must be >= 1")


@dataclass(frozen=True)
class Floor(Expr):
    operand: Expr
    divisor: int

    def __post_init__(self):
        if self.divisor < 1:
            raise ValueError("Floor divisor must be >= 1")


@dataclass(frozen=True)
class Round(Expr):
    operand: Expr
    divisor: int

    def __post_init__(self):
        if self.divisor < 1:
            raise ValueError("Round divisor must be >= 1")


# -- tokenizer ---------------------------------------------------------

_SYMBOLS = "+-*^()/"


def _tokenize(text: str):
    """Yield (kind, value, offset) triples; kinds: int, name, sym, end."""
    toks = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch in " \t\r\n":
            i += 1
        elif ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            toks.append(("int", int(text[i:j]), i))
            i = j
        elif ch.isalpha():
            j = i
            while j < len(text) and text[j].isalpha():
                j += 1
            toks.append(("name", text[i:j], i))
            i = j
        elif ch in _SYMBOLS:
            toks.append(("sym", ch, i))
            i += 1
        else:
            raise ExprSyntaxError(f"unexpected character {ch!r}", i)
    toks.append(("end", "", len(text)))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.toks[self.pos]

    def advance(self):
        tok = self.toks[self.pos]
        self.pos += 1
        return tok

    def fail(self, expected: str):
        kind, value, offset = self.peek()
        found = "end of input" if kind == "end" else repr(str(value))
        raise ExprSyntaxError(f"expected {expected}, found {found}", offset)

    def eat_sym(self, sym: str):
        kind, value, _ = self.peek()
        if kind == "sym" and value == sym:
            return self.advance()
        self.fail(f"'{sym}'")

    def expr(self) -> Expr:
        node = self.term()
        while True:
            kind, value, _ = self.peek()
            if kind == "sym" and value in "+-":
                self.advance()
                rhs = self.term()
                node = Add(node, rhs) if value == "+" else Sub(node, rhs)
            else:
                return node

    def term(self) -> Expr:
        node = self.factor()
        while True:
            kind, value, _ = self.peek()
            if kind == "sym" and value == "*":
                self.advance()
                node = Mul(node, self.factor())
            else:
                return node

    def factor(self) -> Expr:
        node = self.atom()
        kind, value, _ = self.peek()
        if kind == "sym" and value == "^":
            self.advance()
            kind, value, offset = self.peek()
            if kind != "int" or value < 1:
                self.fail("a positive integer exponent")
            self.advance()
            node = Pow(node, value)
        return node

    def atom(self) -> Expr:
        kind, value, offset = self.peek()
        if kind == "int":
            self.advance()
            return Const(value)
        if kind == "name" and value == "n":
            self.advance()
            return Var()
        if kind == "name" and value in ("floor", "round", "trunc"):
            self.advance()
            self.eat_sym("(")
            inner = self.expr()
            self.eat_sym("/")
            kind, divisor, offset = self.peek()
            if kind != "int":
                found = "end of input" if kind == "end" else repr(str(divisor))
                raise DivisorNotLiteral(
                    f"divisor must be a positive integer literal, found {found}", offset
                )
            if divisor < 1:
                raise DivisorNotLiteral(
                    f"divisor must be a positive integer literal, found {divisor}", offset
                )
            self.advance()
            self.eat_sym(")")
            if value == "round":
                return Round(inner, divisor)
            return Floor(inner, divisor)
        if kind == "name":
            raise ExprSyntaxError(
                f"unknown identifier {value!r} (expected 'n', 'floor', 'round' or 'trunc')",
                offset,
            )
        if kind == "sym" and value == "(":
            self.advance()
            inner = self.expr()
            self.eat_sym(")")
            return inner
        if kind == "sym" and value == "-":
            self.advance()
            return Neg(self.atom())
        self.fail("an integer, 'n', '(', '-', 'floor' or 'round'")


def parse(text: str) -> Expr:
    """Parse a closed-form expression; see the module grammar.

    Raises ExprSyntaxError (with byte offset) on malformed input and
    DivisorNotLiteral when a floor/round divisor is not a positive
    integer literal.
    """
    p = _Parser(text)
    node = p.expr()
    kind, value, offset = p.peek()
    if kind != "end":
        raise ExprSyntaxError(f"unexpected trailing input {str(value)!r}", offset)
    return node


# -- evaluation --------------------------------------------------------


def expr_eval(e: Expr, n: int) -> int:
    """Evaluate at integer n; always yields an integer.

    Floor divides toward -inf (Python's //); round is nearest with ties
    half-up, computed as (2v + m) // (2m) so no floats are involved.
    """
    if isinstance(e, Const):
        return e.value
    if isinstance(e, Var):
        return n
    if isinstance(e, Neg):
        return -expr_eval(e.operand, n)
    if isinstance(e, Add):
        return expr_eval(e.left, n) + expr_eval(e.right, n)
    if isinstance(e, Sub):
        return expr_eval(e.left, n) - expr_eval(e.right, n)
    if isinstance(e, Mul):
        return expr_eval(e.left, n) * expr_eval(e.right, n)
    if isinstance(e, Pow):
        return expr_eval(e.base, n) ** e.exponent
    if isinstance(e, Floor):
        return expr_eval(e.operand, n) // e.divisor
    if isinstance(e, Round):
        v = expr_eval(e.operand, n)
        return (2 * v + e.divisor) // (2 * e.divisor)
    raise TypeError(f"not an Expr node: {e!r}")


# -- pretty printer ----------------------------------------------------

# Precedence levels: 0 expr (+/-), 1 term (*), 2 factor (^), 3 atom.
_LEVEL = {Add: 0, Sub: 0, Mul: 1, Pow: 2}


def _fmt(e: Expr, need: int) -> str:
    level = _LEVEL.get(type(e), 3)
    if isinstance(e, Add):
        body = f"{_fmt(e.left, 0)} + {_fmt(e.right, 1)}"
    elif isinstance(e, Sub):
        body = f"{_fmt(e.left, 0)} - {_fmt(e.right, 1)}"
    elif isinstance(e, Mul):
        body = f"{_fmt(e.left, 1)}*{_fmt(e.right, 2)}"
    elif isinstance(e, Pow):
        body = f"{_fmt(e.base, 3)}^{e.exponent}"
    elif isinstance(e, Neg):
        body = f"-{_fmt(e.operand, 3)}"
    elif isinstance(e, Floor):
        # operand at factor level: "floor((n + 2)/4)", not "floor(n + 2/4)"
        body = f"floor({_fmt(e.operand, 2)}/{e.divisor})"
    elif isinstance(e, Round):
        body = f"round({_fmt(e.operand, 2)}/{e.divisor})"
    elif isinstance(e, Const):
        body = str(e.value)
    elif isinstance(e, Var):
        body = "n"
    else:
        raise TypeError(f"not an Expr node: {e!r}")
    return f"({body})" if level < need else body


def format_expr(e: Expr) -> str:
    """Render to the concrete syntax; re-parsing a parsed AST is identity."""
    return _fmt(e, 0)


# -- conversion to quasi-polynomials -----------------------------------


def expr_to_qp(e: Expr) -> QuasiPoly:
    """Exact quasi-polynomial equal to the expression at every integer.

    Structural recursion: constants and n are period-1 polynomials,
    +,-,* go through quasi-polynomial closure, and floor/round map to the
    exact floor/round division operations.  The result is canonical.
    """
    if isinstance(e, Const):
        return QuasiPoly.constant(e.value)
    if isinstance(e, Var):
        return QuasiPoly.from_poly(Poly(0, 1))
    if isinstance(e, Neg):
        return -expr_to_qp(e.operand)
    if isinstance(e, Add):
        return expr_to_qp(e.left) + expr_to_qp(e.right)
    if isinstance(e, Sub):
        return expr_to_qp(e.left) - expr_to_qp(e.right)
    if isinstance(e, Mul):
        return expr_to_qp(e.left) * expr_to_qp(e.right)
    if isinstance(e, Pow):
        base = expr_to_qp(e.base)
        out = base
        for _ in range(e.exponent - 1):
            out = out * base
        return out
    if isinstance(e, Floor):
        return expr_to_qp(e.operand).floor_div(e.divisor)
    if isinstance(e, Round):
        return expr_to_qp(e.operand).round_div(e.divisor)
    raise TypeError(f"not an Expr node: {e!r}")
