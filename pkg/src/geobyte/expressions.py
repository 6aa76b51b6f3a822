"""Expression language for Clifford values: a small recursive-descent
parser and evaluator.

Grammar (products need an explicit '*'; "e12" is a single token):

    expr    := term (("+"|"-") term)*
    term    := factor ("*" factor)*
    factor  := "-" factor | atom
    atom    := NUMBER | "i" | CONST | FUNC "(" expr ")" | "(" expr ")"
    FUNC    := "rev" | "bar" | "conj"
    NUMBER  := decimal with optional "/" decimal
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from ._kernels import BLADE_NAMES
from .clusters import LABELS, paravector, structure_element
from .errors import ParseError
from .multivector import Multivector

# -- AST ---------------------------------------------------------------


@dataclass(frozen=True)
class Literal:
    value: float


@dataclass(frozen=True)
class Imaginary:
    pass


@dataclass(frozen=True)
class Const:
    name: str


@dataclass(frozen=True)
class Neg:
    child: "Expr"


@dataclass(frozen=True)
class Func:
    name: str
    child: "Expr"


@dataclass(frozen=True)
class BinOp:
    op: str  # "+", "-", "*"
    left: "Expr"
    right: "Expr"


Expr = Union[Literal, Imaginary, Const, Neg, Func, BinOp]

FUNC_NAMES = ("rev", "bar", "conj")

_CONSTANTS: dict[str, Multivector] = {}
for _n in BLADE_NAMES:
    _CONSTANTS[_n] = Multivector.basis(_n)
for _axis in (1, 2, 3):
    _CONSTANTS[f"P{_axis}"] = paravector(_axis, "positive").value
    _CONSTANTS[f"N{_axis}"] = paravector(_axis, "negative").value
for _label in LABELS:
    _CONSTANTS[_label] = structure_element(_label)

CONST_NAMES = tuple(_CONSTANTS)


# -- tokenizer ---------------------------------------------------------


@dataclass(frozen=True)
class _Token:
    kind: str  # "number", "name", "op", "lparen", "rparen", "end"
    text: str
    pos: int
    value: float = 0.0


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in "+-*":
            tokens.append(_Token("op", ch, i))
            i += 1
        elif ch == "(":
            tokens.append(_Token("lparen", ch, i))
            i += 1
        elif ch == ")":
            tokens.append(_Token("rparen", ch, i))
            i += 1
        elif ch.isdigit() or ch == ".":
            start = i
            i = _scan_decimal(text, i)
            value = float(text[start:i])
            if i < n and text[i] == "/":
                j = _scan_decimal(text, i + 1)
                if j == i + 1:
                    raise ParseError(
                        "expected denominator", i + 1, frozenset({"number"})
                    )
                value /= float(text[i + 1 : j])
                i = j
            tokens.append(_Token("number", text[start:i], start, value))
        elif ch.isalpha():
            start = i
            while i < n and text[i].isalnum():
                i += 1
            tokens.append(_Token("name", text[start:i], start))
        else:
            raise ParseError(
                f"unexpected character {ch!r}", i, frozenset({"token"})
            )
    tokens.append(_Token("end", "", n))
    return tokens


def _scan_decimal(text: str, i: int) -> int:
    n = len(text)
    while i < n and text[i].isdigit():
        i += 1
    if i < n and text[i] == ".":
        i += 1
        while i < n and text[i].isdigit():
            i += 1
    return i


# -- parser ------------------------------------------------------------

_ATOM_EXPECTED = frozenset({"number", "constant", "i", "function", "("})


class _Parser:
    def __init__(self, tokens: list[_Token]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str, expected: frozenset[str]) -> _Token:
        tok = self.peek()
        if tok.kind != kind:
            raise ParseError(
                f"unexpected {tok.kind} {tok.text!r}" if tok.kind != "end" else "unexpected end of input",
                tok.pos,
                expected,
            )
        return self.advance()

    def expr(self) -> Expr:
        node = self.term()
        while self.peek().kind == "op" and self.peek().text in "+-":
            op = self.advance().text
            node = BinOp(op, node, self.term())
        return node

    def term(self) -> Expr:
        node = self.factor()
        while self.peek().kind == "op" and self.peek().text == "*":
            self.advance()
            node = BinOp("*", node, self.factor())
        return node

    def factor(self) -> Expr:
        tok = self.peek()
        if tok.kind == "op" and tok.text == "-":
            self.advance()
            return Neg(self.factor())
        return self.atom()

    def atom(self) -> Expr:
        tok = self.peek()
        if tok.kind == "number":
            self.advance()
            return Literal(tok.value)
        if tok.kind == "lparen":
            self.advance()
            node = self.expr()
            self.expect("rparen", frozenset({")"}))
            return node
        if tok.kind == "name":
            self.advance()
            if tok.text == "i":
                return Imaginary()
            if tok.text in FUNC_NAMES:
                self.expect("lparen", frozenset({"("}))
                node = self.expr()
                self.expect("rparen", frozenset({")"}))
                return Func(tok.text, node)
            if tok.text in _CONSTANTS:
                return Const(tok.text)
            raise ParseError(
                f"unknown name {tok.text!r}", tok.pos, frozenset({"constant", "function"})
            )
        raise ParseError(
            f"unexpected {tok.kind} {tok.text!r}" if tok.kind != "end" else "unexpected end of input",
            tok.pos,
            _ATOM_EXPECTED,
        )


def parse(text: str) -> Expr:
    """Parse an expression; raises :class:`ParseError` with byte offset."""
    parser = _Parser(_tokenize(text))
    node = parser.expr()
    tok = parser.peek()
    if tok.kind != "end":
        raise ParseError(
            f"trailing input {tok.text!r}", tok.pos, frozenset({"+", "-", "*", "end"})
        )
    return node


_FUNC_IMPL = {
    "rev": Multivector.reversion,
    "bar": Multivector.grade_involution,
    "conj": Multivector.clifford_conjugation,
}

_I = Multivector.basis("e123")


def evaluate(e: Expr) -> Multivector:
    """Bottom-up evaluation to a multivector; i is the pseudoscalar."""
    if isinstance(e, Literal):
        return Multivector.scalar(e.value)
    if isinstance(e, Imaginary):
        return _I
    if isinstance(e, Const):
        return _CONSTANTS[e.name]
    if isinstance(e, Neg):
        return -evaluate(e.child)
    if isinstance(e, Func):
        return _FUNC_IMPL[e.name](evaluate(e.child))
    if isinstance(e, BinOp):
        left, right = evaluate(e.left), evaluate(e.right)
        if e.op == "+":
            return left + right
        if e.op == "-":
            return left - right
        return left * right
    raise TypeError(f"not an expression node: {e!r}")


def evaluate_text(text: str) -> Multivector:
    return evaluate(parse(text))


def format_expression(m: Multivector) -> str:
    """Render a multivector in re-parseable expression syntax."""
    parts: list[tuple[str, str]] = []
    for name in BLADE_NAMES:
        v = m[name]
        if v == 0.0:
            continue
        sign = "-" if v < 0 else "+"
        parts.append((sign, f"{abs(v)!r}*{name}"))
    if not parts:
        return "0*e0"
    first_sign, first = parts[0]
    out = (first_sign if first_sign == "-" else "") + first
    for sign, text in parts[1:]:
        out += f" {sign} {text}"
    return out
