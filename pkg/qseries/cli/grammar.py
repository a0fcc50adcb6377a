"""
Series expressions.

    expr    := term (("+" | "-") term)*
    term    := unary ("*" unary)*
    unary   := "-" unary | power
    power   := primary ("^" ["-"] INT)?
    primary := INT ["/" INT] | "zeta" | "t"k | "x"i | "inv" "(" expr ")" | "(" expr ")"

Products are left-associative and keep factor order (the ring is not
commutative). A negative power is only accepted on a monomial (products and
powers of x_i, t_k, zeta and numbers); anything else must go through inv().
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Union

from ..exceptions import ParseError
from ..lattice.qmatrix import QMatrix
from ..scalars import FieldElem, field_embed
from ..series.laurent import (
    LaurentElem,
    laurent_add,
    laurent_inv,
    laurent_mul,
    laurent_neg,
    laurent_pow,
)
from ..series.monomial import unit_vector
from ..series.skew import SkewSeries
from .config import RingConfig


# ── AST ──────────────────────────────────────────────────────────────
@dataclass(frozen=True)
class Num:
    value: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "value", Fraction(self.value))
        if self.value < 0:
            raise ValueError("number literals are non-negative; use Neg")


@dataclass(frozen=True)
class Zeta:
    pass


@dataclass(frozen=True)
class TVar:
    k: int


@dataclass(frozen=True)
class XVar:
    i: int


@dataclass(frozen=True)
class Add:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Sub:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Mul:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Neg:
    operand: "Expr"


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exponent: int


@dataclass(frozen=True)
class Inv:
    operand: "Expr"


Expr = Union[Num, Zeta, TVar, XVar, Add, Sub, Mul, Neg, Pow, Inv]


def is_monomial_expr(node: Expr) -> bool:
    if isinstance(node, (Num, Zeta, TVar, XVar)):
        return True
    if isinstance(node, (Mul,)):
        return is_monomial_expr(node.left) and is_monomial_expr(node.right)
    if isinstance(node, (Pow, Neg)):
        return is_monomial_expr(node.base if isinstance(node, Pow) else node.operand)
    return False


# ── tokens ───────────────────────────────────────────────────────────
@dataclass(frozen=True)
class Token:
    kind: str  # INT, NAME, OP, END
    value: str
    pos: int


_TOKEN_RE = re.compile(r"\s*(?:(?P<INT>\d+)|(?P<NAME>[A-Za-z_][A-Za-z0-9_]*)|(?P<OP>[-+*/^(),]))")


def tokenize(text: str) -> List[Token]:
    tokens: List[Token] = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        match = _TOKEN_RE.match(text, pos)
        if match is None:
            bad = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[bad]!r}", bad)
        kind = match.lastgroup or "OP"
        tokens.append(Token(kind, match.group(kind), match.start(kind)))
        pos = match.end()
    tokens.append(Token("END", "", len(text)))
    return tokens


# ── parser ───────────────────────────────────────────────────────────
_NAME_RE = re.compile(r"^(x|t)([1-9][0-9]*)$")


class _Parser:
    def __init__(self, text: str, cfg: Optional[RingConfig]) -> None:
        self.tokens = tokenize(text)
        self.i = 0
        self.cfg = cfg

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value: str) -> Token:
        if self.tok.value != value or self.tok.kind not in ("OP", "NAME"):
            raise ParseError(f"expected {value!r}, found {self.tok.value or 'end of input'!r}", self.tok.pos)
        return self.advance()

    def parse(self) -> Expr:
        node = self.expr()
        if self.tok.kind != "END":
            raise ParseError(f"unexpected {self.tok.value!r}", self.tok.pos)
        return node

    def expr(self) -> Expr:
        node = self.term()
        while self.tok.kind == "OP" and self.tok.value in "+-":
            op = self.advance().value
            right = self.term()
            node = Add(node, right) if op == "+" else Sub(node, right)
        return node

    def term(self) -> Expr:
        node = self.unary()
        while self.tok.kind == "OP" and self.tok.value == "*":
            self.advance()
            node = Mul(node, self.unary())
        return node

    def unary(self) -> Expr:
        if self.tok.kind == "OP" and self.tok.value == "-":
            self.advance()
            return Neg(self.unary())
        return self.power()

    def power(self) -> Expr:
        base = self.primary()
        if not (self.tok.kind == "OP" and self.tok.value == "^"):
            return base
        caret = self.advance()
        sign = 1
        if self.tok.kind == "OP" and self.tok.value == "-":
            self.advance()
            sign = -1
        if self.tok.kind != "INT":
            raise ParseError("exponent must be an integer", self.tok.pos)
        exponent = sign * int(self.advance().value)
        if exponent < 0 and not is_monomial_expr(base):
            raise ParseError("negative power of a non-monomial; use inv(...)", caret.pos)
        return Pow(base, exponent)

    def primary(self) -> Expr:
        tok = self.tok
        if tok.kind == "INT":
            self.advance()
            if self.tok.kind == "OP" and self.tok.value == "/":
                slash = self.advance()
                if self.tok.kind != "INT":
                    raise ParseError("'/' is only allowed between integer literals", slash.pos)
                den = int(self.advance().value)
                if den == 0:
                    raise ParseError("zero denominator", slash.pos)
                return Num(Fraction(int(tok.value), den))
            return Num(Fraction(int(tok.value)))
        if tok.kind == "OP" and tok.value == "(":
            self.advance()
            node = self.expr()
            self.expect(")")
            return node
        if tok.kind == "NAME":
            self.advance()
            if tok.value == "inv":
                self.expect("(")
                node = self.expr()
                self.expect(")")
                return Inv(node)
            if tok.value == "zeta":
                if self.cfg is not None and self.cfg.m == 1:
                    raise ParseError("zeta needs a torsion order m > 1", tok.pos)
                return Zeta()
            match = _NAME_RE.match(tok.value)
            if match is None:
                raise ParseError(f"unknown identifier {tok.value!r}", tok.pos)
            kind, index = match.group(1), int(match.group(2))
            limit = None
            if self.cfg is not None:
                limit = self.cfg.n if kind == "x" else self.cfg.r
            if limit is not None and index > limit:
                raise ParseError(f"unknown identifier {tok.value!r} (only {limit} declared)", tok.pos)
            return XVar(index) if kind == "x" else TVar(index)
        found = tok.value or "end of input"
        raise ParseError(f"unexpected {found!r}", tok.pos)


def parse_series(text: str, cfg: Optional[RingConfig] = None) -> Expr:
    """Parse *text*; identifiers are range-checked against *cfg* when given."""
    return _Parser(text, cfg).parse()


# ── canonical printing ───────────────────────────────────────────────
def _prec(node: Expr) -> int:
    if isinstance(node, (Add, Sub)):
        return 1
    if isinstance(node, Mul):
        return 2
    if isinstance(node, Neg):
        return 3
    if isinstance(node, Pow):
        return 4
    if isinstance(node, Num) and node.value.denominator != 1:
        return 4
    return 5


def format_expr(node: Expr, minimum: int = 0) -> str:
    """Canonical text; parse_series(format_expr(e)) == e."""
    if isinstance(node, Num):
        text = str(node.value)
    elif isinstance(node, Zeta):
        text = "zeta"
    elif isinstance(node, TVar):
        text = f"t{node.k}"
    elif isinstance(node, XVar):
        text = f"x{node.i}"
    elif isinstance(node, Add):
        text = f"{format_expr(node.left, 1)} + {format_expr(node.right, 2)}"
    elif isinstance(node, Sub):
        text = f"{format_expr(node.left, 1)} - {format_expr(node.right, 2)}"
    elif isinstance(node, Mul):
        text = f"{format_expr(node.left, 2)}*{format_expr(node.right, 3)}"
    elif isinstance(node, Neg):
        text = f"-{format_expr(node.operand, 3)}"
    elif isinstance(node, Pow):
        text = f"{format_expr(node.base, 5)}^{node.exponent}"
    elif isinstance(node, Inv):
        text = f"inv({format_expr(node.operand)})"
    else:  # pragma: no cover
        raise TypeError(f"not an expression node: {node!r}")
    return f"({text})" if _prec(node) < minimum else text


# ── evaluation ───────────────────────────────────────────────────────
def evaluate(node: Expr, q: QMatrix, precision: int) -> LaurentElem:
    """Value of *node* in the Laurent series ring, terms known below *precision*."""
    n, sig = q.n, q.signature

    def scalar(c: FieldElem) -> LaurentElem:
        return LaurentElem.from_series(SkewSeries.constant(n, sig, precision, c))

    def walk(e: Expr) -> LaurentElem:
        if isinstance(e, Num):
            return scalar(FieldElem.from_rational(sig, e.value))
        if isinstance(e, Zeta):
            return scalar(field_embed(sig.zeta()))
        if isinstance(e, TVar):
            return scalar(field_embed(sig.t(e.k)))
        if isinstance(e, XVar):
            if not 1 <= e.i <= n:
                raise ParseError(f"x{e.i} does not exist in a ring with {n} variables")
            return LaurentElem.from_series(
                SkewSeries.monomial(n, sig, precision, unit_vector(n, e.i))
            )
        if isinstance(e, Add):
            return laurent_add(q, walk(e.left), walk(e.right))
        if isinstance(e, Sub):
            return laurent_add(q, walk(e.left), laurent_neg(walk(e.right)))
        if isinstance(e, Mul):
            return laurent_mul(q, walk(e.left), walk(e.right))
        if isinstance(e, Neg):
            return laurent_neg(walk(e.operand))
        if isinstance(e, Pow):
            return laurent_pow(q, walk(e.base), e.exponent)
        if isinstance(e, Inv):
            return laurent_inv(q, walk(e.operand))
        raise TypeError(f"not an expression node: {e!r}")  # pragma: no cover

    return walk(node)


def evaluate_series(node: Expr, q: QMatrix, precision: int) -> Union[SkewSeries, LaurentElem]:
    """SkewSeries when no negative exponent survives, otherwise the LaurentElem."""
    value = evaluate(node, q, precision)
    if value.is_series(q):
        return value.to_series(q)
    return value
