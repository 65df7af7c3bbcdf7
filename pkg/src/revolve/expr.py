"""Single-variable expression parsing and evaluation.

Boundary curves are given as strings like ``"sqrt(1-x^2)"`` and parsed into
immutable ASTs.  Grammar (loosest to tightest binding):

    sum     := term (('+' | '-') term)*
    term    := unary (('*' | '/') unary)*
    unary   := '-' unary | power
    power   := atom ('^' unary)?          # right-associative
    atom    := NUMBER | IDENT | IDENT '(' sum ')' | '(' sum ')'

so ``^`` is right-associative and binds tighter than unary minus
(``-2^2 == -4``, ``2^3^2 == 512``).  There is no implicit multiplication.
Identifiers must be the declared variable, a known function (sqrt, sin, cos,
tan, asin, acos, atan, exp, log, abs) or a known constant (pi, e; lowercase).

Evaluation is pure.  Any operation that leaves the real domain (sqrt of a
negative, log of a non-positive, division by zero) raises DomainError, and a
non-finite result (NaN or +/-Inf, e.g. from overflow) is normalized to
DomainError as well, so quadrature can treat all failures uniformly.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, ExprSyntaxError, UnknownIdentifierError

__all__ = ["ExprAst", "parse_expr", "parse_scalar", "eval_expr", "eval_array"]

_FUNCTIONS = {
    "sqrt": (math.sqrt, np.sqrt),
    "sin": (math.sin, np.sin),
    "cos": (math.cos, np.cos),
    "tan": (math.tan, np.tan),
    "asin": (math.asin, np.arcsin),
    "acos": (math.acos, np.arccos),
    "atan": (math.atan, np.arctan),
    "exp": (math.exp, np.exp),
    "log": (math.log, np.log),
    "abs": (abs, np.abs),
}

_CONSTANTS = {"pi": math.pi, "e": math.e}

_IDENT_RE = re.compile(r"[A-Za-z_][A-Za-z_0-9]*")


# ---------------------------------------------------------------------------
# AST nodes

@dataclass(frozen=True)
class Const:
    value: float


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Neg:
    operand: "Node"


@dataclass(frozen=True)
class BinOp:
    op: str  # one of + - * / ^
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Call:
    func: str
    arg: "Node"


Node = Const | Var | Neg | BinOp | Call


@dataclass(frozen=True)
class ExprAst:
    """Immutable parsed expression in (at most) one variable."""

    root: Node
    variable: str | None
    text: str

    def eval(self, value: float) -> float:
        return eval_expr(self, value)


# ---------------------------------------------------------------------------
# Tokenizer

@dataclass(frozen=True)
class _Token:
    kind: str  # "num" | "ident" | "op" | "end"
    text: str
    pos: int  # character offset into the source


_TOKEN_RE = re.compile(
    r"(?P<ws>\s+)"
    r"|(?P<num>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)"
    r"|(?P<ident>[A-Za-z_][A-Za-z_0-9]*)"
    r"|(?P<op>[()+\-*/^])"
)


def _byte_pos(text: str, char_pos: int) -> int:
    return len(text[:char_pos].encode("utf-8"))


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    i = 0
    while i < len(text):
        m = _TOKEN_RE.match(text, i)
        if m is None:
            raise ExprSyntaxError(
                f"unexpected character {text[i]!r}", _byte_pos(text, i)
            )
        if m.lastgroup != "ws":
            tokens.append(_Token(m.lastgroup, m.group(), i))
        i = m.end()
    tokens.append(_Token("end", "", len(text)))
    return tokens


# ---------------------------------------------------------------------------
# Parser

class _Parser:
    def __init__(self, text: str, variable: str | None):
        self.text = text
        self.variable = variable
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> _Token:
        return self.tokens[self.i]

    def advance(self) -> _Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, expected: str, tok: _Token):
        found = "end of input" if tok.kind == "end" else repr(tok.text)
        raise ExprSyntaxError(
            f"expected {expected}, found {found}", _byte_pos(self.text, tok.pos)
        )

    def expect_op(self, op: str):
        tok = self.peek()
        if tok.kind == "op" and tok.text == op:
            return self.advance()
        self.fail(f"'{op}'", tok)

    def parse(self) -> Node:
        node = self.sum()
        tok = self.peek()
        if tok.kind != "end":
            self.fail("end of input", tok)
        return node

    def sum(self) -> Node:
        node = self.term()
        while self.peek().kind == "op" and self.peek().text in "+-":
            op = self.advance().text
            node = BinOp(op, node, self.term())
        return node

    def term(self) -> Node:
        node = self.unary()
        while self.peek().kind == "op" and self.peek().text in "*/":
            op = self.advance().text
            node = BinOp(op, node, self.unary())
        return node

    def unary(self) -> Node:
        tok = self.peek()
        if tok.kind == "op" and tok.text == "-":
            self.advance()
            return Neg(self.unary())
        return self.power()

    def power(self) -> Node:
        node = self.atom()
        tok = self.peek()
        if tok.kind == "op" and tok.text == "^":
            self.advance()
            node = BinOp("^", node, self.unary())
        return node

    def atom(self) -> Node:
        tok = self.peek()
        if tok.kind == "num":
            self.advance()
            return Const(float(tok.text))
        if tok.kind == "op" and tok.text == "(":
            self.advance()
            node = self.sum()
            self.expect_op(")")
            return node
        if tok.kind == "ident":
            self.advance()
            name = tok.text
            if name in _FUNCTIONS:
                self.expect_op("(")
                arg = self.sum()
                self.expect_op(")")
                return Call(name, arg)
            if name == self.variable:
                return Var(name)
            if name in _CONSTANTS:
                return Const(_CONSTANTS[name])
            raise UnknownIdentifierError(name, _byte_pos(self.text, tok.pos))
        self.fail("a value", tok)


def parse_expr(text: str, variable: str | None) -> ExprAst:
    """Parse ``text`` as an expression in the single variable ``variable``.

    ``variable=None`` parses a constant expression (no variable allowed).
    Raises ExprSyntaxError or UnknownIdentifierError with a byte position.
    """
    if variable is not None:
        if not _IDENT_RE.fullmatch(variable):
            raise ValueError(f"invalid variable name {variable!r}")
        if variable in _FUNCTIONS or variable in _CONSTANTS:
            raise ValueError(f"variable name {variable!r} shadows a builtin")
    if not text:
        raise ExprSyntaxError("empty expression", 0)
    root = _Parser(text, variable).parse()
    return ExprAst(root, variable, text)


def parse_scalar(text) -> float:
    """Evaluate a constant expression string (or pass a number through)."""
    if isinstance(text, (int, float)) and not isinstance(text, bool):
        value = float(text)
        if not math.isfinite(value):
            raise DomainError(f"non-finite scalar {text!r}")
        return value
    ast = parse_expr(str(text), None)
    return _eval_node(ast.root, 0.0)


# ---------------------------------------------------------------------------
# Scalar evaluation

def _eval_node(node: Node, x: float) -> float:
    if isinstance(node, Const):
        return node.value
    if isinstance(node, Var):
        return x
    if isinstance(node, Neg):
        return -_eval_node(node.operand, x)
    if isinstance(node, BinOp):
        left = _eval_node(node.left, x)
        right = _eval_node(node.right, x)
        try:
            if node.op == "+":
                return left + right
            if node.op == "-":
                return left - right
            if node.op == "*":
                return left * right
            if node.op == "/":
                return left / right
            return math.pow(left, right)
        except (ValueError, ZeroDivisionError, OverflowError) as exc:
            raise DomainError(f"{node.op!r} failed on ({left!r}, {right!r})") from exc
    fn = _FUNCTIONS[node.func][0]
    arg = _eval_node(node.arg, x)
    try:
        return fn(arg)
    except (ValueError, OverflowError) as exc:
        raise DomainError(f"{node.func}({arg!r}) is undefined") from exc


def eval_expr(ast: ExprAst, value: float) -> float:
    """Evaluate at ``value``; deterministic, raises DomainError when the
    result is not a finite real."""
    result = _eval_node(ast.root, value)
    if not math.isfinite(result):
        raise DomainError(f"{ast.text!r} is not finite at {value!r}")
    return result


# ---------------------------------------------------------------------------
# Vectorized evaluation (NaN-propagating, used by sampling paths)

def _eval_node_array(node: Node, xs: np.ndarray):
    if isinstance(node, Const):
        return node.value
    if isinstance(node, Var):
        return xs
    if isinstance(node, Neg):
        return -_eval_node_array(node.operand, xs)
    if isinstance(node, BinOp):
        left = _eval_node_array(node.left, xs)
        right = _eval_node_array(node.right, xs)
        if node.op == "+":
            return left + right
        if node.op == "-":
            return left - right
        if node.op == "*":
            return left * right
        if node.op == "/":
            return np.divide(left, right)
        return np.power(left, right)
    fn = _FUNCTIONS[node.func][1]
    return fn(_eval_node_array(node.arg, xs))


def eval_array(ast: ExprAst, values: np.ndarray) -> np.ndarray:
    """Evaluate over an array.  Out-of-domain points come back as NaN
    instead of raising, which comparison-based callers treat as "outside"."""
    xs = np.asarray(values, dtype=np.float64)
    with np.errstate(all="ignore"):
        out = np.asarray(_eval_node_array(ast.root, xs), dtype=np.float64)
        out = np.broadcast_to(out, xs.shape).copy()
        out[~np.isfinite(out)] = np.nan
    return out
