"""Cost expressions: exact arithmetic trees over strategy variables.

The grid oracle works on arbitrary (possibly non-convex) cost functions
written as expression strings, e.g. ``"-1 + 2*x[1][1] + 2*x[2][1] -
4*x[1][1]*x[2][1]"`` or ``"abs(x[1][1] - x[2][1])"``.  Variables are
``x[i][j]`` with 1-based player index ``i`` and coordinate ``j`` within
that player's strategy block.  Literals are integers or ``p/q`` rationals;
evaluation is exact.

Grammar (unary minus binds tighter than ``*``, which binds tighter than
binary ``+``/``-``)::

    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := '-' factor | atom
    atom   := NUMBER ['/' NUMBER]
            | 'x' '[' NUMBER ']' '[' NUMBER ']'
            | 'abs' '(' expr ')'
            | '(' expr ')'
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping, Tuple, Union

from .errors import CostSyntaxError, UnknownVariable
from .rationals import Q, Rational, as_rational, rational_str


@dataclass(frozen=True)
class Lit:
    value: Rational


@dataclass(frozen=True)
class Var:
    """Strategy variable ``x[player][coord]``, both indices 1-based."""

    player: int
    coord: int


@dataclass(frozen=True)
class Neg:
    arg: "Expr"


@dataclass(frozen=True)
class Abs:
    arg: "Expr"


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


Expr = Union[Lit, Var, Neg, Abs, Add, Sub, Mul]


# --------------------------------------------------------------------------
# tokenizer


@dataclass(frozen=True)
class _Token:
    kind: str   # "number", "name", one of "+-*/()[]", or "end"
    text: str
    pos: int    # 0-based offset into the source string


def _tokens(src: str) -> Iterator[_Token]:
    i, n = 0, len(src)
    while i < n:
        ch = src[i]
        if ch in " \t\r\n":
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and src[j].isdigit():
                j += 1
            yield _Token("number", src[i:j], i)
            i = j
            continue
        if ch.isalpha():
            j = i
            while j < n and src[j].isalpha():
                j += 1
            yield _Token("name", src[i:j], i)
            i = j
            continue
        if ch in "+-*/()[]":
            yield _Token(ch, ch, i)
            i += 1
            continue
        raise CostSyntaxError("unexpected character %r" % ch, i)
    yield _Token("end", "", n)


class _Parser:
    def __init__(self, src: str):
        self.src = src
        self.toks = list(_tokens(src))
        self.pos = 0

    @property
    def tok(self) -> _Token:
        return self.toks[self.pos]

    def advance(self) -> _Token:
        t = self.tok
        self.pos += 1
        return t

    def expect(self, kind: str) -> _Token:
        if self.tok.kind != kind:
            what = "end of input" if self.tok.kind == "end" else repr(self.tok.text)
            raise CostSyntaxError("expected %r, found %s" % (kind, what), self.tok.pos)
        return self.advance()

    def parse(self) -> Expr:
        e = self.expr()
        if self.tok.kind != "end":
            raise CostSyntaxError(
                "unexpected %r after expression" % self.tok.text, self.tok.pos
            )
        return e

    def expr(self) -> Expr:
        left = self.term()
        while self.tok.kind in "+-":
            op = self.advance().kind
            right = self.term()
            left = Add(left, right) if op == "+" else Sub(left, right)
        return left

    def term(self) -> Expr:
        left = self.factor()
        while self.tok.kind == "*":
            self.advance()
            left = Mul(left, self.factor())
        return left

    def factor(self) -> Expr:
        if self.tok.kind == "-":
            self.advance()
            return Neg(self.factor())
        return self.atom()

    def atom(self) -> Expr:
        t = self.tok
        if t.kind == "number":
            self.advance()
            num = int(t.text)
            if self.tok.kind == "/":
                self.advance()
                dt = self.expect("number")
                den = int(dt.text)
                if den == 0:
                    raise CostSyntaxError("zero denominator", dt.pos)
                return Lit(Q(num, den))
            return Lit(Q(num))
        if t.kind == "name":
            self.advance()
            if t.text == "x":
                self.expect("[")
                player = int(self.expect("number").text)
                self.expect("]")
                self.expect("[")
                coord = int(self.expect("number").text)
                self.expect("]")
                if player < 1 or coord < 1:
                    raise CostSyntaxError("variable indices are 1-based", t.pos)
                return Var(player, coord)
            if t.text == "abs":
                self.expect("(")
                inner = self.expr()
                self.expect(")")
                return Abs(inner)
            raise UnknownVariable(
                "unknown name %r at offset %d (only 'x[i][j]' and 'abs' exist)"
                % (t.text, t.pos)
            )
        if t.kind == "(":
            self.advance()
            inner = self.expr()
            self.expect(")")
            return inner
        what = "end of input" if t.kind == "end" else repr(t.text)
        raise CostSyntaxError("expected a number, variable, or '(', found %s" % what, t.pos)


def parse_cost(src: str) -> Expr:
    """Parse a cost-expression string into its AST.

    Raises :class:`CostSyntaxError` (carrying a 0-based ``offset``) on
    malformed input and :class:`UnknownVariable` for identifiers other
    than ``x`` and ``abs``.
    """
    return _Parser(src).parse()


# --------------------------------------------------------------------------
# printing

_PREC_SUM = 1
_PREC_PROD = 2
_PREC_NEG = 3
_PREC_ATOM = 4


def _prec(e: Expr) -> int:
    if isinstance(e, (Add, Sub)):
        return _PREC_SUM
    if isinstance(e, Mul):
        return _PREC_PROD
    if isinstance(e, Neg):
        return _PREC_NEG
    if isinstance(e, Lit) and e.value < 0:
        # prints with a leading minus, so parenthesize like a Neg
        return _PREC_NEG
    return _PREC_ATOM


def _emit(e: Expr, min_prec: int) -> str:
    if _prec(e) < min_prec:
        return "(" + _emit(e, 0) + ")"
    if isinstance(e, Lit):
        return rational_str(e.value)
    if isinstance(e, Var):
        return "x[%d][%d]" % (e.player, e.coord)
    if isinstance(e, Neg):
        return "-" + _emit(e.arg, _PREC_NEG)
    if isinstance(e, Abs):
        return "abs(" + _emit(e.arg, 0) + ")"
    if isinstance(e, Add):
        return _emit(e.left, _PREC_SUM) + " + " + _emit(e.right, _PREC_SUM + 1)
    if isinstance(e, Sub):
        return _emit(e.left, _PREC_SUM) + " - " + _emit(e.right, _PREC_SUM + 1)
    if isinstance(e, Mul):
        return _emit(e.left, _PREC_PROD) + "*" + _emit(e.right, _PREC_PROD + 1)
    raise TypeError("not a cost expression: %r" % (e,))


def format_cost(e: Expr) -> str:
    """Render ``e`` canonically; ``parse_cost(format_cost(e)) == e``."""
    return _emit(e, 0)


# --------------------------------------------------------------------------
# evaluation

Assignment = Mapping[Tuple[int, int], Rational]


def evaluate_cost(e: Expr, values: Assignment) -> Rational:
    """Evaluate exactly at a point given as {(player, coord): value}."""
    if isinstance(e, Lit):
        return e.value
    if isinstance(e, Var):
        try:
            return values[(e.player, e.coord)]
        except KeyError:
            raise UnknownVariable(
                "x[%d][%d] is not a variable of this game" % (e.player, e.coord)
            ) from None
    if isinstance(e, Neg):
        return -evaluate_cost(e.arg, values)
    if isinstance(e, Abs):
        v = evaluate_cost(e.arg, values)
        return -v if v < 0 else v
    if isinstance(e, Add):
        return evaluate_cost(e.left, values) + evaluate_cost(e.right, values)
    if isinstance(e, Sub):
        return evaluate_cost(e.left, values) - evaluate_cost(e.right, values)
    if isinstance(e, Mul):
        return evaluate_cost(e.left, values) * evaluate_cost(e.right, values)
    raise TypeError("not a cost expression: %r" % (e,))


def cost_variables(e: Expr) -> frozenset:
    """All (player, coord) pairs appearing in ``e`` (1-based)."""
    if isinstance(e, Var):
        return frozenset([(e.player, e.coord)])
    if isinstance(e, (Lit,)):
        return frozenset()
    if isinstance(e, (Neg, Abs)):
        return cost_variables(e.arg)
    return cost_variables(e.left) | cost_variables(e.right)


def linear_expression(row, dims) -> Expr:
    """Build the expression ``sum_k row[k] * x[i][j]`` for a joint
    coefficient row, mapping joint coordinate ``k`` to the 1-based
    (player, coord) pair determined by the block sizes ``dims``."""
    pairs = []
    for i, d in enumerate(dims):
        for j in range(d):
            pairs.append((i + 1, j + 1))
    if len(row) != len(pairs):
        raise ValueError("row length %d does not match %d strategy variables"
                         % (len(row), len(pairs)))
    expr: Expr | None = None
    for k, c in enumerate(row):
        c = as_rational(c)
        if c == 0:
            continue
        mag = -c if c < 0 else c
        term: Expr = Var(*pairs[k]) if mag == 1 else Mul(Lit(mag), Var(*pairs[k]))
        if expr is None:
            if c < 0:
                # lead with the sign on the coefficient so the printed form
                # is "-2*x[i][j]", matching what the parser produces for it
                term = (Neg(term) if mag == 1
                        else Mul(Neg(Lit(mag)), Var(*pairs[k])))
            expr = term
        else:
            expr = Sub(expr, term) if c < 0 else Add(expr, term)
    return expr if expr is not None else Lit(Q(0))
