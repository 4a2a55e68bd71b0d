"""A small expression language for symmetric and bisymmetric functions.

See ``docs/grammar.md`` for the grammar.  :func:`parse` builds an AST of
frozen dataclasses, :func:`evaluate` runs it against the kernel, and
:func:`to_source` prints an AST back to text that parses to the same tree.
:func:`render` prints a computed series as re-parseable text.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Tuple, Union

from . import plethysm as P
from . import propcalc as PC
from .bases import e_to_p, h_to_p, schur_pair_expansion, schur_to_p
from .partitions import Partition, make_partition
from .series import BiSymSeries, SymSeries, Truncation, TruncationError

Span = Tuple[int, int]


# ---------------------------------------------------------------------------
# errors


def _line_col(text: str, pos: int) -> Tuple[int, int]:
    line = text.count("\n", 0, pos) + 1
    col = pos - (text.rfind("\n", 0, pos) + 1) + 1
    return line, col


class ParseError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        self.line, self.column = _line_col(text, pos)
        self.pos = pos
        self.message = message
        super().__init__(f"{self.line}:{self.column}: {message}")


class EvalError(ValueError):
    """Evaluation failure tied to the source span of the offending subexpression."""

    def __init__(self, message: str, span: Optional[Span], text: str = ""):
        self.span = span
        self.message = message
        where = ""
        if span is not None and text:
            (l1, c1), (l2, c2) = _line_col(text, span[0]), _line_col(text, span[1])
            where = f"{l1}:{c1}-{l2}:{c2} `{text[span[0]:span[1]]}`: "
        elif span is not None:
            where = f"[{span[0]}:{span[1]}]: "
        super().__init__(where + message)


# ---------------------------------------------------------------------------
# AST


def _span():
    return field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Num:
    value: Fraction
    span: Optional[Span] = _span()

    def __post_init__(self):
        if Fraction(self.value) < 0:
            raise ValueError("numeric literals are nonnegative; use Neg")
        object.__setattr__(self, "value", Fraction(self.value))


@dataclass(frozen=True)
class Hbar:
    span: Optional[Span] = _span()


@dataclass(frozen=True)
class Atom:
    """``p[k](a)``, ``h[k](a)``, ``e[k](a)`` or ``s[lam](a)``."""

    kind: str
    index: Partition
    alphabet: str
    span: Optional[Span] = _span()


@dataclass(frozen=True)
class Named:
    """``E(a)`` or ``L(a)``."""

    name: str
    alphabet: str
    span: Optional[Span] = _span()


@dataclass(frozen=True)
class Regular:
    n: int
    span: Optional[Span] = _span()


@dataclass(frozen=True)
class Neg:
    operand: "Expr"
    span: Optional[Span] = _span()


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Expr"
    right: "Expr"
    span: Optional[Span] = _span()


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exponent: int
    span: Optional[Span] = _span()


@dataclass(frozen=True)
class Call:
    name: str
    args: Tuple["Expr", ...]
    span: Optional[Span] = _span()


Expr = Union[Num, Hbar, Atom, Named, Regular, Neg, BinOp, Pow, Call]

FUNCTIONS: Dict[str, int] = {
    "pleth": 2,
    "relpleth": 3,
    "koike": 2,
    "sat": 1,
    "box": 2,
    "cbox": 2,
    "omega": 1,
    "omega_x": 1,
    "omega_y": 1,
    "psi": 1,
    "exp1": 1,
    "log1": 1,
}


# ---------------------------------------------------------------------------
# lexer

_TOKEN = re.compile(
    r"(?P<ws>\s+)|(?P<num>\d+(?:/\d+)?)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/^()\[\],;])"
)


@dataclass(frozen=True)
class Token:
    kind: str  # num, name, op, eof
    text: str
    pos: int


def tokenize(text: str) -> List[Token]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", text, pos)
        kind = m.lastgroup
        if kind != "ws":
            out.append(Token(kind, m.group(), pos))
        pos = m.end()
    out.append(Token("eof", "", len(text)))
    return out


# ---------------------------------------------------------------------------
# parser (LL(1) recursive descent)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def _end(self) -> int:
        return self.toks[self.i - 1].pos + len(self.toks[self.i - 1].text) if self.i else 0

    def error(self, msg: str, tok: Optional[Token] = None):
        tok = tok or self.tok
        raise ParseError(msg, self.text, tok.pos)

    def accept(self, text: str) -> bool:
        if self.tok.kind == "op" and self.tok.text == text:
            self.i += 1
            return True
        return False

    def expect(self, text: str) -> Token:
        tok = self.tok
        if not self.accept(text):
            found = "end of input" if tok.kind == "eof" else repr(tok.text)
            self.error(f"expected {text!r}, found {found}")
        return tok

    def integer(self) -> int:
        tok = self.tok
        if tok.kind != "num" or "/" in tok.text:
            self.error("expected an integer")
        self.i += 1
        return int(tok.text)

    def parse(self) -> Expr:
        e = self.expr()
        if self.tok.kind != "eof":
            self.error(f"unexpected {self.tok.text!r}")
        return e

    def expr(self) -> Expr:
        start = self.tok.pos
        left = self.term()
        while self.tok.kind == "op" and self.tok.text in "+-":
            op = self.tok.text
            self.i += 1
            right = self.term()
            left = BinOp(op, left, right, (start, self._end()))
        return left

    def term(self) -> Expr:
        start = self.tok.pos
        left = self.unary()
        while self.tok.kind == "op" and self.tok.text in "*/":
            op = self.tok.text
            self.i += 1
            right = self.unary()
            left = BinOp(op, left, right, (start, self._end()))
        return left

    def unary(self) -> Expr:
        start = self.tok.pos
        if self.accept("-"):
            operand = self.unary()
            return Neg(operand, (start, self._end()))
        return self.power()

    def power(self) -> Expr:
        start = self.tok.pos
        base = self.primary()
        while self.accept("^"):
            sign = -1 if self.accept("-") else 1
            base = Pow(base, sign * self.integer(), (start, self._end()))
        return base

    def alphabet(self) -> str:
        self.expect("(")
        tok = self.tok
        if tok.kind != "name" or tok.text not in ("x", "y"):
            self.error("alphabet must be x or y")
        self.i += 1
        self.expect(")")
        return tok.text

    def partition(self) -> Partition:
        self.expect("[")
        parts = []
        if not (self.tok.kind == "op" and self.tok.text == "]"):
            parts.append(self.integer())
            while self.accept(","):
                parts.append(self.integer())
        tok = self.tok
        self.expect("]")
        try:
            return make_partition(parts)
        except ValueError as exc:
            self.error(str(exc), tok)

    def primary(self) -> Expr:
        tok = self.tok
        start = tok.pos
        if tok.kind == "num":
            self.i += 1
            num, _, den = tok.text.partition("/")
            if den and int(den) == 0:
                self.error("zero denominator", tok)
            return Num(Fraction(int(num), int(den or 1)), (start, self._end()))
        if self.accept("("):
            e = self.expr()
            self.expect(")")
            return e
        if tok.kind != "name":
            found = "end of input" if tok.kind == "eof" else repr(tok.text)
            self.error(f"expected an expression, found {found}")
        name = tok.text
        self.i += 1
        if name in ("p", "h", "e"):
            self.expect("[")
            k = self.integer()
            self.expect("]")
            if k < 0:
                self.error("index must be nonnegative", tok)
            return Atom(name, (k,) if k else (), self.alphabet(), (start, self._end()))
        if name == "s":
            lam = self.partition()
            return Atom("s", lam, self.alphabet(), (start, self._end()))
        if name == "hbar":
            return Hbar((start, self._end()))
        if name in ("E", "L"):
            alph = "x"
            if self.tok.kind == "op" and self.tok.text == "(":
                alph = self.alphabet()
            return Named(name, alph, (start, self._end()))
        if name == "R":
            self.expect("[")
            n = self.integer()
            self.expect("]")
            return Regular(n, (start, self._end()))
        if name in FUNCTIONS:
            return self.call(name, start)
        self.error(f"unknown identifier {name!r}", tok)

    def call(self, name: str, start: int) -> Call:
        self.expect("(")
        args = [self.expr()]
        if name == "relpleth":
            self.expect(";")
            args.append(self.expr())
            self.expect(",")
            args.append(self.expr())
        else:
            while self.accept(","):
                args.append(self.expr())
        self.expect(")")
        if len(args) != FUNCTIONS[name]:
            raise ParseError(
                f"{name} takes {FUNCTIONS[name]} argument(s), got {len(args)}", self.text, start
            )
        return Call(name, tuple(args), (start, self._end()))


def parse(text: str) -> Expr:
    """Parse source text into an AST, raising :class:`ParseError` with line/column."""
    return _Parser(text).parse()


# ---------------------------------------------------------------------------
# printer

_PREC = {"+": 1, "-": 1, "*": 2, "/": 2}


def _prec(e: Expr) -> int:
    if isinstance(e, BinOp):
        return _PREC[e.op]
    if isinstance(e, Neg):
        return 3
    if isinstance(e, Pow):
        return 4
    return 5


def _wrap(e: Expr, need: int, strict: bool) -> str:
    s = to_source(e)
    p = _prec(e)
    return f"({s})" if (p < need or (strict and p == need)) else s


def _frac(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _index(lam: Partition) -> str:
    return ",".join(map(str, lam))


def to_source(e: Expr) -> str:
    """Print an AST as source text; ``parse(to_source(e)) == e``."""
    if isinstance(e, Num):
        return _frac(e.value)
    if isinstance(e, Hbar):
        return "hbar"
    if isinstance(e, Atom):
        idx = _index(e.index) if e.kind == "s" else str(sum(e.index))
        return f"{e.kind}[{idx}]({e.alphabet})"
    if isinstance(e, Named):
        return f"{e.name}({e.alphabet})"
    if isinstance(e, Regular):
        return f"R[{e.n}]"
    if isinstance(e, Neg):
        return "-" + _wrap(e.operand, 3, False)
    if isinstance(e, Pow):
        return f"{_wrap(e.base, 4, False)}^{e.exponent}"
    if isinstance(e, BinOp):
        p = _PREC[e.op]
        return f"{_wrap(e.left, p, False)} {e.op} {_wrap(e.right, p, True)}"
    if isinstance(e, Call):
        parts = [to_source(a) for a in e.args]
        if e.name == "relpleth":
            return f"relpleth({parts[0]}; {parts[1]}, {parts[2]})"
        return f"{e.name}({', '.join(parts)})"
    raise TypeError(f"not an expression node: {e!r}")


# ---------------------------------------------------------------------------
# evaluation


def _scalar_of(v: BiSymSeries) -> Optional[Fraction]:
    if not v.terms:
        return Fraction(0)
    if len(v.terms) == 1:
        ((lam, mu, k), c), = v.terms.items()
        if not lam and not mu and k == 0:
            return c
    return None


def _alphabet_of(*vals: BiSymSeries) -> str:
    xs = any(not v.is_y_only() for v in vals)
    ys = any(not v.is_x_only() for v in vals)
    if xs and ys:
        raise ValueError("pleth needs single-alphabet arguments in one common alphabet")
    return "y" if ys else "x"


class _Evaluator:
    def __init__(self, trunc: Truncation, text: str):
        self.trunc = trunc
        self.text = text

    def fail(self, node: Expr, msg: str):
        raise EvalError(msg, node.span, self.text)

    def __call__(self, node: Expr) -> BiSymSeries:
        try:
            return self.eval(node)
        except EvalError:
            raise
        except (ValueError, TruncationError, ZeroDivisionError, TypeError) as exc:
            self.fail(node, str(exc))

    def eval(self, node: Expr) -> BiSymSeries:
        tr = self.trunc
        if isinstance(node, Num):
            return BiSymSeries.scalar(node.value, tr)
        if isinstance(node, Hbar):
            return BiSymSeries.scalar(-1, tr, 1)
        if isinstance(node, Atom):
            n = sum(node.index)
            if node.kind == "p":
                if n == 0:
                    return BiSymSeries.one(tr)
                return BiSymSeries.p(n, node.alphabet, tr)
            conv = {"h": h_to_p, "e": e_to_p}.get(node.kind)
            if conv:
                return conv(n, node.alphabet, tr).embed()
            return schur_to_p(node.index, node.alphabet, tr).embed()
        if isinstance(node, Named):
            series = P.E_series(tr, node.alphabet) if node.name == "E" else P.L_series(tr, node.alphabet)
            return series.embed()
        if isinstance(node, Regular):
            return PC.regular_rep_char(node.n, tr)
        if isinstance(node, Neg):
            return -self(node.operand)
        if isinstance(node, Pow):
            return self.power(node)
        if isinstance(node, BinOp):
            a, b = self(node.left), self(node.right)
            if node.op == "+":
                return a + b
            if node.op == "-":
                return a - b
            if node.op == "*":
                return a * b
            c = _scalar_of(b)
            if c is None:
                self.fail(node.right, "division is only by a nonzero scalar")
            if c == 0:
                self.fail(node.right, "division by zero")
            return a / c
        if isinstance(node, Call):
            return self.call(node)
        raise TypeError(f"not an expression node: {node!r}")

    def power(self, node: Pow) -> BiSymSeries:
        base = self(node.base)
        if node.exponent >= 0:
            return base ** node.exponent
        if len(base.terms) != 1:
            self.fail(node, "negative powers need a single-term base such as hbar")
        ((lam, mu, k), c), = base.terms.items()
        if lam or mu:
            self.fail(node, "negative powers need a base without power sums")
        n = -node.exponent
        return BiSymSeries({((), (), -k * n): Fraction(1) / c ** n}, base.trunc)

    def call(self, node: Call) -> BiSymSeries:
        args = [self(a) for a in node.args]
        name = node.name
        if name == "pleth":
            alph = _alphabet_of(*args)
            f, g = (SymSeries.from_bi(a, alph) for a in args)
            return P.pleth(f, g).embed()
        if name == "relpleth":
            fbar, gbar, h = args
            if not h.is_y_only():
                self.fail(node.args[2], "third argument of relpleth must only involve y")
            return P.relpleth(fbar, gbar, h if h.terms else None)
        unary: Dict[str, Callable] = {
            "sat": PC.saturate,
            "omega": P.omega_xy,
            "omega_x": P.omega_x,
            "omega_y": P.omega_y,
            "psi": PC.psi_regrade,
            "exp1": P.plethystic_exp,
            "log1": P.plethystic_log,
        }
        if name in unary:
            return unary[name](args[0])
        binary: Dict[str, Callable] = {"koike": P.koike_pleth, "box": PC.box, "cbox": PC.connected_box}
        return binary[name](*args)


def evaluate(e: Union[Expr, str], trunc: Truncation = Truncation(), source: str = "") -> BiSymSeries:
    """Evaluate an AST (or source text) to a :class:`BiSymSeries`."""
    if isinstance(e, str):
        source = e
        e = parse(e)
    return _Evaluator(trunc, source)(e)


# ---------------------------------------------------------------------------
# rendering of results


def _factor_power(name: str, alphabet: str, parts: Partition) -> List[str]:
    out = []
    for part in sorted(set(parts), reverse=True):
        m = parts.count(part)
        f = f"{name}[{part}]({alphabet})"
        out.append(f if m == 1 else f"{f}^{m}")
    return out


def _term(coeff: Fraction, k: int, factors: List[str]) -> Tuple[bool, str]:
    """Text for ``coeff * t^k * factors`` written in hbar: ``t^k = (-1)^k hbar^k``."""
    c = coeff * (-1) ** (k % 2)
    neg = c < 0
    c = abs(c)
    pieces = []
    if k:
        pieces.append(f"hbar^{k}" if k != 1 else "hbar")
    pieces += factors
    if c != 1 or not pieces:
        pieces.insert(0, _frac(c))
    return neg, "*".join(pieces)


def _join(terms: List[Tuple[bool, str]]) -> str:
    if not terms:
        return "0"
    out = ""
    for i, (neg, body) in enumerate(terms):
        if i == 0:
            out = ("-" if neg else "") + body
        else:
            out += (" - " if neg else " + ") + body
    return out


def render_p(f: BiSymSeries) -> str:
    terms = []
    for (lam, mu, k), c in f:
        terms.append(_term(c, k, _factor_power("p", "x", lam) + _factor_power("p", "y", mu)))
    return _join(terms)


def render_schur(f: BiSymSeries) -> str:
    terms = []
    for r in schur_pair_expansion(f):
        factors = []
        if r.x_part:
            factors.append(f"s[{_index(r.x_part)}](x)")
        if r.y_part:
            factors.append(f"s[{_index(r.y_part)}](y)")
        terms.append(_term(r.mult, r.hbar_deg, factors))
    return _join(terms)


def render(f: BiSymSeries, basis: str = "schur") -> str:
    """Re-parseable text for ``f`` in the p or Schur basis."""
    if basis == "p":
        return render_p(f)
    if basis == "schur":
        return render_schur(f)
    raise ValueError(f"unknown basis {basis!r}")
