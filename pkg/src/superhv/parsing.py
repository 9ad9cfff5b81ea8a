"""Recursive-descent parser for the expression language printed by :mod:`superhv.render`.

Grammar (whitespace-insensitive)::

    top      := part ("|" part)? | expr
    part     := ("even" | "odd") ":" expr
    expr     := sign? term (("+" | "-") term)*
    term     := unary (("*" | "/") unary)*
    unary    := "-" unary | "+" unary | power
    power    := primary ("^" sign? INT)?
    primary  := NUM | "(" expr ")" | "[" expr "," expr "]"
              | ("L" | "H" | "G" | "Q" | "vp" | "vm") "[" index "]"
              | "x" | "y" | "s" | "t" | "L" | "λ"
    index    := sign? INT ("/" INT)?

``L`` followed by ``[`` is a generator, otherwise it is the formal unit lambda.
Only lambda may carry a negative exponent.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from . import algebra
from .algebra import AlgebraElement, Generator, bracket
from .arith import HalfInt, Scalar
from .omega import SuperVector
from .poly import BiPoly, UniPoly

MAX_DEPTH = 100
MAX_EXP = 64  # polynomial powers
MAX_LAM_EXP = 10**6
MAX_DIGITS = 1000
MAX_TERMS = 50_000

VARS = ("x", "y", "s", "t")
GEN_KINDS = ("L", "H", "G", "Q")
WEIGHT_HEADS = {"vp": "+", "vm": "-"}
_SYMBOLS = set("+-*/^()[],:|")


class ParseError(ValueError):
    """Malformed input; ``offset`` is a byte offset into the UTF-8 source."""

    def __init__(self, message: str, offset: int, expected=()):
        self.message = message
        self.offset = offset
        self.expected = frozenset(expected)
        text = f"{message} at byte {offset}"
        if self.expected:
            text += "; expected one of: " + ", ".join(sorted(self.expected))
        super().__init__(text)


class IndexParityError(ParseError, algebra.IndexParityError):
    """A generator index with the wrong integrality for its kind, e.g. ``G[1]``."""


class ExprTypeError(ParseError):
    """Well-formed syntax that does not denote a value of the requested type."""


# -- tokens ------------------------------------------------------------------


@dataclass(frozen=True)
class Token:
    kind: str  # "num", "ident", a symbol, or "eof"
    text: str
    pos: int  # character position


def _byte_offset(src: str, pos: int) -> int:
    return len(src[:pos].encode("utf-8", "surrogatepass"))


def tokenize(src: str) -> list[Token]:
    out = []
    i, n = 0, len(src)
    while i < n:
        c = src[i]
        if c.isspace():
            i += 1
        elif c in "0123456789":
            j = i
            while j < n and src[j] in "0123456789":
                j += 1
            if j - i > MAX_DIGITS:
                raise ParseError("numeric literal too long", _byte_offset(src, i))
            out.append(Token("num", src[i:j], i))
            i = j
        elif c.isalpha() or c == "_":
            j = i
            while j < n and (src[j].isalpha() or src[j] == "_"):
                j += 1
            out.append(Token("ident", src[i:j], i))
            i = j
        elif c in _SYMBOLS:
            out.append(Token(c, c, i))
            i += 1
        else:
            raise ParseError(f"unexpected character {c!r}", _byte_offset(src, i))
    out.append(Token("eof", "", n))
    return out


# -- AST ---------------------------------------------------------------------


@dataclass(frozen=True)
class Num:
    value: int
    pos: int


@dataclass(frozen=True)
class Var:
    name: str  # x, y, s, t, or "lam"
    pos: int


@dataclass(frozen=True)
class Gen:
    generator: Generator
    pos: int


@dataclass(frozen=True)
class WeightBasis:
    sign: str
    index: HalfInt
    pos: int


@dataclass(frozen=True)
class Neg:
    arg: "Node"
    pos: int


@dataclass(frozen=True)
class Sum:
    terms: tuple  # ((sign "+"/"-", node), ...)
    pos: int


@dataclass(frozen=True)
class Product:
    factors: tuple  # ((op "*"/"/", node, pos), ...)
    pos: int


@dataclass(frozen=True)
class Pow:
    base: "Node"
    exp: int
    pos: int


@dataclass(frozen=True)
class Bracket:
    left: "Node"
    right: "Node"
    pos: int


@dataclass(frozen=True)
class SuperPair:
    even: "Node | None"
    odd: "Node | None"
    pos: int


Node = Union[Num, Var, Gen, WeightBasis, Neg, Sum, Product, Pow, Bracket, SuperPair]


class _Parser:
    def __init__(self, src: str):
        self.src = src
        self.toks = tokenize(src)
        self.i = 0
        self.depth = 0

    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def peek(self, k: int = 1) -> Token:
        return self.toks[min(self.i + k, len(self.toks) - 1)]

    def error(self, message: str, expected=(), tok: Token | None = None, cls=ParseError):
        tok = tok or self.tok
        return cls(message, _byte_offset(self.src, tok.pos), expected)

    def advance(self) -> Token:
        t = self.tok
        self.i += 1
        return t

    def expect(self, kind: str) -> Token:
        if self.tok.kind != kind:
            got = self.tok.text or "end of input"
            raise self.error(f"unexpected {got!r}", {"integer" if kind == "num" else kind})
        return self.advance()

    def nest(self):
        self.depth += 1
        if self.depth > MAX_DEPTH:
            raise self.error("expression nested too deeply")

    # top := part ("|" part)? | expr
    def top(self) -> Node:
        t = self.tok
        if t.kind == "ident" and t.text in ("even", "odd") and self.peek().kind == ":":
            node = self.superpair()
        else:
            node = self.expr()
        if self.tok.kind != "eof":
            raise self.error(f"unexpected {self.tok.text!r}", {"end of input", "+", "-", "*", "/", "^"})
        return node

    def superpair(self) -> SuperPair:
        start = self.tok.pos
        parts: dict[str, Node] = {}
        while True:
            t = self.tok
            if t.kind != "ident" or t.text not in ("even", "odd"):
                raise self.error(f"unexpected {t.text or 'end of input'!r}", {"even", "odd"})
            if t.text in parts or (t.text == "even" and parts):
                raise self.error(f"misplaced component {t.text!r}", {"end of input"})
            self.advance()
            self.expect(":")
            parts[t.text] = self.expr()
            if self.tok.kind != "|":
                break
            self.advance()
        return SuperPair(parts.get("even"), parts.get("odd"), start)

    def expr(self) -> Node:
        self.nest()
        start = self.tok.pos
        terms = [("+", self.term())]
        while self.tok.kind in ("+", "-"):
            op = self.advance()
            terms.append((op.kind, self.term()))
        self.depth -= 1
        return terms[0][1] if len(terms) == 1 else Sum(tuple(terms), start)

    def term(self) -> Node:
        start = self.tok.pos
        factors = [("*", self.unary(), start)]
        while self.tok.kind in ("*", "/"):
            op = self.advance()
            factors.append((op.kind, self.unary(), op.pos))
        return factors[0][1] if len(factors) == 1 else Product(tuple(factors), start)

    def unary(self) -> Node:
        if self.tok.kind in ("-", "+"):
            op = self.advance()
            self.nest()
            arg = self.unary()
            self.depth -= 1
            return Neg(arg, op.pos) if op.kind == "-" else arg
        return self.power()

    def power(self) -> Node:
        base = self.primary()
        if self.tok.kind != "^":
            return base
        caret = self.advance()
        sign = 1
        if self.tok.kind in ("-", "+"):
            sign = -1 if self.advance().kind == "-" else 1
        e = sign * int(self.expect("num").text)
        return Pow(base, e, caret.pos)

    def index(self) -> Fraction:
        sign = 1
        if self.tok.kind in ("-", "+"):
            sign = -1 if self.advance().kind == "-" else 1
        num = int(self.expect("num").text)
        den = 1
        if self.tok.kind == "/":
            self.advance()
            den = int(self.expect("num").text)
            if den == 0:
                raise self.error("zero denominator", tok=self.toks[self.i - 1])
        return Fraction(sign * num, den)

    def primary(self) -> Node:
        t = self.tok
        if t.kind == "num":
            self.advance()
            return Num(int(t.text), t.pos)
        if t.kind == "(":
            self.advance()
            node = self.expr()
            self.expect(")")
            return node
        if t.kind == "[":
            self.advance()
            left = self.expr()
            self.expect(",")
            right = self.expr()
            self.expect("]")
            return Bracket(left, right, t.pos)
        if t.kind == "ident":
            if t.text in GEN_KINDS and self.peek().kind == "[":
                return self.generator()
            if t.text in WEIGHT_HEADS:
                self.advance()
                self.expect("[")
                idx = self.index()
                self.expect("]")
                try:
                    h = HalfInt.of(idx)
                except ValueError:
                    raise self.error(f"{idx} is not a half-integer", tok=t) from None
                if h.is_integer != (t.text == "vp"):
                    raise self.error(f"{t.text} index {h} is on the wrong lattice", tok=t, cls=IndexParityError)
                return WeightBasis(WEIGHT_HEADS[t.text], h, t.pos)
            if t.text in VARS:
                self.advance()
                return Var(t.text, t.pos)
            if t.text in ("L", "λ"):
                self.advance()
                return Var("lam", t.pos)
            raise self.error(f"unknown name {t.text!r}", _PRIMARY_START)
        raise self.error(f"unexpected {t.text or 'end of input'!r}", _PRIMARY_START)

    def generator(self) -> Gen:
        t = self.advance()
        self.expect("[")
        idx = self.index()
        self.expect("]")
        try:
            h = HalfInt.of(idx)
        except ValueError:
            raise self.error(f"generator index {idx} is not a half-integer", tok=t) from None
        try:
            return Gen(Generator(t.text, h), t.pos)
        except algebra.IndexParityError as exc:
            raise self.error(str(exc), tok=t, cls=IndexParityError) from None


_PRIMARY_START = frozenset({"integer", "(", "[", "x", "y", "s", "t", "L", "λ", "H[", "G[", "Q[", "L[", "vp[", "vm[", "-"})


def parse_expr(src: str) -> Node:
    """Parse ``src`` into an AST; raises :class:`ParseError` on bad input."""
    if not isinstance(src, str):
        raise TypeError("source must be text")
    return _Parser(src).top()


# -- evaluation --------------------------------------------------------------
# A value is a sparse map (basis, (ex, ey, es, et)) -> Scalar where basis is
# None, a Generator, or a weight key (sign, HalfInt).

_ZERO_MONO = (0, 0, 0, 0)


class Expr:
    __slots__ = ("t",)

    def __init__(self, t: dict):
        self.t = {k: c for k, c in t.items() if c}

    @classmethod
    def const(cls, c) -> "Expr":
        return cls({(None, _ZERO_MONO): Scalar.const(c)})

    def is_scalar(self) -> bool:
        return all(b is None and m == _ZERO_MONO for b, m in self.t)

    def scalar(self) -> Scalar:
        return self.t.get((None, _ZERO_MONO), Scalar())

    def bases(self) -> set:
        return {b for b, _ in self.t}


def _add(a: Expr, b: Expr, sign: int = 1) -> Expr:
    out = dict(a.t)
    for k, c in b.t.items():
        c = c if sign == 1 else -c
        out[k] = out[k] + c if k in out else c
    return Expr(out)


def _mul(a: Expr, b: Expr, pos: int) -> Expr:
    if len(a.t) * len(b.t) > MAX_TERMS:
        raise ExprTypeError("product too large", pos)
    out: dict = {}
    for (ba, ma), ca in a.t.items():
        for (bb, mb), cb in b.t.items():
            if ba is not None and bb is not None:
                raise ExprTypeError("cannot multiply two basis elements", pos)
            key = (ba if ba is not None else bb, tuple(x + y for x, y in zip(ma, mb)))
            c = ca * cb
            out[key] = out[key] + c if key in out else c
    return Expr(out)


def _pow(base: Expr, e: int, pos: int) -> Expr:
    if base.is_scalar() and base.scalar().is_monomial():
        # c * lam^k: exponent arithmetic only
        ((k, c),) = base.scalar().items()
        if abs(k * e) > MAX_LAM_EXP or (abs(c) != 1 and abs(e) > MAX_EXP):
            raise ExprTypeError("exponent too large", pos)
        if e < 0 and abs(c) != 1:
            raise ExprTypeError("negative powers are only allowed for lambda", pos)
        return Expr({(None, _ZERO_MONO): base.scalar() ** e})
    if e < 0:
        raise ExprTypeError("negative powers are only allowed for lambda", pos)
    if e > MAX_EXP:
        raise ExprTypeError("exponent too large", pos)
    if e > 1 and any(b is not None for b in base.bases()):
        raise ExprTypeError("cannot raise a basis element to a power", pos)
    out = Expr.const(1)
    for _ in range(e):
        out = _mul(out, base, pos)
    return out


def evaluate(node: Node) -> "Expr | SuperVector":
    """Evaluate an AST; a top-level even/odd pair becomes a :class:`SuperVector`."""
    if isinstance(node, SuperPair):
        even = _to_bipoly(_eval(node.even), ("x", "y"), node.pos) if node.even is not None else BiPoly.zero()
        odd = _to_bipoly(_eval(node.odd), ("s", "t"), node.pos) if node.odd is not None else BiPoly.zero()
        return SuperVector(even, odd)
    return _eval(node)


def _eval(node: Node) -> Expr:
    if isinstance(node, Num):
        return Expr.const(node.value)
    if isinstance(node, Var):
        if node.name == "lam":
            return Expr({(None, _ZERO_MONO): Scalar.lam(1)})
        mono = tuple(int(v == node.name) for v in VARS)
        return Expr({(None, mono): Scalar.const(1)})
    if isinstance(node, Gen):
        return Expr({(node.generator, _ZERO_MONO): Scalar.const(1)})
    if isinstance(node, WeightBasis):
        return Expr({((node.sign, node.index), _ZERO_MONO): Scalar.const(1)})
    if isinstance(node, Neg):
        return _add(Expr({}), _eval(node.arg), -1)
    if isinstance(node, Sum):
        out = Expr({})
        for sign, term in node.terms:
            out = _add(out, _eval(term), 1 if sign == "+" else -1)
        return out
    if isinstance(node, Product):
        out = Expr.const(1)
        for op, factor, pos in node.factors:
            right = _eval(factor)
            if op == "/":
                if not right.is_scalar() or not right.scalar().is_monomial():
                    raise ExprTypeError("can only divide by a nonzero monomial in lambda", pos)
                right = Expr({(None, _ZERO_MONO): right.scalar().inverse()})
            out = _mul(out, right, pos)
        return out
    if isinstance(node, Pow):
        return _pow(_eval(node.base), node.exp, node.pos)
    if isinstance(node, Bracket):
        a = _to_element(_eval(node.left), node.pos)
        b = _to_element(_eval(node.right), node.pos)
        return Expr({(g, _ZERO_MONO): c for g, c in bracket(a, b).items()})
    raise ExprTypeError("a super-vector pair cannot appear inside an expression", node.pos)


# -- conversion to domain values ---------------------------------------------


def _to_scalar(e: Expr, pos: int) -> Scalar:
    if not e.is_scalar():
        raise ExprTypeError("expected a scalar", pos)
    return e.scalar()


def _to_bipoly(e: Expr, names: tuple[str, str], pos: int) -> BiPoly:
    iu, iv = VARS.index(names[0]), VARS.index(names[1])
    terms = {}
    for (b, m), c in e.t.items():
        if b is not None or any(d for n, d in enumerate(m) if n not in (iu, iv)):
            raise ExprTypeError(f"expected a polynomial in {names[0]}, {names[1]}", pos)
        terms[(m[iu], m[iv])] = c
    return BiPoly(terms)


def _to_unipoly(e: Expr, var: str, pos: int) -> UniPoly:
    iv = VARS.index(var)
    coeffs = {}
    for (b, m), c in e.t.items():
        if b is not None or any(d for n, d in enumerate(m) if n != iv):
            raise ExprTypeError(f"expected a polynomial in {var}", pos)
        coeffs[m[iv]] = c
    return UniPoly(coeffs)


def _to_element(e: Expr, pos: int) -> AlgebraElement:
    terms = {}
    for (b, m), c in e.t.items():
        if not isinstance(b, Generator) or m != _ZERO_MONO:
            raise ExprTypeError("expected a combination of generators", pos)
        terms[b] = c
    return AlgebraElement(terms)


def _to_weightvector(e: Expr, pos: int):
    from .weighting import WeightVector

    terms = {}
    for (b, m), c in e.t.items():
        if not isinstance(b, tuple) or m != _ZERO_MONO:
            raise ExprTypeError("expected a combination of vp[n], vm[q]", pos)
        terms[b] = c
    return WeightVector(terms)


def _expr_of(src: str) -> tuple[Expr, int]:
    node = parse_expr(src)
    if isinstance(node, SuperPair):
        raise ExprTypeError("unexpected super-vector pair", 0)
    return _eval(node), 0


def parse_scalar(src: str) -> Scalar:
    e, pos = _expr_of(src)
    return _to_scalar(e, pos)


def parse_rat(src: str) -> Fraction:
    s = parse_scalar(src)
    if not s.is_lambda_free():
        raise ExprTypeError("expected a rational number", 0)
    return s.constant()


def parse_halfint(src: str) -> HalfInt:
    q = parse_rat(src)
    if (2 * q).denominator != 1:
        raise ExprTypeError(f"{q} is not a half-integer", 0)
    return HalfInt.of(q)


def parse_bipoly(src: str, names: tuple[str, str] = ("x", "y")) -> BiPoly:
    e, pos = _expr_of(src)
    return _to_bipoly(e, names, pos)


def parse_unipoly(src: str, var: str = "y") -> UniPoly:
    e, pos = _expr_of(src)
    return _to_unipoly(e, var, pos)


def parse_beta(src: str) -> UniPoly:
    """A lambda-free polynomial in ``y``."""
    p = parse_unipoly(src, "y")
    if not p.is_lambda_free():
        raise ExprTypeError("beta must not involve lambda", 0)
    return p


def parse_element(src: str) -> AlgebraElement:
    e, pos = _expr_of(src)
    return _to_element(e, pos)


def parse_generator(src: str) -> Generator:
    node = parse_expr(src)
    if not isinstance(node, Gen):
        raise ExprTypeError("expected a single generator such as G[3/2]", 0)
    return node.generator


def parse_weightvector(src: str):
    e, pos = _expr_of(src)
    return _to_weightvector(e, pos)


def parse_supervector(src: str) -> SuperVector:
    node = parse_expr(src)
    if isinstance(node, SuperPair):
        return evaluate(node)
    e = _eval(node)
    if e.t:
        raise ExprTypeError("expected 'even: P | odd: Q' or 0", 0)
    return SuperVector.zero()


def parse_phivector(src: str):
    from .structure import PhiVector

    v = parse_supervector(src)
    if not (v.even.is_v_free() and v.odd.is_v_free()):
        raise ExprTypeError("a quotient vector involves only x and s", 0)
    return PhiVector(v.even, v.odd)


PARSERS = {
    "rat": parse_rat,
    "halfint": parse_halfint,
    "scalar": parse_scalar,
    "bipoly": parse_bipoly,
    "unipoly": parse_unipoly,
    "generator": parse_generator,
    "element": parse_element,
    "supervector": parse_supervector,
    "phivector": parse_phivector,
    "weightvector": parse_weightvector,
}


def parse_value(src: str, kind: str):
    try:
        fn = PARSERS[kind]
    except KeyError:
        raise ValueError(f"unknown value type {kind!r}") from None
    return fn(src)


def parse(src: str):
    """Parse into the most specific domain value the text denotes."""
    node = parse_expr(src)
    if isinstance(node, SuperPair):
        return evaluate(node)
    if isinstance(node, Gen):
        return node.generator
    e = _eval(node)
    bases = e.bases()
    if not e.t or e.is_scalar():
        s = e.scalar()
        return s.constant() if s.is_lambda_free() else s
    if all(isinstance(b, Generator) for b in bases):
        return _to_element(e, 0)
    if all(isinstance(b, tuple) for b in bases):
        return _to_weightvector(e, 0)
    if bases == {None}:
        used = {n for (_, m) in e.t for n, d in zip(VARS, m) if d}
        if used <= {"y"}:
            return _to_unipoly(e, "y", 0)
        if used <= {"x", "y"}:
            return _to_bipoly(e, ("x", "y"), 0)
    raise ExprTypeError("expression mixes incompatible parts", 0)
