"""The N=1 Heisenberg-Virasoro superalgebra: generators, brackets, parity."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .arith import HalfInt, Scalar, scalar

KINDS = ("L", "H", "G", "Q")
EVEN_KINDS = frozenset("LH")
ODD_KINDS = frozenset("GQ")
_KIND_ORDER = {k: n for n, k in enumerate(KINDS)}


class IndexParityError(ValueError):
    """Generator index has the wrong integrality for its kind."""


@dataclass(frozen=True)
class Generator:
    kind: str
    index: HalfInt

    def __post_init__(self):
        if self.kind not in _KIND_ORDER:
            raise ValueError(f"unknown generator kind {self.kind!r}")
        idx = HalfInt.of(self.index)
        object.__setattr__(self, "index", idx)
        if self.kind in EVEN_KINDS and not idx.is_integer:
            raise IndexParityError(f"{self.kind} needs an integer index, got {idx}")
        if self.kind in ODD_KINDS and idx.is_integer:
            raise IndexParityError(f"{self.kind} needs a strict half-integer index, got {idx}")

    @property
    def parity(self) -> int:
        return 1 if self.kind in ODD_KINDS else 0

    @property
    def idx(self) -> Fraction:
        return self.index.to_rat()

    def sort_key(self):
        return (_KIND_ORDER[self.kind], self.index.doubled)

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __str__(self):
        return f"{self.kind}[{self.index}]"


def L(m) -> Generator:
    return Generator("L", m)


def H(m) -> Generator:
    return Generator("H", m)


def G(p) -> Generator:
    return Generator("G", p)


def Q(p) -> Generator:
    return Generator("Q", p)


def generators_in_window(lo: int = -6, hi: int = 6, kinds: Iterable[str] = KINDS) -> list[Generator]:
    """All generators of the given kinds whose doubled index lies in ``[lo, hi]``."""
    out = []
    for kind in kinds:
        want_odd = kind in ODD_KINDS
        for d in range(lo, hi + 1):
            if (d % 2 != 0) == want_odd:
                out.append(Generator(kind, HalfInt(d)))
    return out


class AlgebraElement:
    """Finite Scalar-linear combination of generators."""

    __slots__ = ("_t",)

    def __init__(self, terms: Mapping[Generator, object] | None = None):
        t = {}
        if terms:
            for g, c in terms.items():
                s = scalar(c)
                if g in t:
                    s = t[g] + s
                if s:
                    t[g] = s
                else:
                    t.pop(g, None)
        self._t = t

    @classmethod
    def of(cls, g: Generator, c=1) -> "AlgebraElement":
        return cls({g: c})

    @property
    def terms(self) -> dict[Generator, Scalar]:
        return dict(self._t)

    def items(self):
        return self._t.items()

    def is_zero(self) -> bool:
        return not self._t

    def __bool__(self):
        return bool(self._t)

    def __add__(self, other):
        other = as_element(other)
        out = dict(self._t)
        for g, c in other._t.items():
            out[g] = out[g] + c if g in out else c
        return AlgebraElement(out)

    def __neg__(self):
        return AlgebraElement({g: -c for g, c in self._t.items()})

    def __sub__(self, other):
        return self + (-as_element(other))

    def __mul__(self, c):
        if isinstance(c, (int, Fraction, Scalar)):
            return AlgebraElement({g: s * c for g, s in self._t.items()})
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, Generator):
            other = AlgebraElement.of(other)
        if isinstance(other, AlgebraElement):
            return self._t == other._t
        if isinstance(other, int) and other == 0:
            return not self._t
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._t.items()))

    def __repr__(self):
        return f"AlgebraElement({self})"

    def __str__(self):
        from .render import render_element

        return render_element(self)


def as_element(x) -> AlgebraElement:
    if isinstance(x, AlgebraElement):
        return x
    if isinstance(x, Generator):
        return AlgebraElement.of(x)
    raise TypeError(f"not an algebra element: {x!r}")


def _ordered_bracket(a: Generator, b: Generator):
    """Table entry for an ordered pair listed in the defining relations, else None."""
    ka, kb = a.kind, b.kind
    x, y = a.idx, b.idx
    s = a.index + b.index
    if ka == "L":
        if kb == "L":
            return x - y, Generator("L", s)
        if kb == "H":
            return -y, Generator("H", s)
        if kb == "G":
            return x / 2 - y, Generator("G", s)
        if kb == "Q":
            return -(x / 2 + y), Generator("Q", s)
    elif ka == "H":
        if kb == "G":
            return x, Generator("Q", s)
        if kb in ("H", "Q"):
            return Fraction(0), None
    elif ka == "G":
        if kb == "G":
            return Fraction(2), Generator("L", s)
        if kb == "Q":
            return Fraction(1), Generator("H", s)
    elif ka == "Q" and kb == "Q":
        return Fraction(0), None
    return None


def bracket_generators(a: Generator, b: Generator) -> tuple[Fraction, Generator | None]:
    """``[a, b] = c * X``; returns ``(c, X)`` with ``X`` None when the bracket vanishes."""
    entry = _ordered_bracket(a, b)
    if entry is None:
        c, g = _ordered_bracket(b, a)
        sign = 1 if a.parity and b.parity else -1
        entry = (sign * c, g)
    c, g = entry
    if not c:
        return Fraction(0), None
    return c, g


def bracket(a, b) -> AlgebraElement:
    """Bilinear super-bracket of two algebra elements (or generators)."""
    a, b = as_element(a), as_element(b)
    out: dict[Generator, Scalar] = {}
    for ga, ca in a.items():
        for gb, cb in b.items():
            c, g = bracket_generators(ga, gb)
            if g is None:
                continue
            term = ca * cb * c
            out[g] = out[g] + term if g in out else term
    return AlgebraElement(out)


def super_sign(pa: int, pb: int) -> int:
    """``(-1)^{|a||b|}``."""
    return -1 if pa and pb else 1


def jacobi_residual(a: Generator, b: Generator, c: Generator) -> AlgebraElement:
    """Graded Jacobi sum; identically zero in a Lie superalgebra."""
    pa, pb, pc = a.parity, b.parity, c.parity
    acc: dict[Generator, Fraction] = {}
    # generator-level: each inner bracket is a single term or zero
    for sign, x, y, z in (
        (super_sign(pa, pc), a, b, c),
        (super_sign(pb, pa), b, c, a),
        (super_sign(pc, pb), c, a, b),
    ):
        c1, inner = bracket_generators(y, z)
        if inner is None:
            continue
        c2, outer = bracket_generators(x, inner)
        if outer is not None:
            acc[outer] = acc.get(outer, 0) + sign * c1 * c2
    return AlgebraElement(acc)


def parity(a) -> str:
    """``'even'``, ``'odd'`` or ``'mixed'`` according to the support of ``a``."""
    a = as_element(a)
    ps = {g.parity for g in a.terms}
    if ps == {1}:
        return "odd"
    if len(ps) > 1:
        return "mixed"
    return "even"
