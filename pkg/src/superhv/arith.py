"""Exact scalars: rationals, half-integer indices and Laurent polynomials in lambda.

``Rat`` is :class:`fractions.Fraction`.  A :class:`Scalar` is an element of
``Q[lam, lam^-1]`` stored as a sparse ``{exponent: Fraction}`` map with no
zero entries, so structural equality is mathematical equality.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping

Rat = Fraction


class ZeroLambdaError(ValueError):
    """Raised when lambda is specialised to zero."""


def as_rat(value) -> Fraction:
    """Coerce ints, Fractions, HalfInts and rational strings to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, HalfInt):
        return value.to_rat()
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


class HalfInt:
    """An element of ``(1/2)Z`` stored as its double.

    Generator indices live here: ``L`` and ``H`` take integers, ``G`` and
    ``Q`` take strict half-integers.
    """

    __slots__ = ("doubled",)

    def __init__(self, doubled: int):
        object.__setattr__(self, "doubled", int(doubled))

    def __setattr__(self, name, value):
        raise AttributeError("HalfInt is immutable")

    @classmethod
    def of(cls, value) -> "HalfInt":
        if isinstance(value, HalfInt):
            return value
        q = as_rat(value) * 2
        if q.denominator != 1:
            raise ValueError(f"{value!r} is not a half-integer")
        return cls(q.numerator)

    @property
    def is_integer(self) -> bool:
        return self.doubled % 2 == 0

    @property
    def is_strict_half(self) -> bool:
        return self.doubled % 2 != 0

    def to_rat(self) -> Fraction:
        return Fraction(self.doubled, 2)

    def to_int(self) -> int:
        if not self.is_integer:
            raise ValueError(f"{self} is not an integer")
        return self.doubled // 2

    def __add__(self, other):
        if isinstance(other, int):
            other = HalfInt(2 * other)
        if not isinstance(other, HalfInt):
            return NotImplemented
        return HalfInt(self.doubled + other.doubled)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = HalfInt(2 * other)
        if not isinstance(other, HalfInt):
            return NotImplemented
        return HalfInt(self.doubled - other.doubled)

    def __rsub__(self, other):
        if isinstance(other, int):
            return HalfInt(2 * other - self.doubled)
        return NotImplemented

    def __neg__(self):
        return HalfInt(-self.doubled)

    def __eq__(self, other):
        if isinstance(other, HalfInt):
            return self.doubled == other.doubled
        if isinstance(other, (int, Fraction)):
            return self.to_rat() == other
        return NotImplemented

    def __lt__(self, other):
        if isinstance(other, HalfInt):
            return self.doubled < other.doubled
        return NotImplemented

    def __le__(self, other):
        if isinstance(other, HalfInt):
            return self.doubled <= other.doubled
        return NotImplemented

    def __hash__(self):
        return hash(("HalfInt", self.doubled))

    def __repr__(self):
        return f"HalfInt({self})"

    def __str__(self):
        if self.is_integer:
            return str(self.doubled // 2)
        return f"{self.doubled}/2"


def halfint_add(a: HalfInt, b: HalfInt) -> HalfInt:
    return a + b


class Scalar:
    """Laurent polynomial in the formal unit lambda with rational coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, object] | None = None):
        clean = {}
        if terms:
            for k, c in terms.items():
                c = as_rat(c)
                if c:
                    clean[int(k)] = c
        object.__setattr__(self, "_terms", clean)
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _raw(cls, terms: dict) -> "Scalar":
        # terms must already be canonical
        s = object.__new__(cls)
        object.__setattr__(s, "_terms", terms)
        object.__setattr__(s, "_hash", None)
        return s

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    @classmethod
    def const(cls, c) -> "Scalar":
        return cls({0: c})

    @classmethod
    def lam(cls, k: int = 1, c=1) -> "Scalar":
        """``c * lam**k``."""
        return cls({k: c})

    @property
    def terms(self) -> dict[int, Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def is_lambda_free(self) -> bool:
        return all(k == 0 for k in self._terms)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def constant(self) -> Fraction:
        """Coefficient of lam^0."""
        return self._terms.get(0, Fraction(0))

    def exponents(self) -> list[int]:
        return sorted(self._terms, reverse=True)

    def __add__(self, other):
        other = _coerce_scalar(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return Scalar._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return Scalar._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        other = _coerce_scalar(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce_scalar(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce_scalar(other)
        if other is None:
            return NotImplemented
        out: dict[int, Fraction] = {}
        for k1, c1 in self._terms.items():
            for k2, c2 in other._terms.items():
                k = k1 + k2
                out[k] = out.get(k, 0) + c1 * c2
        return Scalar._raw({k: c for k, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            if not self.is_monomial():
                raise ZeroDivisionError("only monomial scalars are invertible")
            ((k, c),) = self._terms.items()
            return Scalar._raw({k * n: c**n})
        result = Scalar.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self) -> "Scalar":
        return self ** -1

    def shift(self, e: int) -> "Scalar":
        """Multiply by lam**e."""
        if not e:
            return self
        return Scalar._raw({k + e: c for k, c in self._terms.items()})

    def eval(self, lam) -> Fraction:
        return scalar_eval(self, lam)

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == ({0: Fraction(other)} if other else {})
        return NotImplemented

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash(frozenset(self._terms.items()))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self):
        return f"Scalar({self._terms!r})"

    def __str__(self):
        from .render import render_scalar

        return render_scalar(self)


def _coerce_scalar(x) -> Scalar | None:
    if isinstance(x, Scalar):
        return x
    if isinstance(x, (int, Fraction)):
        return Scalar._raw({0: Fraction(x)} if x else {})
    return None


def scalar(x) -> Scalar:
    s = _coerce_scalar(x)
    if s is None:
        if isinstance(x, HalfInt):
            return Scalar.const(x.to_rat())
        raise TypeError(f"cannot interpret {x!r} as a Scalar")
    return s


def scalar_mul(a: Scalar, b: Scalar) -> Scalar:
    return a * b


def scalar_eval(s: Scalar, lam) -> Fraction:
    """Substitute a nonzero rational for lambda."""
    lam = as_rat(lam)
    if lam == 0:
        raise ZeroLambdaError("lambda must be nonzero")
    return sum((c * lam**k for k, c in s.items()), Fraction(0))


def sum_scalars(items: Iterable[Scalar]) -> Scalar:
    total = Scalar()
    for s in items:
        total = total + s
    return total
