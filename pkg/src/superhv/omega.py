"""The rank-2 free module Omega(lam, beta) = C[x,y] (+) C[s,t].

Every generator acts on a component by the same pattern,
``lam^e * (alpha*u + P(v)) * f(u + idx, v)``, with the pair ``(alpha, P)``,
the exponent ``e`` and the target component read off the generator kind.
That pattern is exactly :meth:`BiPoly.affine_shift`.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Sequence

from .algebra import Generator, as_element, bracket, super_sign
from .arith import Scalar, as_rat
from .poly import BiPoly, Multiplier, UniPoly, combination_is_zero


class BoundExceededError(ValueError):
    pass


@dataclass(frozen=True)
class SuperVector:
    """Even part in ``x, y`` and odd part in ``s, t`` (both stored as u, v)."""

    even: BiPoly = field(default_factory=BiPoly.zero)
    odd: BiPoly = field(default_factory=BiPoly.zero)

    @classmethod
    def zero(cls) -> "SuperVector":
        return cls(BiPoly.zero(), BiPoly.zero())

    @classmethod
    def of_even(cls, f: BiPoly) -> "SuperVector":
        return cls(f, BiPoly.zero())

    @classmethod
    def of_odd(cls, f: BiPoly) -> "SuperVector":
        return cls(BiPoly.zero(), f)

    def is_zero(self) -> bool:
        return not self.even and not self.odd

    def __bool__(self):
        return not self.is_zero()

    def __add__(self, other: "SuperVector") -> "SuperVector":
        return SuperVector(self.even + other.even, self.odd + other.odd)

    def __sub__(self, other: "SuperVector") -> "SuperVector":
        return SuperVector(self.even - other.even, self.odd - other.odd)

    def __neg__(self):
        return SuperVector(-self.even, -self.odd)

    def scale(self, c) -> "SuperVector":
        return SuperVector(self.even.scale(c), self.odd.scale(c))

    def __mul__(self, c):
        if isinstance(c, (int, Fraction, Scalar)):
            return self.scale(c)
        return NotImplemented

    __rmul__ = __mul__

    def map(self, fn) -> "SuperVector":
        return SuperVector(fn(self.even), fn(self.odd))

    def __str__(self):
        from .render import render_supervector

        return render_supervector(self)


def vectors_sum_to_zero(pairs) -> bool:
    """Exact test of ``sum(c * v) == 0`` over ``(SuperVector, rational)`` pairs."""
    pairs = list(pairs)
    return combination_is_zero((v.even, c) for v, c in pairs) and combination_is_zero((v.odd, c) for v, c in pairs)


class OmegaParams:
    """Module parameter ``beta(y)``; lambda stays formal.

    The per-generator multipliers are cached, so share one instance across a
    sweep.
    """

    def __init__(self, beta):
        if not isinstance(beta, UniPoly):
            beta = UniPoly(beta) if isinstance(beta, (dict, list, tuple)) else UniPoly.const(beta)
        if not beta.is_lambda_free():
            raise ValueError("beta must have lambda-free rational coefficients")
        self.beta = beta
        self._beta_q = beta.rational_coeffs()
        self._cache: dict = {}

    @property
    def beta0(self) -> Fraction:
        return self._beta_q.get(0, Fraction(0))

    def beta_at(self, b) -> Fraction:
        b = as_rat(b)
        return sum((c * b**d for d, c in self._beta_q.items()), Fraction(0))

    def __eq__(self, other):
        return isinstance(other, OmegaParams) and self.beta == other.beta

    def __hash__(self):
        return hash(self.beta)

    def __repr__(self):
        return f"OmegaParams(beta={self.beta})"

    def plan(self, gen: Generator, odd_input: bool):
        """``(target_is_odd, Multiplier, lam_exp)`` or None if ``gen`` kills the component."""
        key = (gen, odd_input)
        hit = self._cache.get(key, False)
        if hit is not False:
            return hit
        plan = _plan(gen, odd_input, self._beta_q)
        self._cache[key] = plan
        return plan


_V = {1: 1}
_ONE = {0: 1}


def _scaled(beta: dict, c: Fraction, extra: Fraction = Fraction(0)) -> dict:
    """Coefficients of ``c * (beta(v) + extra)``."""
    out = {d: c * b for d, b in beta.items()}
    out[0] = out.get(0, 0) + c * extra
    return out


def _plan(gen: Generator, odd_input: bool, beta: dict):
    kind, idx = gen.kind, gen.idx
    if kind == "L":
        m = gen.index.to_int()
        extra = Fraction(1, 2) if odd_input else Fraction(0)
        return odd_input, Multiplier(1, _scaled(beta, idx, extra)), m
    if kind == "H":
        return odd_input, Multiplier(0, _V), gen.index.to_int()
    half = Fraction(1, 2)
    if kind == "G":
        if not odd_input:
            return True, Multiplier(0, _ONE), int(idx - half)
        return False, Multiplier(1, _scaled(beta, 2 * idx)), int(idx + half)
    # Q kills the even component
    if not odd_input:
        return None
    return False, Multiplier(0, _V), int(idx + half)


def act(gen: Generator, v: SuperVector, p: OmegaParams) -> SuperVector:
    """Action of a single generator on ``Omega(lam, beta)``."""
    if v.is_zero():
        return v
    even = BiPoly.zero()
    odd = BiPoly.zero()
    for odd_in, comp in ((False, v.even), (True, v.odd)):
        if not comp:
            continue
        plan = p.plan(gen, odd_in)
        if plan is None:
            continue
        to_odd, mult, e = plan
        img = comp.affine_shift(gen.index, mult, e)
        if to_odd:
            odd = odd + img
        else:
            even = even + img
    return SuperVector(even, odd)


def act_element(a, v: SuperVector, p: OmegaParams) -> SuperVector:
    """Linear extension of :func:`act` to algebra elements."""
    a = as_element(a)
    out = SuperVector.zero()
    for g, c in a.items():
        out = out + act(g, v, p).scale(c)
    return out


def act_word(word: Sequence, v: SuperVector, p: OmegaParams) -> SuperVector:
    """Apply ``word[0] * word[1] * ... * word[-1]`` to ``v`` (rightmost first)."""
    for a in reversed(word):
        if isinstance(a, Generator):
            v = act(a, v, p)
        else:
            v = act_element(a, v, p)
    return v


def verify_bracket_on(a: Generator, b: Generator, v: SuperVector, p: OmegaParams) -> bool:
    """Module axiom ``a(bv) - (-1)^{|a||b|} b(av) = [a,b] v``, checked exactly."""
    lhs = act_element(bracket(a, b), v, p)
    rhs = act(a, act(b, v, p), p) - act(b, act(a, v, p), p).scale(super_sign(a.parity, b.parity))
    return lhs == rhs


L0 = Generator("L", 0)
H0 = Generator("H", 0)


def verify_lemma32(x: Generator, i: int, v: SuperVector, p: OmegaParams, bound: int = 4) -> bool:
    """Check ``X L0^i = (L0 + idx X)^i X`` and ``X H0^i = H0^i X`` on ``v``."""
    if i < 0:
        raise ValueError("i must be nonnegative")
    if i > bound:
        raise BoundExceededError(f"i={i} exceeds bound {bound}")
    idx = x.idx
    lhs = act(x, act_word([L0] * i, v, p), p)
    xv = act(x, v, p)
    rhs = SuperVector.zero()
    power = xv
    for j in range(i + 1):
        rhs = rhs + power.scale(comb(i, j) * idx ** (i - j))
        power = act(L0, power, p)
    if lhs != rhs:
        return False
    return act(x, act_word([H0] * i, v, p), p) == act_word([H0] * i, xv, p)


FORMAL = "formal"


def params_isomorphic(p1: OmegaParams, p2: OmegaParams, lam1=FORMAL, lam2=FORMAL) -> bool:
    """Omega(lam1, beta1) ~ Omega(lam2, beta2) iff the parameters coincide."""
    def norm(lam):
        return FORMAL if lam == FORMAL else as_rat(lam)

    return norm(lam1) == norm(lam2) and p1.beta == p2.beta


def h_monomial(a: int, b: int, odd: bool = False) -> SuperVector:
    """``L0^a H0^b`` applied to the even (or odd) free generator."""
    p = OmegaParams(UniPoly())
    one = BiPoly.const(1)
    start = SuperVector.of_odd(one) if odd else SuperVector.of_even(one)
    return act_word([L0] * a + [H0] * b, start, p)
