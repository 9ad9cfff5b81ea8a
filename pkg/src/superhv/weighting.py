"""The weighting functor and the intermediate series modules A(a, b, c).

Omega(lam, beta) is read as C[L0, H0] 1_even (+) C[L0, H0] 1_odd (L0 acts as
x, H0 as y).  Quotienting by the maximal ideal generated by ``L0 + r + alpha1``
and ``H0 + alpha2`` evaluates a polynomial coefficient at ``L0 = -(r + alpha1)``,
``H0 = -alpha2``.  Even basis vectors v+_n sit at ``r = n + eps`` (n integer)
and odd ones v-_q at ``r = q + eps`` (q a strict half-integer).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple

from .algebra import KINDS, Generator, as_element, bracket, generators_in_window, super_sign
from .arith import HalfInt, Scalar, as_rat, scalar
from .omega import OmegaParams, SuperVector, act
from .poly import BiPoly

HALF = Fraction(1, 2)
PLUS, MINUS = "+", "-"


class LatticeMismatchError(ValueError):
    """An index is on the wrong lattice for its sign or for epsilon."""


@dataclass(frozen=True)
class WeightParams:
    alpha1: Fraction
    alpha2: Fraction
    epsilon: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "alpha1", as_rat(self.alpha1))
        object.__setattr__(self, "alpha2", as_rat(self.alpha2))
        eps = as_rat(self.epsilon)
        if eps not in (0, HALF):
            raise ValueError("epsilon must be 0 or 1/2")
        object.__setattr__(self, "epsilon", eps)


@dataclass(frozen=True)
class AModuleParams:
    a: Fraction
    b: Fraction
    c: Fraction

    def __post_init__(self):
        for name in ("a", "b", "c"):
            object.__setattr__(self, name, as_rat(getattr(self, name)))


def _check_lattice(sign: str, idx: HalfInt) -> None:
    if sign == PLUS and not idx.is_integer:
        raise LatticeMismatchError(f"v+ needs an integer index, got {idx}")
    if sign == MINUS and idx.is_integer:
        raise LatticeMismatchError(f"v- needs a strict half-integer index, got {idx}")
    if sign not in (PLUS, MINUS):
        raise ValueError(f"sign must be '+' or '-', got {sign!r}")


class WeightVector:
    """Finite combination of the basis vectors v+_n and v-_q."""

    __slots__ = ("_t",)

    def __init__(self, terms: Mapping[tuple[str, object], object] | None = None):
        t: dict[tuple[str, HalfInt], Scalar] = {}
        for (sign, idx), c in (terms or {}).items():
            idx = HalfInt.of(idx)
            _check_lattice(sign, idx)
            s = scalar(c)
            key = (sign, idx)
            if key in t:
                s = t[key] + s
            if s:
                t[key] = s
            else:
                t.pop(key, None)
        self._t = t

    @classmethod
    def basis(cls, sign: str, idx, c=1) -> "WeightVector":
        return cls({(sign, idx): c})

    @property
    def terms(self) -> dict[tuple[str, HalfInt], Scalar]:
        return dict(self._t)

    def items(self):
        return self._t.items()

    def is_zero(self) -> bool:
        return not self._t

    def __bool__(self):
        return bool(self._t)

    def __add__(self, other: "WeightVector") -> "WeightVector":
        out = dict(self._t)
        for key, c in other._t.items():
            out[key] = out[key] + c if key in out else c
        return WeightVector(out)

    def __neg__(self):
        return WeightVector({k: -c for k, c in self._t.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "WeightVector":
        c = scalar(c)
        return WeightVector({k: s * c for k, s in self._t.items()})

    def __eq__(self, other):
        if isinstance(other, WeightVector):
            return self._t == other._t
        if isinstance(other, int) and other == 0:
            return not self._t
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._t.items()))

    def __repr__(self):
        return f"WeightVector({self})"

    def __str__(self):
        from .render import render_weightvector

        return render_weightvector(self)


# -- the functor -------------------------------------------------------------


def weight_reduce(f: BiPoly, n_eps, w: WeightParams, odd: bool = False) -> Scalar:
    """Residue of ``f(L0, H0) 1`` modulo the ideal at weight ``n_eps``.

    ``n_eps - eps`` must be an integer (a strict half-integer when ``odd``).
    """
    n_eps = HalfInt.of(n_eps)
    base = n_eps - HalfInt.of(w.epsilon)
    if base.is_integer == odd:
        raise LatticeMismatchError(f"weight {n_eps} is off the lattice for eps={w.epsilon}")
    return f.eval(-(n_eps.to_rat() + w.alpha1), -w.alpha2)


_ONE = BiPoly.const(1)


def weighted_act(gen: Generator, sign: str, index, w: WeightParams, p: OmegaParams) -> WeightVector:
    """``gen`` applied to the basis vector ``v^sign_index`` of W(Omega')."""
    index = HalfInt.of(index)
    _check_lattice(sign, index)
    start = SuperVector.of_even(_ONE) if sign == PLUS else SuperVector.of_odd(_ONE)
    image = act(gen, start, p)
    target = index + gen.index
    tsign = (MINUS if sign == PLUS else PLUS) if gen.parity else sign
    comp = image.even if tsign == PLUS else image.odd
    if not comp:
        return WeightVector()
    eps = HalfInt.of(w.epsilon)
    coeff = weight_reduce(comp, target + eps, w, odd=tsign == MINUS)
    return WeightVector({(tsign, target): coeff})


def weighted_act_vector(a, v: WeightVector, w: WeightParams, p: OmegaParams) -> WeightVector:
    """Linear extension of :func:`weighted_act` in both arguments."""
    out = WeightVector()
    for gen, ca in as_element(a).items():
        for (sign, idx), cv in v.items():
            out = out + weighted_act(gen, sign, idx, w, p).scale(ca * cv)
    return out


def _hat_exp(sign: str, idx: HalfInt) -> int:
    # v^_n+ = lam^n v_n+,  v^_q- = lam^(q - 1/2) v_q-
    return idx.to_int() if sign == PLUS else int(idx.to_rat() - HALF)


def rescaled_act(gen: Generator, sign: str, index, w: WeightParams, p: OmegaParams) -> WeightVector:
    """:func:`weighted_act` written in the rescaled basis ``v^``."""
    index = HalfInt.of(index)
    out = {}
    for (tsign, tidx), c in weighted_act(gen, sign, index, w, p).items():
        out[(tsign, tidx)] = c.shift(_hat_exp(sign, index) - _hat_exp(tsign, tidx))
    return WeightVector(out)


def a_module_act(gen: Generator, v: WeightVector, q: AModuleParams) -> WeightVector:
    """The intermediate series action, extended linearly in ``v``."""
    a, b, c = q.a, q.b, q.c
    k = gen.idx
    out = {}

    def put(key, coef):
        if coef:
            out[key] = out[key] + coef if key in out else coef

    for (sign, idx), s in v.items():
        n = idx.to_rat()
        target = idx + gen.index
        if gen.kind == "L":
            extra = 0 if sign == PLUS else HALF
            put((sign, target), s * (c - n + k * (a + extra)))
        elif gen.kind == "H":
            put((sign, target), s * b)
        elif gen.kind == "G":
            if sign == MINUS:
                put((PLUS, target), s * (c - n + 2 * k * (a + HALF)))
            else:
                put((MINUS, target), s)
        elif sign == MINUS:
            put((PLUS, target), s * b)
    return WeightVector(out)


def matched_params(w: WeightParams, p: OmegaParams) -> AModuleParams:
    """``A(beta(-alpha2) - 1, -alpha2, -alpha1 - eps)``."""
    return AModuleParams(p.beta_at(-w.alpha2) - 1, -w.alpha2, -w.alpha1 - w.epsilon)


class Mismatch(NamedTuple):
    gen: Generator
    sign: str
    index: HalfInt
    got: WeightVector
    expected: WeightVector


def basis_in_window(window: tuple[int, int] = (-6, 6)) -> list[tuple[str, HalfInt]]:
    lo, hi = window
    return [(PLUS if d % 2 == 0 else MINUS, HalfInt(d)) for d in range(lo, hi + 1)]


def weighting_mismatches(
    w: WeightParams, p: OmegaParams, window: tuple[int, int] = (-6, 6), kinds: Iterable[str] = KINDS
) -> list[Mismatch]:
    """Every windowed (generator, basis vector) whose rescaled action differs from A(a, b, c).

    A rescaled coefficient that still carries lam counts as a mismatch.
    """
    q = matched_params(w, p)
    bad = []
    for gen in generators_in_window(window[0], window[1], kinds):
        for sign, idx in basis_in_window(window):
            got = rescaled_act(gen, sign, idx, w, p)
            expected = a_module_act(gen, WeightVector.basis(sign, idx), q)
            lam_free = all(c.is_lambda_free() for _, c in got.items())
            if not lam_free or got != expected:
                bad.append(Mismatch(gen, sign, idx, got, expected))
    return bad


def verify_theorem64(w: WeightParams, p: OmegaParams, window: tuple[int, int] = (-6, 6)) -> bool:
    return not weighting_mismatches(w, p, window)


def functoriality_counterexample(
    w: WeightParams, p: OmegaParams, window: tuple[int, int] = (-4, 4), kinds: Iterable[str] = KINDS
):
    """First ``(X, Y, e)`` with ``[X,Y] e != X(Y e) - (-1)^{|X||Y|} Y(X e)`` in W(Omega')."""
    gens = generators_in_window(window[0], window[1], kinds)
    for sign, idx in basis_in_window(window):
        e = WeightVector.basis(sign, idx)
        first = {g: weighted_act(g, sign, idx, w, p) for g in gens}
        for x in gens:
            for y in gens:
                lhs = weighted_act_vector(bracket(x, y), e, w, p)
                rhs = weighted_act_vector(x, first[y], w, p) - weighted_act_vector(y, first[x], w, p).scale(
                    super_sign(x.parity, y.parity)
                )
                if lhs != rhs:
                    return x, y, e
    return None


def a_is_reducible(q: AModuleParams) -> bool:
    """A(a, b, c) is reducible iff b = 0 and (c integer, a = -1) or (c in Z + 1/2, a = -1/2)."""
    if q.b != 0:
        return False
    if q.a == -1 and q.c.denominator == 1:
        return True
    return q.a == -HALF and (q.c - HALF).denominator == 1
