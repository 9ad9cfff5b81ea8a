"""Submodules of Omega(lam, beta), the quotients Phi(lam, beta, b) and composition series.

Every submodule is R_g = g(y)C[x,y] (+) g(t)C[s,t] or, when beta(0) = 0,
S_g = g(y)(xC[x,y] + yC[x,y]) (+) g(t)C[s,t].  The quotient by R_{y-b} is the
one-variable module Phi(lam, beta, b) on C[x] (+) C[s].
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, NamedTuple

from .algebra import KINDS, Generator, generators_in_window
from .arith import as_rat
from .omega import OmegaParams, SuperVector, act
from .poly import BiPoly, Multiplier, UniPoly, divides_v, rem_v
from . import sampling

Window = tuple[int, int]
DEFAULT_WINDOW: Window = (-6, 6)


def ordered_generators(window: Window = DEFAULT_WINDOW, kinds: Iterable[str] = KINDS) -> list[Generator]:
    """Window generators, smallest ``|index|`` first (positive before negative)."""
    gens = generators_in_window(window[0], window[1], kinds)
    return sorted(gens, key=lambda g: (abs(g.index.doubled), g.index.doubled < 0, g.sort_key()))


# -- submodule specs ---------------------------------------------------------


@dataclass(frozen=True)
class SubmoduleSpec:
    kind: str
    g: UniPoly

    def __post_init__(self):
        if self.kind not in ("R", "S"):
            raise ValueError(f"kind must be 'R' or 'S', got {self.kind!r}")
        g = self.g if isinstance(self.g, UniPoly) else UniPoly(self.g)
        if not g:
            raise ValueError("g must be nonzero")
        if not g.is_lambda_free():
            raise ValueError("g must have rational coefficients")
        if not g.is_monic():
            raise ValueError("g must be monic")
        object.__setattr__(self, "g", g)

    def __str__(self):
        return f"{self.kind}_{{{self.g}}}"


def member(v: SuperVector, spec: SubmoduleSpec) -> bool:
    """Membership in R_g or S_g."""
    g = spec.g
    if not (divides_v(g, v.even) and divides_v(g, v.odd)):
        return False
    if spec.kind == "R":
        return True
    q = v.even.divmod_v(g)[0]
    return not q.coeff(0, 0)


def random_member(r, spec: SubmoduleSpec, max_deg: int = 3) -> SuperVector:
    gv = spec.g.as_bipoly("v")
    odd = sampling.rand_bipoly(r, max_deg) * gv
    if spec.kind == "R":
        even = sampling.rand_bipoly(r, max_deg)
    else:
        even = BiPoly.monomial(1, 0) * sampling.rand_bipoly(r, max_deg) + BiPoly.monomial(0, 1) * sampling.rand_bipoly(r, max_deg)
    return SuperVector(even * gv, odd)


def _seed_members(spec: SubmoduleSpec) -> list[SuperVector]:
    gv = spec.g.as_bipoly("v")
    out = [
        SuperVector.of_even(gv * BiPoly.monomial(1, 0)),
        SuperVector.of_even(gv * BiPoly.monomial(0, 1)),
        SuperVector.of_odd(gv),
    ]
    if spec.kind == "R":
        out.append(SuperVector.of_even(gv))
    return out


def closure_witness(
    spec: SubmoduleSpec,
    p: OmegaParams,
    window: Window = DEFAULT_WINDOW,
    samples: int = 20,
    seed=None,
    kinds: Iterable[str] = KINDS,
) -> tuple[Generator, SuperVector] | None:
    """First ``(X, v)`` with ``v`` in the submodule and ``X v`` outside it, or None.

    The deterministic members ``g x, g y, g(t)`` (and ``g`` for R) are tried
    before ``samples`` random members.
    """
    gens = ordered_generators(window, kinds)
    r = sampling.rng(seed)
    candidates = _seed_members(spec)
    candidates += [random_member(r, spec) for _ in range(samples)]
    for v in candidates:
        for x in gens:
            if not member(act(x, v, p), spec):
                return x, v
    return None


def is_closed(spec: SubmoduleSpec, p: OmegaParams, **kw) -> bool:
    return closure_witness(spec, p, **kw) is None


def is_maximal(spec: SubmoduleSpec, p: OmegaParams) -> bool:
    """Whether ``spec`` is a maximal proper submodule of Omega(lam, beta).

    R_{y-b} is maximal exactly when Phi(lam, beta, b) is irreducible.  When
    beta(0) = 0 the codimension-one submodule S_1 is maximal as well, and
    R_y (contained in S_1) is not.
    """
    g = spec.g
    if spec.kind == "S":
        return g.degree == 0 and p.beta0 == 0
    if g.degree != 1:
        return False
    b = -g.coeff(0).constant()
    return phi_is_irreducible(PhiParams(p.beta, b))


def reduce_mod_R(v: SuperVector, g: UniPoly) -> SuperVector:
    """Canonical representative of ``v`` in Omega / R_g."""
    return SuperVector(rem_v(v.even, g), rem_v(v.odd, g))


def quotient_coordinates(v: SuperVector, g: UniPoly) -> dict[tuple[str, int], UniPoly]:
    """Coordinates of ``v`` mod R_g over C[L0] in the basis ``y^j.1, t^j.1`` (j < deg g).

    Returns ``{("even"|"odd", j): p_j}`` with ``v = sum p_j(L0) y^j`` modulo R_g.
    """
    red = reduce_mod_R(v, g)
    out = {}
    for name, comp in (("even", red.even), ("odd", red.odd)):
        cols: dict[int, dict] = {}
        for (i, j), c in comp.terms.items():
            cols.setdefault(j, {})[i] = c
        for j, col in cols.items():
            out[(name, j)] = UniPoly(col)
    return out


def quotient_basis(g: UniPoly) -> list[SuperVector]:
    """Representatives ``y^j`` (even) and ``t^j`` (odd), ``j < deg g``."""
    n = g.degree
    return [SuperVector.of_even(BiPoly.monomial(0, j)) for j in range(n)] + [
        SuperVector.of_odd(BiPoly.monomial(0, j)) for j in range(n)
    ]


# -- the quotient Phi(lam, beta, b) ------------------------------------------


class PhiParams:
    def __init__(self, beta, b):
        if not isinstance(beta, UniPoly):
            beta = UniPoly(beta) if isinstance(beta, (dict, list, tuple)) else UniPoly.const(beta)
        if not beta.is_lambda_free():
            raise ValueError("beta must have rational coefficients")
        self.beta = beta
        self.b = as_rat(b)
        q = beta.rational_coeffs()
        self.beta_b = sum((c * self.b**d for d, c in q.items()), Fraction(0))

    def __eq__(self, other):
        return isinstance(other, PhiParams) and (self.beta, self.b) == (other.beta, other.b)

    def __hash__(self):
        return hash((self.beta, self.b))

    def __repr__(self):
        return f"PhiParams(beta={self.beta}, b={self.b})"

    def as_dict(self) -> dict:
        from .render import render_unipoly

        return {"beta": render_unipoly(self.beta), "b": str(self.b)}


@dataclass(frozen=True)
class PhiVector:
    """Element of C[x] (+) C[s]; both parts are v-free polynomials."""

    even: BiPoly = field(default_factory=BiPoly.zero)
    odd: BiPoly = field(default_factory=BiPoly.zero)

    def __post_init__(self):
        for part in (self.even, self.odd):
            if not part.is_v_free():
                raise ValueError("PhiVector parts are polynomials in x (resp. s) only")

    @classmethod
    def from_unipolys(cls, even: UniPoly | None = None, odd: UniPoly | None = None) -> "PhiVector":
        e = even.as_bipoly("u") if even is not None else BiPoly.zero()
        o = odd.as_bipoly("u") if odd is not None else BiPoly.zero()
        return cls(e, o)

    def is_zero(self) -> bool:
        return not self.even and not self.odd

    def __bool__(self):
        return not self.is_zero()

    def __add__(self, other):
        return PhiVector(self.even + other.even, self.odd + other.odd)

    def __sub__(self, other):
        return PhiVector(self.even - other.even, self.odd - other.odd)

    def scale(self, c) -> "PhiVector":
        return PhiVector(self.even.scale(c), self.odd.scale(c))

    def as_supervector(self) -> SuperVector:
        return SuperVector(self.even, self.odd)

    def __str__(self):
        from .render import render_supervector

        return render_supervector(self.as_supervector())


def _phi_plan(gen: Generator, odd_in: bool, beta_b: Fraction, b: Fraction):
    kind, idx = gen.kind, gen.idx
    half = Fraction(1, 2)
    if kind == "L":
        extra = half if odd_in else 0
        return odd_in, Multiplier(1, {0: idx * (beta_b + extra)}), gen.index.to_int()
    if kind == "H":
        return odd_in, Multiplier(0, {0: b}), gen.index.to_int()
    if kind == "G":
        if not odd_in:
            return True, Multiplier(0, {0: 1}), int(idx - half)
        return False, Multiplier(1, {0: 2 * idx * beta_b}), int(idx + half)
    if not odd_in:
        return None
    return False, Multiplier(0, {0: b}), int(idx + half)


def phi_act(gen: Generator, f: PhiVector, q: PhiParams) -> PhiVector:
    """Action on Phi(lam, beta, b): the Omega action with y and t frozen at b."""
    even = BiPoly.zero()
    odd = BiPoly.zero()
    for odd_in, comp in ((False, f.even), (True, f.odd)):
        if not comp:
            continue
        plan = _phi_plan(gen, odd_in, q.beta_b, q.b)
        if plan is None:
            continue
        to_odd, mult, e = plan
        img = comp.affine_shift(gen.index, mult, e)
        if to_odd:
            odd = odd + img
        else:
            even = even + img
    return PhiVector(even, odd)


def phi_is_irreducible(q: PhiParams) -> bool:
    return q.beta_b != 0 or q.b != 0


def rand_phivector(r, max_deg: int = 3) -> PhiVector:
    def part():
        return BiPoly({(i, 0): sampling.rand_rat(r) for i in range(max_deg + 1) if r.random() < 0.6})

    return PhiVector(part(), part())


def phi_submodule_witness(
    q: PhiParams, window: Window = DEFAULT_WINDOW, samples: int = 20, seed=None, kinds: Iterable[str] = KINDS
) -> tuple[Generator, PhiVector] | None:
    """Search for ``X f`` leaving ``xC[x] (+) C[s]`` with ``f`` inside it."""
    r = sampling.rng(seed)
    x = BiPoly.monomial(1, 0)
    cands = [PhiVector(x, BiPoly.zero()), PhiVector(BiPoly.zero(), BiPoly.const(1))]
    for _ in range(samples):
        f = rand_phivector(r)
        cands.append(PhiVector(f.even * x, f.odd))
    gens = ordered_generators(window, kinds)
    for f in cands:
        for gen in gens:
            if phi_act(gen, f, q).even.coeff(0, 0):
                return gen, f
    return None


def psi(f: PhiVector, gprime: UniPoly) -> SuperVector:
    """``f(x) -> g'(y) f(x)``, ``f(s) -> g'(t) f(s)``."""
    gv = gprime.as_bipoly("v")
    return SuperVector(f.even * gv, f.odd * gv)


def psi_counterexample(
    gprime: UniPoly,
    b,
    q: PhiParams,
    samples: int = 50,
    seed=None,
    window: Window = DEFAULT_WINDOW,
    kinds: Iterable[str] = KINDS,
    max_deg: int = 3,
) -> tuple[Generator, PhiVector] | None:
    """First ``(X, f)`` with ``psi(X f) != X psi(f)`` modulo R_{(y-b) g'}."""
    b = as_rat(b)
    if b != q.b:
        raise ValueError("b disagrees with the Phi parameters")
    g = UniPoly({0: -b, 1: 1}) * gprime
    p = OmegaParams(q.beta)
    r = sampling.rng(seed)
    gens = ordered_generators(window, kinds)
    for _ in range(samples):
        f = rand_phivector(r, max_deg)
        image = psi(f, gprime)
        for x in gens:
            diff = psi(phi_act(x, f, q), gprime) - act(x, image, p)
            if reduce_mod_R(diff, g):
                return x, f
    return None


def lemma44_verify(gprime: UniPoly, b, q: PhiParams, samples: int = 50, **kw) -> bool:
    """psi intertwines Phi(lam, beta, b) with R_{g'}/R_g, on sampled inputs."""
    return psi_counterexample(gprime, b, q, samples, **kw) is None


# -- composition series ------------------------------------------------------


class EmptyRootsError(ValueError):
    pass


class CompositionSeries(NamedTuple):
    factors: list[PhiParams]
    rank: int
    g: UniPoly
    chain: list[UniPoly]


def composition_series(roots: Iterable[tuple[object, int]], p: OmegaParams) -> CompositionSeries:
    """Factors of Omega/R_g for ``g = prod (y - a_i)^{m_i}``, in nesting order.

    ``chain[i]`` is ``g_i = (y - a_1)...(y - a_i)`` so that the i-th factor is
    R_{g_i}/R_{g_{i+1}} (with g_0 = 1).
    """
    flat = []
    for root, mult in roots:
        if int(mult) != mult or mult < 1:
            raise ValueError("multiplicities must be positive integers")
        flat += [as_rat(root)] * int(mult)
    if not flat:
        raise EmptyRootsError("roots must be nonempty")
    chain = [UniPoly.const(1)]
    for a in flat:
        chain.append(chain[-1] * UniPoly({0: -a, 1: 1}))
    factors = [PhiParams(p.beta, a) for a in flat]
    return CompositionSeries(factors, 2 * len(flat), chain[-1], chain)


def verify_series(series: CompositionSeries, samples: int = 10, seed=None, **kw) -> bool:
    """Check every factor R_{g_i}/R_{g_{i+1}} against its Phi by the psi map."""
    for i, q in enumerate(series.factors):
        if not lemma44_verify(series.chain[i], q.b, q, samples, seed=seed, **kw):
            return False
    return True
