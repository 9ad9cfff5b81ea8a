"""Modules over the subalgebras hv (L, H), ns (L, G), fv (L, Q) and hc (H, Q).

The actions are written out from each family's own defining formulas rather
than delegated to :mod:`superhv.omega`; :func:`restriction_consistency`
checks that they agree with the restricted Omega action.  hv lives on a
single polynomial ring C[x, y]; the other three are super.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import Generator, as_element, bracket, super_sign
from .arith import as_rat
from .omega import OmegaParams, SuperVector, act
from .poly import BiPoly, Multiplier, UniPoly, divides_v, rem_v
from .structure import (
    DEFAULT_WINDOW,
    PhiVector,
    SubmoduleSpec,
    Window,
    _phi_plan,
    ordered_generators,
    psi,
    rand_phivector,
)
from . import sampling

ADMITTED = {"hv": "LH", "ns": "LG", "fv": "LQ", "hc": "HQ"}
HALF = Fraction(1, 2)


class InadmissibleGeneratorError(ValueError):
    pass


class UnsupportedFamilyError(ValueError):
    pass


@dataclass(frozen=True)
class SubalgebraId:
    tag: str

    def __post_init__(self):
        if self.tag not in ADMITTED:
            raise ValueError(f"unknown subalgebra {self.tag!r}; expected one of {sorted(ADMITTED)}")

    @property
    def kinds(self) -> str:
        return ADMITTED[self.tag]

    def admits(self, gen: Generator) -> bool:
        return gen.kind in ADMITTED[self.tag]

    def __str__(self):
        return self.tag


class SubModuleFamily:
    """Psi_hv(lam, beta), Psi_ns(lam), Psi_fv(lam, beta) or Psi_hc(lam)."""

    def __init__(self, subalg, beta=None):
        self.subalg = subalg if isinstance(subalg, SubalgebraId) else SubalgebraId(subalg)
        tag = self.subalg.tag
        if tag == "ns":
            # ns is the beta(y) = y member of the family
            if beta is not None and beta != UniPoly.var():
                raise ValueError("ns fixes beta(y) = y")
            beta = UniPoly.var()
        elif tag == "hc":
            if beta is not None:
                raise ValueError("hc carries no beta")
        elif beta is None:
            raise ValueError(f"{tag} needs beta")
        if beta is not None and not isinstance(beta, UniPoly):
            beta = UniPoly(beta) if isinstance(beta, (dict, list, tuple)) else UniPoly.const(beta)
        self.beta = beta
        self._beta_q = beta.rational_coeffs() if beta is not None else {}

    @property
    def tag(self) -> str:
        return self.subalg.tag

    @property
    def is_super(self) -> bool:
        return self.tag != "hv"

    def omega_params(self) -> OmegaParams:
        """The ambient Omega parameters (beta is irrelevant for hc)."""
        return OmegaParams(self.beta if self.beta is not None else UniPoly())

    def generators(self, window: Window = DEFAULT_WINDOW) -> list[Generator]:
        return ordered_generators(window, self.subalg.kinds)

    def check(self, gen: Generator) -> None:
        if not self.subalg.admits(gen):
            raise InadmissibleGeneratorError(f"{gen} is not in {self.tag}")

    def __repr__(self):
        return f"SubModuleFamily({self.tag}, beta={self.beta})"


def _beta_times(beta: dict, c: Fraction, extra: Fraction = Fraction(0)) -> dict:
    out = {d: c * v for d, v in beta.items()}
    out[0] = out.get(0, 0) + c * extra
    return out


def _plan(fam: SubModuleFamily, gen: Generator, odd_in: bool):
    kind, idx = gen.kind, gen.idx
    beta = fam._beta_q
    if kind == "L":
        # hv, ns (beta = v), fv: lam^m (u + m(beta(v) [+ 1/2])) f(u+m, v)
        return odd_in, Multiplier(1, _beta_times(beta, idx, HALF if odd_in else Fraction(0))), int(idx)
    if kind == "H":
        return odd_in, Multiplier(0, {1: 1}), int(idx)
    if kind == "G":
        if not odd_in:
            return True, Multiplier(0, {0: 1}), int(idx - HALF)
        return False, Multiplier(1, {1: 2 * idx}), int(idx + HALF)
    # Q in fv and hc
    if not odd_in:
        return None
    return False, Multiplier(0, {1: 1}), int(idx + HALF)


def sub_act(fam: SubModuleFamily, gen: Generator, v):
    """Action of an admitted generator; BiPoly in for hv, SuperVector otherwise."""
    fam.check(gen)
    if not fam.is_super:
        if isinstance(v, SuperVector):
            raise TypeError("hv modules act on a single polynomial")
        _, mult, e = _plan(fam, gen, False)
        return v.affine_shift(gen.index, mult, e) if v else v
    if not v:
        return v
    even = BiPoly.zero()
    odd = BiPoly.zero()
    for odd_in, comp in ((False, v.even), (True, v.odd)):
        if not comp:
            continue
        plan = _plan(fam, gen, odd_in)
        if plan is None:
            continue
        to_odd, mult, e = plan
        img = comp.affine_shift(gen.index, mult, e)
        if to_odd:
            odd = odd + img
        else:
            even = even + img
    return SuperVector(even, odd)


def sub_act_element(fam: SubModuleFamily, a, v):
    a = as_element(a)
    out = BiPoly.zero() if not fam.is_super else SuperVector.zero()
    for g, c in a.items():
        out = out + sub_act(fam, g, v).scale(c)
    return out


def sub_verify_bracket_on(fam: SubModuleFamily, a: Generator, b: Generator, v) -> bool:
    """Module axiom for a pair of admitted generators."""
    lhs = sub_act_element(fam, bracket(a, b), v)
    rhs = sub_act(fam, a, sub_act(fam, b, v)) - sub_act(fam, b, sub_act(fam, a, v)).scale(super_sign(a.parity, b.parity))
    return lhs == rhs


def _rand_vector(fam: SubModuleFamily, r, max_deg: int = 3):
    if fam.is_super:
        return sampling.rand_supervector(r, max_deg)
    return sampling.rand_bipoly(r, max_deg)


def restriction_counterexample(
    fam: SubModuleFamily, samples: int = 20, seed=None, window: Window = DEFAULT_WINDOW
) -> tuple[Generator, object] | None:
    """First ``(X, v)`` where the family action differs from the Omega action."""
    p = fam.omega_params()
    r = sampling.rng(seed)
    gens = fam.generators(window)
    for _ in range(samples):
        v = _rand_vector(fam, r)
        for x in gens:
            mine = sub_act(fam, x, v)
            if fam.is_super:
                ok = mine == act(x, v, p)
            else:
                full = act(x, SuperVector.of_even(v), p)
                ok = not full.odd and mine == full.even
            if not ok:
                return x, v
    return None


def restriction_consistency(fam: SubModuleFamily, samples: int = 20, **kw) -> bool:
    return restriction_counterexample(fam, samples, **kw) is None


# -- submodules --------------------------------------------------------------


def _even_member(f: BiPoly, spec: SubmoduleSpec) -> bool:
    if not divides_v(spec.g, f):
        return False
    if spec.kind == "R":
        return True
    return not f.divmod_v(spec.g)[0].coeff(0, 0)


def sub_member(fam: SubModuleFamily, v, spec: SubmoduleSpec) -> bool:
    """Membership in R_g / S_g of the hv or ns family."""
    if fam.tag == "hv":
        if isinstance(v, SuperVector):
            raise TypeError("hv modules act on a single polynomial")
        return _even_member(v, spec)
    if fam.tag == "ns":
        return _even_member(v.even, spec) and divides_v(spec.g, v.odd)
    raise UnsupportedFamilyError(f"{fam.tag} has filtrations, not a classified submodule lattice")


def _members(fam: SubModuleFamily, spec: SubmoduleSpec, r, samples: int) -> list:
    gv = spec.g.as_bipoly("v")
    x, y = BiPoly.monomial(1, 0), BiPoly.monomial(0, 1)
    evens = [gv * x, gv * y] + ([gv] if spec.kind == "R" else [])
    for _ in range(samples):
        if spec.kind == "R":
            evens.append(gv * sampling.rand_bipoly(r))
        else:
            evens.append(gv * (x * sampling.rand_bipoly(r) + y * sampling.rand_bipoly(r)))
    if not fam.is_super:
        return evens
    out = [SuperVector.of_even(e) for e in evens[:3]] + [SuperVector.of_odd(gv)]
    out += [SuperVector(e, gv * sampling.rand_bipoly(r)) for e in evens[3:]]
    return out


def sub_closure_witness(
    fam: SubModuleFamily, spec: SubmoduleSpec, window: Window = DEFAULT_WINDOW, samples: int = 20, seed=None
):
    """First ``(X, v)`` with ``v`` in the hv/ns submodule and ``X v`` outside it, or None."""
    if fam.tag not in ("hv", "ns"):
        raise UnsupportedFamilyError(f"{fam.tag} has no classified submodule lattice")
    r = sampling.rng(seed)
    gens = fam.generators(window)
    for v in _members(fam, spec, r, samples):
        for x in gens:
            if not sub_member(fam, sub_act(fam, x, v), spec):
                return x, v
    return None


def filtration_counterexample(
    fam: SubModuleFamily, alpha, depth: int, samples: int = 10, seed=None, window: Window = DEFAULT_WINDOW
):
    """First ``(i, X, v)`` where ``(y-alpha)^i C[x,y] (+) (t-alpha)^i C[s,t]`` is left."""
    if fam.tag not in ("fv", "hc"):
        raise UnsupportedFamilyError("filtrations are stated for fv and hc")
    if depth < 1:
        raise ValueError("depth must be >= 1")
    alpha = as_rat(alpha)
    r = sampling.rng(seed)
    gens = fam.generators(window)
    base = UniPoly({0: -alpha, 1: 1})
    for i in range(1, depth + 1):
        g = base**i
        gv = g.as_bipoly("v")
        cands = [SuperVector.of_even(gv), SuperVector.of_odd(gv)]
        cands += [SuperVector(gv * sampling.rand_bipoly(r), gv * sampling.rand_bipoly(r)) for _ in range(samples)]
        for v in cands:
            for x in gens:
                w = sub_act(fam, x, v)
                if not (divides_v(g, w.even) and divides_v(g, w.odd)):
                    return i, x, v
    return None


def filtration_check(fam: SubModuleFamily, alpha, depth: int, samples: int = 10, **kw) -> bool:
    return filtration_counterexample(fam, alpha, depth, samples, **kw) is None


# -- quotients ---------------------------------------------------------------


def _beta_b(fam: SubModuleFamily, b: Fraction) -> Fraction:
    return sum((c * b**d for d, c in fam._beta_q.items()), Fraction(0))


def sub_quotient_act(fam: SubModuleFamily, gen: Generator, f, b):
    """Action on Phi_hv(lam, beta, b), Phi_ns(lam, b), Phi_fv(lam, beta, b) or Phi_hc(lam, b).

    hv takes a polynomial in x (UniPoly or v-free BiPoly); the rest take a
    :class:`PhiVector`.
    """
    fam.check(gen)
    b = as_rat(b)
    bb = _beta_b(fam, b)
    if not fam.is_super:
        if isinstance(f, UniPoly):
            f = f.as_bipoly("u")
        if not f.is_v_free():
            raise ValueError("Phi_hv elements are polynomials in x")
        _, mult, e = _phi_plan(gen, False, bb, b)
        return f.affine_shift(gen.index, mult, e)
    even = BiPoly.zero()
    odd = BiPoly.zero()
    for odd_in, comp in ((False, f.even), (True, f.odd)):
        if not comp:
            continue
        plan = _phi_plan(gen, odd_in, bb, b)
        if plan is None:
            continue
        to_odd, mult, e = plan
        img = comp.affine_shift(gen.index, mult, e)
        if to_odd:
            odd = odd + img
        else:
            even = even + img
    return PhiVector(even, odd)


def sub_phi_is_irreducible(fam: SubModuleFamily, b) -> bool:
    """hv: beta(b) != 0 or b != 0; ns: b != 0; Phi_fv and Phi_hc are always reducible."""
    b = as_rat(b)
    if fam.tag == "hv":
        return _beta_b(fam, b) != 0 or b != 0
    if fam.tag == "ns":
        return b != 0
    return False


def sub_phi_submodule_witness(fam: SubModuleFamily, b, samples: int = 20, seed=None, window: Window = DEFAULT_WINDOW):
    """Search for ``X f`` leaving ``xC[x]`` (hv) or ``xC[x] (+) C[s]`` (ns)."""
    if fam.tag not in ("hv", "ns"):
        raise UnsupportedFamilyError("reducible-case subspaces are stated for hv and ns")
    r = sampling.rng(seed)
    x = BiPoly.monomial(1, 0)
    gens = fam.generators(window)
    cands = [PhiVector(x, BiPoly.zero()), PhiVector(BiPoly.zero(), BiPoly.const(1))]
    for _ in range(samples):
        f = rand_phivector(r)
        cands.append(PhiVector(f.even * x, f.odd))
    for f in cands:
        if not fam.is_super:
            if f.odd:
                continue
            f = f.even
        for gen in gens:
            out = sub_quotient_act(fam, gen, f, b)
            even = out if not fam.is_super else out.even
            if even.coeff(0, 0):
                return gen, f
    return None


def sub_psi_counterexample(
    fam: SubModuleFamily, gprime: UniPoly, b, samples: int = 50, seed=None, window: Window = DEFAULT_WINDOW, max_deg: int = 3
):
    """First ``(X, f)`` where ``psi(X f) != X psi(f)`` modulo the g-submodule, ``g = (y-b) g'``."""
    b = as_rat(b)
    g = UniPoly({0: -b, 1: 1}) * gprime
    gv = gprime.as_bipoly("v")
    r = sampling.rng(seed)
    gens = fam.generators(window)
    for _ in range(samples):
        f = rand_phivector(r, max_deg)
        for x in gens:
            if fam.is_super:
                diff = psi(sub_quotient_act(fam, x, f, b), gprime) - sub_act(fam, x, psi(f, gprime))
                bad = rem_v(diff.even, g) or rem_v(diff.odd, g)
            else:
                diff = sub_quotient_act(fam, x, f.even, b) * gv - sub_act(fam, x, f.even * gv)
                bad = rem_v(diff, g)
            if bad:
                return x, f
    return None


def sub_lemma_iso_verify(fam: SubModuleFamily, gprime: UniPoly, b, samples: int = 50, **kw) -> bool:
    return sub_psi_counterexample(fam, gprime, b, samples, **kw) is None
