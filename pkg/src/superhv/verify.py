"""Seeded verification sweeps shared by the CLI and the acceptance tests.

Each sweep returns a :class:`Report` with the number of exact checks made and
the first counterexample (None when everything passed).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Any, Iterable

from . import kernels, sampling
from .algebra import Generator, bracket, bracket_generators, generators_in_window, jacobi_residual, super_sign
from .omega import OmegaParams, SuperVector, act, vectors_sum_to_zero, verify_lemma32
from .poly import UniPoly

WINDOW = (-6, 6)


@dataclass
class Report:
    suite: str
    checks: int = 0
    failure: Any = None
    details: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.failure is None

    def as_dict(self) -> dict:
        out = {"suite": self.suite, "ok": self.ok, "checks": self.checks}
        if self.failure is not None:
            out["counterexample"] = str(self.failure)
        out.update(self.details)
        return out

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        text = f"{self.suite}: {status} ({self.checks} checks)"
        if not self.ok:
            text += f"\n  counterexample: {self.failure}"
        return text


def _fmt(*items) -> str:
    return ", ".join(str(i) for i in items)


# -- algebra -----------------------------------------------------------------


def jacobi_sweep(window=WINDOW) -> Report:
    """Super-antisymmetry on all pairs and graded Jacobi on all triples."""
    rep = Report("jacobi")
    gens = generators_in_window(*window)
    for a, b in product(gens, repeat=2):
        rep.checks += 1
        if bracket(b, a) != bracket(a, b) * (-super_sign(a.parity, b.parity)):
            rep.failure = f"antisymmetry fails for ({_fmt(a, b)})"
            return rep
    for a, b, c in product(gens, repeat=3):
        rep.checks += 1
        if jacobi_residual(a, b, c):
            rep.failure = f"Jacobi residual nonzero for ({_fmt(a, b, c)})"
            return rep
    return rep


# -- module axiom ------------------------------------------------------------


def pair_table(gens: list[Generator]) -> list[tuple]:
    """``(ia, ib, sign, c, ix, x)`` for every ordered pair, with ``[a,b] = c * x``.

    ``ix`` indexes ``gens`` (-1 when ``x`` lies outside it); ``x`` and ``ix``
    are None for a vanishing bracket.
    """
    pos = {g: n for n, g in enumerate(gens)}
    out = []
    for ia, a in enumerate(gens):
        for ib, b in enumerate(gens):
            c, x = bracket_generators(a, b)
            ix = None if x is None else pos.get(x, -1)
            out.append((ia, ib, super_sign(a.parity, b.parity), c, ix, x))
    return out


def _plan_spec(p: OmegaParams, gen: Generator, odd: bool):
    plan = p.plan(gen, odd)
    if plan is None:
        return None
    to_odd, mult, e = plan
    deg = max(mult.pcoef, default=0)
    pcoef = [mult.pcoef.get(j, 0) for j in range(deg + 1)]
    h = gen.index
    hn, hd = (h.doubled // 2, 1) if h.is_integer else (h.doubled, 2)
    return to_odd, mult.a, pcoef, mult.pden, e, hn, hd


def compiled_checker(p: OmegaParams, gens: list[Generator], table):
    """The compiled pair checker for ``p``, or None on the pure-Python backend."""
    if kernels.AxiomChecker is None:
        return None
    extra = []
    for row in table:
        x = row[5]
        if row[4] == -1 and x not in extra:
            extra.append(x)
    everything = list(gens) + extra
    pos = {g: n for n, g in enumerate(everything)}
    plans = [(_plan_spec(p, g, False), _plan_spec(p, g, True)) for g in everything]
    rows = []
    for ia, ib, sign, c, ix, x in table:
        c = Fraction(c)
        rows.append((ia, ib, sign, c.numerator, c.denominator, -1 if x is None else pos[x]))
    try:
        return kernels.AxiomChecker(plans, len(gens), rows)
    except OverflowError:
        return None


def bracket_axiom_on(v: SuperVector, p: OmegaParams, gens: list[Generator], table=None, checker=None):
    """Check ``a(bv) - (-1)^{|a||b|} b(av) = [a,b]v`` for all ordered pairs of ``gens``.

    Returns ``(checks, None)`` or ``(checks, (a, b))`` for the first failing
    pair.  This is the equality of :func:`omega.verify_bracket_on`, with the
    first-level actions ``X v`` shared between pairs.  With a compiled
    ``checker`` the arithmetic runs in C; a reported failure, or any int64
    overflow there, is settled by the Python computation.
    """
    if table is None:
        table = pair_table(gens)
    if checker is not None:
        res = checker.check(*v.even.raw(), *v.odd.raw())
        if res == -1:
            return len(table), None
    n = len(gens)
    first = [act(g, v, p) for g in gens]
    second = [[act(a, first[ib], p) for ib in range(n)] for a in gens]
    checks = 0
    for ia, ib, sign, c, ix, x in table:
        checks += 1
        terms = [(second[ia][ib], 1), (second[ib][ia], -sign)]
        if ix is not None:
            terms.append((first[ix] if ix >= 0 else act(x, v, p), -c))
        if not vectors_sum_to_zero(terms):
            return checks, (gens[ia], gens[ib])
    return checks, None


def relations_sweep(
    seed=None, n_beta: int = 5, n_vectors: int = 200, max_deg: int = 3, window=WINDOW, betas: Iterable | None = None,
    compiled: bool = True,
) -> Report:
    """The module axiom on seeded random vectors for several seeded random beta."""
    rep = Report("relations")
    r = sampling.rng(seed)
    gens = generators_in_window(*window)
    table = pair_table(gens)
    beta_list = list(betas) if betas is not None else [sampling.rand_beta(r, max_deg) for _ in range(n_beta)]
    rep.details["betas"] = [str(b) for b in beta_list]
    for beta in beta_list:
        p = OmegaParams(beta)
        checker = compiled_checker(p, gens, table) if compiled else None
        for _ in range(n_vectors):
            v = sampling.rand_supervector(r, max_deg)
            n, bad = bracket_axiom_on(v, p, gens, table, checker)
            rep.checks += n
            if bad:
                rep.failure = f"beta={beta}, pair ({_fmt(*bad)}), v={v}"
                return rep
    return rep


def operator_sweep(seed=None, n_beta: int = 2, n_vectors: int = 3, max_i: int = 3, window=WINDOW) -> Report:
    rep = Report("lemma32")
    r = sampling.rng(seed)
    gens = generators_in_window(*window)
    for _ in range(n_beta):
        p = OmegaParams(sampling.rand_beta(r))
        for _ in range(n_vectors):
            v = sampling.rand_supervector(r)
            for x in gens:
                for i in range(max_i + 1):
                    rep.checks += 1
                    if not verify_lemma32(x, i, v, p):
                        rep.failure = f"X={x}, i={i}, beta={p.beta}, v={v}"
                        return rep
    return rep


# -- submodules --------------------------------------------------------------


def submodule_sweep(seed=None, n_g: int = 20, samples: int = 3, window=WINDOW) -> Report:
    """R_g closed for any beta, S_g closed iff beta(0) = 0, plus the fixed witness."""
    from .structure import SubmoduleSpec, closure_witness

    rep = Report("submodule")
    r = sampling.rng(seed)
    for n in range(n_g):
        g = sampling.rand_unipoly(r, 3, monic=True)
        for beta0 in (Fraction(0), sampling.rand_rat(r, nonzero=True)):
            p = OmegaParams(sampling.rand_beta(r, beta0=beta0))
            kinds = ("R", "S") if beta0 == 0 else ("R",)
            for kind in kinds:
                spec = SubmoduleSpec(kind, g)
                rep.checks += 1
                w = closure_witness(spec, p, window, samples, seed=r.getrandbits(32))
                if w is not None:
                    rep.failure = f"{spec} not closed for beta={p.beta}: {w[0]} on {w[1]}"
                    return rep
            if beta0 != 0:
                spec = SubmoduleSpec("S", g)
                rep.checks += 1
                if closure_witness(spec, p, window, samples, seed=r.getrandbits(32)) is None:
                    rep.failure = f"{spec} unexpectedly closed for beta={p.beta}"
                    return rep
    spec = SubmoduleSpec("S", UniPoly.const(1))
    w = closure_witness(spec, OmegaParams(UniPoly({0: 1, 1: 1})), window, 0)
    rep.checks += 1
    rep.details["witness"] = None if w is None else f"{w[0]} on {w[1]}"
    if w is None or w[0] != Generator("L", 1):
        rep.failure = f"expected witness L[1] on S_1 with beta=1+y, got {w}"
    return rep


def isomorphism_sweep(seed=None, samples: int = 50, window=WINDOW) -> Report:
    """Intertwining of psi for Omega and the four subalgebra families."""
    from .structure import PhiParams, psi_counterexample
    from .subalgebras import SubModuleFamily, sub_psi_counterexample

    rep = Report("isomorphism")
    r = sampling.rng(seed)
    beta = sampling.rand_beta(r)
    gprime = sampling.rand_unipoly(r, 2, monic=True)
    b = sampling.rand_rat(r)
    rep.details.update(beta=str(beta), gprime=str(gprime), b=str(b))
    s = r.getrandbits(32)
    w = psi_counterexample(gprime, b, PhiParams(beta, b), samples, seed=s, window=window)
    rep.checks += samples
    if w:
        rep.failure = f"Omega: {w[0]} on {w[1]}"
        return rep
    for fam in (
        SubModuleFamily("hv", beta),
        SubModuleFamily("ns"),
        SubModuleFamily("fv", beta),
        SubModuleFamily("hc"),
    ):
        w = sub_psi_counterexample(fam, gprime, b, samples, seed=s, window=window)
        rep.checks += samples
        if w:
            rep.failure = f"{fam.tag}: {w[0]} on {w[1]}"
            return rep
    return rep


def subalgebra_sweep(tag: str | None = None, seed=None, samples: int = 10, depth: int = 3, window=WINDOW) -> Report:
    """Restriction consistency, bracket axiom and lattice/filtration checks per family."""
    from .structure import SubmoduleSpec
    from .subalgebras import (
        SubModuleFamily,
        filtration_counterexample,
        restriction_counterexample,
        sub_closure_witness,
        sub_phi_submodule_witness,
        sub_verify_bracket_on,
    )

    rep = Report("subalgebra")
    r = sampling.rng(seed)
    tags = [tag] if tag else ["hv", "ns", "fv", "hc"]
    for t in tags:
        beta = sampling.rand_beta(r) if t in ("hv", "fv") else None
        fam = SubModuleFamily(t, beta)
        gens = fam.generators(window)
        w = restriction_counterexample(fam, samples, seed=r.getrandbits(32), window=window)
        rep.checks += 1
        if w:
            rep.failure = f"{t}: action differs from Omega for {w[0]} on {w[1]}"
            return rep
        for _ in range(2):
            v = sampling.rand_supervector(r) if fam.is_super else sampling.rand_bipoly(r)
            for a in gens:
                for b in gens:
                    rep.checks += 1
                    if not sub_verify_bracket_on(fam, a, b, v):
                        rep.failure = f"{t}: bracket axiom fails for ({_fmt(a, b)}) on {v}"
                        return rep
        if t in ("hv", "ns"):
            g = sampling.rand_unipoly(r, 2, monic=True)
            for kind in ("R", "S"):
                rep.checks += 1
                fam0 = SubModuleFamily(t, UniPoly({1: 1}) if t == "hv" else None)
                w = sub_closure_witness(fam0, SubmoduleSpec(kind, g), window, samples, seed=r.getrandbits(32))
                if w:
                    rep.failure = f"{t}: {kind}_{{{g}}} not closed: {w[0]} on {w[1]}"
                    return rep
            zero_fam = SubModuleFamily(t, UniPoly({1: 1}) if t == "hv" else None)
            rep.checks += 1
            w = sub_phi_submodule_witness(zero_fam, 0, samples, seed=r.getrandbits(32), window=window)
            if w:
                rep.failure = f"{t}: reducible-case subspace left by {w[0]} on {w[1]}"
                return rep
        else:
            for _ in range(5):
                alpha = sampling.rand_rat(r)
                rep.checks += 1
                w = filtration_counterexample(fam, alpha, depth, 3, seed=r.getrandbits(32), window=window)
                if w:
                    rep.failure = f"{t}: filtration step {w[0]} at alpha={alpha} left by {w[1]} on {w[2]}"
                    return rep
    return rep


# -- weighting ---------------------------------------------------------------


def weighting_sweep(seed=None, n: int = 10, window=WINDOW, epsilons=(Fraction(0), Fraction(1, 2))) -> Report:
    from .weighting import WeightParams, weighting_mismatches

    rep = Report("weighting")
    r = sampling.rng(seed)
    for _ in range(n):
        a1, a2 = sampling.rand_rat(r), sampling.rand_rat(r)
        p = OmegaParams(sampling.rand_beta(r))
        for eps in epsilons:
            w = WeightParams(a1, a2, eps)
            bad = weighting_mismatches(w, p, window)
            rep.checks += 1
            if bad:
                m = bad[0]
                rep.failure = (
                    f"alpha=({a1}, {a2}), eps={eps}, beta={p.beta}: {m.gen} on {m.sign}[{m.index}] "
                    f"gives {m.got}, expected {m.expected}"
                )
                return rep
    return rep


SUITES = {
    "relations": relations_sweep,
    "jacobi": jacobi_sweep,
    "lemma32": operator_sweep,
    "submodule": submodule_sweep,
    "subalgebra": subalgebra_sweep,
    "weighting": weighting_sweep,
    "isomorphism": isomorphism_sweep,
}
