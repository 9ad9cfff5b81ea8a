import random
from fractions import Fraction

import pytest
import sympy as sp

import oracle
from superhv.algebra import G, H, L, Q, generators_in_window
from superhv.arith import HalfInt, Scalar
from superhv.omega import OmegaParams
from superhv.poly import BiPoly, UniPoly
from superhv.sampling import rand_beta, rand_rat
from superhv.weighting import (
    AModuleParams,
    LatticeMismatchError,
    WeightParams,
    WeightVector,
    a_is_reducible,
    a_module_act,
    basis_in_window,
    functoriality_counterexample,
    matched_params,
    rescaled_act,
    weighting_mismatches,
    verify_theorem64,
    weight_reduce,
    weighted_act,
)

h = Fraction(1, 2)
Y = UniPoly.var()
L0 = BiPoly.monomial(1, 0)
H0 = BiPoly.monomial(0, 1)


def basis(sign, idx, c=1):
    return WeightVector.basis(sign, idx, c)


def test_weight_reduce_examples():
    assert weight_reduce(L0, 0, WeightParams(0, 0)) == Scalar()
    assert weight_reduce(H0, 0, WeightParams(0, 3)) == Scalar.const(-3)
    assert weight_reduce(L0 * H0, 1, WeightParams(1, 2)) == Scalar.const(4)


def test_weight_reduce_lattice():
    with pytest.raises(LatticeMismatchError):
        weight_reduce(L0, h, WeightParams(0, 0))
    assert weight_reduce(L0, h, WeightParams(0, 0, h)) == Scalar.const(-h)


def test_weightvector_lattice():
    with pytest.raises(LatticeMismatchError):
        basis("+", h)
    with pytest.raises(LatticeMismatchError):
        basis("-", 1)


def test_weighted_act_l_formula():
    w = WeightParams(Fraction(1, 3), Fraction(2, 5))
    p = OmegaParams(Y * Y + UniPoly.const(1))
    m, n = 2, 1
    coeff = -w.alpha1 - n + m * (p.beta_at(-w.alpha2) - 1)
    assert weighted_act(L(m), "+", n, w, p) == basis("+", n + m, Scalar.lam(m, coeff))


def test_weighted_act_h_and_q():
    w = WeightParams(Fraction(1, 3), Fraction(2, 5))
    p = OmegaParams(Y)
    assert weighted_act(H(3), "-", h, w, p) == basis("-", h + 3, Scalar.lam(3, -w.alpha2))
    assert weighted_act(Q(h), "+", 0, w, p).is_zero()


def test_weighted_act_matches_oracle():
    r = random.Random(12)
    for eps in (Fraction(0), h):
        beta = rand_beta(r, 3)
        w = WeightParams(rand_rat(r), rand_rat(r), eps)
        p = OmegaParams(beta)
        for g in generators_in_window(-4, 4):
            for sign, idx in basis_in_window((-4, 4)):
                got = weighted_act(g, sign, idx, w, p)
                want = oracle.weighted_coeff(oracle.gen_key(g), sign, idx.to_rat(), w.alpha1, w.alpha2, eps, beta.rational_coeffs())
                total = sum((oracle.from_scalar(c) for _, c in got.items()), sp.Integer(0))
                assert sp.expand(total - want) == 0


def test_a_module_examples():
    q = AModuleParams(-1, 0, 0)
    assert a_module_act(L(2), basis("+", 1), q) == basis("+", 3, -3)
    assert a_module_act(H(5), basis("-", h), q).is_zero()
    assert a_module_act(G(h), basis("+", 0), q) == basis("-", h)


def test_a_module_matches_oracle():
    q = AModuleParams(Fraction(2, 3), Fraction(-5, 4), Fraction(7, 2))
    for g in generators_in_window(-4, 4):
        for sign, idx in basis_in_window((-4, 4)):
            got = a_module_act(g, basis(sign, idx), q)
            tsign, coef = oracle.a_module_coeff(oracle.gen_key(g), sign, idx.to_rat(), q.a, q.b, q.c)
            want = {} if coef == 0 else {(tsign, idx + g.index): coef}
            assert {k: oracle.from_scalar(c) for k, c in got.items()} == want


def test_weighting_match_examples():
    assert verify_theorem64(WeightParams(0, 0), OmegaParams(Y))
    # L_m vhat_n coefficient -n - m against A(-1, 0, 0)
    w, p = WeightParams(0, 0), OmegaParams(Y)
    for m in (-2, 1, 3):
        for n in (-1, 0, 2):
            assert rescaled_act(L(m), "+", n, w, p) == basis("+", n + m, -n - m)
    w, p = WeightParams(1, 2), OmegaParams(Y * Y)
    q = matched_params(w, p)
    assert q.b == -2
    assert rescaled_act(H(1), "+", 0, w, p) == basis("+", 1, -2) == a_module_act(H(1), basis("+", 0), q)
    assert rescaled_act(Q(h), "+", 2, w, p).is_zero()


def test_matched_params_half_lattice():
    w = WeightParams(Fraction(1, 3), 2, h)
    q = matched_params(w, OmegaParams(Y))
    assert (q.a, q.b, q.c) == (-3, -2, -Fraction(1, 3) - h)
    assert not weighting_mismatches(w, OmegaParams(Y))


def test_functoriality():
    for eps in (0, h):
        assert functoriality_counterexample(WeightParams(Fraction(-1, 2), 3, eps), OmegaParams(Y * Y - Y), (-3, 3)) is None


def test_reducibility_predicate():
    assert a_is_reducible(AModuleParams(-1, 0, 5))
    assert a_is_reducible(AModuleParams(-h, 0, Fraction(3, 2)))
    assert not a_is_reducible(AModuleParams(-1, 1, 0))
    assert not a_is_reducible(AModuleParams(-1, 0, h))


def test_grading_shift():
    w, p = WeightParams(Fraction(2, 7), -1), OmegaParams(Y + UniPoly.const(2))
    for g in generators_in_window(-4, 4):
        for sign, idx in basis_in_window((-4, 4)):
            for (tsign, tidx), _ in weighted_act(g, sign, idx, w, p).items():
                assert tidx == idx + g.index
                assert (tsign != sign) == bool(g.parity)


def test_render():
    v = basis("+", 2) + basis("-", -3 * h, -h)
    assert str(v) == "vp[2] - 1/2*vm[-3/2]"
    assert isinstance(v.terms[("+", HalfInt.of(2))], Scalar)
