import random
from fractions import Fraction

import pytest
import sympy as sp

import oracle
from oracle import lam, x, y
from superhv.algebra import G, L, Q, generators_in_window
from superhv.omega import OmegaParams, SuperVector, act
from superhv.poly import BiPoly, UniPoly
from superhv.structure import (
    EmptyRootsError,
    PhiParams,
    PhiVector,
    SubmoduleSpec,
    closure_witness,
    composition_series,
    is_maximal,
    psi_counterexample,
    lemma44_verify,
    member,
    phi_act,
    phi_is_irreducible,
    phi_submodule_witness,
    psi,
    quotient_basis,
    quotient_coordinates,
    random_member,
    reduce_mod_R,
    verify_series,
)

h = Fraction(1, 2)
Y = UniPoly.var()
C = UniPoly.const
X = BiPoly.monomial(1, 0)
V = BiPoly.monomial(0, 1)
ONE = BiPoly.const(1)


def even(f):
    return SuperVector.of_even(f)


def odd(f):
    return SuperVector.of_odd(f)


def test_member_examples():
    R = SubmoduleSpec("R", Y - C(1))
    S1 = SubmoduleSpec("S", C(1))
    assert member(even((V - ONE) * X), R)
    assert not member(even(X), R)
    assert not member(even(ONE), S1)
    assert member(even(V), S1)


def test_spec_validation():
    with pytest.raises(ValueError):
        SubmoduleSpec("R", UniPoly({1: 2}))
    with pytest.raises(ValueError):
        SubmoduleSpec("T", Y)


def test_closure_none_cases():
    assert closure_witness(SubmoduleSpec("R", Y - C(1)), OmegaParams(Y)) is None
    assert closure_witness(SubmoduleSpec("S", C(1)), OmegaParams(Y)) is None


def test_closure_witness_l1_on_x():
    spec = SubmoduleSpec("S", C(1))
    p = OmegaParams(C(1) + Y)
    gen, v = closure_witness(spec, p)
    assert (gen, v) == (L(1), even(X))
    # oracle: L1 x = lam (x + 1 + y)(x + 1), whose x^0 y^0 coefficient is lam
    e, _ = oracle.act(("L", 1), x, sp.Integer(0), {0: 1, 1: 1})
    assert sp.expand(e - lam * (x + 1 + y) * (x + 1)) == 0
    assert e.subs({x: 0, y: 0}) == lam
    assert not member(act(gen, v, p), spec)


def test_phi_act_examples():
    assert phi_act(L(1), PhiVector(ONE), PhiParams(Y, 2)) == PhiVector(BiPoly.from_flat({(1, 0, 1): 1, (0, 0, 1): 2}))
    assert phi_act(Q(h), PhiVector(odd=X), PhiParams(Y, 0)).is_zero()
    assert phi_act(G(h), PhiVector(odd=ONE), PhiParams(Y, 1)) == PhiVector(BiPoly.from_flat({(1, 0, 1): 1, (0, 0, 1): 1}))


def test_phi_act_matches_oracle():
    r = random.Random(8)
    for beta, b in [(Y, 2), (Y * Y - C(3), Fraction(-1, 2)), (C(1) + Y, 0)]:
        q = PhiParams(beta, b)
        f = PhiVector(BiPoly({(i, 0): Fraction(r.randint(-5, 5), 3) for i in range(3)}), BiPoly({(1, 0): 2, (0, 0): -1}))
        fe, fo = oracle.from_bipoly(f.even), oracle.from_bipoly(f.odd, oracle.s, oracle.t)
        for g in generators_in_window(-4, 4):
            got = phi_act(g, f, q)
            want = oracle.phi_act(oracle.gen_key(g), fe, fo, beta.rational_coeffs(), b)
            assert (oracle.from_bipoly(got.even), oracle.from_bipoly(got.odd, oracle.s, oracle.t)) == want


def test_phi_irreducible_examples():
    assert not phi_is_irreducible(PhiParams(Y, 0))
    assert phi_is_irreducible(PhiParams(Y, 3))
    assert phi_is_irreducible(PhiParams(C(1) + Y, 0))


def test_reduce_mod_r_examples():
    assert reduce_mod_R(even(V * V * X), Y - C(1)) == even(X)
    assert reduce_mod_R(odd(V * V * V), Y * Y).is_zero()
    assert reduce_mod_R(SuperVector(X + V, X * V), Y) == even(X)


def test_psi_examples():
    assert lemma44_verify(C(1), 2, PhiParams(Y, 2))
    assert lemma44_verify(Y - C(1), 2, PhiParams(Y, 2))
    assert lemma44_verify(Y, 0, PhiParams(C(1) + Y, 0))


def test_psi_fixed_pair():
    # g' = y - 1, b = 2, beta = y, X = L1, f = 1: both sides lam (x + 2)(y - 1) mod R_{(y-1)(y-2)}
    g = (Y - C(1)) * (Y - C(2))
    gp = Y - C(1)
    lhs = psi(phi_act(L(1), PhiVector(ONE), PhiParams(Y, 2)), gp)
    rhs = act(L(1), psi(PhiVector(ONE), gp), OmegaParams(Y))
    want = sp.expand(lam * (x + 2) * (y - 1))
    assert oracle.from_bipoly(reduce_mod_R(lhs, g).even) == want
    assert reduce_mod_R(lhs, g) == reduce_mod_R(rhs, g)


def test_psi_g_on_odd_one():
    g = Y * Y
    lhs = psi(phi_act(G(h), PhiVector(odd=ONE), PhiParams(C(1) + Y, 0)), Y)
    rhs = act(G(h), psi(PhiVector(odd=ONE), Y), OmegaParams(C(1) + Y))
    assert reduce_mod_R(lhs, g) == reduce_mod_R(rhs, g)


def test_psi_requires_consistent_b():
    with pytest.raises(ValueError):
        psi_counterexample(Y, 1, PhiParams(Y, 2))


def test_composition_series_examples():
    p = OmegaParams(Y)
    cs = composition_series([(1, 1), (2, 1)], p)
    assert [q.b for q in cs.factors] == [1, 2] and cs.rank == 4
    cs = composition_series([(0, 2)], p)
    assert [q.b for q in cs.factors] == [0, 0] and cs.rank == 4
    cs = composition_series([(1, 1), (2, 2)], p)
    assert len(cs.factors) == 3 and cs.rank == 6
    assert all(q.beta == Y for q in cs.factors)
    assert verify_series(cs, samples=5)


def test_composition_series_empty():
    with pytest.raises(EmptyRootsError):
        composition_series([], OmegaParams(Y))


def test_reducible_quotient_subspace():
    assert phi_submodule_witness(PhiParams(Y, 0)) is None
    assert phi_submodule_witness(PhiParams(Y, 1)) is not None


def test_maximality():
    p0, p1 = OmegaParams(Y), OmegaParams(C(1) + Y)
    assert is_maximal(SubmoduleSpec("S", C(1)), p0)
    assert not is_maximal(SubmoduleSpec("S", C(1)), p1)
    assert is_maximal(SubmoduleSpec("R", Y), p1)
    assert not is_maximal(SubmoduleSpec("R", Y), p0)
    assert is_maximal(SubmoduleSpec("R", Y - C(1)), p0)


def test_quotient_rank():
    g = (Y - C(1)) * (Y + C(2)) * Y
    assert len(quotient_basis(g)) == 2 * g.degree
    v = SuperVector(BiPoly({(2, 4): 1, (0, 1): 3}), BiPoly({(1, 3): -1}))
    coords = quotient_coordinates(v, g)
    assert all(j < g.degree for _, j in coords)
    # L0 acts by x, so the coordinates rebuild the reduced representative
    parts = {"even": BiPoly.zero(), "odd": BiPoly.zero()}
    for (side, j), pj in coords.items():
        parts[side] = parts[side] + pj.as_bipoly("u") * BiPoly.monomial(0, j)
    assert SuperVector(parts["even"], parts["odd"]) == reduce_mod_R(v, g)


def test_random_members_belong():
    r = random.Random(9)
    for kind in "RS":
        spec = SubmoduleSpec(kind, Y * Y - C(2))
        for _ in range(10):
            assert member(random_member(r, spec), spec)
