"""Property tests for the algebraic invariants."""
import random
from fractions import Fraction

from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

import helpers
from superhv.algebra import AlgebraElement, bracket, generators_in_window, jacobi_residual
from superhv.arith import Scalar
from superhv.omega import H0, OmegaParams, SuperVector, act, act_element, verify_bracket_on
from superhv.parsing import ParseError, PARSERS, parse_value
from superhv.poly import BiPoly, divides_v, rem_v, u_coefficients
from superhv.render import render
from superhv.sampling import rand_beta, rand_bipoly, rand_supervector, rand_unipoly
from superhv.structure import SubmoduleSpec, member, random_member, reduce_mod_R
from superhv.weighting import WeightParams, weighted_act

SETTINGS = settings(max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
seeds = st.integers(0, 2**32 - 1)
rats = st.fractions(max_denominator=12).filter(lambda q: abs(q) < 10**6)
scalars = st.dictionaries(st.integers(-5, 5), rats, max_size=4).map(Scalar)
WINDOW = generators_in_window(-4, 4)


@SETTINGS
@given(scalars, scalars, scalars)
def test_scalar_ring(a, b, c):
    assert a + b == b + a and a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == Scalar() and a * Scalar.const(1) == a


@SETTINGS
@given(scalars, scalars, rats.filter(bool))
def test_scalar_eval_is_homomorphism(a, b, lam):
    assert (a * b).eval(lam) == a.eval(lam) * b.eval(lam)
    assert (a + b).eval(lam) == a.eval(lam) + b.eval(lam)


@SETTINGS
@given(seeds)
def test_canonical_form_idempotent(seed):
    f = helpers.bipoly(random.Random(seed))
    assert BiPoly(f.terms) == f and hash(BiPoly(f.terms)) == hash(f)
    assert BiPoly.from_flat(dict(f.flat_items())) == f


@SETTINGS
@given(seeds, rats, rats)
def test_shift_composes(seed, h1, h2):
    f = rand_bipoly(random.Random(seed))
    assert f.shift_u(h1).shift_u(h2) == f.shift_u(h1 + h2)
    assert f.shift_u(h1).shift_u(-h1) == f


@SETTINGS
@given(seeds)
def test_u_coefficients_reconstruct(seed):
    f = rand_bipoly(random.Random(seed))
    assert BiPoly.from_u_coefficients(u_coefficients(f)) == f


@SETTINGS
@given(seeds)
def test_division_in_v(seed):
    r = random.Random(seed)
    f = rand_bipoly(r)
    g = rand_unipoly(r, monic=True, min_deg=1)
    q, rem = f.divmod_v(g)
    assert q.mul_v(g) + rem == f
    assert rem == rem_v(f, g) and rem.deg_v < g.degree
    assert divides_v(g, f) == (not rem)
    assert divides_v(g, f.mul_v(g))


@SETTINGS
@given(seeds)
def test_super_antisymmetry(seed):
    r = random.Random(seed)
    a, b = helpers.generator(r), helpers.generator(r)
    sign = 1 if a.parity and b.parity else -1
    assert bracket(a, b) == bracket(b, a) * sign
    assert not bracket(H0, a)
    assert not jacobi_residual(a, b, helpers.generator(r))


@SETTINGS
@given(seeds)
def test_action_respects_parity(seed):
    r = random.Random(seed)
    p = OmegaParams(rand_beta(r))
    f = rand_bipoly(r)
    for x in WINDOW:
        img_e, img_o = act(x, SuperVector.of_even(f), p), act(x, SuperVector.of_odd(f), p)
        if x.parity:
            assert not img_e.even and not img_o.odd
        else:
            assert not img_e.odd and not img_o.even


@SETTINGS
@given(seeds)
def test_module_axiom(seed):
    r = random.Random(seed)
    p = OmegaParams(rand_beta(r, 2))
    v = rand_supervector(r, 2)
    a, b = r.choice(WINDOW), r.choice(WINDOW)
    assert verify_bracket_on(a, b, v, p)


@SETTINGS
@given(seeds)
def test_action_is_linear(seed):
    r = random.Random(seed)
    p = OmegaParams(rand_beta(r))
    u, v = rand_supervector(r), rand_supervector(r)
    x = AlgebraElement({r.choice(WINDOW): 2, r.choice(WINDOW): Fraction(-1, 3)})
    assert act_element(x, u + v, p) == act_element(x, u, p) + act_element(x, v, p)


@SETTINGS
@given(seeds)
def test_submodule_inclusions(seed):
    r = random.Random(seed)
    g = rand_unipoly(r, 2, monic=True, min_deg=1)
    h = rand_unipoly(r, 1, monic=True, min_deg=1)
    s_g, r_g, r_gh = SubmoduleSpec("S", g), SubmoduleSpec("R", g), SubmoduleSpec("R", g * h)
    v = random_member(r, s_g)
    assert member(v, s_g) and member(v, r_g)
    w = random_member(r, r_gh)
    assert member(w, r_g)


@SETTINGS
@given(seeds)
def test_quotient_commutes_with_action(seed):
    r = random.Random(seed)
    p = OmegaParams(rand_beta(r))
    g = rand_unipoly(r, 2, monic=True, min_deg=1)
    v = rand_supervector(r)
    x = r.choice(WINDOW)
    lhs = reduce_mod_R(act(x, v, p), g)
    rhs = reduce_mod_R(act(x, reduce_mod_R(v, g), p), g)
    assert lhs == rhs


@SETTINGS
@given(seeds, st.sampled_from([0, Fraction(1, 2)]))
def test_weighting_grading(seed, eps):
    r = random.Random(seed)
    w = WeightParams(Fraction(r.randint(-9, 9), 4), Fraction(r.randint(-9, 9), 3), eps)
    p = OmegaParams(rand_beta(r))
    x = r.choice(WINDOW)
    sign = r.choice("+-")
    idx = Fraction(r.randint(-5, 5)) + (0 if sign == "+" else Fraction(1, 2))
    for (tsign, tidx), _ in weighted_act(x, sign, idx, w, p).items():
        assert tidx.to_rat() == idx + x.idx
        assert (tsign != sign) == bool(x.parity)


@SETTINGS
@given(seeds, st.sampled_from(sorted(helpers.GENERATORS)), st.booleans())
def test_parse_round_trip(seed, kind, uni):
    v = helpers.GENERATORS[kind](random.Random(seed))
    assert parse_value(render(v, unicode=uni), kind) == v


@settings(max_examples=300, deadline=None)
@given(st.text(alphabet=st.characters(codec="utf-8"), max_size=40) | st.text(alphabet="xyLHGQλ[]()+-*/^,0123456789 ", max_size=40))
def test_parser_total(src):
    for parser in PARSERS.values():
        try:
            parser(src)
        except ParseError:
            pass
