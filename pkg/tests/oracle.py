"""Independent reference implementation used to check derived values.

Everything here is written straight from the defining formulas with sympy
expressions and shares no code with the package under test.
"""
from fractions import Fraction

import sympy as sp

lam, x, y, s, t = sp.symbols("lam x y s t")
R = sp.Rational


def rat(q) -> sp.Rational:
    q = Fraction(q)
    return R(q.numerator, q.denominator)


# -- bracket table ------------------------------------------------------------

ODD = {"G", "Q"}


def table(a, b):
    """``[a, b]`` for basis pairs ``(kind, index)``; returns ``{(kind, index): coef}``."""
    (ka, m), (kb, n) = a, b
    m, n = rat(m), rat(n)
    k = m + n
    direct = {
        ("L", "L"): ("L", m - n),
        ("L", "H"): ("H", -n),
        ("L", "G"): ("G", m / 2 - n),
        ("L", "Q"): ("Q", -(m / 2 + n)),
        ("H", "G"): ("Q", m),
        ("G", "G"): ("L", R(2)),
        ("G", "Q"): ("H", R(1)),
        ("H", "H"): (None, 0),
        ("H", "Q"): (None, 0),
        ("Q", "Q"): (None, 0),
    }
    if (ka, kb) in direct:
        kind, c = direct[(ka, kb)]
        return {} if kind is None or c == 0 else {(kind, k): c}
    # super-antisymmetry
    sign = 1 if (ka in ODD and kb in ODD) else -1
    return {key: sign * c for key, c in table(b, a).items()}


def bracket(u: dict, v: dict) -> dict:
    out = {}
    for a, ca in u.items():
        for b, cb in v.items():
            for key, c in table(a, b).items():
                out[key] = out.get(key, 0) + ca * cb * c
    return {k: c for k, c in out.items() if c != 0}


# -- module action ------------------------------------------------------------


def beta_expr(coeffs: dict, var) -> sp.Expr:
    return sum((rat(c) * var**d for d, c in coeffs.items()), sp.Integer(0))


def act(gen, even, odd, beta: dict):
    """Action of ``gen = (kind, index)`` on ``even(x, y) + odd(s, t)``."""
    kind, idx = gen
    i = rat(idx)
    e_out, o_out = sp.Integer(0), sp.Integer(0)
    if kind == "L":
        e_out = lam**i * (x + i * beta_expr(beta, y)) * even.subs(x, x + i)
        o_out = lam**i * (s + i * (beta_expr(beta, t) + R(1, 2))) * odd.subs(s, s + i)
    elif kind == "H":
        e_out = lam**i * y * even.subs(x, x + i)
        o_out = lam**i * t * odd.subs(s, s + i)
    elif kind == "G":
        o_out = lam ** (i - R(1, 2)) * even.subs({x: s + i, y: t}, simultaneous=True)
        e_out = lam ** (i + R(1, 2)) * (x + 2 * i * beta_expr(beta, y)) * odd.subs({s: x + i, t: y}, simultaneous=True)
    elif kind == "Q":
        e_out = lam ** (i + R(1, 2)) * y * odd.subs({s: x + i, t: y}, simultaneous=True)
    return sp.expand(e_out), sp.expand(o_out)


def phi_act(gen, even, odd, beta: dict, b):
    """Quotient action: the module action with y and t frozen at ``b``."""
    e, o = act(gen, even, odd, beta)
    b = rat(b)
    return sp.expand(e.subs(y, b)), sp.expand(o.subs(t, b))


# -- weight modules ------------------------------------------------------------


def weighted_coeff(gen, sign, index, alpha1, alpha2, eps, beta: dict):
    """Coefficient of the weighted action, evaluating at L0 = -(n + eps + a1), H0 = -a2."""
    kind, idx = gen
    start = (sp.Integer(1), sp.Integer(0)) if sign == "+" else (sp.Integer(0), sp.Integer(1))
    e, o = act(gen, *start, beta)
    odd_gen = kind in ODD
    target_sign = sign if not odd_gen else ("-" if sign == "+" else "+")
    comp = e if target_sign == "+" else o
    n_eps = rat(index) + rat(idx) + rat(eps)
    a, b = (x, y) if target_sign == "+" else (s, t)
    return sp.expand(comp.subs({a: -(n_eps + rat(alpha1)), b: -rat(alpha2)}))


def a_module_coeff(gen, sign, index, a, b, c):
    """The intermediate-series table; returns ``(target_sign, coef)``."""
    kind, k = gen
    k, n, a, b, c = rat(k), rat(index), rat(a), rat(b), rat(c)
    if kind == "L":
        return sign, (c - n + k * a) if sign == "+" else (c - n + k * (a + R(1, 2)))
    if kind == "H":
        return sign, b
    if kind == "G":
        return ("-", sp.Integer(1)) if sign == "+" else ("+", c - n + 2 * k * (a + R(1, 2)))
    return ("+", sp.Integer(0)) if sign == "+" else ("+", b)


# -- conversions ---------------------------------------------------------------


def from_bipoly(f, u=x, v=y) -> sp.Expr:
    """A package polynomial as a sympy expression (lam-exponents included)."""
    return sp.expand(sum((rat(c) * lam**k * u**i * v**j for (i, j, k), c in f.flat_items()), sp.Integer(0)))


def from_vector(vec):
    return from_bipoly(vec.even, x, y), from_bipoly(vec.odd, s, t)


def from_scalar(c) -> sp.Expr:
    return sp.expand(sum((rat(q) * lam**k for k, q in c.items()), sp.Integer(0)))


def gen_key(g):
    return (g.kind, g.idx)
