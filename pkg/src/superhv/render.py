"""Canonical text rendering for every domain value.

Output is deterministic and re-parseable by :mod:`superhv.parsing`.  Lambda is
written ``L^k`` (always with an explicit exponent) in ASCII mode and ``λ^k``
with ``unicode=True``; generators are written ``L[m]``, ``G[3/2]`` etc.
"""
from __future__ import annotations

from fractions import Fraction


def _lam(k: int, unicode: bool) -> str:
    return f"{'λ' if unicode else 'L'}^{k}"


def _var(name: str, e: int) -> str:
    return name if e == 1 else f"{name}^{e}"


def _join(terms: list[tuple[Fraction, str]]) -> str:
    """Join ``(coefficient, monomial body)`` pairs into a signed sum."""
    if not terms:
        return "0"
    parts = []
    for n, (c, body) in enumerate(terms):
        mag = abs(c)
        if not body:
            text = str(mag)
        elif mag == 1:
            text = body
        else:
            text = f"{mag}*{body}"
        if n == 0:
            parts.append(f"-{text}" if c < 0 else text)
        else:
            parts.append(f" - {text}" if c < 0 else f" + {text}")
    return "".join(parts)


def render_rat(r) -> str:
    return str(Fraction(r))


def render_halfint(h) -> str:
    return str(h)


def render_scalar(s, unicode: bool = False) -> str:
    terms = [(c, _lam(k, unicode) if k else "") for k, c in sorted(s.items(), reverse=True)]
    return _join(terms)


def render_bipoly(p, names: tuple[str, str] = ("x", "y"), unicode: bool = False) -> str:
    un, vn = names
    terms = []
    for (i, j, k), c in sorted(p.flat_items(), key=lambda kv: (-kv[0][0], -kv[0][1], -kv[0][2])):
        factors = []
        if k:
            factors.append(_lam(k, unicode))
        if i:
            factors.append(_var(un, i))
        if j:
            factors.append(_var(vn, j))
        terms.append((c, "*".join(factors)))
    return _join(terms)


def render_unipoly(p, var: str = "y", unicode: bool = False) -> str:
    terms = []
    for d in sorted((d for d, _ in p.items()), reverse=True):
        for k, c in sorted(p.coeff(d).items(), reverse=True):
            factors = []
            if k:
                factors.append(_lam(k, unicode))
            if d:
                factors.append(_var(var, d))
            terms.append((c, "*".join(factors)))
    return _join(terms)


def render_generator(g) -> str:
    return f"{g.kind}[{g.index}]"


def render_element(a, unicode: bool = False) -> str:
    terms = []
    for gen in sorted(a.terms, key=lambda g: g.sort_key()):
        for k, c in sorted(a.terms[gen].items(), reverse=True):
            factors = [_lam(k, unicode)] if k else []
            factors.append(render_generator(gen))
            terms.append((c, "*".join(factors)))
    return _join(terms)


def render_supervector(v, unicode: bool = False) -> str:
    parts = []
    if v.even:
        parts.append("even: " + render_bipoly(v.even, ("x", "y"), unicode))
    if v.odd:
        parts.append("odd: " + render_bipoly(v.odd, ("s", "t"), unicode))
    return " | ".join(parts) if parts else "0"


def render_weightvector(w, unicode: bool = False) -> str:
    terms = []
    for (sign, idx) in sorted(w.terms, key=lambda key: (key[0] != "+", key[1].doubled)):
        base = f"{'vp' if sign == '+' else 'vm'}[{idx}]"
        for k, c in sorted(w.terms[(sign, idx)].items(), reverse=True):
            factors = [_lam(k, unicode)] if k else []
            factors.append(base)
            terms.append((c, "*".join(factors)))
    return _join(terms)


def render(value, unicode: bool = False) -> str:
    """Render any supported domain value."""
    from .algebra import AlgebraElement, Generator
    from .arith import HalfInt, Scalar
    from .omega import SuperVector
    from .poly import BiPoly, UniPoly
    from .structure import PhiVector
    from .weighting import WeightVector

    if isinstance(value, (int, Fraction)):
        return render_rat(value)
    if isinstance(value, HalfInt):
        return render_halfint(value)
    if isinstance(value, Scalar):
        return render_scalar(value, unicode)
    if isinstance(value, PhiVector):
        return render_supervector(value.as_supervector(), unicode)
    if isinstance(value, SuperVector):
        return render_supervector(value, unicode)
    if isinstance(value, BiPoly):
        return render_bipoly(value, ("x", "y"), unicode)
    if isinstance(value, UniPoly):
        return render_unipoly(value, "y", unicode)
    if isinstance(value, Generator):
        return render_generator(value)
    if isinstance(value, AlgebraElement):
        return render_element(value, unicode)
    if isinstance(value, WeightVector):
        return render_weightvector(value, unicode)
    raise TypeError(f"no renderer for {type(value).__name__}")
