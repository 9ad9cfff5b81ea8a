"""Pure-Python implementation of the polynomial hot loops.

A polynomial is passed around as ``(terms, den)`` where ``terms`` maps
``(deg_u, deg_v, lam_exp)`` to a nonzero integer numerator and ``den`` is a
positive integer shared by every term.  Results are always content-reduced,
so ``(terms, den)`` is canonical.
"""
from math import comb, gcd

BACKEND = "python"


def normalize(terms, den):
    """Drop zeros and divide out the common content; returns ``(terms, den)``."""
    terms = {key: c for key, c in terms.items() if c}
    if not terms:
        return {}, 1
    if den < 0:
        den = -den
        terms = {key: -c for key, c in terms.items()}
    g = gcd(den, *terms.values())
    if g != 1:
        den //= g
        terms = {key: c // g for key, c in terms.items()}
    return terms, den


def affine_shift(terms, den, hn, hd, a, pcoef, pden, e):
    """Return ``lam^e * (a*u + P(v)) / pden * f(u + hn/hd, v)``.

    ``f = terms/den``; ``P(v) = sum(pcoef[j] * v**j)`` with integer ``pcoef``.
    ``hd`` must be positive.
    """
    if not terms:
        return {}, 1
    if hn:
        dmax = max(key[0] for key in terms)
        hnp = [1] * (dmax + 1)
        hdp = [1] * (dmax + 1)
        for t in range(1, dmax + 1):
            hnp[t] = hnp[t - 1] * hn
            hdp[t] = hdp[t - 1] * hd
        shifted = {}
        get = shifted.get
        for (i, j, k), c in terms.items():
            for r in range(i + 1):
                key = (r, j, k)
                shifted[key] = get(key, 0) + c * comb(i, r) * hnp[i - r] * hdp[dmax - i + r]
        scale = hdp[dmax]
    else:
        shifted = terms
        scale = 1
    out = {}
    get = out.get
    pitems = [(jj, pc) for jj, pc in pcoef.items() if pc]
    for (r, j, k), c in shifted.items():
        if not c:
            continue
        ke = k + e
        if a:
            key = (r + 1, j, ke)
            out[key] = get(key, 0) + a * c
        for jj, pc in pitems:
            key = (r, j + jj, ke)
            out[key] = get(key, 0) + pc * c
    return normalize(out, den * scale * pden)


def combination_is_zero(items):
    """True iff ``sum(wn/wd * terms/den)`` vanishes for ``items = [(terms, den, wn, wd)]``.

    Weights are integer fractions ``wn/wd``; nothing is normalized.
    """
    scaled = []
    lcm = 1
    for terms, den, wn, wd in items:
        if not terms or not wn:
            continue
        d = den * wd
        g = gcd(wn, d)
        wn, d = wn // g, d // g
        scaled.append((terms, wn, d))
        lcm = lcm * d // gcd(lcm, d)
    if not scaled:
        return True
    if len(scaled) == 1:
        return False
    acc = {}
    get = acc.get
    for terms, wn, d in scaled:
        w = wn * (lcm // d)
        for key, c in terms.items():
            acc[key] = get(key, 0) + w * c
    return not any(acc.values())
