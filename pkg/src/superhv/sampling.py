"""Seeded random inputs for the verification sweeps."""
from __future__ import annotations

import random
from fractions import Fraction

from .poly import BiPoly, UniPoly

DEFAULT_SEED = 20240607


def rng(seed=None) -> random.Random:
    return random.Random(DEFAULT_SEED if seed is None else seed)


def rand_rat(r: random.Random, num: int = 5, den: int = 4, nonzero: bool = False) -> Fraction:
    while True:
        q = Fraction(r.randint(-num, num), r.randint(1, den))
        if q or not nonzero:
            return q


def rand_bipoly(r: random.Random, max_deg: int = 3, density: float = 0.5) -> BiPoly:
    """Random lambda-free polynomial with both degrees at most ``max_deg``."""
    terms = {}
    for i in range(max_deg + 1):
        for j in range(max_deg + 1):
            if r.random() < density:
                terms[(i, j)] = rand_rat(r)
    return BiPoly(terms)


def rand_unipoly(r: random.Random, max_deg: int = 3, monic: bool = False, min_deg: int = 0) -> UniPoly:
    d = r.randint(min_deg, max_deg)
    coeffs = {i: rand_rat(r) for i in range(d)}
    coeffs[d] = 1 if monic else rand_rat(r, nonzero=True)
    return UniPoly(coeffs)


def rand_beta(r: random.Random, max_deg: int = 3, beta0=None) -> UniPoly:
    """Random beta; pass ``beta0`` to pin the constant term."""
    d = r.randint(0, max_deg)
    coeffs = {i: rand_rat(r) for i in range(d + 1)}
    if beta0 is not None:
        coeffs[0] = Fraction(beta0)
    return UniPoly(coeffs)


def rand_supervector(r: random.Random, max_deg: int = 3, density: float = 0.5):
    from .omega import SuperVector

    return SuperVector(rand_bipoly(r, max_deg, density), rand_bipoly(r, max_deg, density))
