"""Seeded generators of every renderable value type."""
import random
from fractions import Fraction

from superhv.algebra import AlgebraElement, Generator
from superhv.arith import HalfInt, Scalar
from superhv.omega import SuperVector
from superhv.poly import BiPoly, UniPoly
from superhv.structure import PhiVector
from superhv.weighting import WeightVector


def rat(r: random.Random, big: bool = False) -> Fraction:
    bound = 10**30 if big and r.random() < 0.2 else 12
    return Fraction(r.randint(-bound, bound), r.randint(1, 9))


def scalar(r: random.Random) -> Scalar:
    return Scalar({r.randint(-4, 4): rat(r, True) for _ in range(r.randint(0, 3))})


def bipoly(r: random.Random, lam: bool = True, v_free: bool = False) -> BiPoly:
    terms = {}
    for _ in range(r.randint(0, 5)):
        key = (r.randint(0, 4), 0 if v_free else r.randint(0, 4))
        terms[key] = scalar(r) if lam else rat(r, True)
    return BiPoly(terms)


def unipoly(r: random.Random) -> UniPoly:
    return UniPoly({r.randint(0, 5): scalar(r) for _ in range(r.randint(0, 4))})


def halfint(r: random.Random) -> HalfInt:
    return HalfInt(r.randint(-40, 40))


def generator(r: random.Random) -> Generator:
    kind = r.choice("LHGQ")
    d = 2 * r.randint(-20, 20)
    return Generator(kind, HalfInt(d if kind in "LH" else d + 1))


def element(r: random.Random) -> AlgebraElement:
    return AlgebraElement({generator(r): scalar(r) for _ in range(r.randint(0, 4))})


def supervector(r: random.Random) -> SuperVector:
    return SuperVector(bipoly(r), bipoly(r))


def phivector(r: random.Random) -> PhiVector:
    return PhiVector(bipoly(r, v_free=True), bipoly(r, v_free=True))


def weightvector(r: random.Random) -> WeightVector:
    terms = {}
    for _ in range(r.randint(0, 4)):
        sign = r.choice("+-")
        d = 2 * r.randint(-10, 10) + (0 if sign == "+" else 1)
        terms[(sign, HalfInt(d))] = scalar(r)
    return WeightVector(terms)


GENERATORS = {
    "rat": lambda r: rat(r, True),
    "halfint": halfint,
    "scalar": scalar,
    "bipoly": bipoly,
    "unipoly": unipoly,
    "generator": generator,
    "element": element,
    "supervector": supervector,
    "phivector": phivector,
    "weightvector": weightvector,
}


def corpus(kind: str, n: int = 120, seed: int = 11) -> list:
    r = random.Random(seed)
    return [GENERATORS[kind](r) for _ in range(n)]
