"""Exact computer algebra for the N=1 Heisenberg-Virasoro superalgebra and its
rank-two non-weight modules."""
from .algebra import AlgebraElement, Generator, G, H, L, Q, bracket, jacobi_residual
from .arith import HalfInt, Scalar
from .kernels import BACKEND
from .omega import OmegaParams, SuperVector, act, act_element, verify_bracket_on
from .parsing import ParseError, parse
from .poly import BiPoly, UniPoly
from .render import render

__all__ = [
    "AlgebraElement", "Generator", "G", "H", "L", "Q", "bracket", "jacobi_residual",
    "HalfInt", "Scalar", "BACKEND", "OmegaParams", "SuperVector", "act", "act_element",
    "verify_bracket_on", "ParseError", "parse", "BiPoly", "UniPoly", "render",
]
__version__ = "0.1.0"
