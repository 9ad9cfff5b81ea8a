"""Sparse exact polynomials over the Laurent scalars.

:class:`BiPoly` is a polynomial in two abstract variables ``u`` and ``v``
(rendered ``x, y`` on the even side of a module and ``s, t`` on the odd side).
Internally every term is keyed by ``(deg_u, deg_v, lam_exp)`` and carries an
integer numerator over one shared positive denominator; the pair is kept
content-reduced so equal polynomials have identical storage.

:class:`UniPoly` is a univariate polynomial with :class:`Scalar` coefficients,
used for ``beta``, submodule generators ``g`` and the ``f_i`` in
``f = sum u^i f_i(v)``.
"""
from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Mapping

from . import kernels
from .arith import HalfInt, Scalar, as_rat, scalar


class NonMonicError(ValueError):
    pass


class ZeroDegreeError(ValueError):
    pass


class ZeroDivisorError(ZeroDivisionError):
    pass


class UniPoly:
    """Univariate polynomial ``sum c_d * z^d`` with Scalar coefficients."""

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, object] | Iterable | None = None):
        c = {}
        if coeffs is not None:
            items = coeffs.items() if isinstance(coeffs, Mapping) else enumerate(coeffs)
            for d, v in items:
                if d < 0:
                    raise ValueError("negative degree")
                s = scalar(v)
                if s:
                    c[int(d)] = c[int(d)] + s if int(d) in c else s
            c = {d: s for d, s in c.items() if s}
        object.__setattr__(self, "_c", c)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("UniPoly is immutable")

    @classmethod
    def var(cls) -> "UniPoly":
        return cls({1: 1})

    @classmethod
    def const(cls, c) -> "UniPoly":
        return cls({0: c})

    @classmethod
    def from_roots(cls, roots: Iterable) -> "UniPoly":
        """Monic ``prod (z - r)``."""
        out = cls.const(1)
        for r in roots:
            out = out * cls({1: 1, 0: -as_rat(r)})
        return out

    @property
    def coeffs(self) -> dict[int, Scalar]:
        return dict(self._c)

    def items(self):
        return self._c.items()

    def coeff(self, d: int) -> Scalar:
        return self._c.get(d, Scalar())

    @property
    def degree(self) -> int:
        """Degree, or -1 for the zero polynomial."""
        return max(self._c) if self._c else -1

    def lead(self) -> Scalar:
        return self._c[self.degree] if self._c else Scalar()

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self):
        return bool(self._c)

    def is_monic(self) -> bool:
        return bool(self._c) and self.lead() == 1

    def is_lambda_free(self) -> bool:
        return all(s.is_lambda_free() for s in self._c.values())

    def rational_coeffs(self) -> dict[int, Fraction]:
        if not self.is_lambda_free():
            raise ValueError("polynomial has lambda-dependent coefficients")
        return {d: s.constant() for d, s in self._c.items()}

    def to_list(self) -> list[Scalar]:
        """Dense coefficient list, lowest degree first (empty for zero)."""
        return [self.coeff(d) for d in range(self.degree + 1)]

    def eval(self, z) -> Scalar:
        """Evaluate at a rational (or Scalar) point by Horner's rule."""
        z = scalar(z)
        acc = Scalar()
        for d in range(self.degree, -1, -1):
            acc = acc * z + self.coeff(d)
        return acc

    def __add__(self, other):
        other = _coerce_uni(other)
        if other is None:
            return NotImplemented
        out = dict(self._c)
        for d, s in other._c.items():
            out[d] = out[d] + s if d in out else s
        return UniPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly({d: -s for d, s in self._c.items()})

    def __sub__(self, other):
        other = _coerce_uni(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce_uni(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _coerce_uni(other)
        if other is None:
            return NotImplemented
        out: dict[int, Scalar] = {}
        for d1, s1 in self._c.items():
            for d2, s2 in other._c.items():
                d = d1 + d2
                out[d] = out[d] + s1 * s2 if d in out else s1 * s2
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out = UniPoly.const(1)
        for _ in range(n):
            out = out * self
        return out

    def monic(self) -> "UniPoly":
        """Divide by the leading coefficient, which must be a unit."""
        if not self._c:
            raise ZeroDivisorError("zero polynomial has no leading coefficient")
        lead = self.lead()
        if not lead.is_monomial():
            raise NonMonicError("leading coefficient is not invertible")
        inv = lead.inverse()
        return UniPoly({d: s * inv for d, s in self._c.items()})

    def divmod(self, g: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        """Long division by a polynomial with invertible leading coefficient."""
        if not g:
            raise ZeroDivisorError("division by the zero polynomial")
        lead = g.lead()
        if not lead.is_monomial():
            raise NonMonicError("leading coefficient is not invertible")
        inv = lead.inverse()
        dg = g.degree
        gc = g._c
        rem = dict(self._c)
        quo: dict[int, Scalar] = {}
        while rem:
            dr = max(rem)
            if dr < dg:
                break
            t = rem.pop(dr) * inv
            shift = dr - dg
            quo[shift] = t
            for d, s in gc.items():
                if d == dg:
                    continue
                key = d + shift
                v = rem[key] - t * s if key in rem else -(t * s)
                if v:
                    rem[key] = v
                else:
                    rem.pop(key, None)
        return UniPoly(quo), UniPoly(rem)

    def __mod__(self, g):
        return self.divmod(g)[1]

    def __floordiv__(self, g):
        return self.divmod(g)[0]

    def as_bipoly(self, axis: str = "v") -> "BiPoly":
        """Embed as a BiPoly in ``v`` (default) or ``u``."""
        if axis == "v":
            return BiPoly.from_terms({(0, d): s for d, s in self._c.items()})
        if axis == "u":
            return BiPoly.from_terms({(d, 0): s for d, s in self._c.items()})
        raise ValueError("axis must be 'u' or 'v'")

    def __eq__(self, other):
        other_u = _coerce_uni(other)
        if other_u is None:
            return NotImplemented
        return self._c == other_u._c

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash(frozenset(self._c.items()))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self):
        return f"UniPoly({self})"

    def __str__(self):
        from .render import render_unipoly

        return render_unipoly(self)


def _coerce_uni(x) -> UniPoly | None:
    if isinstance(x, UniPoly):
        return x
    if isinstance(x, (int, Fraction, Scalar)):
        return UniPoly.const(x)
    return None


def _rat_parts(values: Iterable[Fraction]) -> int:
    """Least common denominator of some Fractions."""
    d = 1
    for v in values:
        d = lcm(d, v.denominator)
    return d


class Multiplier:
    """Prepared integer form of ``alpha*u + P(v)`` for :func:`affine_shift`.

    ``alpha`` and the coefficients of ``P`` must be lambda-free rationals.
    """

    __slots__ = ("a", "pcoef", "pden")

    def __init__(self, alpha, pcoef: Mapping[int, object]):
        alpha = as_rat(alpha)
        pc = {int(j): as_rat(c) for j, c in pcoef.items() if c}
        den = _rat_parts([alpha, *pc.values()])
        self.a = int(alpha * den)
        self.pcoef = {j: int(c * den) for j, c in pc.items()}
        self.pden = den

    @classmethod
    def from_unipoly(cls, alpha, p: UniPoly) -> "Multiplier":
        return cls(alpha, p.rational_coeffs())


class BiPoly:
    """Sparse polynomial in ``u, v`` with Laurent-scalar coefficients."""

    __slots__ = ("_t", "_den", "_hash")

    def __init__(self, terms: Mapping | None = None):
        # terms: {(i, j): Scalar-like}
        if not terms:
            self._set({}, 1)
            return
        flat = {}
        for (i, j), c in terms.items():
            if i < 0 or j < 0:
                raise ValueError("negative exponent")
            for k, r in scalar(c).items():
                key = (int(i), int(j), k)
                flat[key] = flat.get(key, 0) + r
        self._set(*_flat_to_int(flat))

    def _set(self, t, den):
        object.__setattr__(self, "_t", t)
        object.__setattr__(self, "_den", den)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("BiPoly is immutable")

    @classmethod
    def _make(cls, t: dict, den: int) -> "BiPoly":
        # (t, den) must already be canonical
        p = object.__new__(cls)
        p._set(t, den)
        return p

    @classmethod
    def from_terms(cls, terms: Mapping) -> "BiPoly":
        return cls(terms)

    @classmethod
    def from_flat(cls, flat: Mapping[tuple[int, int, int], object]) -> "BiPoly":
        """Build from ``{(deg_u, deg_v, lam_exp): rational}``."""
        acc = {}
        for key, c in flat.items():
            acc[key] = acc.get(key, 0) + as_rat(c)
        return cls._make(*_flat_to_int(acc))

    @classmethod
    def monomial(cls, i: int = 0, j: int = 0, c=1) -> "BiPoly":
        return cls({(i, j): c})

    @classmethod
    def const(cls, c) -> "BiPoly":
        return cls({(0, 0): c})

    @classmethod
    def zero(cls) -> "BiPoly":
        return cls._make({}, 1)

    @classmethod
    def from_u_coefficients(cls, coeffs: Iterable[UniPoly]) -> "BiPoly":
        terms = {}
        for i, fi in enumerate(coeffs):
            for j, s in fi.items():
                terms[(i, j)] = s
        return cls(terms)

    # -- views ---------------------------------------------------------------
    @property
    def den(self) -> int:
        return self._den

    def raw(self) -> tuple[dict, int]:
        """The canonical ``(int terms, den)`` pair (do not mutate)."""
        return self._t, self._den

    def flat_items(self):
        """Yield ``((deg_u, deg_v, lam_exp), Fraction)``."""
        den = self._den
        for key, c in self._t.items():
            yield key, Fraction(c, den)

    @property
    def terms(self) -> dict[tuple[int, int], Scalar]:
        out: dict[tuple[int, int], dict] = {}
        den = self._den
        for (i, j, k), c in self._t.items():
            out.setdefault((i, j), {})[k] = Fraction(c, den)
        return {key: Scalar._raw(v) for key, v in out.items()}

    def coeff(self, i: int, j: int) -> Scalar:
        den = self._den
        return Scalar._raw(
            {k: Fraction(c, den) for (a, b, k), c in self._t.items() if a == i and b == j}
        )

    def is_zero(self) -> bool:
        return not self._t

    def __bool__(self):
        return bool(self._t)

    def __len__(self):
        return len(self._t)

    @property
    def deg_u(self) -> int:
        return max((k[0] for k in self._t), default=-1)

    @property
    def deg_v(self) -> int:
        return max((k[1] for k in self._t), default=-1)

    def is_lambda_free(self) -> bool:
        return all(k[2] == 0 for k in self._t)

    def is_v_free(self) -> bool:
        return all(k[1] == 0 for k in self._t)

    def lambda_exponents(self) -> set[int]:
        return {k[2] for k in self._t}

    # -- ring operations -----------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, BiPoly):
            other = _coerce_bipoly(other)
            if other is None:
                return NotImplemented
        if not other._t:
            return self
        if not self._t:
            return other
        d1, d2 = self._den, other._den
        den = lcm(d1, d2)
        f1, f2 = den // d1, den // d2
        out = {key: c * f1 for key, c in self._t.items()}
        get = out.get
        for key, c in other._t.items():
            out[key] = get(key, 0) + c * f2
        return BiPoly._make(*kernels.normalize(out, den))

    __radd__ = __add__

    def __neg__(self):
        return BiPoly._make({key: -c for key, c in self._t.items()}, self._den)

    def __sub__(self, other):
        if not isinstance(other, BiPoly):
            other = _coerce_bipoly(other)
            if other is None:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce_bipoly(other)
        if other is None:
            return NotImplemented
        return other - self

    def scale(self, c) -> "BiPoly":
        """Multiply by a Scalar or rational."""
        if isinstance(c, (int, Fraction)):
            c = Fraction(c)
            if not c:
                return BiPoly.zero()
            n, d = c.numerator, c.denominator
            return BiPoly._make(*kernels.normalize({key: v * n for key, v in self._t.items()}, self._den * d))
        s = scalar(c)
        if not s or not self._t:
            return BiPoly.zero()
        sden = _rat_parts(r for _, r in s.items())
        snum = [(k, int(r * sden)) for k, r in s.items()]
        out = {}
        get = out.get
        for (i, j, k), v in self._t.items():
            for k2, n2 in snum:
                key = (i, j, k + k2)
                out[key] = get(key, 0) + v * n2
        return BiPoly._make(*kernels.normalize(out, self._den * sden))

    def shift_lambda(self, e: int) -> "BiPoly":
        if not e:
            return self
        return BiPoly._make({(i, j, k + e): c for (i, j, k), c in self._t.items()}, self._den)

    def __mul__(self, other):
        if isinstance(other, BiPoly):
            if not self._t or not other._t:
                return BiPoly.zero()
            out = {}
            get = out.get
            for (i1, j1, k1), c1 in self._t.items():
                for (i2, j2, k2), c2 in other._t.items():
                    key = (i1 + i2, j1 + j2, k1 + k2)
                    out[key] = get(key, 0) + c1 * c2
            return BiPoly._make(*kernels.normalize(out, self._den * other._den))
        if isinstance(other, (int, Fraction, Scalar)):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out = BiPoly.const(1)
        for _ in range(n):
            out = out * self
        return out

    def mul_v(self, g: UniPoly) -> "BiPoly":
        """Multiply by ``g(v)``."""
        return self * g.as_bipoly("v")

    def mul_u(self, g: UniPoly) -> "BiPoly":
        return self * g.as_bipoly("u")

    # -- substitutions -------------------------------------------------------
    def shift_u(self, h) -> "BiPoly":
        """``f(u + h, v)``."""
        h = as_rat(h)
        t, den = kernels.affine_shift(self._t, self._den, h.numerator, h.denominator, 0, _ONE, 1, 0)
        return BiPoly._make(t, den)

    def affine_shift(self, h, mult: Multiplier, lam_exp: int = 0) -> "BiPoly":
        """``lam^lam_exp * (alpha*u + P(v)) * f(u + h, v)``."""
        if isinstance(h, HalfInt):
            hn, hd = (h.doubled // 2, 1) if h.is_integer else (h.doubled, 2)
        else:
            h = as_rat(h)
            hn, hd = h.numerator, h.denominator
        t, den = kernels.affine_shift(self._t, self._den, hn, hd, mult.a, mult.pcoef, mult.pden, lam_exp)
        return BiPoly._make(t, den)

    def eval_v(self, b) -> "BiPoly":
        """Substitute the rational ``b`` for ``v``; the result is v-free."""
        b = as_rat(b)
        bn, bd = b.numerator, b.denominator
        if not self._t:
            return self
        jmax = self.deg_v
        out = {}
        get = out.get
        for (i, j, k), c in self._t.items():
            key = (i, 0, k)
            out[key] = get(key, 0) + c * bn**j * bd ** (jmax - j)
        return BiPoly._make(*kernels.normalize(out, self._den * bd**jmax))

    def eval(self, u, v) -> Scalar:
        """Substitute rationals for both variables."""
        u, v = as_rat(u), as_rat(v)
        acc: dict[int, Fraction] = {}
        for (i, j, k), c in self.flat_items():
            acc[k] = acc.get(k, 0) + c * u**i * v**j
        return Scalar(acc)

    def u_coefficients(self) -> list[UniPoly]:
        """``[f_0(v), ..., f_k(v)]`` with ``f = sum u^i f_i(v)``."""
        if not self._t:
            return []
        rows: list[dict] = [dict() for _ in range(self.deg_u + 1)]
        den = self._den
        for (i, j, k), c in self._t.items():
            rows[i].setdefault(j, {})[k] = Fraction(c, den)
        return [UniPoly({j: Scalar._raw(s) for j, s in row.items()}) for row in rows]

    def divmod_v(self, g: UniPoly) -> tuple["BiPoly", "BiPoly"]:
        """Divide every u-coefficient by ``g(v)``: returns ``(q, r)`` with ``f = g*q + r``."""
        qs, rs = [], []
        for fi in self.u_coefficients():
            q, r = fi.divmod(g)
            qs.append(q)
            rs.append(r)
        return BiPoly.from_u_coefficients(qs), BiPoly.from_u_coefficients(rs)

    def __eq__(self, other):
        if isinstance(other, BiPoly):
            return self._den == other._den and self._t == other._t
        o = _coerce_bipoly(other)
        if o is None:
            return NotImplemented
        return self == o

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((frozenset(self._t.items()), self._den))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self):
        return f"BiPoly({self})"

    def __str__(self):
        from .render import render_bipoly

        return render_bipoly(self)


_ONE = {0: 1}


def _flat_to_int(flat: Mapping[tuple, Fraction]) -> tuple[dict, int]:
    vals = {key: as_rat(c) for key, c in flat.items() if c}
    den = _rat_parts(vals.values())
    t = {key: int(c * den) for key, c in vals.items()}
    return kernels.normalize(t, den)


def _coerce_bipoly(x) -> BiPoly | None:
    if isinstance(x, BiPoly):
        return x
    if isinstance(x, (int, Fraction, Scalar)):
        return BiPoly.const(x)
    return None


def shift_u(f: BiPoly, h) -> BiPoly:
    return f.shift_u(h)


def u_coefficients(f: BiPoly) -> list[UniPoly]:
    return f.u_coefficients()


def divides_v(g: UniPoly, f: BiPoly) -> bool:
    """True iff ``g(v)`` divides every u-coefficient of ``f``."""
    if not g:
        raise ZeroDivisorError("divisor g is zero")
    g = g.monic()
    if g.degree == 0:
        return True
    return all(not (fi % g) for fi in f.u_coefficients())


def rem_v(f: BiPoly, g: UniPoly) -> BiPoly:
    """Reduce every u-coefficient of ``f`` modulo the monic ``g(v)``."""
    _check_modulus(g)
    return f.divmod_v(g)[1]


def _check_modulus(g: UniPoly) -> None:
    if g.degree < 1:
        raise ZeroDegreeError("modulus must have degree >= 1")
    if not g.is_monic():
        raise NonMonicError("modulus must be monic")


def combination_is_zero(pairs: Iterable[tuple[BiPoly, object]]) -> bool:
    """Exact test of ``sum(c * f) == 0`` for rational weights ``c``."""
    items = []
    for f, c in pairs:
        c = as_rat(c)
        items.append((f._t, f._den, c.numerator, c.denominator))
    return kernels.combination_is_zero(items)
