# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled polynomial hot loops.

Same contract as ``_pykernel``.  Coefficients are accumulated in dense int64
buffers with checked arithmetic; any overflow (or an oversized buffer) hands
the call to the pure-Python implementation, so results are always exact.
"""
from libc.stdlib cimport calloc, free
from math import gcd

from . import _pykernel

BACKEND = "cython"

cdef extern from *:
    """
    static inline int shv_mul(long long a, long long b, long long *r) { return __builtin_mul_overflow(a, b, r); }
    static inline int shv_add(long long a, long long b, long long *r) { return __builtin_add_overflow(a, b, r); }
    static inline long long shv_gcd(long long a, long long b) {
        if (a < 0) a = -a;
        if (b < 0) b = -b;
        while (b) { long long t = a % b; a = b; b = t; }
        return a;
    }
    """
    int shv_mul(long long a, long long b, long long *r) nogil
    int shv_add(long long a, long long b, long long *r) nogil
    long long shv_gcd(long long a, long long b) nogil

DEF MAX_CELLS = 1 << 20
DEF MAX_DEG = 62

normalize = _pykernel.normalize


def affine_shift(dict terms, den, hn, hd, a, dict pcoef, pden, e):
    """Return ``lam^e * (a*u + P(v)) / pden * f(u + hn/hd, v)`` with ``f = terms/den``."""
    if not terms:
        return {}, 1
    try:
        res = _affine_shift_fast(terms, hn, hd, a, pcoef, e)
    except OverflowError:
        res = None
    if res is None:
        return _pykernel.affine_shift(terms, den, hn, hd, a, pcoef, pden, e)
    out, content, scale = res
    if not out:
        return {}, 1
    newden = den * scale * pden
    g = gcd(content, newden)
    if g != 1:
        newden //= g
        out = {key: c // g for key, c in out.items()}
    return out, newden


cdef object _affine_shift_fast(dict terms, object hn_o, object hd_o, object a_o, dict pcoef, object e_o):
    cdef long long hn = hn_o, hd = hd_o, a = a_o, e = e_o
    cdef Py_ssize_t n = len(terms), t
    cdef int imax = 0, jmax = 0, pjmax = 0, np_ = 0
    cdef long long kmin = 0, kmax = 0
    cdef int i, j, r, q
    cdef long long k, c, tmp
    cdef long long *ci = NULL
    cdef long long *hnp = NULL
    cdef long long *hdp = NULL
    cdef long long *binom = NULL
    cdef long long *shifted = NULL
    cdef long long *outb = NULL
    cdef int *ti = NULL
    cdef int *tj = NULL
    cdef long long *tk = NULL
    cdef int *pj = NULL
    cdef long long *pc = NULL
    cdef Py_ssize_t R, J, K, SJ, cells, idx, sidx
    cdef bint first = True
    cdef long long content = 0

    ti = <int *> calloc(n, sizeof(int))
    tj = <int *> calloc(n, sizeof(int))
    tk = <long long *> calloc(n, sizeof(long long))
    ci = <long long *> calloc(n, sizeof(long long))
    np_ = len(pcoef)
    pj = <int *> calloc(np_ + 1, sizeof(int))
    pc = <long long *> calloc(np_ + 1, sizeof(long long))
    try:
        if ti == NULL or tj == NULL or tk == NULL or ci == NULL or pj == NULL or pc == NULL:
            raise MemoryError()
        t = 0
        for key, val in terms.items():
            i = key[0]
            j = key[1]
            k = key[2]
            ti[t] = i
            tj[t] = j
            tk[t] = k
            ci[t] = val
            if first:
                kmin = k
                kmax = k
                first = False
            if i > imax:
                imax = i
            if j > jmax:
                jmax = j
            if k < kmin:
                kmin = k
            if k > kmax:
                kmax = k
            t += 1
        q = 0
        for key, val in pcoef.items():
            if val:
                pj[q] = key
                pc[q] = val
                if pj[q] > pjmax:
                    pjmax = pj[q]
                q += 1
        np_ = q
        if imax > MAX_DEG:
            return None

        SJ = jmax + 1
        R = imax + 2
        J = jmax + pjmax + 1
        K = kmax - kmin + 1
        cells = R * J * K
        if cells > MAX_CELLS or (imax + 1) * SJ * K > MAX_CELLS:
            return None

        hnp = <long long *> calloc(imax + 1, sizeof(long long))
        hdp = <long long *> calloc(imax + 1, sizeof(long long))
        binom = <long long *> calloc((imax + 1) * (imax + 1), sizeof(long long))
        shifted = <long long *> calloc((imax + 1) * SJ * K, sizeof(long long))
        outb = <long long *> calloc(cells, sizeof(long long))
        if hnp == NULL or hdp == NULL or binom == NULL or shifted == NULL or outb == NULL:
            raise MemoryError()

        hnp[0] = 1
        hdp[0] = 1
        for i in range(1, imax + 1):
            if shv_mul(hnp[i - 1], hn, &hnp[i]) or shv_mul(hdp[i - 1], hd, &hdp[i]):
                raise OverflowError()
        for i in range(imax + 1):
            binom[i * (imax + 1)] = 1
            for r in range(1, i + 1):
                if r == i:
                    binom[i * (imax + 1) + r] = 1
                elif shv_add(binom[(i - 1) * (imax + 1) + r - 1], binom[(i - 1) * (imax + 1) + r],
                             &binom[i * (imax + 1) + r]):
                    raise OverflowError()

        # f(u + hn/hd, v) scaled by hd^imax
        for t in range(n):
            i = ti[t]
            j = tj[t]
            k = tk[t] - kmin
            c = ci[t]
            if hn == 0:
                if shv_mul(c, hdp[imax], &tmp):
                    raise OverflowError()
                sidx = (i * SJ + j) * K + k
                if shv_add(shifted[sidx], tmp, &shifted[sidx]):
                    raise OverflowError()
                continue
            for r in range(i + 1):
                if (shv_mul(c, binom[i * (imax + 1) + r], &tmp)
                        or shv_mul(tmp, hnp[i - r], &tmp)
                        or shv_mul(tmp, hdp[imax - i + r], &tmp)):
                    raise OverflowError()
                sidx = (r * SJ + j) * K + k
                if shv_add(shifted[sidx], tmp, &shifted[sidx]):
                    raise OverflowError()

        # multiply by (a*u + P(v))
        for r in range(imax + 1):
            for j in range(SJ):
                for k in range(K):
                    c = shifted[(r * SJ + j) * K + k]
                    if c == 0:
                        continue
                    if a:
                        idx = ((r + 1) * J + j) * K + k
                        if shv_mul(a, c, &tmp) or shv_add(outb[idx], tmp, &outb[idx]):
                            raise OverflowError()
                    for q in range(np_):
                        idx = (r * J + j + pj[q]) * K + k
                        if shv_mul(pc[q], c, &tmp) or shv_add(outb[idx], tmp, &outb[idx]):
                            raise OverflowError()

        out = {}
        for r in range(R):
            for j in range(J):
                for k in range(K):
                    c = outb[(r * J + j) * K + k]
                    if c:
                        content = shv_gcd(content, c)
                        out[(r, j, k + kmin + e)] = c
        return out, content, hdp[imax]
    finally:
        free(ti)
        free(tj)
        free(tk)
        free(ci)
        free(pj)
        free(pc)
        free(hnp)
        free(hdp)
        free(binom)
        free(shifted)
        free(outb)


def combination_is_zero(list items):
    """True iff ``sum(wn/wd * terms/den)`` vanishes for ``items = [(terms, den, wn, wd)]``."""
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
    try:
        res = _combination_fast(scaled, lcm)
    except OverflowError:
        res = -1
    if res < 0:
        return _pykernel.combination_is_zero(items)
    return res == 1


cdef int _combination_fast(list scaled, object lcm) except -2:
    cdef int imax = 0, jmax = 0, i, j
    cdef long long kmin = 0, kmax = 0, k, c, w, tmp
    cdef bint first = True
    cdef Py_ssize_t J, K, cells, idx
    cdef long long *buf = NULL
    for terms, wn, d in scaled:
        for key in (<dict> terms):
            i = key[0]
            j = key[1]
            k = key[2]
            if first:
                kmin = k
                kmax = k
                first = False
            if i > imax:
                imax = i
            if j > jmax:
                jmax = j
            if k < kmin:
                kmin = k
            if k > kmax:
                kmax = k
    J = jmax + 1
    K = kmax - kmin + 1
    cells = (imax + 1) * J * K
    if cells > MAX_CELLS:
        return -1
    buf = <long long *> calloc(cells, sizeof(long long))
    if buf == NULL:
        raise MemoryError()
    try:
        for terms, wn, d in scaled:
            w = wn * (lcm // d)
            for key, val in (<dict> terms).items():
                c = val
                idx = ((<int> key[0]) * J + (<int> key[1])) * K + (<long long> key[2] - kmin)
                if shv_mul(w, c, &tmp) or shv_add(buf[idx], tmp, &buf[idx]):
                    return -1
        for idx in range(cells):
            if buf[idx]:
                return 0
        return 1
    finally:
        free(buf)


# -- dense module-axiom checker ----------------------------------------------
#
# Every intermediate of the bracket sweep is homogeneous in lam, so a
# polynomial is a dense integer grid over (deg_u, deg_v) with one lam exponent
# and one positive denominator.

cdef extern from *:
    """
    typedef __int128 shv_i128;
    static inline int shv_mul128(shv_i128 a, shv_i128 b, shv_i128 *r) { return __builtin_mul_overflow(a, b, r); }
    static inline int shv_add128(shv_i128 a, shv_i128 b, shv_i128 *r) { return __builtin_add_overflow(a, b, r); }
    """
    ctypedef long long shv_i128
    int shv_mul128(shv_i128 a, shv_i128 b, shv_i128 *r) nogil
    int shv_add128(shv_i128 a, shv_i128 b, shv_i128 *r) nogil

DEF MAXP = 16
DEF MAXB = 40

cdef struct DPoly:
    long long *c
    int du
    int dv
    long long den
    long long e

cdef struct Plan:
    int valid
    int to_odd
    long long a
    long long pc[MAXP]
    int np
    long long pden
    long long e
    long long hn
    long long hd

cdef long long BINOM[MAXB][MAXB]

cdef void _init_binom():
    cdef int i, r
    for i in range(MAXB):
        for r in range(MAXB):
            BINOM[i][r] = 0
        BINOM[i][0] = 1
        for r in range(1, i + 1):
            BINOM[i][r] = BINOM[i - 1][r - 1] + BINOM[i - 1][r]

_init_binom()


cdef inline void dp_clear(DPoly *p):
    if p.c != NULL:
        free(p.c)
    p.c = NULL
    p.du = 0
    p.dv = 0
    p.den = 1
    p.e = 0


cdef int dp_from_dict(dict terms, object den_o, DPoly *out) except -2:
    """Dense copy of a lam-homogeneous polynomial; -1 if not representable."""
    cdef int i, j, du = 0, dv = 0
    cdef long long k, e = 0
    cdef bint first = True
    out.c = NULL
    out.du = 0
    out.dv = 0
    out.den = 1
    out.e = 0
    if not terms:
        return 0
    try:
        out.den = den_o
    except OverflowError:
        return -1
    for key in terms:
        i = key[0]
        j = key[1]
        k = key[2]
        if first:
            e = k
            first = False
        elif k != e:
            return -1
        if i + 1 > du:
            du = i + 1
        if j + 1 > dv:
            dv = j + 1
    if du >= MAXB:
        return -1
    out.c = <long long *> calloc(du * dv, sizeof(long long))
    if out.c == NULL:
        raise MemoryError()
    out.du = du
    out.dv = dv
    out.e = e
    try:
        for key, val in terms.items():
            out.c[(<int> key[0]) * dv + (<int> key[1])] = val
    except OverflowError:
        dp_clear(out)
        return -1
    return 0


cdef int dp_act(Plan *pl, DPoly *src, DPoly *dst) nogil:
    """``dst = lam^e (a u + P(v)) / pden * src(u + hn/hd, v)``; -1 on overflow."""
    cdef int du = src.du, dv = src.dv, imax = src.du - 1
    cdef int i, j, r, jj, odu, odv
    cdef long long tmp, c, g
    cdef bint nonzero
    cdef long long hnp[MAXB]
    cdef long long hdp[MAXB]
    cdef long long *sh = NULL
    cdef long long *out = NULL
    dst.c = NULL
    dst.du = 0
    dst.dv = 0
    dst.den = 1
    dst.e = 0
    if du == 0 or not pl.valid:
        return 0
    hnp[0] = 1
    hdp[0] = 1
    for i in range(1, du):
        if shv_mul(hnp[i - 1], pl.hn, &hnp[i]) or shv_mul(hdp[i - 1], pl.hd, &hdp[i]):
            return -1
    sh = <long long *> calloc(du * dv, sizeof(long long))
    if sh == NULL:
        return -1
    for i in range(du):
        for j in range(dv):
            c = src.c[i * dv + j]
            if c == 0:
                continue
            for r in range(i + 1):
                if pl.hn == 0 and r != i:
                    continue
                if (shv_mul(c, BINOM[i][r], &tmp) or shv_mul(tmp, hnp[i - r], &tmp)
                        or shv_mul(tmp, hdp[imax - i + r], &tmp)
                        or shv_add(sh[r * dv + j], tmp, &sh[r * dv + j])):
                    free(sh)
                    return -1
    odu = du + 1
    odv = dv + pl.np - 1
    out = <long long *> calloc(odu * odv, sizeof(long long))
    if out == NULL:
        free(sh)
        return -1
    for r in range(du):
        for j in range(dv):
            c = sh[r * dv + j]
            if c == 0:
                continue
            if pl.a:
                if shv_mul(pl.a, c, &tmp) or shv_add(out[(r + 1) * odv + j], tmp, &out[(r + 1) * odv + j]):
                    free(sh)
                    free(out)
                    return -1
            for jj in range(pl.np):
                if pl.pc[jj] == 0:
                    continue
                if shv_mul(pl.pc[jj], c, &tmp) or shv_add(out[r * odv + j + jj], tmp, &out[r * odv + j + jj]):
                    free(sh)
                    free(out)
                    return -1
    free(sh)
    if shv_mul(src.den, hdp[imax], &tmp) or shv_mul(tmp, pl.pden, &tmp):
        free(out)
        return -1
    # content reduction keeps the grid small
    g = tmp
    nonzero = False
    for i in range(odu * odv):
        if out[i]:
            nonzero = True
            g = shv_gcd(g, out[i])
    if not nonzero:
        free(out)
        return 0
    if g > 1:
        for i in range(odu * odv):
            out[i] //= g
        tmp //= g
    dst.c = out
    dst.du = odu
    dst.dv = odv
    dst.den = tmp
    dst.e = src.e + pl.e
    return 0


cdef int combo_zero(DPoly **ps, long long *wn, long long *wd, int n) nogil:
    """1 if ``sum(wn/wd * p)`` vanishes, 0 if not, -1 on overflow."""
    cdef int t, s, i, j, du = 0, dv = 0
    cdef shv_i128 w, tmp, acc
    cdef long long e
    cdef int f_i
    cdef int done[8]
    for t in range(n):
        done[t] = ps[t].du == 0 or wn[t] == 0
    for t in range(n):
        if done[t]:
            continue
        e = ps[t].e
        du = 0
        dv = 0
        for s in range(n):
            if not done[s] and ps[s].e == e:
                if ps[s].du > du:
                    du = ps[s].du
                if ps[s].dv > dv:
                    dv = ps[s].dv
        for i in range(du):
            for j in range(dv):
                acc = 0
                for s in range(n):
                    if done[s] or ps[s].e != e or i >= ps[s].du or j >= ps[s].dv:
                        continue
                    # weight: wn[s] * prod over other members of (wd * den)
                    w = wn[s]
                    for f_i in range(n):
                        if f_i == s or done[f_i] or ps[f_i].e != e:
                            continue
                        if shv_mul128(w, <shv_i128> wd[f_i], &w) or shv_mul128(w, <shv_i128> ps[f_i].den, &w):
                            return -1
                    if shv_mul128(w, <shv_i128> ps[s].c[i * ps[s].dv + j], &tmp) or shv_add128(acc, tmp, &acc):
                        return -1
                if acc != 0:
                    return 0
        for s in range(n):
            if not done[s] and ps[s].e == e:
                done[s] = 1
    return 1


cdef class AxiomChecker:
    """Compiled ``a(bv) - (-1)^{|a||b|} b(av) = [a,b]v`` over a fixed pair table.

    ``plans[g]`` is ``(plan_even, plan_odd)`` for generator ``g`` where each plan
    is None or ``(to_odd, a, pcoef_list, pden, lam_exp, hn, hd)``; the first
    ``n_gens`` generators are the window, the rest are bracket targets outside
    it.  ``table`` rows are ``(ia, ib, sign, c_num, c_den, ix)`` with ``ix = -1``
    for a vanishing bracket.
    """

    cdef Plan *plans
    cdef int n_all
    cdef int n_gens
    cdef long long *tab
    cdef int n_tab

    def __cinit__(self, list plans, int n_gens, list table):
        cdef int g, par, jj, t
        self.plans = NULL
        self.tab = NULL
        self.n_all = len(plans)
        self.n_gens = n_gens
        self.plans = <Plan *> calloc(2 * self.n_all, sizeof(Plan))
        self.n_tab = len(table)
        self.tab = <long long *> calloc(6 * self.n_tab + 1, sizeof(long long))
        if self.plans == NULL or self.tab == NULL:
            raise MemoryError()
        for g in range(self.n_all):
            for par in range(2):
                spec = plans[g][par]
                pl = &self.plans[2 * g + par]
                if spec is None:
                    pl.valid = 0
                    continue
                to_odd, a, pcoef, pden, e, hn, hd = spec
                if len(pcoef) > MAXP:
                    raise OverflowError("multiplier degree too large")
                pl.valid = 1
                pl.to_odd = 1 if to_odd else 0
                pl.a = a
                pl.np = len(pcoef) if pcoef else 1
                for jj in range(MAXP):
                    pl.pc[jj] = 0
                for jj in range(len(pcoef)):
                    pl.pc[jj] = pcoef[jj]
                pl.pden = pden
                pl.e = e
                pl.hn = hn
                pl.hd = hd
        for t in range(self.n_tab):
            row = table[t]
            for jj in range(6):
                self.tab[6 * t + jj] = row[jj]

    def __dealloc__(self):
        free(self.plans)
        free(self.tab)

    def check(self, dict even, even_den, dict odd, odd_den):
        """Index of the first failing table row, -1 if all pass, -2 if the C path overflowed."""
        cdef int n_all = self.n_all, n = self.n_gens
        cdef int g, par, ia, ib, ix, t, k, res = -1
        cdef DPoly v[2]
        cdef DPoly *first = NULL
        cdef DPoly *second = NULL
        cdef DPoly *src
        cdef DPoly *dst
        cdef Plan *pl
        cdef DPoly *ps[3]
        cdef long long wn[3]
        cdef long long wd[3]
        cdef int z
        v[0].c = NULL
        v[1].c = NULL
        if dp_from_dict(even, even_den, &v[0]) < 0 or dp_from_dict(odd, odd_den, &v[1]) < 0:
            dp_clear(&v[0])
            dp_clear(&v[1])
            return -2
        first = <DPoly *> calloc(2 * n_all, sizeof(DPoly))
        second = <DPoly *> calloc(2 * n * n, sizeof(DPoly))
        if first == NULL or second == NULL:
            free(first)
            free(second)
            dp_clear(&v[0])
            dp_clear(&v[1])
            raise MemoryError()
        try:
            # first level: X v for every generator
            for g in range(n_all):
                for par in range(2):
                    pl = &self.plans[2 * g + par]
                    if not pl.valid or v[par].du == 0:
                        continue
                    dst = &first[2 * g + pl.to_odd]
                    if dp_act(pl, &v[par], dst) < 0:
                        return -2
            # second level: a (b v) for window pairs
            for ia in range(n):
                for ib in range(n):
                    for par in range(2):
                        src = &first[2 * ib + par]
                        pl = &self.plans[2 * ia + par]
                        if not pl.valid or src.du == 0:
                            continue
                        dst = &second[2 * (ia * n + ib) + pl.to_odd]
                        if dp_act(pl, src, dst) < 0:
                            return -2
            for t in range(self.n_tab):
                ia = self.tab[6 * t]
                ib = self.tab[6 * t + 1]
                ix = self.tab[6 * t + 5]
                for par in range(2):
                    k = 2
                    ps[0] = &second[2 * (ia * n + ib) + par]
                    wn[0] = 1
                    wd[0] = 1
                    ps[1] = &second[2 * (ib * n + ia) + par]
                    wn[1] = -self.tab[6 * t + 2]
                    wd[1] = 1
                    if ix >= 0:
                        ps[2] = &first[2 * ix + par]
                        wn[2] = -self.tab[6 * t + 3]
                        wd[2] = self.tab[6 * t + 4]
                        k = 3
                    z = combo_zero(ps, wn, wd, k)
                    if z < 0:
                        return -2
                    if z == 0:
                        return t
            return -1
        finally:
            for g in range(2 * n_all):
                dp_clear(&first[g])
            for g in range(2 * n * n):
                dp_clear(&second[g])
            free(first)
            free(second)
            dp_clear(&v[0])
            dp_clear(&v[1])
