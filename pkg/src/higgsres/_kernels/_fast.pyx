# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled arithmetic kernels; mirrors ``pure`` exactly.

Coefficients stay arbitrary-precision Python ints; the speedup comes
from typed loop indices, direct tuple packing, and removing interpreter
dispatch in the inner loops.  Outputs must be bit-identical to the pure
backend (the test suite compares them).
"""

from math import gcd

BACKEND = "compiled"

GQ_ZERO = (0, 0, 1)
GQ_ONE = (1, 0, 1)
GQ_I = (0, 1, 1)


# ---------------------------------------------------------------------------
# scalars
# ---------------------------------------------------------------------------


cpdef tuple gq_norm(a, b, d):
    if d == 0:
        raise ZeroDivisionError("zero denominator in Gaussian rational")
    if a == 0 and b == 0:
        return GQ_ZERO
    if d < 0:
        a, b, d = -a, -b, -d
    g = gcd(gcd(a, b), d)
    if g > 1:
        return (a // g, b // g, d // g)
    return (a, b, d)


cpdef tuple gq_add(tuple x, tuple y):
    a1, b1, d1 = x
    a2, b2, d2 = y
    if d1 == d2:
        return gq_norm(a1 + a2, b1 + b2, d1)
    return gq_norm(a1 * d2 + a2 * d1, b1 * d2 + b2 * d1, d1 * d2)


cpdef tuple gq_sub(tuple x, tuple y):
    a1, b1, d1 = x
    a2, b2, d2 = y
    if d1 == d2:
        return gq_norm(a1 - a2, b1 - b2, d1)
    return gq_norm(a1 * d2 - a2 * d1, b1 * d2 - b2 * d1, d1 * d2)


cpdef tuple gq_neg(tuple x):
    return (-x[0], -x[1], x[2])


cpdef tuple gq_mul(tuple x, tuple y):
    a1, b1, d1 = x
    a2, b2, d2 = y
    return gq_norm(a1 * a2 - b1 * b2, a1 * b2 + b1 * a2, d1 * d2)


cpdef tuple gq_inv(tuple x):
    a, b, d = x
    if a == 0 and b == 0:
        raise ZeroDivisionError("inverse of zero Gaussian rational")
    return gq_norm(d * a, -d * b, a * a + b * b)


cpdef tuple gq_div(tuple x, tuple y):
    a2, b2, d2 = y
    if a2 == 0 and b2 == 0:
        raise ZeroDivisionError("division by zero Gaussian rational")
    a1, b1, d1 = x
    n = a2 * a2 + b2 * b2
    return gq_norm(d2 * (a1 * a2 + b1 * b2), d2 * (b1 * a2 - a1 * b2), d1 * n)


cpdef bint gq_is_zero(tuple x):
    return x[0] == 0 and x[1] == 0


# ---------------------------------------------------------------------------
# polynomials
# ---------------------------------------------------------------------------


cpdef list p_norm(coeffs):
    cdef Py_ssize_t n = len(coeffs)
    while n and gq_is_zero(coeffs[n - 1]):
        n -= 1
    return list(coeffs[:n])


cpdef list p_add(list p, list q):
    cdef Py_ssize_t k
    if len(p) < len(q):
        p, q = q, p
    cdef list out = list(p)
    for k in range(len(q)):
        out[k] = gq_add(out[k], q[k])
    return p_norm(out)


cpdef list p_sub(list p, list q):
    cdef Py_ssize_t np = len(p), nq = len(q), k
    cdef list out = []
    for k in range(max(np, nq)):
        x = p[k] if k < np else GQ_ZERO
        y = q[k] if k < nq else GQ_ZERO
        out.append(gq_sub(x, y))
    return p_norm(out)


cpdef list p_neg(list p):
    return [gq_neg(c) for c in p]


cpdef list p_scale(tuple c, list p):
    if gq_is_zero(c):
        return []
    return p_norm([gq_mul(c, x) for x in p])


cpdef list p_mul(list p, list q):
    cdef Py_ssize_t j, k, np = len(p), nq = len(q)
    if np == 0 or nq == 0:
        return []
    cdef list out = [GQ_ZERO] * (np + nq - 1)
    for j in range(np):
        cj = p[j]
        if gq_is_zero(cj):
            continue
        for k in range(nq):
            ck = q[k]
            if not gq_is_zero(ck):
                out[j + k] = gq_add(out[j + k], gq_mul(cj, ck))
    return p_norm(out)


cpdef tuple p_divmod(list p, list q):
    cdef Py_ssize_t dq, k, j
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    cdef list rem = list(p)
    dq = len(q) - 1
    lead_inv = gq_inv(q[dq])
    if len(rem) - 1 < dq:
        return [], p_norm(rem)
    cdef list quot = [GQ_ZERO] * (len(rem) - dq)
    for k in range(len(rem) - 1 - dq, -1, -1):
        c = rem[k + dq]
        if gq_is_zero(c):
            continue
        f = gq_mul(c, lead_inv)
        quot[k] = f
        for j in range(dq + 1):
            rem[k + j] = gq_sub(rem[k + j], gq_mul(f, q[j]))
    return p_norm(quot), p_norm(rem)


cpdef tuple p_monic(list p):
    if not p:
        return [], GQ_ONE
    lead = p[len(p) - 1]
    if lead == GQ_ONE:
        return list(p), GQ_ONE
    inv = gq_inv(lead)
    cdef list out = [gq_mul(inv, c) for c in p]
    out[len(out) - 1] = GQ_ONE
    return out, lead


cpdef list p_gcd(list p, list q):
    cdef list a = list(p), b = list(q)
    while b:
        a, b = b, p_divmod(a, b)[1]
    return p_monic(a)[0]


cpdef tuple p_eval(list p, tuple c):
    cdef Py_ssize_t k
    acc = GQ_ZERO
    for k in range(len(p) - 1, -1, -1):
        acc = gq_add(gq_mul(acc, c), p[k])
    return acc


cpdef list p_shift(list p, tuple t):
    cdef Py_ssize_t k, j
    if gq_is_zero(t):
        return list(p)
    cdef list acc = []
    cdef list nxt
    for k in range(len(p) - 1, -1, -1):
        nxt = [GQ_ZERO] * (len(acc) + 1)
        for j in range(len(acc)):
            c = acc[j]
            nxt[j + 1] = gq_add(nxt[j + 1], c)
            nxt[j] = gq_add(nxt[j], gq_mul(t, c))
        nxt[0] = gq_add(nxt[0], p[k])
        acc = nxt
    return p_norm(acc)


cpdef list p_series_div(list num, list den, Py_ssize_t n):
    cdef Py_ssize_t k, j, jmax, nd, nn
    if not den or gq_is_zero(den[0]):
        raise ZeroDivisionError("series division by non-unit")
    inv0 = gq_inv(den[0])
    cdef list out = []
    nd = len(den)
    nn = len(num)
    for k in range(n):
        acc = num[k] if k < nn else GQ_ZERO
        jmax = k if k < nd - 1 else nd - 1
        for j in range(1, jmax + 1):
            acc = gq_sub(acc, gq_mul(den[j], out[k - j]))
        out.append(gq_mul(acc, inv0))
    return out


# ---------------------------------------------------------------------------
# fraction-free echelon over Z[i]
# ---------------------------------------------------------------------------


cpdef tuple zi_mul(tuple x, tuple y):
    return (x[0] * y[0] - x[1] * y[1], x[0] * y[1] + x[1] * y[0])


cpdef tuple zi_divexact(tuple x, tuple y):
    n = y[0] * y[0] + y[1] * y[1]
    return ((x[0] * y[0] + x[1] * y[1]) // n, (x[1] * y[0] - x[0] * y[1]) // n)


cpdef list zi_echelon(list rows, Py_ssize_t npivot):
    cdef Py_ssize_t m = len(rows), ncols, col, i, j, r, piv
    if m == 0:
        return []
    ncols = len(rows[0])
    cdef list pivots = []
    prev = (1, 0)
    r = 0
    for col in range(npivot):
        piv = -1
        for i in range(r, m):
            e = rows[i][col]
            if e[0] != 0 or e[1] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            rows[r], rows[piv] = rows[piv], rows[r]
        pr = rows[r]
        pc = pr[col]
        pc0, pc1 = pc
        pv0, pv1 = prev
        n_prev = pv0 * pv0 + pv1 * pv1
        for i in range(r + 1, m):
            ri = rows[i]
            ric = ri[col]
            ric0, ric1 = ric
            if ric0 == 0 and ric1 == 0:
                for j in range(col + 1, ncols):
                    e = ri[j]
                    if e[0] != 0 or e[1] != 0:
                        e0, e1 = e
                        na = pc0 * e0 - pc1 * e1
                        nb = pc0 * e1 + pc1 * e0
                        if pv0 == 1 and pv1 == 0:
                            ri[j] = (na, nb)
                        else:
                            ri[j] = (
                                (na * pv0 + nb * pv1) // n_prev,
                                (nb * pv0 - na * pv1) // n_prev,
                            )
                continue
            for j in range(col + 1, ncols):
                e = ri[j]
                f = pr[j]
                e0, e1 = e
                f0, f1 = f
                na = pc0 * e0 - pc1 * e1 - ric0 * f0 + ric1 * f1
                nb = pc0 * e1 + pc1 * e0 - ric0 * f1 - ric1 * f0
                if pv0 == 1 and pv1 == 0:
                    ri[j] = (na, nb)
                else:
                    ri[j] = (
                        (na * pv0 + nb * pv1) // n_prev,
                        (nb * pv0 - na * pv1) // n_prev,
                    )
            ri[col] = (0, 0)
        pivots.append((r, col))
        prev = pc
        r += 1
        if r == m:
            break
    return pivots
