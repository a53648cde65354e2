# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled mod-p kernels for moduli below 2**63.

Larger moduli are delegated to the pure-Python implementation.
"""

from libc.stdint cimport uint64_t, int64_t
from libc.stdlib cimport malloc, free

from . import _pykernel

cdef extern from *:
    """
    static inline uint64_t ecsum_mulmod(uint64_t a, uint64_t b, uint64_t m) {
        return (uint64_t)(((unsigned __int128)a * b) % m);
    }
    """
    uint64_t ecsum_mulmod(uint64_t a, uint64_t b, uint64_t m) nogil

LIMIT = 1 << 63

CASE_CHORD = _pykernel.CASE_CHORD
CASE_TANGENT = _pykernel.CASE_TANGENT
CASE_VERTICAL = _pykernel.CASE_VERTICAL


cdef inline uint64_t addm(uint64_t a, uint64_t b, uint64_t p) nogil:
    cdef uint64_t s = a + b
    return s - p if s >= p else s


cdef inline uint64_t subm(uint64_t a, uint64_t b, uint64_t p) nogil:
    return a - b if a >= b else a + (p - b)


cdef uint64_t invm(uint64_t a, uint64_t p) nogil:
    # extended Euclid; caller guarantees a != 0 and p prime
    cdef int64_t t = 0, newt = 1, q, tmp
    cdef uint64_t r = p, newr = a, tmpr
    while newr != 0:
        q = <int64_t>(r // newr)
        tmp = t - q * newt
        t = newt
        newt = tmp
        tmpr = r - <uint64_t>q * newr
        r = newr
        newr = tmpr
    if t < 0:
        return <uint64_t>(t + <int64_t>p)
    return <uint64_t>t


def inv_mod(a, p):
    if p >= LIMIT:
        return _pykernel.inv_mod(a, p)
    cdef uint64_t pp = p
    cdef uint64_t aa = a % p
    if aa == 0:
        raise ZeroDivisionError("inverse of 0 mod %d" % p)
    return invm(aa, pp)


def ec_add(x1, y1, x2, y2, a, p):
    if p >= LIMIT:
        return _pykernel.ec_add(x1, y1, x2, y2, a, p)
    cdef uint64_t P = p
    cdef uint64_t X1 = x1, Y1 = y1, X2 = x2, Y2 = y2, A = a
    cdef uint64_t alpha, x3, y3, num, den
    cdef int case
    if X1 != X2:
        case = CASE_CHORD
        alpha = ecsum_mulmod(subm(Y2, Y1, P), invm(subm(X2, X1, P), P), P)
    elif addm(Y1, Y2, P) == 0:
        return CASE_VERTICAL, 0, 0
    else:
        case = CASE_TANGENT
        num = addm(ecsum_mulmod(3 % P, ecsum_mulmod(X1, X1, P), P), A, P)
        den = addm(Y1, Y1, P)
        alpha = ecsum_mulmod(num, invm(den, P), P)
    x3 = subm(subm(ecsum_mulmod(alpha, alpha, P), X1, P), X2, P)
    y3 = subm(0, addm(Y1, ecsum_mulmod(alpha, subm(x3, X1, P), P), P), P)
    return case, x3, y3


cdef uint64_t _det(uint64_t* m, Py_ssize_t n, uint64_t p) nogil:
    cdef Py_ssize_t i, j, k, piv
    cdef uint64_t det = 1, inv, f, tmp
    cdef bint neg = False
    for i in range(n):
        piv = i
        while piv < n and m[piv * n + i] == 0:
            piv += 1
        if piv == n:
            return 0
        if piv != i:
            for j in range(n):
                tmp = m[i * n + j]
                m[i * n + j] = m[piv * n + j]
                m[piv * n + j] = tmp
            neg = not neg
        det = ecsum_mulmod(det, m[i * n + i], p)
        inv = invm(m[i * n + i], p)
        for k in range(i + 1, n):
            f = ecsum_mulmod(m[k * n + i], inv, p)
            if f != 0:
                for j in range(i + 1, n):
                    m[k * n + j] = subm(m[k * n + j], ecsum_mulmod(f, m[i * n + j], p), p)
    if neg:
        return subm(0, det, p)
    return det


def det_mod(rows, p):
    if p >= LIMIT:
        return _pykernel.det_mod(rows, p)
    cdef Py_ssize_t n = len(rows), i, j
    if n == 0:
        return 1
    cdef uint64_t P = p
    cdef uint64_t* m = <uint64_t*> malloc(n * n * sizeof(uint64_t))
    if m == NULL:
        raise MemoryError()
    try:
        for i in range(n):
            row = rows[i]
            for j in range(n):
                m[i * n + j] = row[j] % p
        return _det(m, n, P)
    finally:
        free(m)


def minors_mod(rows, p):
    if p >= LIMIT:
        return _pykernel.minors_mod(rows, p)
    cdef Py_ssize_t n = len(rows), ncols = len(rows[0]), l, i, j, jj
    cdef uint64_t P = p, d
    cdef uint64_t* full = <uint64_t*> malloc(n * ncols * sizeof(uint64_t))
    cdef uint64_t* m = <uint64_t*> malloc(n * n * sizeof(uint64_t) + 1)
    if full == NULL or m == NULL:
        free(full)
        free(m)
        raise MemoryError()
    out = []
    try:
        for i in range(n):
            row = rows[i]
            for j in range(ncols):
                full[i * ncols + j] = row[j] % p
        for l in range(ncols):
            for i in range(n):
                jj = 0
                for j in range(ncols):
                    if j != l:
                        m[i * n + jj] = full[i * ncols + j]
                        jj += 1
            d = _det(m, n, P)
            if l % 2 == 1:
                d = subm(0, d, P)
            out.append(d)
        return out
    finally:
        free(full)
        free(m)
