# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled GF(p) kernels mirroring hopfcode._pykernels."""

from libc.stdlib cimport malloc, free

ctypedef long long i64


cdef inline i64 _powmod(i64 a, i64 e, i64 p) nogil:
    cdef i64 r = 1
    a %= p
    while e > 0:
        if e & 1:
            r = r * a % p
        a = a * a % p
        e >>= 1
    return r


def rref_mod_p(rows, Py_ssize_t ncols, i64 p):
    if p >= 3037000499:
        raise OverflowError("modulus too large for the compiled kernel")
    cdef Py_ssize_t nrows = len(rows)
    cdef Py_ssize_t i, k, c, r = 0, piv
    cdef i64 inv, f, v
    cdef i64 *m = <i64 *> malloc(max(nrows * ncols, 1) * sizeof(i64))
    cdef i64 *tmp = <i64 *> malloc(max(ncols, 1) * sizeof(i64))
    if m == NULL or tmp == NULL:
        free(m)
        free(tmp)
        raise MemoryError()
    pivots = []
    try:
        for i in range(nrows):
            row = rows[i]
            for k in range(ncols):
                v = row[k] % p
                m[i * ncols + k] = v
        for c in range(ncols):
            if r == nrows:
                break
            piv = -1
            for i in range(r, nrows):
                if m[i * ncols + c] != 0:
                    piv = i
                    break
            if piv < 0:
                continue
            if piv != r:
                for k in range(ncols):
                    tmp[k] = m[r * ncols + k]
                    m[r * ncols + k] = m[piv * ncols + k]
                    m[piv * ncols + k] = tmp[k]
            inv = _powmod(m[r * ncols + c], p - 2, p)
            if inv != 1:
                for k in range(c, ncols):
                    m[r * ncols + k] = m[r * ncols + k] * inv % p
            for i in range(nrows):
                if i != r:
                    f = m[i * ncols + c]
                    if f != 0:
                        for k in range(c, ncols):
                            v = m[r * ncols + k]
                            if v != 0:
                                m[i * ncols + k] = (m[i * ncols + k] - f * v) % p
                                if m[i * ncols + k] < 0:
                                    m[i * ncols + k] += p
            pivots.append(c)
            r += 1
        out = [[m[i * ncols + k] for k in range(ncols)] for i in range(r)]
    finally:
        free(m)
        free(tmp)
    return out, pivots


def matmul_mod_p(a, b, i64 p):
    if p >= 3037000499:
        raise OverflowError("modulus too large for the compiled kernel")
    cdef Py_ssize_t n = len(a)
    if n == 0:
        return []
    cdef Py_ssize_t inner = len(b)
    cdef Py_ssize_t ncols = len(b[0]) if inner else 0
    cdef Py_ssize_t i, j, k
    cdef i64 f, acc
    cdef i64 *bm = <i64 *> malloc(max(inner * ncols, 1) * sizeof(i64))
    cdef i64 *am = <i64 *> malloc(max(n * inner, 1) * sizeof(i64))
    if bm == NULL or am == NULL:
        free(bm)
        free(am)
        raise MemoryError()
    try:
        for k in range(inner):
            row = b[k]
            for j in range(ncols):
                bm[k * ncols + j] = row[j] % p
        for i in range(n):
            row = a[i]
            for k in range(inner):
                am[i * inner + k] = row[k] % p
        out = []
        for i in range(n):
            res = []
            for j in range(ncols):
                acc = 0
                for k in range(inner):
                    f = am[i * inner + k]
                    if f != 0:
                        acc = (acc + f * bm[k * ncols + j]) % p
                res.append(acc)
            out.append(res)
    finally:
        free(bm)
        free(am)
    return out
