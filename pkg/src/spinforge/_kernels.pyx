# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot loops. Same signatures and results as ``_kernels_py``."""

import numpy as np
cimport numpy as cnp

cnp.import_array()


def associativity_violations(const long long[:, :, ::1] T):
    """Number of basis triples (i, j, k) where (e_i e_j) e_k != e_i (e_j e_k)."""
    cdef Py_ssize_t n = T.shape[0]
    cdef Py_ssize_t i, j, k, m, r
    cdef long long lhs, rhs
    cdef long count = 0
    cdef bint bad
    for i in range(n):
        for j in range(n):
            for k in range(n):
                bad = False
                for r in range(n):
                    lhs = 0
                    rhs = 0
                    for m in range(n):
                        lhs += T[i, j, m] * T[m, k, r]
                        rhs += T[j, k, m] * T[i, m, r]
                    if lhs != rhs:
                        bad = True
                        break
                if bad:
                    count += 1
    return count


def fold_mat8(const double[:, :, ::1] mats):
    cdef Py_ssize_t n = mats.shape[0], t, i, j, k
    cdef double acc[8][8]
    cdef double tmp[8][8]
    cdef double s
    for i in range(8):
        for j in range(8):
            acc[i][j] = 1.0 if i == j else 0.0
    for t in range(n):
        for i in range(8):
            for j in range(8):
                s = 0.0
                for k in range(8):
                    s += acc[i][k] * mats[t, k, j]
                tmp[i][j] = s
        for i in range(8):
            for j in range(8):
                acc[i][j] = tmp[i][j]
    out = np.empty((8, 8), dtype=np.float64)
    cdef double[:, ::1] o = out
    for i in range(8):
        for j in range(8):
            o[i, j] = acc[i][j]
    return out


def fold_mat4c(const double complex[:, :, ::1] mats):
    cdef Py_ssize_t n = mats.shape[0], t, i, j, k
    cdef double complex acc[4][4]
    cdef double complex tmp[4][4]
    cdef double complex s
    for i in range(4):
        for j in range(4):
            acc[i][j] = 1.0 if i == j else 0.0
    for t in range(n):
        for i in range(4):
            for j in range(4):
                s = 0.0
                for k in range(4):
                    s = s + acc[i][k] * mats[t, k, j]
                tmp[i][j] = s
        for i in range(4):
            for j in range(4):
                acc[i][j] = tmp[i][j]
    out = np.empty((4, 4), dtype=np.complex128)
    cdef double complex[:, ::1] o = out
    for i in range(4):
        for j in range(4):
            o[i, j] = acc[i][j]
    return out


cdef inline void _qmul(double* p, double* q, double* r) noexcept nogil:
    r[0] = p[0] * q[0] - p[1] * q[1] - p[2] * q[2] - p[3] * q[3]
    r[1] = p[0] * q[1] + p[1] * q[0] + p[2] * q[3] - p[3] * q[2]
    r[2] = p[0] * q[2] - p[1] * q[3] + p[2] * q[0] + p[3] * q[1]
    r[3] = p[0] * q[3] + p[1] * q[2] - p[2] * q[1] + p[3] * q[0]


def fold_quatpair(const double[:, :, ::1] pairs):
    """Compose (q1, q2) pairs: first slot multiplies on the right, second on the left."""
    cdef Py_ssize_t n = pairs.shape[0], t, c
    cdef double a[4]
    cdef double b[4]
    cdef double g[4]
    cdef double r[4]
    a[0] = 1.0; a[1] = 0.0; a[2] = 0.0; a[3] = 0.0
    b[0] = 1.0; b[1] = 0.0; b[2] = 0.0; b[3] = 0.0
    for t in range(n):
        for c in range(4):
            g[c] = pairs[t, 0, c]
        _qmul(a, g, r)
        for c in range(4):
            a[c] = r[c]
            g[c] = pairs[t, 1, c]
        _qmul(g, b, r)
        for c in range(4):
            b[c] = r[c]
    out = np.empty((2, 4), dtype=np.float64)
    for c in range(4):
        out[0, c] = a[c]
        out[1, c] = b[c]
    return out


def fold_star(const long long[:, :, ::1] T, const double[:, ::1] xs):
    """Left-to-right product of octets under the structure tensor T."""
    cdef Py_ssize_t n = xs.shape[0], t, i, j, k
    cdef double acc[8]
    cdef double tmp[8]
    cdef double aij
    for k in range(8):
        acc[k] = 1.0 if k == 0 else 0.0
    for t in range(n):
        for k in range(8):
            tmp[k] = 0.0
        for i in range(8):
            if acc[i] == 0.0:
                continue
            for j in range(8):
                aij = acc[i] * xs[t, j]
                if aij == 0.0:
                    continue
                for k in range(8):
                    if T[i, j, k] != 0:
                        tmp[k] += aij * T[i, j, k]
        for k in range(8):
            acc[k] = tmp[k]
    out = np.empty(8, dtype=np.float64)
    for k in range(8):
        out[k] = acc[k]
    return out
