"""Pure-Python/numpy versions of the compiled kernels."""

import numpy as np


def associativity_violations(T):
    T = np.asarray(T, dtype=np.int64)
    left = np.einsum("ijm,mkr->ijkr", T, T)
    right = np.einsum("jkm,imr->ijkr", T, T)
    return int(np.any(left != right, axis=3).sum())


def fold_mat8(mats):
    acc = np.eye(8)
    for m in np.asarray(mats, dtype=np.float64):
        acc = acc @ m
    return acc


def fold_mat4c(mats):
    acc = np.eye(4, dtype=np.complex128)
    for m in np.asarray(mats, dtype=np.complex128):
        acc = acc @ m
    return acc


def _qmul(p, q):
    p0, p1, p2, p3 = p
    q0, q1, q2, q3 = q
    return (p0 * q0 - p1 * q1 - p2 * q2 - p3 * q3,
            p0 * q1 + p1 * q0 + p2 * q3 - p3 * q2,
            p0 * q2 - p1 * q3 + p2 * q0 + p3 * q1,
            p0 * q3 + p1 * q2 - p2 * q1 + p3 * q0)


def fold_quatpair(pairs):
    a = (1.0, 0.0, 0.0, 0.0)
    b = (1.0, 0.0, 0.0, 0.0)
    for g1, g2 in np.asarray(pairs, dtype=np.float64).tolist():
        a = _qmul(a, g1)
        b = _qmul(g2, b)
    return np.array([a, b])


def fold_star(T, xs):
    T = np.asarray(T, dtype=np.float64)
    acc = np.zeros(8)
    acc[0] = 1.0
    for x in np.asarray(xs, dtype=np.float64):
        acc = np.einsum("i,j,ijk->k", acc, x, T)
    return acc
