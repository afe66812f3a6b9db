"""Structure constants, Jacobi checks, Killing signatures and the sign-repair search."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from . import kernels
from .linalg import Matrix, inertia, inverse
from .octo import StarTemplate
from .vec6 import SPIN4, ProductVariant, Vec6, cross

Bracket = Callable[[Vec6, Vec6], Vec6]

# Killing signatures (n_pos, n_neg, n_zero) of the real forms each bracket is meant to realize.
EXPECTED_SIGNATURE = {
    ProductVariant.SPIN4: (0, 6, 0),  # so(4), compact
    ProductVariant.B1: (4, 2, 0),  # so(2,2) = sl(2,R) + sl(2,R)
    ProductVariant.B2: (3, 3, 0),  # so(3,1) = sl(2,C) as a real algebra
    ProductVariant.B3: (3, 3, 0),
}


class BudgetExceeded(RuntimeError):
    def __init__(self, message: str, partial: list):
        super().__init__(message)
        self.partial = partial


def _bracket(v: ProductVariant | Bracket) -> Bracket:
    if isinstance(v, ProductVariant):
        return lambda a, b: cross(a, b, v)
    return v


def structure_constants(v: ProductVariant | Bracket = SPIN4) -> list[list[list]]:
    """c[i][j][k] with [u_i, u_j] = sum_k c[i][j][k] u_k (0-based slots)."""
    br = _bracket(v)
    U = Vec6.basis()
    return [[list(br(U[i], U[j]).c) for j in range(6)] for i in range(6)]


def jacobi_defect(a: Vec6, b: Vec6, c: Vec6, v: ProductVariant | Bracket = SPIN4) -> Vec6:
    br = _bracket(v)
    return br(br(a, b), c) + br(br(b, c), a) + br(br(c, a), b)


def jacobi_failures(v: ProductVariant | Bracket = SPIN4) -> list[tuple[int, int, int]]:
    """Basis triples with nonzero Jacobi defect; empty iff the bracket satisfies Jacobi."""
    U = Vec6.basis()
    return [(i, j, k) for i, j, k in itertools.product(range(6), repeat=3)
            if not jacobi_defect(U[i], U[j], U[k], v).is_zero()]


def flip_structure_constant(v: ProductVariant | Bracket, i: int, j: int, k: int) -> Bracket:
    """Bracket equal to ``v`` except c[i][j][k] and c[j][i][k] change sign."""
    c = structure_constants(v)
    c = [[list(row) for row in plane] for plane in c]
    c[i][j][k] = -c[i][j][k]
    if i != j:
        c[j][i][k] = -c[j][i][k]
    return bracket_from_constants(c)


def bracket_from_constants(c: Sequence[Sequence[Sequence]]) -> Bracket:
    def br(a: Vec6, b: Vec6) -> Vec6:
        out = [0] * 6
        for i, ai in enumerate(a.c):
            if ai == 0:
                continue
            for j, bj in enumerate(b.c):
                if bj == 0:
                    continue
                t = ai * bj
                for k in range(6):
                    if c[i][j][k]:
                        out[k] = out[k] + t * c[i][j][k]
        return Vec6(out)

    return br


def ad_matrix(x: Vec6, v: ProductVariant | Bracket = SPIN4) -> Matrix:
    """Matrix of ad x acting on column coordinate vectors."""
    br = _bracket(v)
    cols = [br(x, u).c for u in Vec6.basis()]
    return Matrix(zip(*cols))


def killing_matrix(v: ProductVariant | Bracket = SPIN4) -> Matrix:
    """K[i][j] = trace(ad u_i ad u_j), exact."""
    ads = [ad_matrix(u, v) for u in Vec6.basis()]
    return Matrix([[_trace_product(ads[i], ads[j]) for j in range(6)] for i in range(6)])


def _trace_product(A: Matrix, B: Matrix):
    n = A.shape[0]
    return sum((A[i, k] * B[k, i] for i in range(n) for k in range(n)), 0)


def killing_form(x: Vec6, y: Vec6, v: ProductVariant | Bracket = SPIN4):
    return _trace_product(ad_matrix(x, v), ad_matrix(y, v))


@dataclass(frozen=True)
class Signature:
    n_pos: int
    n_neg: int
    n_zero: int
    lie: bool  # False flags a bracket that failed Jacobi

    def triple(self) -> tuple[int, int, int]:
        return self.n_pos, self.n_neg, self.n_zero

    def __str__(self):
        s = f"({self.n_pos}, {self.n_neg}, {self.n_zero})"
        return s if self.lie else s + " NotALieAlgebra"


def killing_signature(v: ProductVariant | Bracket = SPIN4) -> Signature:
    pos, neg, zero = inertia(killing_matrix(v))
    return Signature(pos, neg, zero, not jacobi_failures(v))


def random_unimodular(rng: random.Random, n: int = 6, steps: int = 24) -> Matrix:
    """Integer matrix with determinant +-1, built from elementary operations."""
    M = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(steps):
        i, j = rng.sample(range(n), 2)
        k = rng.choice([-2, -1, 1, 2])
        M[i] = [x + k * y for x, y in zip(M[i], M[j])]
    perm = list(range(n))
    rng.shuffle(perm)
    return Matrix([M[p] for p in perm])


def rebased_bracket(v: ProductVariant | Bracket, P: Matrix) -> Bracket:
    """The bracket written in the basis f_i = sum_k P[i][k] u_k.

    Coordinates x in the new basis correspond to x @ P in the old one.
    """
    br = _bracket(v)
    Pinv = inverse(P)

    def new(a: Vec6, b: Vec6) -> Vec6:
        old = br(Vec6(P.vecmul(a.c)), Vec6(P.vecmul(b.c)))
        return Vec6(Pinv.vecmul(old.c))

    return new


# ---------------------------------------------------------------- sign repair

@dataclass(frozen=True)
class SignAssignment:
    conj_signs: tuple[int, ...]
    form_signs: tuple[int, ...]

    def format(self) -> str:
        def f(s):
            return "".join("+" if x > 0 else "-" for x in s)
        return f"conj={f(self.conj_signs)} form={f(self.form_signs)}"


SEARCH_SPACE = 2 ** 12


def repair_search(v: ProductVariant | StarTemplate = SPIN4, budget: int = SEARCH_SPACE) -> list[SignAssignment]:
    """Every sign pattern on the conjugation and form entries that makes the star product associative.

    The 12 signs are enumerated in a fixed binary order (bit k set flips
    entry k of the original), each candidate is checked on all 512 basis
    triples, and e0 is confirmed as a two-sided identity.
    """
    base = StarTemplate.of(v) if isinstance(v, ProductVariant) else v
    conj0 = np.array(base.conj_signs())
    form0 = np.array(base.form_signs())
    if len(form0) != 6:
        raise ValueError("form must have exactly six nonzero entries")
    found = []
    for mask in range(SEARCH_SPACE):
        if mask >= budget:
            raise BudgetExceeded(f"search truncated at {budget} of {SEARCH_SPACE} assignments", found)
        flips = np.array([-1 if (mask >> k) & 1 else 1 for k in range(12)])
        cs = tuple(int(x) for x in conj0 * flips[:6])
        fs = tuple(int(x) for x in form0 * flips[6:])
        T = base.with_signs(cs, fs).tensor()
        if kernels.associativity_violations(T) == 0 and _has_identity(T):
            found.append(SignAssignment(cs, fs))
    return found


def _has_identity(T: np.ndarray) -> bool:
    eye = np.eye(8, dtype=T.dtype)
    return np.array_equal(T[0], eye) and np.array_equal(T[:, 0, :], eye)


def signs_of(v: ProductVariant | StarTemplate) -> SignAssignment:
    t = StarTemplate.of(v) if isinstance(v, ProductVariant) else v
    return SignAssignment(t.conj_signs(), t.form_signs())
