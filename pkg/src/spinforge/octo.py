"""Star products on R^8 = R e0 + R e1 + R^6.

The compact so(4) product is taken from its fully expanded component
formulas. The split variants use the template

    (a0 b0 + a1 b1 - <p,q>) e0 + (a0 b1 + a1 b0 - <p, s(q)>) e1
        + a0 q + b0 p + a1 s(q) + b1 s(p) + [p, q]

with the variant's bracket, conjugation ``s`` and form ``<,>``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .vec6 import (
    SPIN4,
    ProductVariant,
    Vec6,
    _Vector,
    conj,
    conj_matrix,
    cross,
    form_matrix,
    inner,
)

Product = Callable[["Oct", "Oct"], "Oct"]


class Oct(_Vector):
    __slots__ = ()
    DIM = 8

    @property
    def scalar_part(self):
        return self.c[0]

    @property
    def split_part(self):
        return self.c[1]

    @property
    def vector_part(self) -> Vec6:
        return Vec6(self.c[2:])

    @classmethod
    def assemble(cls, a0, a1, p: Vec6) -> "Oct":
        return cls((a0, a1) + tuple(p.c))


def decompose(x: Oct):
    return x.c[0], x.c[1], Vec6(x.c[2:])


def _star_spin4(a: Sequence, b: Sequence) -> tuple:
    a0, a1, a2, a3, a4, a5, a6, a7 = a
    b0, b1, b2, b3, b4, b5, b6, b7 = b
    return (
        a0 * b0 + a1 * b1 - a2 * b2 - a3 * b3 - a4 * b4 - a5 * b5 - a6 * b6 - a7 * b7,
        a0 * b1 + a1 * b0 - a2 * b7 + a3 * b6 - a4 * b5 - a5 * b4 + a6 * b3 - a7 * b2,
        a0 * b2 + a2 * b0 + a1 * b7 + a7 * b1 - (a3 * b5 - a5 * b3 + a4 * b6 - a6 * b4),
        a0 * b3 + a3 * b0 - a1 * b6 - a6 * b1 + a2 * b5 - a5 * b2 - (a4 * b7 - a7 * b4),
        a0 * b4 + a4 * b0 + a1 * b5 + a5 * b1 + a2 * b6 - a6 * b2 + a3 * b7 - a7 * b3,
        a0 * b5 + a5 * b0 + a1 * b4 + a4 * b1 - (a2 * b3 - a3 * b2 + a6 * b7 - a7 * b6),
        a0 * b6 + a6 * b0 - a1 * b3 - a3 * b1 - (a2 * b4 - a4 * b2) + a5 * b7 - a7 * b5,
        a0 * b7 + a7 * b0 + a1 * b2 + a2 * b1 - (a3 * b4 - a4 * b3 + a5 * b6 - a6 * b5),
    )


def template_star(x: Oct, y: Oct, v: ProductVariant, *, a1b1_sign: int = 1,
                  literal_b0: bool = False) -> Oct:
    """Star product assembled from bracket, conjugation and form of ``v``.

    ``a1b1_sign=-1`` gives the compact printed reading of the e0 coefficient;
    ``literal_b0=True`` pairs ``b0`` (not ``b1``) with ``s(p)``, as the split
    product formula is printed. Both exist for auditing only.
    """
    a0, a1, p = decompose(x)
    b0, b1, q = decompose(y)
    sq = conj(q, v)
    sp = conj(p, v)
    e0 = a0 * b0 + a1b1_sign * a1 * b1 - inner(p, q, v)
    e1 = a0 * b1 + a1 * b0 - inner(p, sq, v)
    tail = q * a0 + p * b0 + sq * a1 + sp * (b0 if literal_b0 else b1) + cross(p, q, v)
    return Oct.assemble(e0, e1, tail)


def star(x: Oct, y: Oct, v: ProductVariant = SPIN4) -> Oct:
    if v is SPIN4:
        return Oct(_star_spin4(x.c, y.c))
    return template_star(x, y, v)


def basis_table(v: ProductVariant | Product = SPIN4) -> list[list[Oct]]:
    prod = _as_product(v)
    E = Oct.basis()
    return [[prod(E[i], E[j]) for j in range(8)] for i in range(8)]


def product_from_table(table: Sequence[Sequence[Oct]]) -> Product:
    """Bilinear extension of an 8x8 table of basis products."""
    def prod(x: Oct, y: Oct) -> Oct:
        acc = [0] * 8
        for i, xi in enumerate(x.c):
            if xi == 0:
                continue
            for j, yj in enumerate(y.c):
                if yj == 0:
                    continue
                t = xi * yj
                for k, c in enumerate(table[i][j].c):
                    if c:
                        acc[k] = acc[k] + t * c
        return Oct(acc)

    return prod


def _as_product(v) -> Product:
    if isinstance(v, ProductVariant):
        return lambda x, y: star(x, y, v)
    return v


def structure_tensor(v: ProductVariant | Product = SPIN4) -> np.ndarray:
    """Integer tensor T with e_i * e_j = sum_k T[i, j, k] e_k."""
    table = basis_table(v)
    T = np.zeros((8, 8, 8), dtype=np.int64)
    for i in range(8):
        for j in range(8):
            for k, c in enumerate(table[i][j].c):
                if c != int(c):
                    raise ValueError("structure constants are not integral")
                T[i, j, k] = int(c)
    return T


def associativity_failures(v: ProductVariant | Product = SPIN4) -> list[tuple[int, int, int]]:
    """All basis triples (i, j, k) with (e_i e_j) e_k != e_i (e_j e_k)."""
    prod = _as_product(v)
    table = basis_table(prod)
    E = Oct.basis()
    bad = []
    for i in range(8):
        for j in range(8):
            for k in range(8):
                if prod(table[i][j], E[k]) != prod(E[i], table[j][k]):
                    bad.append((i, j, k))
    return bad


@dataclass(frozen=True)
class StarTemplate:
    """Integer data of a template star product.

    ``bracket[i][j]`` is the slot vector of [u_i, u_j]; ``conj`` is a signed
    permutation matrix acting on columns; ``form`` is the Gram matrix. The
    sign lists select which nonzero entries of ``conj`` and ``form`` are
    flipped, which is the search space of the sign repair.
    """

    bracket: np.ndarray  # (6, 6, 6)
    conj: np.ndarray  # (6, 6)
    form: np.ndarray  # (6, 6)
    a1b1_sign: int = 1

    @classmethod
    def of(cls, v: ProductVariant) -> "StarTemplate":
        U = Vec6.basis()
        br = np.array([[list(cross(U[i], U[j], v).c) for j in range(6)] for i in range(6)], dtype=np.int64)
        return cls(br, np.array(conj_matrix(v), dtype=np.int64), np.array(form_matrix(v), dtype=np.int64))

    def conj_signs(self) -> tuple[int, ...]:
        return tuple(int(self.conj[r].sum()) for r in range(6))

    def form_signs(self) -> tuple[int, ...]:
        rows, cols = np.nonzero(self.form)
        return tuple(int(self.form[r, c]) for r, c in zip(rows, cols))

    def with_signs(self, conj_signs: Sequence[int], form_signs: Sequence[int]) -> "StarTemplate":
        S = np.abs(self.conj) * np.asarray(conj_signs, dtype=np.int64)[:, None]
        G = self.form.copy()
        rows, cols = np.nonzero(G)
        G[rows, cols] = np.abs(G[rows, cols]) * np.asarray(form_signs, dtype=np.int64)
        return StarTemplate(self.bracket, S, G, self.a1b1_sign)

    def tensor(self) -> np.ndarray:
        """Structure tensor of the template product (vectorized build)."""
        S, G, C = self.conj, self.form, self.bracket
        T = np.zeros((8, 8, 8), dtype=np.int64)
        for j in range(8):
            T[0, j, j] = 1
            T[j, 0, j] = 1
        T[1, 1, 0] = self.a1b1_sign
        # e1 * u_j and u_j * e1 both reduce to s(u_j)
        T[1, 2:, 2:] = S.T
        T[2:, 1, 2:] = S.T
        T[2:, 2:, 0] = -G
        T[2:, 2:, 1] = -(G @ S)
        T[2:, 2:, 2:] = C
        return T

    def product(self) -> Product:
        T = self.tensor()
        table = [[Oct(int(c) for c in T[i, j]) for j in range(8)] for i in range(8)]
        return product_from_table(table)
