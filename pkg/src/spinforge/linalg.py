"""Small dense matrices over exact scalars.

Everything here is sized for 2x2 .. 8x8 work, so plain nested tuples are
used and clarity wins over speed. Entries may be Fractions, ints, floats or
:class:`~spinforge.scalar.Complex`.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Sequence

from .scalar import Complex, format_scalar, is_zero


class SingularMatrix(ArithmeticError):
    pass


class Matrix:
    """Immutable rectangular matrix."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable]):
        rows = tuple(tuple(r) for r in rows)
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("ragged matrix")
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def identity(cls, n: int, one=1) -> "Matrix":
        zero = one - one
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, n: int, m: int | None = None, zero=0) -> "Matrix":
        return cls([[zero] * (n if m is None else m) for _ in range(n)])

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), (len(self.rows[0]) if self.rows else 0)

    def __getitem__(self, idx):
        i, j = idx
        return self.rows[i][j]

    def __iter__(self):
        return iter(self.rows)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __add__(self, other: "Matrix") -> "Matrix":
        return Matrix([[x + y for x, y in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        return Matrix([[x - y for x, y in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self) -> "Matrix":
        return Matrix([[-x for x in r] for r in self.rows])

    def scale(self, t) -> "Matrix":
        return Matrix([[t * x for x in r] for r in self.rows])

    def __mul__(self, other):
        if isinstance(other, Matrix):
            return self @ other
        return self.scale(other)

    def __rmul__(self, t):
        return self.scale(t)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        n, k = self.shape
        k2, m = other.shape
        if k != k2:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = list(zip(*other.rows))
        return Matrix([[_dot(r, c) for c in cols] for r in self.rows])

    def vecmul(self, v: Sequence) -> tuple:
        """Row vector times matrix: ``v @ self``."""
        return tuple(_dot(v, c) for c in zip(*self.rows))

    @property
    def T(self) -> "Matrix":
        return Matrix(zip(*self.rows))

    def block(self, r0: int, r1: int, c0: int, c1: int) -> "Matrix":
        return Matrix([r[c0:c1] for r in self.rows[r0:r1]])

    def det(self):
        return det(self)

    def frobenius_sq(self):
        total = 0
        for r in self.rows:
            for x in r:
                total += x.abs2() if isinstance(x, Complex) else x * x
        return total

    def to_json(self) -> str:
        return json.dumps([[format_scalar(x) for x in r] for r in self.rows])

    def __repr__(self):
        body = "; ".join(" ".join(format_scalar(x) for x in r) for r in self.rows)
        return f"Matrix([{body}])"


# Aliases named after the roles these matrices play.
Mat8 = Matrix
Mat4C = Matrix
Mat2R = Matrix
Mat2C = Matrix
Mat6 = Matrix


def _dot(u, v):
    total = 0
    for x, y in zip(u, v):
        total = total + x * y
    return total


def det(m: Matrix):
    """Determinant by fraction-free (Bareiss) elimination.

    Over Fractions the intermediate divisions are exact; over integer input the
    pivots stay integral throughout.
    """
    n, k = m.shape
    if n != k:
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return 1
    a = [list(r) for r in m.rows]
    sign = 1
    prev = 1
    for p in range(n - 1):
        if is_zero(a[p][p]):
            for r in range(p + 1, n):
                if not is_zero(a[r][p]):
                    a[p], a[r] = a[r], a[p]
                    sign = -sign
                    break
            else:
                return a[p][p] - a[p][p]
        piv = a[p][p]
        for i in range(p + 1, n):
            for j in range(p + 1, n):
                num = a[i][j] * piv - a[i][p] * a[p][j]
                a[i][j] = _exact_div(num, prev)
            a[i][p] = piv - piv
        prev = piv
    d = a[n - 1][n - 1]
    return d if sign == 1 else -d


def _exact_div(num, den):
    if isinstance(num, int) and isinstance(den, int):
        q, r = divmod(num, den)
        if r:
            raise ArithmeticError("Bareiss division left a remainder")
        return q
    return num / den


def _lift(x):
    # ints would turn into floats under true division
    return Fraction(x) if isinstance(x, int) else x


def rank(m: Matrix, tol: float = 0.0) -> int:
    a = [[_lift(x) for x in r] for r in m.rows]
    nrows, ncols = m.shape
    r = 0
    for c in range(ncols):
        piv = None
        best = None
        for i in range(r, nrows):
            if not is_zero(a[i][c], tol):
                if tol == 0.0:
                    piv = i
                    break
                if best is None or abs(a[i][c]) > best:
                    piv, best = i, abs(a[i][c])
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        for i in range(r + 1, nrows):
            f = a[i][c] / a[r][c]
            for j in range(c, ncols):
                a[i][j] -= f * a[r][j]
        r += 1
        if r == nrows:
            break
    return r


def inverse(m: Matrix) -> Matrix:
    """Gauss-Jordan inverse over exact scalars."""
    n, k = m.shape
    if n != k:
        raise ValueError("inverse of a non-square matrix")
    a = [[_lift(x) for x in r] + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(m.rows)]
    for c in range(n):
        piv = next((i for i in range(c, n) if not is_zero(a[i][c])), None)
        if piv is None:
            raise SingularMatrix("matrix is singular")
        a[c], a[piv] = a[piv], a[c]
        p = a[c][c]
        a[c] = [x / p for x in a[c]]
        for i in range(n):
            if i != c and not is_zero(a[i][c]):
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return Matrix(r[n:] for r in a)


def inertia(m: Matrix) -> tuple[int, int, int]:
    """Exact (n_pos, n_neg, n_zero) of a symmetric matrix by congruence.

    Symmetric Gaussian elimination: a zero pivot is replaced by swapping in a
    nonzero diagonal entry, or, failing that, by adding a row/column pair
    with a nonzero off-diagonal coupling (which makes the pivot 2*a_kj).
    """
    n, k = m.shape
    if n != k:
        raise ValueError("inertia of a non-square matrix")
    if m != m.T:
        raise ValueError("inertia needs a symmetric matrix")
    a = [[Fraction(x) for x in r] for r in m.rows]
    pos = neg = zero = 0
    for p in range(n):
        if a[p][p] == 0:
            j = next((j for j in range(p + 1, n) if a[j][j] != 0), None)
            if j is not None:
                a[p], a[j] = a[j], a[p]
                for r in a:
                    r[p], r[j] = r[j], r[p]
            else:
                j = next((j for j in range(p + 1, n) if a[p][j] != 0), None)
                if j is None:
                    zero += 1
                    continue
                for c in range(n):
                    a[p][c] += a[j][c]
                for r in range(n):
                    a[r][p] += a[r][j]
        piv = a[p][p]
        if piv > 0:
            pos += 1
        else:
            neg += 1
        for i in range(p + 1, n):
            if a[i][p] == 0:
                continue
            f = a[i][p] / piv
            for j in range(p, n):
                a[i][j] -= f * a[p][j]
            for r in range(p, n):
                a[r][i] -= f * a[r][p]
    return pos, neg, zero


def trace(m: Matrix):
    return sum((m.rows[i][i] for i in range(m.shape[0])), 0)
