"""Linear maps from R^8 to quaternion pairs, split-quaternion pairs, SL(2,R)^2 and SL(2,C).

Each forward map is transcribed from its printed entry formulas. Inverses are
obtained by solving the 8x8 linear system once, exactly.
"""

from __future__ import annotations

import enum
import functools
from typing import Callable, Sequence

from .linalg import Matrix, inverse
from .octo import Oct, Product, _as_product
from .scalar import Complex, format_scalar, parse_list
from .vec6 import SPIN4, ProductVariant


class _QuatBase:
    __slots__ = ("w", "x", "y", "z")
    # squares of i, j, k
    SQUARES = (-1, -1, -1)

    def __init__(self, w=0, x=0, y=0, z=0):
        for name, val in zip(("w", "x", "y", "z"), (w, x, y, z)):
            object.__setattr__(self, name, val)

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    @property
    def c(self) -> tuple:
        return (self.w, self.x, self.y, self.z)

    @classmethod
    def parse(cls, text: str, exact: bool | None = None):
        return cls(*parse_list(text, 4, exact))

    def format(self) -> str:
        return ",".join(format_scalar(v) for v in self.c)

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self.c == other.c

    def __hash__(self):
        return hash((type(self).__name__, self.c))

    def __add__(self, other):
        return type(self)(*(a + b for a, b in zip(self.c, other.c)))

    def __sub__(self, other):
        return type(self)(*(a - b for a, b in zip(self.c, other.c)))

    def __neg__(self):
        return type(self)(*(-a for a in self.c))

    def scale(self, t):
        return type(self)(*(t * a for a in self.c))

    def conjugate(self):
        return type(self)(self.w, -self.x, -self.y, -self.z)

    def norm2(self):
        """w^2 - s_i x^2 - s_j y^2 - s_k z^2; the Euclidean norm squared for H."""
        si, sj, sk = self.SQUARES
        return self.w * self.w - si * self.x * self.x - sj * self.y * self.y - sk * self.z * self.z

    def __repr__(self):
        return f"{type(self).__name__}({self.format()})"


class Quaternion(_QuatBase):
    __slots__ = ()

    def __mul__(self, q: "Quaternion") -> "Quaternion":
        if not isinstance(q, Quaternion):
            return self.scale(q)
        return quat_mul(self, q)


class SplitQuaternion(_QuatBase):
    """Basis 1, i, j, k with i^2 = -1, j^2 = k^2 = +1, ij = k, jk = -i, ki = j."""

    __slots__ = ()
    SQUARES = (-1, 1, 1)

    def __mul__(self, q: "SplitQuaternion") -> "SplitQuaternion":
        if not isinstance(q, SplitQuaternion):
            return self.scale(q)
        return splitquat_mul(self, q)


def quat_mul(p: Quaternion, q: Quaternion) -> Quaternion:
    w1, x1, y1, z1 = p.c
    w2, x2, y2, z2 = q.c
    return Quaternion(
        w1 * w2 - x1 * x2 - y1 * y2 - z1 * z2,
        w1 * x2 + x1 * w2 + y1 * z2 - z1 * y2,
        w1 * y2 - x1 * z2 + y1 * w2 + z1 * x2,
        w1 * z2 + x1 * y2 - y1 * x2 + z1 * w2,
    )


def splitquat_mul(p: SplitQuaternion, q: SplitQuaternion) -> SplitQuaternion:
    w1, x1, y1, z1 = p.c
    w2, x2, y2, z2 = q.c
    return SplitQuaternion(
        w1 * w2 - x1 * x2 + y1 * y2 + z1 * z2,
        w1 * x2 + x1 * w2 - y1 * z2 + z1 * y2,
        w1 * y2 - x1 * z2 + y1 * w2 + z1 * x2,
        w1 * z2 + x1 * y2 - y1 * x2 + z1 * w2,
    )


# ---------------------------------------------------------------- forward maps

def to_quat_pair(x: Oct) -> tuple[Quaternion, Quaternion]:
    a0, a1, a2, a3, a4, a5, a6, a7 = x.c
    return (Quaternion(a0 - a1, a2 - a7, a6 + a3, a4 - a5),
            Quaternion(a0 + a1, a2 + a7, -(a3 - a6), -(a4 + a5)))


def to_splitquat_pair(x: Oct) -> tuple[SplitQuaternion, SplitQuaternion]:
    a0, a1, a2, a3, a4, a5, a6, a7 = x.c
    return (SplitQuaternion(a0 - a1, a2 - a7, a4 - a5, a6 + a3),
            SplitQuaternion(a0 + a1, a2 + a7, a4 + a5, a6 - a3))


def g1_to_sl2r_pair(a: Oct) -> tuple[Matrix, Matrix]:
    a0, a1, a2, a3, a4, a5, a6, a7 = a.c
    A = Matrix([[a0 - a1 + a3 + a6, a4 - a5 - a2 + a7],
                [a4 - a5 + a2 - a7, a0 - a1 - a3 - a6]])
    B = Matrix([[a0 + a1 + a3 - a6, -a4 - a5 - a2 - a7],
                [-a4 - a5 + a2 + a7, a0 + a1 - a3 + a6]])
    return A, B


def g2_to_sl2c(a: Oct) -> Matrix:
    a0, a1, a2, a3, a4, a5, a6, a7 = a.c
    return Matrix([[Complex(a0 - a7, a1 + a2), Complex(-a3 - a4, a5 + a6)],
                   [Complex(a3 - a4, a5 - a6), Complex(a0 + a7, a1 - a2)]])


# ---------------------------------------------------------------- inverses

def _flatten(value) -> list:
    """Real coordinates of a map value (tuple of quaternions / matrices, or one matrix)."""
    parts = value if isinstance(value, tuple) else (value,)
    out = []
    for part in parts:
        if isinstance(part, _QuatBase):
            out.extend(part.c)
        else:
            for row in part.rows:
                for e in row:
                    if isinstance(e, Complex):
                        out.extend((e.re, e.im))
                    else:
                        out.append(e)
    return out


@functools.lru_cache(maxsize=None)
def _inverse_matrix(name: str) -> Matrix:
    fwd = FORWARD[name]
    # row k holds the coordinates of f(e_k): x @ M = flatten(f(x))
    M = Matrix([_flatten(fwd(e)) for e in Oct.basis()])
    return inverse(M)


def _pullback(name: str, value) -> Oct:
    return Oct(_inverse_matrix(name).vecmul(_flatten(value)))


def from_quat_pair(q1: Quaternion, q2: Quaternion) -> Oct:
    return _pullback("quat_pair", (q1, q2))


def from_splitquat_pair(q1: SplitQuaternion, q2: SplitQuaternion) -> Oct:
    return _pullback("splitquat_pair", (q1, q2))


def from_sl2r_pair(A: Matrix, B: Matrix) -> Oct:
    return _pullback("sl2r_pair", (A, B))


def from_sl2c(M: Matrix) -> Oct:
    return _pullback("sl2c", M)


FORWARD: dict[str, Callable] = {
    "quat_pair": to_quat_pair,
    "splitquat_pair": to_splitquat_pair,
    "sl2r_pair": g1_to_sl2r_pair,
    "sl2c": g2_to_sl2c,
}


# ---------------------------------------------------------------- multiplicativity audit

class MapType(enum.Enum):
    HOM = "HOM"
    ANTIHOM = "ANTIHOM"
    NEITHER = "NEITHER"

    def __str__(self):
        return self.value


def _mul(p, q):
    if isinstance(p, Matrix):
        return p @ q
    return p * q


def multiplicativity_type(f: Callable | str, v: ProductVariant | Product = SPIN4,
                          mul: Callable | None = None) -> tuple[MapType, ...]:
    """Classify each component of ``f`` as a homomorphism, anti-homomorphism or neither.

    The check is exhaustive over the 64 ordered basis pairs; by bilinearity
    of both sides that settles the question for all inputs. A component that
    is both (a commutative image) reports HOM.
    """
    prod = _as_product(v)
    if f == "identity":
        f, mul = (lambda x: x), prod
    elif isinstance(f, str):
        f = FORWARD[f]
    mul = mul or _mul
    E = Oct.basis()
    images = [_components(f(e)) for e in E]
    ncomp = len(images[0])
    hom = [True] * ncomp
    anti = [True] * ncomp
    for i in range(8):
        for j in range(8):
            target = _components(f(prod(E[i], E[j])))
            for c in range(ncomp):
                if hom[c] and mul(images[i][c], images[j][c]) != target[c]:
                    hom[c] = False
                if anti[c] and mul(images[j][c], images[i][c]) != target[c]:
                    anti[c] = False
    return tuple(MapType.HOM if h else MapType.ANTIHOM if a else MapType.NEITHER
                 for h, a in zip(hom, anti))


def _components(value) -> tuple:
    return value if isinstance(value, tuple) else (value,)


def format_pair(value: Sequence) -> str:
    return ";".join(part.format() if hasattr(part, "format") else repr(part) for part in value)
