"""The outer products on R^6, their conjugations and bilinear forms.

Slot convention: component ``c[k]`` (k = 0..5) is the k+1-th coordinate of the
compact so(4) product and the k+2-th coordinate (a2..a7) of the split
variants, so one vector type carries all four products.
"""

from __future__ import annotations

import enum
from typing import Iterable, Sequence

from .scalar import coerce, format_scalar, parse_list


class ProductVariant(enum.Enum):
    SPIN4 = "spin4"
    B1 = "b1"
    B2 = "b2"
    B3 = "b3"

    @classmethod
    def parse(cls, text: str) -> "ProductVariant":
        try:
            return cls(text.lower())
        except ValueError:
            raise ValueError(f"unknown variant {text!r}; expected one of spin4, b1, b2, b3") from None

    def __str__(self):
        return self.value


class Form(enum.Enum):
    EUCLID = "euclid"
    FORM1 = "form1"
    FORM23 = "form23"


SPIN4, B1, B2, B3 = ProductVariant.SPIN4, ProductVariant.B1, ProductVariant.B2, ProductVariant.B3

FORM_OF = {SPIN4: Form.EUCLID, B1: Form.FORM1, B2: Form.FORM23, B3: Form.FORM23}


class _Vector:
    """Immutable coordinate vector with the vector-space operations."""

    __slots__ = ("c",)
    DIM = 0

    def __init__(self, comps: Iterable):
        c = tuple(comps)
        if len(c) != self.DIM:
            raise ValueError(f"{type(self).__name__} needs {self.DIM} components, got {len(c)}")
        object.__setattr__(self, "c", c)

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    @classmethod
    def of(cls, *values, exact: bool | None = None):
        if len(values) == 1 and not isinstance(values[0], (int, float, str)) and hasattr(values[0], "__iter__"):
            values = tuple(values[0])
        return cls(coerce(v, exact) for v in values)

    @classmethod
    def zero(cls):
        return cls([0] * cls.DIM)

    @classmethod
    def unit(cls, k: int):
        return cls([1 if i == k else 0 for i in range(cls.DIM)])

    @classmethod
    def basis(cls) -> list:
        return [cls.unit(k) for k in range(cls.DIM)]

    @classmethod
    def parse(cls, text: str, exact: bool | None = None):
        return cls(parse_list(text, cls.DIM, exact))

    def format(self) -> str:
        return ",".join(format_scalar(x) for x in self.c)

    def __getitem__(self, k):
        return self.c[k]

    def __iter__(self):
        return iter(self.c)

    def __len__(self):
        return self.DIM

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self.c == other.c

    def __hash__(self):
        return hash((type(self).__name__, self.c))

    def __add__(self, other):
        return type(self)(x + y for x, y in zip(self.c, other.c))

    def __sub__(self, other):
        return type(self)(x - y for x, y in zip(self.c, other.c))

    def __neg__(self):
        return type(self)(-x for x in self.c)

    def __mul__(self, t):
        return type(self)(t * x for x in self.c)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.c)

    def __repr__(self):
        return f"{type(self).__name__}({self.format()})"


class Vec6(_Vector):
    __slots__ = ()
    DIM = 6


def _cross_spin4(a: Sequence, b: Sequence) -> tuple:
    a1, a2, a3, a4, a5, a6 = a
    b1, b2, b3, b4, b5, b6 = b
    return (
        -(a2 * b4 - a4 * b2 + a3 * b5 - a5 * b3),
        a1 * b4 - a4 * b1 - (a3 * b6 - a6 * b3),
        a1 * b5 - a5 * b1 + a2 * b6 - a6 * b2,
        -(a1 * b2 - a2 * b1 + a5 * b6 - a6 * b5),
        -(a1 * b3 - a3 * b1) + a4 * b6 - a6 * b4,
        -(a2 * b3 - a3 * b2 + a4 * b5 - a5 * b4),
    )


def _minors(a: Sequence, b: Sequence):
    # L(i, j) = a_i b_j - a_j b_i with i, j in 2..7 addressing slots 0..5
    def L(i, j):
        return a[i - 2] * b[j - 2] - a[j - 2] * b[i - 2]

    return L


def _bracket1(a, b) -> tuple:
    L = _minors(a, b)
    return (L(3, 5) + L(4, 6), L(2, 5) - L(4, 7), L(2, 6) + L(3, 7),
            -L(2, 3) - L(6, 7), -L(2, 4) + L(5, 7), L(3, 4) + L(5, 6))


def _bracket2(a, b) -> tuple:
    L = _minors(a, b)
    return (L(4, 6) - L(3, 5), L(2, 5) + L(4, 7), L(2, 6) + L(3, 7),
            -L(2, 3) + L(6, 7), -L(2, 4) + L(5, 7), -L(3, 4) - L(5, 6))


def _bracket3(a, b) -> tuple:
    L = _minors(a, b)
    return (-L(3, 5) - L(4, 6), L(2, 5) - L(4, 7), L(2, 6) + L(3, 7),
            L(2, 3) - L(6, 7), L(2, 4) + L(5, 7), L(3, 4) - L(5, 6))


_CROSS = {SPIN4: _cross_spin4, B1: _bracket1, B2: _bracket2, B3: _bracket3}

# conjugations as (source slot, sign) per output slot
_CONJ = {
    SPIN4: ((5, 1), (4, -1), (3, 1), (2, 1), (1, -1), (0, 1)),
    B1: ((5, 1), (4, -1), (3, 1), (2, 1), (1, -1), (0, 1)),
    B2: ((5, -1), (4, 1), (3, 1), (2, -1), (1, -1), (0, 1)),
    B3: ((5, 1), (4, -1), (3, 1), (2, -1), (1, 1), (0, -1)),
}

# bilinear forms as (slot, slot, coefficient) triples
_FORMS = {
    Form.EUCLID: tuple((k, k, 1) for k in range(6)),
    Form.FORM1: ((0, 5, 1), (1, 4, 1), (2, 3, -1), (3, 2, -1), (4, 1, 1), (5, 0, 1)),
    Form.FORM23: ((0, 5, 1), (1, 4, -1), (2, 3, 1), (3, 2, 1), (4, 1, -1), (5, 0, 1)),
}


def cross(a: Vec6, b: Vec6, v: ProductVariant = SPIN4) -> Vec6:
    """Outer product of the selected variant; bilinear and antisymmetric."""
    return Vec6(_CROSS[v](a.c, b.c))


def conj(a: Vec6, v: ProductVariant = SPIN4) -> Vec6:
    return Vec6(s * a.c[src] for src, s in _CONJ[v])


def inner(a: Vec6, b: Vec6, form: Form | ProductVariant = Form.EUCLID):
    if isinstance(form, ProductVariant):
        form = FORM_OF[form]
    total = 0
    for i, j, k in _FORMS[form]:
        total = total + k * a.c[i] * b.c[j]
    return total


def dot(a: Vec6, b: Vec6):
    return inner(a, b, Form.EUCLID)


def conj_matrix(v: ProductVariant) -> list[list[int]]:
    """Integer matrix S with conj(a) = S a (column action)."""
    S = [[0] * 6 for _ in range(6)]
    for out, (src, s) in enumerate(_CONJ[v]):
        S[out][src] = s
    return S


def form_matrix(form: Form | ProductVariant) -> list[list[int]]:
    if isinstance(form, ProductVariant):
        form = FORM_OF[form]
    G = [[0] * 6 for _ in range(6)]
    for i, j, k in _FORMS[form]:
        G[i][j] = k
    return G
