"""8x8 real and 4x4 complex representations, determinants and group membership.

Matrices act on row vectors: row i of ``rep_matrix(a)`` is ``e_i * a``, so
``x @ M(a) = x * a`` and ``M(a * b) = M(a) M(b)``.
"""

from __future__ import annotations

import enum
import functools
import random
from fractions import Fraction
from typing import Callable

from . import iso
from .iso import Quaternion
from .linalg import Matrix, det
from .octo import Oct, star
from .scalar import Complex, is_zero
from .vec6 import B1, B2, B3, SPIN4, ProductVariant


class Source(enum.Enum):
    DERIVED = "derived"
    PRINTED = "printed"


class GroupTag(enum.Enum):
    G_SPIN4 = "spin4"
    G1 = "g1"
    G2 = "g2"

    @classmethod
    def parse(cls, text: str) -> "GroupTag":
        try:
            return cls(text.lower())
        except ValueError:
            raise ValueError(f"unknown group {text!r}; expected one of spin4, g1, g2") from None


class BlockStructureError(ValueError):
    pass


class SamplerUnavailable(RuntimeError):
    pass


DERIVED, PRINTED = Source.DERIVED, Source.PRINTED

GROUP_VARIANT = {GroupTag.G_SPIN4: SPIN4, GroupTag.G1: B1, GroupTag.G2: B2}

# The split-variant star products are not associative as written, so their
# derived matrices do not compose; membership for G1/G2 uses the printed
# matrices, which do define associative algebras.
MEMBERSHIP_SOURCE = {GroupTag.G_SPIN4: DERIVED, GroupTag.G1: PRINTED, GroupTag.G2: PRINTED}


def _printed_spin4(a):
    a0, a1, a2, a3, a4, a5, a6, a7 = a
    return [[a0, a1, a2, a3, a4, a5, a6, a7],
            [a1, a0, a7, -a6, a5, a4, -a3, a2],
            [-a2, -a7, a0, a5, a6, -a3, -a4, a1],
            [-a3, a6, -a5, a0, a7, a2, -a1, -a4],
            [-a4, -a5, -a6, -a7, a0, a1, a2, a3],
            [-a5, -a4, a3, -a2, a1, a0, a7, -a6],
            [-a6, a3, a4, -a1, -a2, -a7, a0, a5],
            [-a7, -a2, a1, a4, -a3, a6, -a5, a0]]


def _printed_b1(a):
    a0, a1, a2, a3, a4, a5, a6, a7 = a
    return [[a0, a1, a2, a3, a4, a5, a6, a7],
            [a1, a0, a7, -a6, a5, a4, -a3, a2],
            [-a2, -a7, a0, a5, a6, -a3, -a4, a1],
            [a3, -a6, a5, a0, a7, a2, -a1, a4],
            [a4, a5, a6, -a7, a0, a1, a2, -a3],
            [a5, a4, -a3, -a2, a1, a0, a7, a6],
            [a6, -a3, -a4, -a1, -a2, -a7, a0, -a5],
            [-a7, -a2, a1, a4, -a3, a6, -a5, a0]]


def _printed_b2(a):
    a0, a1, a2, a3, a4, a5, a6, a7 = a
    return [[a0, a1, a2, a3, a4, a5, a6, a7],
            [-a1, a0, -a7, a6, a5, -a4, -a3, a2],
            [-a2, -a7, a0, a5, a6, -a3, -a4, a1],
            [-a3, a6, -a5, a0, a7, a2, -a1, -a4],
            [a4, -a5, a6, a7, a0, -a1, a2, a3],
            [-a5, -a4, a3, -a2, a1, a0, a7, -a6],
            [a6, a3, -a4, a1, -a2, a7, a0, a5],
            [a7, -a2, -a1, -a4, -a3, -a6, -a5, a0]]


def _printed_b3(a):
    a0, a1, a2, a3, a4, a5, a6, a7 = a
    return [[a0, a1, a2, a3, a4, a5, a6, a7],
            [-a1, a0, a7, -a6, a5, -a4, a3, -a2],
            [a2, -a7, a0, a5, a6, a3, a4, -a1],
            [a3, a6, -a5, a0, a7, -a2, a1, a4],
            [a4, -a5, -a6, -a7, a0, -a1, -a2, -a3],
            [-a5, -a4, a3, -a2, a1, a0, a7, -a6],
            [-a6, a3, a4, -a1, -a2, -a7, a0, a5],
            [-a7, -a2, a1, a4, -a3, a6, -a5, a0]]


_PRINTED = {SPIN4: _printed_spin4, B1: _printed_b1, B2: _printed_b2, B3: _printed_b3}


def rep_matrix(a: Oct, v: ProductVariant = SPIN4, source: Source = DERIVED) -> Matrix:
    if source is PRINTED:
        return Matrix(_PRINTED[v](a.c))
    return Matrix(star(e, a, v).c for e in Oct.basis())


def printed_product(v: ProductVariant) -> Callable[[Oct, Oct], Oct]:
    """Product read off a printed matrix family: x * a = x @ A(a)."""
    return lambda x, a: Oct(rep_matrix(a, v, PRINTED).vecmul(x.c))


def printed_vs_derived(v: ProductVariant) -> list[tuple[int, int, int, object, object]]:
    """Entrywise differences (basis k, row, col, printed, derived) on the 8 basis octets."""
    diffs = []
    for k, e in enumerate(Oct.basis()):
        P = rep_matrix(e, v, PRINTED)
        D = rep_matrix(e, v, DERIVED)
        for r in range(8):
            for c in range(8):
                if P[r, c] != D[r, c]:
                    diffs.append((k, r, c, P[r, c], D[r, c]))
    return diffs


def complex_rep(a: Oct) -> Matrix:
    """U + iV from the block form [[U, V], [-V, U]] of the derived so(4) matrix."""
    return complex_from_blocks(rep_matrix(a, SPIN4, DERIVED))


def complex_from_blocks(A: Matrix) -> Matrix:
    U, V = A.block(0, 4, 0, 4), A.block(0, 4, 4, 8)
    if A.block(4, 8, 4, 8) != U or A.block(4, 8, 0, 4) != -V:
        raise BlockStructureError("matrix is not of the form [[U, V], [-V, U]]")
    return Matrix([[Complex(u, w) for u, w in zip(ru, rv)] for ru, rv in zip(U.rows, V.rows)])


def printed_complex_rep(a: Oct) -> Matrix:
    """The printed 4x4 complex matrix, transcribed entry by entry."""
    a0, a1, a2, a3, a4, a5, a6, a7 = a.c
    C = Complex
    return Matrix([
        [C(a0, a4), C(a1, a5), C(a2, a6), C(a3, a7)],
        [C(a1, a5), C(a0, a4), C(a7, -a3), C(-a6, a2)],
        [C(-a2, a6), C(-a7, -a3), C(a0, -a4), C(a5, a1)],
        [C(-a3, a7), C(a6, a2), C(-a5, -a1), C(a0, -a4)],
    ])


def quadratic_form(a: Oct, g: GroupTag = GroupTag.G_SPIN4):
    a0, a1, a2, a3, a4, a5, a6, a7 = a.c
    if g is GroupTag.G_SPIN4:
        return a0 * a1 + a2 * a7 - a3 * a6 + a4 * a5
    if g is GroupTag.G1:
        return a0 * a1 + a2 * a7 + a3 * a6 - a4 * a5
    return a0 * a1 + a2 * a7 + a3 * a6 + a4 * a5


def norm_factors(a: Oct):
    """(N1, N2) = (|psi2(a)|^2, |psi1(a)|^2), the two quaternion norms."""
    a0, a1, a2, a3, a4, a5, a6, a7 = a.c
    n1 = (a0 + a1) ** 2 + (a2 + a7) ** 2 + (a4 + a5) ** 2 + (a3 - a6) ** 2
    n2 = (a0 - a1) ** 2 + (a2 - a7) ** 2 + (a4 - a5) ** 2 + (a6 + a3) ** 2
    return n1, n2


def printed_norm_factors(a: Oct):
    """The factor pair as printed in the first line of the determinant display."""
    a0, a1, a2, a3, a4, a5, a6, a7 = a.c
    n1 = (a0 + a1) ** 2 + (a2 - a7) ** 2 + (a4 - a5) ** 2 + (a6 + a3) ** 2
    n2 = (a0 - a1) ** 2 + (a2 + a7) ** 2 + (a4 + a5) ** 2 + (a6 - a3) ** 2
    return n1, n2


def det_factorization_check(a: Oct):
    """Return (N1, N2, det(A) == N1^2 N2^2) with A the derived so(4) matrix."""
    n1, n2 = norm_factors(a)
    d = det(rep_matrix(a, SPIN4, DERIVED))
    return n1, n2, d == n1 * n1 * n2 * n2


def is_group_member(a: Oct, g: GroupTag = GroupTag.G_SPIN4, source: Source | None = None,
                    tol: float = 1e-9) -> bool:
    """det(A) = 1 and the quadratic constraint vanishes.

    Exact on rational input; float input is judged with ``tol``.
    """
    src = MEMBERSHIP_SOURCE[g] if source is None else source
    d = det(rep_matrix(a, GROUP_VARIANT[g], src))
    q = quadratic_form(a, g)
    if any(isinstance(x, float) for x in a.c):
        return abs(d - 1) <= tol and abs(q) <= tol
    return d == 1 and q == 0


# ---------------------------------------------------------------- sampling

def _rand_rational(rng: random.Random, span: int = 9) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, span))


def rational_unit_quaternion(rng: random.Random) -> Quaternion:
    """Inverse stereographic image of a random rational point of R^3."""
    t = [_rand_rational(rng) for _ in range(3)]
    s = sum(x * x for x in t)
    d = 1 + s
    return Quaternion((1 - s) / d, 2 * t[0] / d, 2 * t[1] / d, 2 * t[2] / d)


def rational_sl2(rng: random.Random, ring: str = "real") -> Matrix:
    """Product of elementary factors; det is exactly 1."""
    def r():
        if ring == "complex":
            return Complex(_rand_rational(rng), _rand_rational(rng))
        return _rand_rational(rng)

    one = Complex(1, 0) if ring == "complex" else Fraction(1)
    zero = one - one
    d = r()
    while is_zero(d):
        d = r()
    upper = Matrix([[one, r()], [zero, one]])
    lower = Matrix([[one, zero], [r(), one]])
    diag = Matrix([[d, zero], [zero, one / d]])
    return upper @ diag @ lower


@functools.lru_cache(maxsize=None)
def sampler_audit(g: GroupTag) -> tuple[bool, str]:
    """Consistency audit of the inverse map a sampler would pull back through."""
    if g is GroupTag.G_SPIN4:
        types = iso.multiplicativity_type("quat_pair", SPIN4)
    elif g is GroupTag.G1:
        types = iso.multiplicativity_type("sl2r_pair", printed_product(B1))
    else:
        types = iso.multiplicativity_type("sl2c", printed_product(B2))
    if iso.MapType.NEITHER in types:
        return False, f"map is not multiplicative on the group algebra: {[str(t) for t in types]}"
    rng = random.Random(0)
    for _ in range(4):
        a = _pull_sample(g, rng)
        if not is_group_member(a, g):
            return False, (f"pulled-back element {a.format()} violates the printed constraints "
                           f"(quadratic form {quadratic_form(a, g)})")
    return True, "ok"


def _pull_sample(g: GroupTag, rng: random.Random) -> Oct:
    if g is GroupTag.G_SPIN4:
        return iso.from_quat_pair(rational_unit_quaternion(rng), rational_unit_quaternion(rng))
    if g is GroupTag.G1:
        return iso.from_sl2r_pair(rational_sl2(rng), rational_sl2(rng))
    return iso.from_sl2c(rational_sl2(rng, "complex"))


def sample_group_element(g: GroupTag, seed: int) -> Oct:
    ok, why = sampler_audit(g)
    if not ok:
        raise SamplerUnavailable(f"{g.value}: {why}")
    a = _pull_sample(g, random.Random(seed))
    if not is_group_member(a, g):
        raise SamplerUnavailable(f"{g.value}: sample {a.format()} failed the membership recheck")
    return a

