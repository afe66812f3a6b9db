import random
from fractions import Fraction

import numpy as np
import pytest
import sympy
from hypothesis import given, strategies as st

from spinforge import scalar
from spinforge.linalg import Matrix, SingularMatrix, det, inertia, inverse, rank, trace
from spinforge.scalar import Complex, format_scalar, parse_list, parse_scalar, scalar_mode

from conftest import rationals


def test_parse_and_format_rationals():
    assert parse_scalar("-3/6", exact=True) == Fraction(-1, 2)
    assert parse_scalar("0.25", exact=True) == Fraction(1, 4)
    assert parse_scalar("1/4", exact=False) == 0.25
    assert format_scalar(Fraction(6, 3)) == "2"
    assert format_scalar(Fraction(-1, 2)) == "-1/2"
    assert format_scalar(0.5) == "0.5"


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        parse_scalar("x", exact=True)
    with pytest.raises(ValueError):
        parse_scalar("", exact=True)
    with pytest.raises(ValueError):
        parse_list("1,2", 3)


def test_mode_context_is_scoped():
    assert scalar.mode() == scalar.EXACT
    with scalar_mode(scalar.FLOAT):
        assert isinstance(parse_scalar("1/3"), float)
        with pytest.raises(scalar.ExactModeRequired):
            scalar.require_exact("test")
    assert scalar.mode() == scalar.EXACT
    with pytest.raises(ValueError):
        scalar.set_mode("decimal")


def test_div_stays_rational():
    assert scalar.div(1, 3) == Fraction(1, 3)
    assert isinstance(scalar.div(1.0, 4), float)


@given(rationals, rationals, rationals, rationals)
def test_complex_field_ops(a, b, c, d):
    z, w = Complex(a, b), Complex(c, d)
    assert z * w == w * z
    assert (z * w).abs2() == z.abs2() * w.abs2()
    if w != 0:
        assert (z / w) * w == z
    assert z.conjugate().conjugate() == z


def test_complex_format():
    assert Complex(1, -2).format() == "1-2i"
    assert Complex(Fraction(1, 2), 3).format() == "1/2+3i"


def _rand_matrix(rng, n, span=6):
    return Matrix([[Fraction(rng.randint(-span, span), rng.randint(1, 3)) for _ in range(n)] for _ in range(n)])


@pytest.mark.parametrize("seed", range(8))
def test_bareiss_matches_sympy(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 8)
    m = _rand_matrix(rng, n)
    assert det(m) == sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in r] for r in m.rows]).det()


def test_det_integer_stays_integer():
    m = Matrix([[2, 0, 1], [1, 3, 2], [1, 1, 2]])
    d = det(m)
    assert d == 6 and isinstance(d, int)


def test_det_needs_pivoting():
    m = Matrix([[0, 1], [1, 0]])
    assert det(m) == -1
    assert det(Matrix([[0, 0], [1, 2]])) == 0


@pytest.mark.parametrize("seed", range(5))
def test_inverse_roundtrip(seed):
    rng = random.Random(seed)
    m = _rand_matrix(rng, 5)
    if det(m) == 0:
        pytest.skip("singular draw")
    assert m @ inverse(m) == Matrix.identity(5)


def test_inverse_singular():
    with pytest.raises(SingularMatrix):
        inverse(Matrix([[1, 2], [2, 4]]))


def test_rank():
    assert rank(Matrix([[1, 2], [2, 4]])) == 1
    assert rank(Matrix.zeros(3, 3)) == 0
    assert rank(Matrix.identity(4)) == 4


@pytest.mark.parametrize("seed", range(10))
def test_inertia_matches_eigenvalues(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 7)
    a = _rand_matrix(rng, n)
    # rank-deficient draws too, so the zero count is exercised
    if seed % 3 == 0:
        a = Matrix(a.rows[:-1] + (a.rows[0],))
    s = a + a.T
    ev = np.linalg.eigvalsh(np.array([[float(x) for x in r] for r in s.rows]))
    want = (int((ev > 1e-9).sum()), int((ev < -1e-9).sum()), int((abs(ev) <= 1e-9).sum()))
    assert inertia(s) == want


def test_inertia_zero_diagonal():
    # the hyperbolic plane needs the off-diagonal pivot path
    assert inertia(Matrix([[0, 1], [1, 0]])) == (1, 1, 0)
    assert inertia(Matrix([[0, 0], [0, 0]])) == (0, 0, 2)


def test_inertia_rejects_nonsymmetric():
    with pytest.raises(ValueError):
        inertia(Matrix([[1, 2], [0, 1]]))


def test_matrix_basics():
    m = Matrix([[1, 2], [3, 4]])
    assert m.shape == (2, 2)
    assert m[1, 0] == 3
    assert m.T == Matrix([[1, 3], [2, 4]])
    assert trace(m) == 5
    assert tuple(m.vecmul([1, 1])) == (4, 6)
    assert m.block(0, 1, 1, 2) == Matrix([[2]])
    assert (m @ Matrix.identity(2)) == m
    assert m.frobenius_sq() == 30


@given(st.lists(rationals, min_size=4, max_size=4), st.lists(rationals, min_size=4, max_size=4))
def test_det_multiplicative(x, y):
    a, b = Matrix([x[:2], x[2:]]), Matrix([y[:2], y[2:]])
    assert det(a @ b) == det(a) * det(b)
