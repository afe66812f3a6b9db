import itertools
import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given

from spinforge import iso, reps
from spinforge.linalg import Matrix, det
from spinforge.octo import Oct, star
from spinforge.reps import DERIVED, PRINTED, GroupTag
from spinforge.scalar import Complex
from spinforge.vec6 import B1, B2, B3, SPIN4

from conftest import VARIANTS, octs

E = Oct.basis()


def test_identity_matrices():
    assert reps.rep_matrix(E[0]) == Matrix.identity(8)
    assert reps.complex_rep(E[0]) == Matrix([[Complex(int(i == j)) for j in range(4)] for i in range(4)])
    for v in VARIANTS:
        assert reps.rep_matrix(E[0], v, PRINTED) == Matrix.identity(8)


@given(octs, octs)
def test_row_convention(x, a):
    assert Oct(reps.rep_matrix(a).vecmul(x.c)) == star(x, a)


def test_spin4_printed_equals_derived():
    for e in E:
        assert reps.rep_matrix(e, SPIN4, PRINTED) == reps.rep_matrix(e, SPIN4, DERIVED)


def test_printed_vs_derived_difference_counts():
    # frozen: entrywise differences on the 8 basis octets
    assert reps.printed_vs_derived(SPIN4) == []
    assert len(reps.printed_vs_derived(B1)) == 24
    assert len(reps.printed_vs_derived(B2)) == 25
    assert len(reps.printed_vs_derived(B3)) == 25
    assert (2, 2, 0, -1, 0) in reps.printed_vs_derived(B1)


@pytest.mark.parametrize("v", [B1, B2, B3], ids=str)
def test_printed_matrices_define_associative_unital_algebras(v):
    prod = reps.printed_product(v)
    for x, y, z in itertools.product(E, repeat=3):
        assert prod(prod(x, y), z) == prod(x, prod(y, z))
    for x in E:
        assert prod(E[0], x) == x == prod(x, E[0])


@given(octs)
def test_complex_rep_block_structure(a):
    A = reps.rep_matrix(a)
    assert A.block(0, 4, 0, 4) == A.block(4, 8, 4, 8)
    assert A.block(0, 4, 4, 8) == -A.block(4, 8, 0, 4)
    assert reps.complex_rep(a) == reps.printed_complex_rep(a)


def test_complex_rep_rejects_non_block_matrix():
    # the printed B1 matrices are not of the block form
    with pytest.raises(reps.BlockStructureError):
        reps.complex_from_blocks(reps.rep_matrix(Oct.unit(3), B1, PRINTED))


def test_quadratic_forms():
    for g in GroupTag:
        assert reps.quadratic_form(E[0], g) == 0
    assert reps.quadratic_form(E[0] + E[1]) == 1
    assert reps.quadratic_form(Oct.of(0, 0, 1, 0, 0, 0, 0, 1)) == 1


def test_det_factorization_examples():
    assert reps.det_factorization_check(E[0]) == (1, 1, True)
    assert reps.det_factorization_check(E[0] + E[1]) == (4, 0, True)
    assert reps.det_factorization_check(Oct.of(*range(1, 9))) == (260, 148, True)
    assert det(reps.rep_matrix(E[0] + E[1])) == 0


def _sym(x):
    return sympy.Rational(x.numerator, x.denominator) if isinstance(x, Fraction) else sympy.Integer(x)


@pytest.mark.parametrize("seed", range(3))
def test_det_against_sympy_oracle(seed):
    rng = random.Random(seed)
    a = Oct(Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(8))
    A = reps.rep_matrix(a)
    n1, n2 = reps.norm_factors(a)
    want = sympy.Matrix([[_sym(x) for x in r] for r in A.rows]).det()
    assert det(A) == want == n1 ** 2 * n2 ** 2


def test_printed_first_factor_line_is_wrong():
    a = Oct.of(*range(1, 9))
    n1, n2 = reps.printed_norm_factors(a)
    assert det(reps.rep_matrix(a)) != n1 ** 2 * n2 ** 2


def test_membership_examples():
    assert reps.is_group_member(E[0])
    assert not reps.is_group_member(E[0] * 2)
    assert det(reps.rep_matrix(E[0] * 2)) == 2 ** 8
    assert reps.is_group_member(E[0], GroupTag.G1)
    assert reps.is_group_member(E[0], GroupTag.G2)


def test_float_membership_uses_tolerance():
    a = Oct([1.0 + 1e-12] + [0.0] * 7)
    assert reps.is_group_member(a, tol=1e-9)
    assert not reps.is_group_member(a, tol=1e-15)


@pytest.mark.parametrize("seed", range(5))
def test_spin4_sampler(seed):
    a = reps.sample_group_element(GroupTag.G_SPIN4, seed)
    assert reps.is_group_member(a)
    assert all(isinstance(c, Fraction) for c in a.c)
    assert reps.sample_group_element(GroupTag.G_SPIN4, seed) == a


def test_identity_pullback():
    assert iso.from_quat_pair(iso.Quaternion(1), iso.Quaternion(1)) == E[0]


def test_g1_sampler():
    a = reps.sample_group_element(GroupTag.G1, 3)
    assert reps.is_group_member(a, GroupTag.G1)
    A, B = iso.g1_to_sl2r_pair(a)
    assert det(A) == 1 == det(B)


def test_g2_sampler_is_unavailable():
    ok, why = reps.sampler_audit(GroupTag.G2)
    assert not ok and "quadratic form" in why
    with pytest.raises(reps.SamplerUnavailable):
        reps.sample_group_element(GroupTag.G2, 0)


def test_g2_pullback_has_unit_determinant_but_breaks_constraint():
    rng = random.Random(1)
    m = reps.rational_sl2(rng, "complex")
    assert det(m) == Complex(1)
    a = iso.from_sl2c(m)
    assert det(reps.rep_matrix(a, B2, PRINTED)) == 1
    assert reps.quadratic_form(a, GroupTag.G2) != 0


@given(octs, octs)
def test_printed_b1_group_law(x, y):
    # det is multiplicative through the printed representation
    prod = reps.printed_product(B1)
    assert det(reps.rep_matrix(prod(x, y), B1, PRINTED)) == \
        det(reps.rep_matrix(x, B1, PRINTED)) * det(reps.rep_matrix(y, B1, PRINTED))


def test_group_tag_parse():
    assert GroupTag.parse("G1") is GroupTag.G1
    with pytest.raises(ValueError):
        GroupTag.parse("g3")
