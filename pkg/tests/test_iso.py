import pytest
from hypothesis import given

from spinforge import iso, reps
from spinforge.iso import MapType, Quaternion, SplitQuaternion, multiplicativity_type, quat_mul, splitquat_mul
from spinforge.linalg import Matrix
from spinforge.octo import Oct
from spinforge.scalar import Complex
from spinforge.vec6 import B1, B2, B3, SPIN4

from conftest import octs

E = Oct.basis()
Q = Quaternion
S = SplitQuaternion
HOM, ANTI, NEITHER = MapType.HOM, MapType.ANTIHOM, MapType.NEITHER


def test_quaternion_tables():
    i, j, k = Q(0, 1, 0, 0), Q(0, 0, 1, 0), Q(0, 0, 0, 1)
    assert quat_mul(i, j) == k
    assert quat_mul(j, i) == -k
    assert quat_mul(k, k) == Q(-1)


def test_split_quaternion_tables():
    i, j, k = S(0, 1, 0, 0), S(0, 0, 1, 0), S(0, 0, 0, 1)
    assert splitquat_mul(j, j) == S(1)
    assert splitquat_mul(k, k) == S(1)
    assert splitquat_mul(i, i) == S(-1)
    assert splitquat_mul(i, j) == k
    assert splitquat_mul(S(1, 0, 1, 0), S(1, 0, -1, 0)) == S(0)


def test_forward_maps_on_basis():
    assert iso.to_quat_pair(E[0]) == (Q(1), Q(1))
    assert iso.to_quat_pair(E[1]) == (Q(-1), Q(1))
    assert iso.to_quat_pair(E[2]) == (Q(0, 1, 0, 0), Q(0, 1, 0, 0))
    assert iso.to_splitquat_pair(E[0]) == (S(1), S(1))
    assert iso.to_splitquat_pair(E[4]) == (S(0, 0, 1, 0), S(0, 0, 1, 0))
    assert iso.to_splitquat_pair(E[3]) == (S(0, 0, 0, 1), S(0, 0, 0, -1))
    A, B = iso.g1_to_sl2r_pair(E[3])
    assert A == Matrix([[1, 0], [0, -1]]) == B
    assert iso.g1_to_sl2r_pair(E[0]) == (Matrix.identity(2), Matrix.identity(2))
    assert iso.g2_to_sl2c(E[7]) == Matrix([[Complex(-1), Complex(0)], [Complex(0), Complex(1)]])


def test_inverse_maps():
    assert iso.from_quat_pair(Q(1), Q(1)) == E[0]
    assert iso.from_quat_pair(Q(-1), Q(1)) == E[1]


@given(octs)
def test_roundtrips(x):
    assert iso.from_quat_pair(*iso.to_quat_pair(x)) == x
    assert iso.from_splitquat_pair(*iso.to_splitquat_pair(x)) == x
    assert iso.from_sl2r_pair(*iso.g1_to_sl2r_pair(x)) == x
    assert iso.from_sl2c(iso.g2_to_sl2c(x)) == x


@given(octs)
def test_quat_norms_give_quadratic_form(x):
    q1, q2 = iso.to_quat_pair(x)
    assert 4 * reps.quadratic_form(x) == q2.norm2() - q1.norm2()


def test_spin4_types():
    assert multiplicativity_type("quat_pair", SPIN4) == (HOM, ANTI)
    assert multiplicativity_type("identity", SPIN4) == (HOM,)
    assert multiplicativity_type(lambda a: reps.rep_matrix(a), SPIN4) == (HOM,)
    assert multiplicativity_type("splitquat_pair", SPIN4) == (NEITHER, NEITHER)


@pytest.mark.parametrize("name,v,want", [
    ("sl2r_pair", B1, (HOM, HOM)),
    ("splitquat_pair", B1, (ANTI, ANTI)),
    ("sl2c", B2, (HOM,)),
    ("sl2c", B3, (NEITHER,)),
])
def test_types_on_printed_algebras(name, v, want):
    assert multiplicativity_type(name, reps.printed_product(v)) == want


@pytest.mark.parametrize("name,v,want", [
    ("sl2r_pair", B1, (NEITHER, HOM)),
    ("splitquat_pair", B1, (NEITHER, ANTI)),
    ("sl2c", B2, (NEITHER,)),
])
def test_types_on_derived_algebras(name, v, want):
    assert multiplicativity_type(name, v) == want


def test_commutative_component_reports_hom():
    # a map into a commutative target is both; HOM is reported
    assert multiplicativity_type(lambda a: Matrix([[a.c[0]]]), lambda x, y: Oct(
        [x.c[0] * y.c[0]] + [0] * 7)) == (HOM,)


def test_format_pair():
    assert iso.format_pair(iso.to_quat_pair(E[2])) == "0,1,0,0;0,1,0,0"
