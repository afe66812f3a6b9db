import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from spinforge import emfield
from spinforge.emfield import EMField
from spinforge.linalg import Matrix
from spinforge.scalar import Complex

from conftest import rationals

fields = st.tuples(*[rationals] * 8).map(lambda v: EMField(v[0:3], v[3:6], v[6], v[7]))


def test_zero_field():
    f = EMField((0, 0, 0), (0, 0, 0))
    assert emfield.field_matrix(f) == Matrix.zeros(4, 4)
    assert emfield.spin_field_matrix(f) == Matrix([[Complex(0)] * 4] * 4)
    assert emfield.antisymmetry_defect(emfield.field_matrix(f)) == 0


def test_magnetic_entries():
    F = emfield.field_matrix(EMField((0, 0, 0), (0, 0, 1)))
    assert F[0, 1] == 1 and F[1, 0] == -1
    assert emfield.antisymmetry_defect(F) == 0


def test_electric_entries_are_printed_verbatim():
    F = emfield.field_matrix(EMField((1, 0, 0), (0, 0, 0)))
    assert F[0, 3] == 1 and F[3, 0] == 1
    assert emfield.antisymmetry_defect(F) == pytest.approx(2 * math.sqrt(2))
    assert emfield.antisymmetry_defect_sq(F) == 8
    assert emfield.antisymmetry_defect(emfield.field_matrix_corrected(EMField((1, 0, 0), (0, 0, 0)))) == 0


def test_spin_matrix_entries():
    M = emfield.spin_field_matrix(EMField((0, 0, 0), (0, 0, 0), E0=1))
    assert all(M[i, i] == Complex(1) for i in range(4))
    M = emfield.spin_field_matrix(EMField((0, 0, 0), (0, 1, 0)))
    assert M[0, 3] == Complex(-1) and M[3, 2] == Complex(-1)
    C = emfield.spin_field_matrix_corrected(EMField((0, 0, 0), (0, 1, 0)))
    assert C[3, 2] == Complex(0)
    C = emfield.spin_field_matrix_corrected(EMField((0, 0, 0), (1, 0, 0)))
    assert C[3, 2] == Complex(-1)


def test_parse():
    f = EMField.parse("1,2,3,4,5,6", exact=True)
    assert f.E0 == 0 and f.B0 == 0 and f.B == (4, 5, 6)
    f = EMField.parse("1,2,3,4,5,6,7,1/2", exact=True)
    assert f.B0 == Fraction(1, 2)
    with pytest.raises(ValueError):
        EMField.parse("1,2,3", exact=True)


@given(fields)
def test_defect_closed_form(f):
    e2 = sum(x * x for x in f.E)
    assert emfield.antisymmetry_defect_sq(emfield.field_matrix(f)) == 8 * e2
    assert (emfield.antisymmetry_defect_sq(emfield.field_matrix(f)) == 0) == (e2 == 0)


@given(fields, fields, rationals)
def test_linearity(f, g, t):
    def comb(a, b):
        return EMField(tuple(t * x + y for x, y in zip(a.E, b.E)), tuple(t * x + y for x, y in zip(a.B, b.B)),
                       t * a.E0 + b.E0, t * a.B0 + b.B0)

    h = comb(f, g)
    assert emfield.field_matrix(h) == emfield.field_matrix(f).scale(t) + emfield.field_matrix(g)
    assert emfield.spin_field_matrix(h) == emfield.spin_field_matrix(f).scale(t) + emfield.spin_field_matrix(g)
