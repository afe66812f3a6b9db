"""Electromagnetic field matrix and its companion 4x4 complex matrix.

Both are transcribed verbatim. ``*_corrected`` constructors give the
pattern-consistent readings used for comparison: an antisymmetric F, and the
(3, 2) entry of the complex matrix read as -B1 - i B0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .linalg import Matrix
from .scalar import Complex, parse_list


@dataclass(frozen=True)
class EMField:
    E: tuple
    B: tuple
    E0: object = 0
    B0: object = 0

    @classmethod
    def parse(cls, text: str, exact: bool | None = None) -> "EMField":
        """``E1,E2,E3,B1,B2,B3[,E0[,B0]]``."""
        vals = parse_list(text, (6, 8), exact)
        vals += [vals[0] - vals[0]] * (8 - len(vals))
        return cls(tuple(vals[0:3]), tuple(vals[3:6]), vals[6], vals[7])


def field_matrix(f: EMField) -> Matrix:
    E1, E2, E3 = f.E
    B1, B2, B3 = f.B
    z = E1 - E1
    return Matrix([[z, B3, -B2, E1],
                   [-B3, z, B1, E2],
                   [B2, -B1, z, E3],
                   [E1, E2, E3, z]])


def field_matrix_corrected(f: EMField) -> Matrix:
    E1, E2, E3 = f.E
    B1, B2, B3 = f.B
    z = E1 - E1
    return Matrix([[z, B3, -B2, E1],
                   [-B3, z, B1, E2],
                   [B2, -B1, z, E3],
                   [-E1, -E2, -E3, z]])


def antisymmetry_defect_sq(m: Matrix):
    """Exact squared Frobenius norm of m + m^T."""
    return (m + m.T).frobenius_sq()


def antisymmetry_defect(m: Matrix) -> float:
    return math.sqrt(antisymmetry_defect_sq(m))


def spin_field_matrix(f: EMField, corrected: bool = False) -> Matrix:
    E1, E2, E3 = f.E
    B1, B2, B3 = f.B
    E0, B0 = f.E0, f.B0
    C = Complex
    row3_col2 = C(-B1, -B0) if corrected else C(-B2, -B0)
    return Matrix([
        [C(E0, E1), C(B0, B1), C(B3, E2), C(-B2, E3)],
        [C(B0, B1), C(E0, E1), C(E3, B2), C(-E2, B3)],
        [C(-B3, E2), C(-E3, B2), C(E0, -E1), C(B1, B0)],
        [C(B2, E3), C(E2, B3), row3_col2, C(E0, -E1)],
    ])


def spin_field_matrix_corrected(f: EMField) -> Matrix:
    return spin_field_matrix(f, corrected=True)
