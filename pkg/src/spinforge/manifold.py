"""The 4-dimensional quadric M = {|x|^2 = 1, x . conj(x) = 0} in R^6 and its almost complex structure."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .linalg import Matrix, rank
from .scalar import div, format_scalar
from .vec6 import SPIN4, Vec6, conj, cross, dot

RESIDUAL_TOL = 1e-12
MAX_ITER = 25
MAX_RETRIES = 16


class SingularJacobian(ArithmeticError):
    pass


class NoConvergence(ArithmeticError):
    pass


class NotTangent(ValueError):
    pass


class NotOnManifold(ValueError):
    pass


class SamplerExhausted(RuntimeError):
    pass


@dataclass(frozen=True)
class PointOnM:
    x: Vec6
    residual: tuple
    iterations: int = 0

    @property
    def exact(self) -> bool:
        return not any(isinstance(c, float) for c in self.x.c)

    def format(self) -> str:
        return f"{self.x.format()};{format_scalar(self.residual[0])},{format_scalar(self.residual[1])}"


def defining_map(x: Vec6):
    """(|x|^2, x . conj(x)); M is the preimage of (1, 0)."""
    return dot(x, x), dot(x, conj(x))


def residual(x: Vec6):
    n, q = defining_map(x)
    return n - 1, q


def jacobian(x: Vec6) -> Matrix:
    xb = conj(x)
    return Matrix([[2 * c for c in x.c], [2 * c for c in xb.c]])


def jacobian_rank(x: Vec6, tol: float = 0.0) -> int:
    return rank(jacobian(x), tol)


def point(x: Vec6, tol: float = RESIDUAL_TOL) -> PointOnM:
    """Wrap ``x`` as a point of M, checking the residual (exactly for rationals)."""
    r = residual(x)
    exact = not any(isinstance(c, float) for c in x.c)
    if exact and r != (0, 0):
        raise NotOnManifold(f"{x.format()} has residual {r}")
    if not exact and (abs(r[0]) > tol or abs(r[1]) > tol):
        raise NotOnManifold(f"{x.format()} has residual {r}")
    return PointOnM(x, r)


def project_to_manifold(x0: Vec6, tol: float = RESIDUAL_TOL, max_iter: int = MAX_ITER) -> PointOnM:
    """Newton iteration toward f(x) = (1, 0) with the least-norm step.

    Each step solves (J J^T) y = f(x) - (1, 0) on the 2x2 Gram matrix and
    moves by -J^T y.
    """
    x = np.array([float(c) for c in x0.c])
    for it in range(max_iter + 1):
        xb = x[[5, 4, 3, 2, 1, 0]] * np.array([1, -1, 1, 1, -1, 1])
        r = np.array([x @ x - 1.0, x @ xb])
        if abs(r[0]) <= tol and abs(r[1]) <= tol:
            return PointOnM(Vec6(float(c) for c in x), (float(r[0]), float(r[1])), it)
        if it == max_iter:
            break
        J = 2.0 * np.vstack([x, xb])
        gram = J @ J.T
        if abs(np.linalg.det(gram)) <= 1e-14 * max(1.0, np.abs(gram).max()) ** 2:
            raise SingularJacobian(f"Gram matrix of the Jacobian is singular at {x.tolist()}")
        x = x - J.T @ np.linalg.solve(gram, r)
    raise NoConvergence(f"no convergence within {max_iter} iterations from {x0.format()}")


def _stereo(t) -> tuple:
    s = sum(c * c for c in t)
    return ((1 - s) / (1 + s),) + tuple(2 * c / (1 + s) for c in t)


def exact_point(s, t) -> Vec6:
    """Point of M from two unit vectors of R^3, one per eigenspace of conj.

    conj has eigenvectors u1+u6, u2-u5, u3+u4 (eigenvalue +1) and
    u1-u6, u2+u5, u3-u4 (eigenvalue -1). Half the sum of a unit vector from
    each side has |x|^2 = 1 and x . conj(x) = (|s|^2 - |t|^2)/2 = 0.
    """
    h = Fraction(1, 2)
    return Vec6((h * (s[0] + t[0]), h * (s[1] + t[1]), h * (s[2] + t[2]),
                 h * (s[2] - t[2]), h * (t[1] - s[1]), h * (s[0] - t[0])))


def sample_manifold(seed: int, exact: bool = True) -> PointOnM:
    rng = random.Random(seed)
    if exact:
        def rat():
            return Fraction(rng.randint(-12, 12), rng.randint(1, 12))

        s = _stereo([rat(), rat()])
        t = _stereo([rat(), rat()])
        # rotate the 2-sphere parametrisation into a random coordinate order
        s = _shuffle3(rng, s)
        t = _shuffle3(rng, t)
        return point(exact_point(s, t))
    for _ in range(MAX_RETRIES):
        start = [rng.gauss(0.0, 1.0) for _ in range(6)]
        n = math.sqrt(sum(c * c for c in start))
        if n == 0.0:
            continue
        try:
            return project_to_manifold(Vec6(c / n for c in start))
        except (NoConvergence, SingularJacobian):
            continue
    raise SamplerExhausted(f"seed {seed}: no convergent start in {MAX_RETRIES} tries")


def _shuffle3(rng: random.Random, v) -> tuple:
    v = list(v)
    rng.shuffle(v)
    return tuple(c if rng.random() < 0.5 else -c for c in v)


def is_tangent(p: PointOnM, v: Vec6, tol: float = 0.0) -> bool:
    a, b = dot(p.x, v), dot(conj(p.x), v)
    if tol == 0.0 and p.exact:
        return a == 0 and b == 0
    return abs(a) <= tol and abs(b) <= tol


def tangent_basis(p: PointOnM) -> list[Vec6]:
    """Four vectors spanning {v : p.v = 0, conj(p).v = 0}.

    Gram-Schmidt of the standard basis against the orthonormal pair
    (p, conj(p)). Exact points give a mutually orthogonal (unnormalized)
    rational basis; float points give an orthonormal one.
    """
    x, xb = p.x, conj(p.x)
    exact = p.exact
    basis: list[Vec6] = []
    projected = [u - x * dot(u, x) - xb * dot(u, xb) for u in Vec6.basis()]
    if not exact:
        # best-conditioned candidates first
        projected.sort(key=lambda w: -dot(w, w))
    for w in projected:
        for b in basis:
            w = w - b * div(dot(w, b), dot(b, b))
        n2 = dot(w, w)
        if (exact and n2 == 0) or (not exact and n2 < 1e-6):
            continue
        if not exact:
            w = w * (1.0 / math.sqrt(n2))
        basis.append(w)
        if len(basis) == 4:
            break
    return basis


def almost_complex_J(p: PointOnM, v: Vec6, tol: float = 1e-12) -> Vec6:
    """J_p(v) = p x v on the tangent space at p."""
    if not is_tangent(p, v, 0.0 if p.exact else tol):
        raise NotTangent(f"{v.format()} is not tangent at {p.x.format()}")
    return cross(p.x, v, SPIN4)
