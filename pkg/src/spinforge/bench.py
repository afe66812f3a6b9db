"""Timing of group-element composition in three encodings, compiled vs fallback kernels.

Informational only. Elements are random Spin(4) members built from float
unit-quaternion pairs; the 8x8 real and 4x4 complex encodings are obtained
through the linear maps a -> M(a), so all three folds compute the same
group product and the results are cross-checked.
"""

from __future__ import annotations

import statistics
import time

import numpy as np

from . import _kernels_py, iso, kernels, reps
from .octo import Oct

ENCODINGS = ("mat8", "mat4c", "quatpair")


def _linear_images():
    """Images of the basis octets under each encoding, as float arrays."""
    basis = Oct.basis()
    mat8 = np.array([[[float(x) for x in row] for row in reps.rep_matrix(e).rows] for e in basis])
    mat4c = np.array([[[complex(z) for z in row] for row in reps.complex_rep(e).rows] for e in basis])
    to_oct = np.array([[float(x) for x in row] for row in iso._inverse_matrix("quat_pair").rows])
    return mat8, mat4c, to_oct


def random_elements(n: int, seed: int = 0) -> dict[str, np.ndarray]:
    rng = np.random.default_rng(seed)
    q = rng.normal(size=(n, 2, 4))
    q /= np.linalg.norm(q, axis=2, keepdims=True)
    mat8, mat4c, to_oct = _linear_images()
    octs = q.reshape(n, 8) @ to_oct
    return {
        "quatpair": q,
        "mat8": np.einsum("nk,kij->nij", octs, mat8),
        "mat4c": np.einsum("nk,kij->nij", octs, mat4c),
        "oct": octs,
    }


_FOLD = {"mat8": "fold_mat8", "mat4c": "fold_mat4c", "quatpair": "fold_quatpair"}


def _time(fn, data, repeats: int) -> tuple[float, object]:
    times, out = [], None
    for _ in range(repeats):
        t0 = time.perf_counter()
        out = fn(data)
        times.append(time.perf_counter() - t0)
    return statistics.median(times), out


def run_bench(encodings=ENCODINGS, n: int = 10 ** 6, repeats: int = 3, seed: int = 0) -> list[dict]:
    """Median ns per composition for every (encoding, backend) pair."""
    data = random_elements(n, seed)
    backends = [("python", _kernels_py)]
    if kernels.compiled is not None:
        backends.insert(0, ("cython", kernels.compiled))
    rows, results = [], {}
    for enc in encodings:
        for name, mod in backends:
            secs, out = _time(getattr(mod, _FOLD[enc]), data[enc], repeats)
            results[(enc, name)] = out
            rows.append({"encoding": enc, "backend": name, "n": n,
                         "ns_per_op": secs * 1e9 / max(n, 1)})
    agree = _cross_check(results)
    for row in rows:
        row["agrees"] = agree
    return rows


def _cross_check(results: dict, tol: float = 1e-6) -> bool:
    """All folds describe the same element: compare through the quaternion pair."""
    mat8, mat4c, to_oct = _linear_images()
    flat8 = mat8.reshape(8, 64)
    flat4 = mat4c.reshape(8, 16)
    octs = []
    for (enc, _), out in results.items():
        if enc == "quatpair":
            octs.append(np.asarray(out).reshape(8) @ to_oct)
        elif enc == "mat8":
            octs.append(np.linalg.lstsq(flat8.T, np.asarray(out).reshape(64), rcond=None)[0])
        else:
            sol = np.linalg.lstsq(flat4.T.astype(np.complex128), np.asarray(out).reshape(16), rcond=None)[0]
            octs.append(sol.real)
    scale = max(1.0, max(np.abs(o).max() for o in octs))
    return all(np.allclose(o, octs[0], atol=tol * scale) for o in octs)


def format_rows(rows: list[dict]) -> str:
    lines = [f"{'encoding':9} {'backend':7} {'n':>9} {'ns/op':>10}"]
    for r in rows:
        lines.append(f"{r['encoding']:9} {r['backend']:7} {r['n']:>9} {r['ns_per_op']:>10.1f}")
    if rows:
        lines.append("folds agree: " + ("yes" if rows[0]["agrees"] else "NO"))
    return "\n".join(lines)
