import os
import subprocess
import sys

import numpy as np
import pytest

from spinforge import _kernels_py, bench, kernels
from spinforge.octo import StarTemplate, structure_tensor
from spinforge.vec6 import B1, B2, B3, SPIN4

from conftest import VARIANTS

compiled = pytest.mark.skipif(kernels.compiled is None, reason="extension not built")


def test_backend_name():
    assert kernels.BACKEND in ("cython", "python")


def test_pure_env_forces_fallback():
    env = dict(os.environ, SPINFORGE_PURE="1")
    out = subprocess.run([sys.executable, "-c", "import spinforge.kernels as k; print(k.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


@pytest.mark.parametrize("v,want", [(SPIN4, 0), (B1, 96), (B2, 132), (B3, 132)], ids=str)
def test_fallback_violation_counts(v, want):
    assert _kernels_py.associativity_violations(structure_tensor(v)) == want


@compiled
@pytest.mark.parametrize("seed", range(6))
def test_compiled_matches_fallback_on_random_tensors(seed):
    rng = np.random.default_rng(seed)
    T = rng.integers(-1, 2, size=(8, 8, 8)).astype(np.int64)
    assert kernels.compiled.associativity_violations(T) == _kernels_py.associativity_violations(T)


@compiled
@pytest.mark.parametrize("v", VARIANTS, ids=str)
def test_compiled_matches_fallback_on_variants(v):
    T = StarTemplate.of(v).tensor()
    assert kernels.compiled.associativity_violations(T) == _kernels_py.associativity_violations(T)


@compiled
@pytest.mark.parametrize("name", ["fold_mat8", "fold_mat4c", "fold_quatpair"])
def test_compiled_folds_match(name):
    data = bench.random_elements(200, seed=3)
    enc = {"fold_mat8": "mat8", "fold_mat4c": "mat4c", "fold_quatpair": "quatpair"}[name]
    a = getattr(kernels.compiled, name)(data[enc])
    b = getattr(_kernels_py, name)(data[enc])
    assert np.allclose(a, b, atol=1e-9)


@compiled
def test_compiled_fold_star_matches():
    T = structure_tensor(SPIN4)
    xs = bench.random_elements(50, seed=4)["oct"]
    assert np.allclose(kernels.compiled.fold_star(T, xs), _kernels_py.fold_star(T, xs), atol=1e-9)


def test_fold_star_agrees_with_mat8():
    data = bench.random_elements(50, seed=5)
    acc = _kernels_py.fold_star(structure_tensor(SPIN4), data["oct"])
    M = _kernels_py.fold_mat8(data["mat8"])
    # the row-vector convention: e0 @ M(a1)...M(an) = a1 * ... * an
    assert np.allclose(acc, M[0], atol=1e-9)


def test_bench_runs_and_cross_checks():
    rows = bench.run_bench(n=500, repeats=1)
    assert {r["encoding"] for r in rows} == set(bench.ENCODINGS)
    assert all(r["agrees"] for r in rows)
    assert all(r["ns_per_op"] > 0 for r in rows)
    assert "folds agree: yes" in bench.format_rows(rows)
