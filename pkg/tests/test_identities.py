import random
from fractions import Fraction

import pytest

from spinforge import identities, lie
from spinforge.identities import REGISTRY, Algebra, default_report, replay, run_identity, verify_identities
from spinforge.octo import Oct, product_from_table, basis_table
from spinforge.report import FAIL, PASS
from spinforge.scalar import ExactModeRequired, FLOAT, scalar_mode
from spinforge.vec6 import B1, B2, B3, SPIN4


@pytest.fixture(scope="module")
def spin4_report():
    return verify_identities(SPIN4, seed=42)


def test_spin4_suite_passes(spin4_report):
    assert spin4_report.ok
    assert [e for e in spin4_report.entries if e.status != PASS] == []
    assert len(spin4_report.entries) == len(identities.suite_for(Algebra.of(SPIN4)))


def test_summary_checks_report_their_sides(spin4_report):
    e = spin4_report.get("lie.killing_signature")
    assert e.lhs == e.rhs == "(0, 6, 0)"
    assert spin4_report.get("iso.quat_pair_types").lhs == "HOM,ANTIHOM"


@pytest.mark.parametrize("v", [B1, B2, B3], ids=str)
def test_split_variants_fail_associativity(v):
    r = verify_identities(v, seed=1)
    assert not r.ok
    assert r.get("star.associativity").status == FAIL
    assert r.get("outer.jacobi").status == PASS


def test_verification_refuses_float_mode():
    with scalar_mode(FLOAT):
        with pytest.raises(ExactModeRequired):
            verify_identities(SPIN4)


def _flipped_table_product(i, j):
    table = basis_table(SPIN4)
    table = [list(row) for row in table]
    table[i][j] = -table[i][j]
    return product_from_table(table)


@pytest.mark.parametrize("seed", range(5))
def test_random_table_mutations_are_detected(seed):
    rng = random.Random(seed)
    i, j = rng.randrange(8), rng.randrange(8)
    r = verify_identities(SPIN4, seed, star=_flipped_table_product(i, j), name="spin4-mutant")
    assert not r.ok
    assert r.get("star.associativity").status == FAIL


def test_bracket_mutation_is_detected():
    br = lie.flip_structure_constant(SPIN4, 0, 1, 3)
    r = verify_identities(SPIN4, 0, bracket=br, name="spin4-mutant")
    assert r.get("outer.jacobi").status == FAIL
    assert r.get("lie.killing_signature").status == FAIL


def test_fail_entries_replay_to_the_same_failure():
    r = default_report(42)
    fails = [e for e in r.entries if e.status == FAIL and e.counterexample]
    assert fails
    for e in fails:
        again = replay(e)
        assert again.status == FAIL
        assert (again.lhs, again.rhs) == (e.lhs, e.rhs)


def test_replay_on_mutant():
    prod = _flipped_table_product(2, 3)
    alg = Algebra.of(SPIN4, star=prod, name="spin4-mutant")
    e = run_identity("star.associativity", alg)
    assert e.status == FAIL
    assert replay(e, alg).status == FAIL
    assert replay(e, Algebra.of(SPIN4)).status == PASS


def test_default_report_contents():
    r = default_report(42)
    assert r.ok
    ids = {(e.identity, e.variant) for e in r.entries}
    assert ("audit.star.compact_e0_sign", "spin4") in ids
    for v in ("b1", "b2", "b3"):
        assert r.get("audit.rep.printed_vs_derived", v).status == FAIL
        assert r.get("audit.outer.jacobi", v).status == PASS
        assert r.get("audit.rep.printed_associativity", v).status == PASS
    assert r.get("audit.lie.killing_signature", "b1").lhs == "(4, 2, 0)"
    assert r.get("audit.lie.killing_signature", "b2").lhs == "(3, 3, 0)"


def test_registry_kinds_match_arities():
    for ident in REGISTRY.values():
        alg = Algebra.of(B1 if ident.id.startswith("audit.") else SPIN4)
        args = next(iter(ident.cases(alg, random.Random(0))))
        assert len(args) == len(ident.kinds), ident.id


def test_format_and_parse_args_roundtrip():
    x = Oct.of(1, -2, 0, 3, 0, 0, 0, 1)
    assert identities.parse_arg("o", identities.format_arg(x)) == x
    assert identities.parse_arg("s", identities.format_arg(Fraction(-1, 3))) == Fraction(-1, 3)
