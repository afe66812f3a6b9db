"""Registered identities, the per-variant check suites and the audit of printed formulas.

Every identity is a pair of sides evaluated on argument tuples. Multilinear
identities are swept over basis tuples, which settles them completely;
the rest use seeded random rationals. A failing entry keeps its first
counterexample in a form that :func:`replay` can parse back.
"""

from __future__ import annotations

import dataclasses
import itertools
import operator
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Iterable

from . import emfield, iso, lie, manifold, reps
from .linalg import Matrix, det
from .octo import Oct, template_star
from .report import FAIL, PASS, Entry, VerificationReport
from .scalar import Complex, div, format_scalar, parse_list, require_exact
from .vec6 import B1, B2, B3, SPIN4, ProductVariant, Vec6, conj, cross, inner

SCALARS = (Fraction(2), Fraction(-1, 3), Fraction(0), Fraction(7, 5))
RANDOM_CASES = 20


@dataclass(frozen=True)
class Algebra:
    """The four operations an identity may use, bound to one variant (or a mutant)."""

    name: str
    cross: Callable[[Vec6, Vec6], Vec6]
    conj: Callable[[Vec6], Vec6]
    inner: Callable[[Vec6, Vec6], Any]
    star: Callable[[Oct, Oct], Oct]
    variant: ProductVariant | None = None  # None marks substituted operations
    base: ProductVariant = SPIN4

    @classmethod
    def of(cls, v: ProductVariant, *, star=None, bracket=None, name: str | None = None) -> "Algebra":
        return cls(
            name or v.value,
            bracket or (lambda a, b: cross(a, b, v)),
            lambda a: conj(a, v),
            lambda a, b: inner(a, b, v),
            star or (lambda x, y: _star(x, y, v)),
            v if star is None and bracket is None else None,
            v,
        )


def _star(x, y, v):
    from .octo import star
    return star(x, y, v)


# ---------------------------------------------------------------- case generators

def rand_rational(rng: random.Random, span: int = 9) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, span))


def rand_vec6(rng: random.Random) -> Vec6:
    return Vec6(rand_rational(rng) for _ in range(6))


def rand_oct(rng: random.Random) -> Oct:
    return Oct(rand_rational(rng) for _ in range(8))


def _basis6(n):
    return lambda alg, rng: itertools.product(Vec6.basis(), repeat=n)


def _basis8(n):
    return lambda alg, rng: itertools.product(Oct.basis(), repeat=n)


def _random_octs(n, count=RANDOM_CASES):
    return lambda alg, rng: [tuple(rand_oct(rng) for _ in range(n)) for _ in range(count)]


def _single(alg, rng):
    return [()]


# ---------------------------------------------------------------- registry

@dataclass(frozen=True)
class Identity:
    id: str
    kinds: str  # one letter per argument: v Vec6, o Oct, s scalar, f EMField
    sides: Callable[..., tuple]
    cases: Callable[[Algebra, random.Random], Iterable[tuple]]
    show_sides: bool = False  # summary checks report their sides even on PASS
    holds: Callable[[Any, Any], bool] = operator.eq


REGISTRY: dict[str, Identity] = {}


def identity(id: str, kinds: str, cases, show_sides: bool = False):
    def deco(fn):
        REGISTRY[id] = Identity(id, kinds, fn, cases, show_sides)
        return fn
    return deco


def _homogeneity_cases(alg, rng):
    return [(t, a, b) for t in SCALARS for a, b in itertools.product(Vec6.basis(), repeat=2)]


def polarized_basis() -> list[Vec6]:
    """u_i and u_i + u_j (i < j): enough to settle a form that is quadratic in one argument."""
    U = Vec6.basis()
    return U + [U[i] + U[j] for i in range(6) for j in range(i + 1, 6)]


def _self_cases(alg, rng):
    return [(u,) for u in polarized_basis()]


def _quadratic_linear_cases(alg, rng):
    return [(a, b) for a in polarized_basis() for b in Vec6.basis()]


# -- outer products on R^6

@identity("outer.antisymmetry", "vv", _basis6(2))
def _(alg, a, b):
    return alg.cross(a, b), -alg.cross(b, a)


@identity("outer.self_annihilation", "v", _self_cases)
def _(alg, a):
    return alg.cross(a, a), Vec6.zero()


@identity("outer.homogeneity", "svv", _homogeneity_cases)
def _(alg, t, a, b):
    return alg.cross(a * t, b), alg.cross(a, b) * t


@identity("outer.additivity", "vvv", _basis6(3))
def _(alg, a, b, c):
    return alg.cross(a, b + c), alg.cross(a, b) + alg.cross(a, c)


@identity("outer.triple_product", "vvv", _basis6(3))
def _(alg, a, b, c):
    return alg.inner(alg.cross(a, b), c), alg.inner(a, alg.cross(b, c))


@identity("outer.self_orthogonality", "vv", _quadratic_linear_cases)
def _(alg, a, b):
    ab = alg.cross(a, b)
    return alg.inner(ab, a), alg.inner(b, ab)


@identity("outer.self_orthogonality_zero", "vv", _quadratic_linear_cases)
def _(alg, a, b):
    # both sides vanish on their own
    ab = alg.cross(a, b)
    return (alg.inner(ab, a), alg.inner(b, ab)), (0, 0)


@identity("outer.conj_equivariance_right", "vv", _basis6(2))
def _(alg, a, b):
    return alg.conj(alg.cross(a, b)), alg.cross(a, alg.conj(b))


@identity("outer.conj_equivariance_left", "vv", _basis6(2))
def _(alg, a, b):
    return alg.conj(alg.cross(a, b)), alg.cross(alg.conj(a), b)


@identity("conj.symmetric", "vv", _basis6(2))
def _(alg, a, b):
    return alg.inner(a, alg.conj(b)), alg.inner(alg.conj(a), b)


@identity("conj.involution", "v", _basis6(1))
def _(alg, a):
    return alg.conj(alg.conj(a)), a


@identity("conj.isometry", "vv", _basis6(2))
def _(alg, a, b):
    return alg.inner(alg.conj(a), alg.conj(b)), alg.inner(a, b)


@identity("outer.double_cross", "vvv", _basis6(3))
def _(alg, a, b, c):
    ab, bb = alg.conj(a), alg.conj(b)
    rhs = b * alg.inner(c, a) - a * alg.inner(c, b) + bb * alg.inner(c, ab) - ab * alg.inner(c, bb)
    return alg.cross(alg.cross(a, b), c), rhs


@identity("outer.jacobi", "vvv", _basis6(3))
def _(alg, a, b, c):
    return lie.jacobi_defect(a, b, c, alg.cross), Vec6.zero()


@identity("outer.jacobi_rearranged", "vvv", _basis6(3))
def _(alg, p, q, r):
    x = alg.cross
    return x(x(p, q), r) - x(p, x(q, r)), -x(x(r, p), q)


@identity("outer.conj_triple", "vvv", _basis6(3))
def _(alg, p, q, r):
    return alg.inner(alg.cross(p, q), alg.conj(r)), alg.inner(alg.cross(p, alg.conj(q)), r)


@identity("lie.ad_invariance", "vvv", _basis6(3))
def _(alg, a, b, c):
    x = alg.cross
    return lie.killing_form(x(a, b), c, x) + lie.killing_form(b, x(a, c), x), 0


@identity("lie.killing_symmetric", "", _single)
def _(alg):
    K = lie.killing_matrix(alg.cross)
    return K, K.T


@identity("lie.killing_signature", "", _single, show_sides=True)
def _(alg):
    sig = lie.killing_signature(alg.cross)
    want = lie.EXPECTED_SIGNATURE[alg.base]
    return str(sig.triple()), str(want)


# -- star products on R^8

@identity("star.identity", "o", _basis8(1))
def _(alg, x):
    e0 = Oct.unit(0)
    return (alg.star(e0, x), alg.star(x, e0)), (x, x)


@identity("star.associativity", "ooo", _basis8(3))
def _(alg, x, y, z):
    s = alg.star
    return s(s(x, y), z), s(x, s(y, z))


@identity("star.bilinearity", "ooo", _random_octs(3, 10))
def _(alg, x, y, z):
    s, a, b = alg.star, Fraction(3, 7), Fraction(-5, 2)
    return ((s(x, y * a + z * b), s(y * a + z * b, x)),
            (s(x, y) * a + s(x, z) * b, s(y, x) * a + s(z, x) * b))


@identity("star.bracket_agreement", "vv", _basis6(2))
def _(alg, p, q):
    zero = Fraction(0)
    prod = alg.star(Oct.assemble(zero, zero, p), Oct.assemble(zero, zero, q))
    return prod.vector_part, alg.cross(p, q)


def _rep(alg: Algebra, a: Oct) -> Matrix:
    return Matrix(alg.star(e, a).c for e in Oct.basis())


@identity("rep.homomorphism", "oo", _basis8(2))
def _(alg, a, b):
    return _rep(alg, alg.star(a, b)), _rep(alg, a) @ _rep(alg, b)


@identity("rep.printed_agreement", "o", _basis8(1))
def _(alg, a):
    return reps.rep_matrix(a, alg.variant, reps.PRINTED), _rep(alg, a)


@identity("rep.complex_block_structure", "o", _random_octs(1, 50))
def _(alg, a):
    A = reps.rep_matrix(a, SPIN4)
    U, V = A.block(0, 4, 0, 4), A.block(0, 4, 4, 8)
    return (A.block(4, 8, 4, 8), A.block(4, 8, 0, 4)), (U, -V)


@identity("rep.complex_printed_agreement", "o", _basis8(1))
def _(alg, a):
    return reps.complex_rep(a), reps.printed_complex_rep(a)


@identity("rep.complex_homomorphism", "oo", _basis8(2))
def _(alg, a, b):
    return reps.complex_rep(alg.star(a, b)), reps.complex_rep(a) @ reps.complex_rep(b)


@identity("det.factorization", "o", _random_octs(1))
def _(alg, a):
    n1, n2 = reps.norm_factors(a)
    return det(reps.rep_matrix(a, SPIN4)), n1 * n1 * n2 * n2


@identity("det.quadratic_identity", "o", _random_octs(1))
def _(alg, a):
    q1, q2 = iso.to_quat_pair(a)
    return reps.quadratic_form(a, reps.GroupTag.G_SPIN4), div(q2.norm2() - q1.norm2(), 4)


@identity("iso.quat_pair_roundtrip", "o", lambda alg, rng: [(e,) for e in Oct.basis()] + [(rand_oct(rng),)])
def _(alg, a):
    return iso.from_quat_pair(*iso.to_quat_pair(a)), a


@identity("iso.quat_pair_types", "", _single, show_sides=True)
def _(alg):
    got = iso.multiplicativity_type("quat_pair", alg.star)
    return ",".join(map(str, got)), "HOM,ANTIHOM"


@identity("iso.rep_types", "", _single, show_sides=True)
def _(alg):
    got = iso.multiplicativity_type(lambda x: _rep(alg, x), alg.star)
    return ",".join(map(str, got)), "HOM"


@identity("iso.identity_types", "", _single, show_sides=True)
def _(alg):
    got = iso.multiplicativity_type("identity", alg.star)
    return ",".join(map(str, got)), "HOM"


def _group_samples(n):
    return lambda alg, rng: [(reps.sample_group_element(reps.GroupTag.G_SPIN4, rng.randrange(2 ** 32)),)
                             for _ in range(n)]


@identity("group.membership", "o", _group_samples(10))
def _(alg, a):
    return (det(reps.rep_matrix(a, SPIN4)), reps.quadratic_form(a)), (1, 0)


def _group_pairs(alg, rng):
    draw = lambda: reps.sample_group_element(reps.GroupTag.G_SPIN4, rng.randrange(2 ** 32))  # noqa: E731
    return [(draw(), draw()) for _ in range(5)]


@identity("group.closure", "oo", _group_pairs)
def _(alg, a, b):
    return reps.is_group_member(alg.star(a, b)), True


# -- audits of printed formulas

@identity("audit.star.compact_e0_sign", "oo", _basis8(2))
def _(alg, x, y):
    return template_star(x, y, SPIN4, a1b1_sign=-1), alg.star(x, y)


@identity("audit.star.compact_associativity", "ooo", _basis8(3))
def _(alg, x, y, z):
    s = lambda p, q: template_star(p, q, SPIN4, a1b1_sign=-1)  # noqa: E731
    return s(s(x, y), z), s(x, s(y, z))


@identity("audit.star.literal_b0_term", "oo", _basis8(2))
def _(alg, x, y):
    return template_star(x, y, alg.variant, literal_b0=True), alg.star(x, y)


@identity("audit.rep.printed_vs_derived", "o", _basis8(1))
def _(alg, a):
    return reps.rep_matrix(a, alg.variant, reps.PRINTED), reps.rep_matrix(a, alg.variant, reps.DERIVED)


@identity("audit.rep.printed_associativity", "ooo", _basis8(3))
def _(alg, x, y, z):
    s = reps.printed_product(alg.variant)
    return s(s(x, y), z), s(x, s(y, z))


@identity("audit.rep.printed_identity", "o", _basis8(1))
def _(alg, x):
    s, e0 = reps.printed_product(alg.variant), Oct.unit(0)
    return (s(e0, x), s(x, e0)), (x, x)


def _map_audit(map_name: str, printed: bool):
    def sides(alg):
        prod = reps.printed_product(alg.variant) if printed else alg.star
        got = iso.multiplicativity_type(map_name, prod)
        return ",".join(map(str, got)), "HOM or ANTIHOM per component"
    return sides


def _no_neither(lhs, rhs) -> bool:
    return str(iso.MapType.NEITHER) not in lhs


for _map in ("splitquat_pair", "sl2r_pair", "sl2c"):
    for _printed in (True, False):
        _id = f"audit.iso.{_map}.{'printed' if _printed else 'derived'}"
        REGISTRY[_id] = Identity(_id, "", _map_audit(_map, _printed), _single, True, _no_neither)


@identity("audit.det.printed_factor_line", "o", _random_octs(1))
def _(alg, a):
    n1, n2 = reps.printed_norm_factors(a)
    return det(reps.rep_matrix(a, SPIN4)), n1 * n1 * n2 * n2


def _pullbacks(alg, rng):
    if alg.variant is B1:
        return [(iso.from_sl2r_pair(reps.rational_sl2(rng), reps.rational_sl2(rng)),) for _ in range(5)]
    return [(iso.from_sl2c(reps.rational_sl2(rng, "complex")),) for _ in range(5)]


@identity("audit.group.pullback_membership", "o", _pullbacks)
def _(alg, a):
    # run on b1 for G1 and on b2 for G2, with the printed matrices
    G = reps.GroupTag.G1 if alg.variant is B1 else reps.GroupTag.G2
    return (det(reps.rep_matrix(a, alg.variant, reps.PRINTED)), reps.quadratic_form(a, G)), (1, 0)


@identity("audit.manifold.preimage_value", "v", lambda alg, rng: [(Vec6.unit(0),)])
def _(alg, x):
    # u1 lies on M; the printed preimage value is (0, 0)
    return manifold.defining_map(x), (0, 0)


def _basis_fields(alg, rng):
    out = []
    for k in range(8):
        vals = [Fraction(int(i == k)) for i in range(8)]
        out.append((emfield.EMField(tuple(vals[0:3]), tuple(vals[3:6]), vals[6], vals[7]),))
    return out


@identity("audit.em.field_antisymmetry", "f", _basis_fields)
def _(alg, f):
    F = emfield.field_matrix(f)
    return F, -F.T


@identity("audit.em.spin_matrix_entry", "f", _basis_fields)
def _(alg, f):
    return emfield.spin_field_matrix(f), emfield.spin_field_matrix_corrected(f)


# ---------------------------------------------------------------- running

SUITE_COMMON = [
    "outer.antisymmetry", "outer.self_annihilation", "outer.homogeneity", "outer.additivity",
    "outer.triple_product", "outer.self_orthogonality", "outer.self_orthogonality_zero",
    "outer.conj_equivariance_right", "outer.conj_equivariance_left", "conj.symmetric",
    "conj.involution", "conj.isometry", "outer.double_cross", "outer.jacobi",
    "outer.jacobi_rearranged", "outer.conj_triple", "lie.ad_invariance", "lie.killing_symmetric",
    "lie.killing_signature", "star.identity", "star.associativity", "star.bilinearity",
    "star.bracket_agreement", "rep.homomorphism", "iso.identity_types", "iso.rep_types",
]
SUITE_VARIANT_ONLY = ["rep.printed_agreement"]
SUITE_SPIN4 = [
    "rep.complex_block_structure", "rep.complex_printed_agreement", "rep.complex_homomorphism",
    "det.factorization", "det.quadratic_identity", "iso.quat_pair_roundtrip", "iso.quat_pair_types",
    "group.membership", "group.closure",
]
AUDITS_SPIN4 = [
    "audit.star.compact_e0_sign", "audit.star.compact_associativity", "audit.det.printed_factor_line",
    "audit.manifold.preimage_value", "audit.em.field_antisymmetry", "audit.em.spin_matrix_entry",
]
# the split variants run the common suite as audit entries
for _id in SUITE_COMMON:
    REGISTRY["audit." + _id] = dataclasses.replace(REGISTRY[_id], id="audit." + _id)

AUDITS_SPLIT = ["audit." + i for i in SUITE_COMMON] + [
    "audit.star.literal_b0_term", "audit.rep.printed_vs_derived",
    "audit.rep.printed_associativity", "audit.rep.printed_identity",
] + [f"audit.iso.{m}.{s}" for m in ("splitquat_pair", "sl2r_pair", "sl2c") for s in ("printed", "derived")]
AUDITS_GROUPS = ["audit.group.pullback_membership"]


def suite_for(alg: Algebra) -> list[str]:
    ids = list(SUITE_COMMON)
    if alg.variant is not None:
        ids += SUITE_VARIANT_ONLY
    if alg.variant is SPIN4:
        ids += SUITE_SPIN4
    return ids


def _rng(seed: int, identity_id: str, variant: str) -> random.Random:
    return random.Random(f"{seed}:{identity_id}:{variant}")


def run_identity(identity_id: str, alg: Algebra, seed: int = 0) -> Entry:
    ident = REGISTRY[identity_id]
    for args in ident.cases(alg, _rng(seed, identity_id, alg.name)):
        lhs, rhs = ident.sides(alg, *args)
        if not ident.holds(lhs, rhs):
            return Entry(identity_id, alg.name, FAIL, tuple(format_arg(a) for a in args),
                         format_value(lhs), format_value(rhs))
        last = (lhs, rhs)
    if ident.show_sides:
        return Entry(identity_id, alg.name, PASS, None, format_value(last[0]), format_value(last[1]))
    return Entry(identity_id, alg.name, PASS)


def verify_identities(v: ProductVariant = SPIN4, seed: int = 0, *, star=None, bracket=None,
                      name: str | None = None) -> VerificationReport:
    """Run the check suite for ``v``; ``star``/``bracket`` substitute mutated operations."""
    require_exact("identity verification")
    alg = Algebra.of(v, star=star, bracket=bracket, name=name)
    report = VerificationReport(seed=seed)
    for identity_id in suite_for(alg):
        report.add(run_identity(identity_id, alg, seed))
    return report


def audit_report(seed: int = 0) -> VerificationReport:
    """Findings about the printed formulas; never gating."""
    require_exact("audit")
    report = VerificationReport(seed=seed)
    spin4 = Algebra.of(SPIN4)
    for identity_id in AUDITS_SPIN4:
        report.add(run_identity(identity_id, spin4, seed))
    for v in (B1, B2, B3):
        alg = Algebra.of(v)
        for identity_id in AUDITS_SPLIT + (AUDITS_GROUPS if v is not B3 else []):
            report.add(run_identity(identity_id, alg, seed))
    return report


def default_report(seed: int = 0) -> VerificationReport:
    """The so(4) check suite plus the audit of the printed formulas."""
    report = verify_identities(SPIN4, seed)
    report.extend(audit_report(seed))
    return report


# ---------------------------------------------------------------- formatting and replay

def format_arg(a) -> str:
    if isinstance(a, emfield.EMField):
        vals = list(a.E) + list(a.B) + [a.E0, a.B0]
        return ",".join(format_scalar(x) for x in vals)
    if hasattr(a, "format"):
        return a.format()
    return format_scalar(a)


def format_value(x) -> str:
    if isinstance(x, str):
        return x
    if isinstance(x, Matrix):
        return x.to_json()
    if isinstance(x, tuple):
        return "(" + "; ".join(format_value(y) for y in x) + ")"
    if isinstance(x, bool):
        return str(x).lower()
    if hasattr(x, "format") and not isinstance(x, (Fraction, Complex)):
        return x.format()
    return format_scalar(x)


def parse_arg(kind: str, text: str):
    if kind == "v":
        return Vec6.parse(text, exact=True)
    if kind == "o":
        return Oct.parse(text, exact=True)
    if kind == "s":
        return parse_list(text, 1, exact=True)[0]
    if kind == "f":
        return emfield.EMField.parse(text, exact=True)
    raise ValueError(f"unknown argument kind {kind!r}")


def replay(entry: Entry, alg: Algebra | None = None) -> Entry:
    """Re-evaluate a stored counterexample; returns a fresh entry for it."""
    ident = REGISTRY[entry.identity]
    if alg is None:
        alg = Algebra.of(ProductVariant.parse(entry.variant))
    args = [parse_arg(k, t) for k, t in zip(ident.kinds, entry.counterexample or ())]
    lhs, rhs = ident.sides(alg, *args)
    status = PASS if ident.holds(lhs, rhs) else FAIL
    return Entry(entry.identity, alg.name, status, entry.counterexample, format_value(lhs), format_value(rhs))
