"""Command-line entry point.

Exit codes: 0 when every requested check passes (or nothing is checked),
1 when a check fails, 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import os
import re
import sys

from . import bench, emfield, identities, lie, manifold, reps
from .linalg import Matrix
from .octo import Oct, star
from .report import emit_report
from .scalar import EXACT, FLOAT, ExactModeRequired, format_scalar, scalar_mode
from .vec6 import ProductVariant, Vec6, cross

DEFAULT_SEED = 42


class UsageError(Exception):
    pass


def default_seed() -> int:
    text = os.environ.get("SPINFORGE_SEED")
    if text is None:
        return DEFAULT_SEED
    try:
        return int(text)
    except ValueError:
        raise UsageError(f"SPINFORGE_SEED must be an integer, got {text!r}") from None


def _variant(text):
    try:
        return ProductVariant.parse(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def _group(text):
    try:
        return reps.GroupTag.parse(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def _format_matrix(m: Matrix) -> str:
    return "\n".join(",".join(format_scalar(x) for x in row) for row in m.rows)


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--float", action="store_true", help="use floating point instead of exact rationals")

    p = argparse.ArgumentParser(prog="spinforge", description="Outer products on R^6, star products on R^8 and their checks.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("product", parents=[common], help="star product of two octets")
    s.add_argument("--variant", type=_variant, default=ProductVariant.SPIN4)
    s.add_argument("x")
    s.add_argument("y")

    s = sub.add_parser("bracket", parents=[common], help="outer product of two 6-vectors")
    s.add_argument("--variant", type=_variant, default=ProductVariant.SPIN4)
    s.add_argument("a")
    s.add_argument("b")

    s = sub.add_parser("rep", parents=[common], help="8x8 matrix of an octet")
    s.add_argument("--variant", type=_variant, default=ProductVariant.SPIN4)
    s.add_argument("--source", choices=[x.value for x in reps.Source], default="derived")
    s.add_argument("a")

    s = sub.add_parser("member", parents=[common], help="group membership test")
    s.add_argument("--group", type=_group, default=reps.GroupTag.G_SPIN4)
    s.add_argument("--source", choices=[x.value for x in reps.Source],
                   help="matrix family for the determinant (default: derived for spin4, printed for g1/g2)")
    s.add_argument("a")

    s = sub.add_parser("sample", help="sample an exact group element")
    s.add_argument("--group", type=_group, default=reps.GroupTag.G_SPIN4)
    s.add_argument("--seed", type=int)

    m = sub.add_parser("manifold", help="the quadric M in R^6")
    msub = m.add_subparsers(dest="action", required=True)
    s = msub.add_parser("project", parents=[common], help="Newton projection onto M")
    s.add_argument("x")
    s.add_argument("--tol", type=float, default=manifold.RESIDUAL_TOL)
    s.add_argument("--max-iter", type=int, default=manifold.MAX_ITER)
    s = msub.add_parser("sample", parents=[common], help="sample a point of M")
    s.add_argument("--seed", type=int)
    s = msub.add_parser("tangent", parents=[common], help="tangent basis at a point of M")
    s.add_argument("p")
    s = msub.add_parser("j", parents=[common], help="almost complex structure J_p(v)")
    s.add_argument("p")
    s.add_argument("v")

    e = sub.add_parser("em", help="electromagnetic field matrices")
    esub = e.add_subparsers(dest="action", required=True)
    for name, text in (("f", "real 4x4 field matrix"), ("spin", "complex 4x4 matrix"),
                       ("defect", "antisymmetry defect of the field matrix")):
        s = esub.add_parser(name, parents=[common], help=text)
        s.add_argument("field", help="E1,E2,E3,B1,B2,B3[,E0[,B0]]")
        s.add_argument("--corrected", action="store_true", help="use the pattern-corrected reading")

    s = sub.add_parser("verify", help="run the identity checks")
    s.add_argument("--variant", type=_variant, help="gating suite for one variant (default: so(4) suite plus audit)")
    s.add_argument("--seed", type=int)
    s.add_argument("--json", metavar="PATH", help="also write the JSON report to PATH")
    s.add_argument("--format", choices=["json", "text"], default="json")
    s.add_argument("--float", action="store_true", help=argparse.SUPPRESS)

    s = sub.add_parser("repair", help="search sign assignments that make a star product associative")
    s.add_argument("--variant", type=_variant, default=ProductVariant.SPIN4)

    s = sub.add_parser("bench", help="composition timing, compiled vs fallback")
    s.add_argument("--encodings", default=",".join(bench.ENCODINGS))
    s.add_argument("--n", type=int, default=10 ** 6)
    s.add_argument("--repeats", type=int, default=3)
    s.add_argument("--seed", type=int, default=0)

    # Octets like "-1,0,..." would otherwise be taken for options.
    for parser in _all_parsers(p):
        parser._negative_number_matcher = re.compile(r"^-[\d./]")
    return p


def _all_parsers(p):
    yield p
    for action in p._actions:
        if isinstance(action, argparse._SubParsersAction):
            for child in action.choices.values():
                yield from _all_parsers(child)


def _point(text: str, exact: bool) -> manifold.PointOnM:
    x = Vec6.parse(text, exact=exact)
    if exact:
        return manifold.point(x)
    return manifold.point(x, manifold.RESIDUAL_TOL)


def _run(args, out) -> int:
    exact = not getattr(args, "float", False)
    cmd = args.command

    if cmd == "product":
        print(star(Oct.parse(args.x, exact), Oct.parse(args.y, exact), args.variant).format(), file=out)
    elif cmd == "bracket":
        print(cross(Vec6.parse(args.a, exact), Vec6.parse(args.b, exact), args.variant).format(), file=out)
    elif cmd == "rep":
        a = Oct.parse(args.a, exact)
        print(_format_matrix(reps.rep_matrix(a, args.variant, reps.Source(args.source))), file=out)
    elif cmd == "member":
        source = reps.Source(args.source) if args.source else None
        ok = reps.is_group_member(Oct.parse(args.a, exact), args.group, source)
        print("true" if ok else "false", file=out)
        return 0 if ok else 1
    elif cmd == "sample":
        seed = default_seed() if args.seed is None else args.seed
        try:
            a = reps.sample_group_element(args.group, seed)
        except reps.SamplerUnavailable as e:
            print(f"sampler unavailable: {e}", file=sys.stderr)
            return 1
        print(a.format(), file=out)
    elif cmd == "manifold":
        return _run_manifold(args, exact, out)
    elif cmd == "em":
        f = emfield.EMField.parse(args.field, exact)
        if args.action == "f":
            m = emfield.field_matrix_corrected(f) if args.corrected else emfield.field_matrix(f)
            print(_format_matrix(m), file=out)
        elif args.action == "spin":
            print(_format_matrix(emfield.spin_field_matrix(f, corrected=args.corrected)), file=out)
        else:
            m = emfield.field_matrix_corrected(f) if args.corrected else emfield.field_matrix(f)
            sq = emfield.antisymmetry_defect_sq(m)
            print(f"defect={emfield.antisymmetry_defect(m)!r} defect_sq={format_scalar(sq)}", file=out)
    elif cmd == "verify":
        if args.float:
            raise ExactModeRequired("verify runs in exact arithmetic only")
        seed = default_seed() if args.seed is None else args.seed
        if args.variant is None:
            report = identities.default_report(seed)
        else:
            report = identities.verify_identities(args.variant, seed)
        doc = emit_report(report, "json")
        if args.json:
            with open(args.json, "w", encoding="utf-8") as fh:
                fh.write(doc + "\n")
        print(doc if args.format == "json" else emit_report(report, "text").rstrip("\n"), file=out)
        return 0 if report.ok else 1
    elif cmd == "repair":
        found = lie.repair_search(args.variant)
        original = lie.signs_of(args.variant)
        for s in found:
            print(s.format() + ("  (original)" if s == original else ""), file=out)
        if not found:
            print("no associative sign assignment", file=out)
        return 0 if original in found else 1
    elif cmd == "bench":
        encs = [e.strip() for e in args.encodings.split(",") if e.strip()]
        bad = [e for e in encs if e not in bench.ENCODINGS]
        if bad or not encs:
            raise UsageError(f"unknown encodings {bad}; choose from {','.join(bench.ENCODINGS)}")
        if args.n < 1:
            raise UsageError("--n must be positive")
        print(bench.format_rows(bench.run_bench(encs, args.n, args.repeats, args.seed)), file=out)
    return 0


def _run_manifold(args, exact: bool, out) -> int:
    if args.action == "project":
        x = Vec6.parse(args.x, exact=False)
        try:
            p = manifold.project_to_manifold(x, args.tol, args.max_iter)
        except (manifold.NoConvergence, manifold.SingularJacobian) as e:
            print(str(e), file=sys.stderr)
            return 1
        print(f"{p.x.format()}\niterations={p.iterations} residual={p.residual[0]!r},{p.residual[1]!r}", file=out)
    elif args.action == "sample":
        seed = default_seed() if args.seed is None else args.seed
        print(manifold.sample_manifold(seed, exact=exact).x.format(), file=out)
    elif args.action == "tangent":
        for v in manifold.tangent_basis(_point(args.p, exact)):
            print(v.format(), file=out)
    else:
        p = _point(args.p, exact)
        print(manifold.almost_complex_J(p, Vec6.parse(args.v, exact=exact)).format(), file=out)
    return 0


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        mode = FLOAT if getattr(args, "float", False) else EXACT
        with scalar_mode(mode):
            return _run(args, out)
    except (UsageError, ValueError, ExactModeRequired) as e:
        print(f"spinforge: error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
