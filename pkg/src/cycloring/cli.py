"""Command-line front end.

Subcommands: cyclo, reduce, matrix, scaled-inv, expansion, sweep, verify.
Coefficient I/O is degree-ascending everywhere. Exit codes: 0 success,
1 failed check, 2 usage error, 3 unsupported modulus.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import expansion as expansion_mod
from . import scaled_inverse as sinv
from . import verify as verify_mod
from .cyclotomic import make_modulus, monomial_diff, reduce, reduction_matrix
from .errors import (BadRange, CycloringError, InexactDivision, NotApplicable,
                     OutOfRange, UnsupportedModulus, ZeroElement,
                     ZeroPolynomial)
from .poly import IntPoly


def _parse_coeffs(text: str) -> IntPoly:
    try:
        return IntPoly(int(tok) for tok in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(
            f"--poly wants comma-separated integers: {exc}") from None


def _print_json(obj):
    print(json.dumps(obj, indent=2))


def _cmd_cyclo(args) -> int:
    m = make_modulus(args.M)
    coeffs = list(m.poly.coeffs)
    if args.format == "coeffs":
        print(",".join(str(c) for c in coeffs))
    elif args.format == "pretty":
        print(m.poly)
    else:
        _print_json({"M": m.M, "phi": m.phi, "coeffs": coeffs})
    return 0


def _cmd_reduce(args) -> int:
    m = make_modulus(args.M)
    r = reduce(args.poly, m)
    if args.format == "coeffs":
        print(",".join(str(c) for c in r.coeffs))
    elif args.format == "pretty":
        print(r)
    else:
        _print_json({"M": m.M, "phi": m.phi, "coeffs": list(r.coeffs)})
    return 0


def _cmd_matrix(args) -> int:
    m = make_modulus(args.M)
    R = reduction_matrix(m)
    if args.format == "csv":
        print(R.to_csv())
    elif args.format == "json":
        _print_json(R.to_json_obj())
    else:
        cuts = set()
        if args.blocks and R.blocks is not None:
            cuts = {R.blocks.b1[0], R.blocks.b2[0], R.blocks.b3[0]}
        width = max(len(str(int(v))) for row in R.entries for v in row)
        for row in R.entries:
            cells = []
            for jcol, v in enumerate(row):
                if jcol in cuts:
                    cells.append("|")
                cells.append(f"{int(v):>{width}}")
            print(" ".join(cells))
    return 0


def _inverse_obj(m, si) -> dict:
    return {
        "M": m.M,
        "phi": m.phi,
        "coeffs": list(si.u.coeffs),
        "scale": si.scale,
        "norm": si.norm,
        "bound": si.bound,
        "case": si.case.value,
    }


def _print_inverse(m, si, as_json):
    if as_json:
        _print_json(_inverse_obj(m, si))
    else:
        print(f"u = {si.u}")
        print(f"coeffs: {','.join(str(c) for c in si.u.coeffs)}")
        print(f"scale: {si.scale}  max-norm: {si.norm}  case: {si.case.value}")


def _cmd_scaled_inv(args) -> int:
    m = make_modulus(args.M)
    as_json = args.format == "json"
    if args.method in ("construct", "both"):
        con = sinv.construct_scaled_inverse(args.i, args.j, m)
    if args.method in ("bezout", "both"):
        gen = sinv.generic_scaled_inverse(monomial_diff(args.i, args.j, m))
    if args.method == "construct":
        _print_inverse(m, con, as_json)
        return 0
    if args.method == "bezout":
        _print_inverse(m, gen, as_json)
        return 0
    ratio, agree = None, False
    if con.scale % gen.scale == 0:
        ratio = con.scale // gen.scale
        agree = con.u == ratio * gen.u
    if as_json:
        _print_json({"M": m.M, "i": args.i, "j": args.j,
                     "construct": _inverse_obj(m, con),
                     "bezout": _inverse_obj(m, gen),
                     "agree": agree})
    else:
        _print_inverse(m, con, False)
        print(f"bezout scale: {gen.scale}  max-norm: {gen.norm}")
        print(f"agree: {'true' if agree else 'false'}")
    return 0 if agree else 1


def _cmd_expansion(args) -> int:
    m = make_modulus(args.M)
    if args.k is not None:
        factor, witness = expansion_mod.monomial_expansion_factor(args.k, m)
        if args.format == "json":
            _print_json({"M": m.M, "k": args.k % m.M, "factor": factor,
                         "witness_g": list(witness.coeffs)})
        else:
            print(f"k = {args.k % m.M}: factor {factor}, witness g = {witness}")
        return 0
    report = expansion_mod.max_expansion_factor(m)
    if args.format == "json":
        _print_json({"M": m.M, "per_k": list(report.per_k),
                     "max_factor": report.max_factor,
                     "witness_k": report.witness_k,
                     "witness_g": list(report.witness_g.coeffs)})
    else:
        print(f"max factor: {report.max_factor} at k = {report.witness_k}")
        print(f"witness g = {report.witness_g}")
        print("per-k:", ",".join(str(v) for v in report.per_k))
    return 0


def _cmd_sweep(args) -> int:
    m = make_modulus(args.M)
    profile = sinv.norm_profile(m)
    case_max = {case.value: {"norm": norm, "i": i, "j": j}
                for case, (norm, i, j) in profile.case_max.items()}
    if args.format == "json":
        _print_json({
            "M": m.M,
            "rows": [[r.i, r.j, r.scale, r.norm, r.case.value]
                     for r in profile.rows],
            "case_max": case_max,
            "flagged": [[r.i, r.j, r.scale, r.norm, r.case.value]
                        for r in profile.flagged],
        })
    else:
        print("i,j,scale,norm,case")
        for r in profile.rows:
            print(f"{r.i},{r.j},{r.scale},{r.norm},{r.case.value}")
        for case, info in sorted(case_max.items()):
            print(f"# max {case}: norm {info['norm']} at "
                  f"(i,j)=({info['i']},{info['j']})", file=sys.stderr)
    return 0


def _cmd_verify(args) -> int:
    report = verify_mod.run_verify(args.M, suite=args.suite,
                                   trials=args.trials, seed=args.seed)
    if args.format == "json":
        _print_json(report.to_json_obj())
    else:
        for suite in report.suites:
            for check in suite.checks:
                status = "pass" if check.passed else "FAIL"
                line = f"[{suite.name}] {check.name}: {status}"
                if check.witness:
                    line += f"  ({check.witness})"
                print(line)
            print(f"[{suite.name}] completed in {suite.seconds:.2f}s",
                  file=sys.stderr)
        print(f"total: {report.passed} passed, {report.failed} failed")
    return 0 if report.all_passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cycloring",
        description="Exact computations in Z[x]/Phi_M(x) for M = p^s or "
                    "p^s q^t: cyclotomic polynomials, reduction matrices, "
                    "scaled inverses of x^i - x^j, expansion factors, and a "
                    "verification suite.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cyclo", help="print Phi_M")
    p.add_argument("M", type=int)
    p.add_argument("--format", choices=("coeffs", "pretty", "json"),
                   default="coeffs")
    p.set_defaults(fn=_cmd_cyclo)

    p = sub.add_parser("reduce", help="reduce a polynomial mod Phi_M")
    p.add_argument("M", type=int)
    p.add_argument("--poly", type=_parse_coeffs, required=True,
                   metavar="c0,c1,...")
    p.add_argument("--format", choices=("coeffs", "pretty", "json"),
                   default="coeffs")
    p.set_defaults(fn=_cmd_reduce)

    p = sub.add_parser("matrix", help="print the reduction matrix R_M")
    p.add_argument("M", type=int)
    p.add_argument("--format", choices=("pretty", "csv", "json"),
                   default="pretty")
    p.add_argument("--blocks", action="store_true",
                   help="annotate the I|B1|B2|B3 column blocks when defined")
    p.set_defaults(fn=_cmd_matrix)

    p = sub.add_parser("scaled-inv",
                       help="scaled inverse of x^i - x^j mod Phi_M")
    p.add_argument("M", type=int)
    p.add_argument("i", type=int)
    p.add_argument("j", type=int)
    p.add_argument("--method", choices=("construct", "bezout", "both"),
                   default="construct")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(fn=_cmd_scaled_inv)

    p = sub.add_parser("expansion", help="expansion factors of x^k")
    p.add_argument("M", type=int)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(fn=_cmd_expansion)

    p = sub.add_parser("sweep",
                       help="norm profile of all scaled inverses (i, j)")
    p.add_argument("M", type=int)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(fn=_cmd_sweep)

    p = sub.add_parser("verify", help="run the verification suites")
    p.add_argument("M", type=int)
    p.add_argument("--suite",
                   choices=("all",) + verify_mod.SUITE_NAMES, default="all")
    p.add_argument("--trials", type=int, default=verify_mod.DEFAULT_TRIALS)
    p.add_argument("--seed", type=int, default=verify_mod.DEFAULT_SEED)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(fn=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except UnsupportedModulus as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (BadRange, OutOfRange, NotApplicable, ZeroElement, ZeroPolynomial,
            InexactDivision) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except CycloringError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
