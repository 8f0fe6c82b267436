"""Command-line surface: gen / verify / reconcile / eval / bench.

Complex scalars on the command line are written ``re[+im i]`` with
decimal or rational (``3/7``) components, e.g. ``--p 1/2+1/3i``.  Exit
codes: 0 success, 1 verification failure, 2 usage error, 3 invalid
parameters.
"""

from __future__ import annotations

import argparse
import json
import sys

import gmpy2

from .analysis import bench, direct_value, evaluate, safe_radius
from .core import ALL_FAMILIES, FamilyId, make_params, validate
from .errors import EvaluationError, ValidationError
from .formats import (
    scalar_to_json,
    sequence_to_csv,
    sequence_to_json_text,
)
from .numerics import mpfr_to_decimal, precision
from .recurrence import generate
from .verify import (
    Reconciliation,
    cross_identities,
    default_test_params,
    reconcile,
    verify_all,
)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_INVALID_PARAMS = 3


def _add_param_args(sub, need_z=False):
    sub.add_argument("--family", required=True, help="e.g. exp-J, power-I, arccos-J")
    sub.add_argument("--nu", required=True, help="order, re[+im i]")
    sub.add_argument("--p", default="0", help="factor parameter, re[+im i]")
    sub.add_argument("--theta", default=None, help="binomial parameter (power family)")
    sub.add_argument("--precision", type=int, default=128, help="mantissa bits")
    sub.add_argument("--exact", action="store_true", help="exact Gaussian-rational mode")
    if need_z:
        sub.add_argument("--z", required=True, help="evaluation point, re[+im i]")


def _params_from_args(args):
    return make_params(
        nu=args.nu,
        p=args.p,
        theta=args.theta,
        precision_bits=args.precision,
        exact=getattr(args, "exact", False),
    )


def _emit(text: str, out_path):
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")


def _recon_to_json(r: Reconciliation) -> dict:
    return {
        "family": r.family.name,
        "status": r.status,
        "offset": None if r.offset is None else str(r.offset),
        "term_index": r.term_index,
        "shift": r.shift,
        "evidence": r.evidence,
        "notes": list(r.notes),
    }


def _report_to_json(rep) -> dict:
    return {
        "family": rep.family.name if rep.family else None,
        "max_index": rep.max_index,
        "exact_match": rep.exact_match,
        "max_rel_err": rep.max_rel_err,
        "first_divergence": rep.first_divergence,
        "notes": list(rep.notes),
    }


def cmd_gen(args) -> int:
    family = FamilyId.parse(args.family)
    params = _params_from_args(args)
    validate(params, family)
    seq = generate(family, params, args.N)
    if args.format == "csv":
        _emit(sequence_to_csv(seq), args.out)
    else:
        _emit(sequence_to_json_text(seq), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    families = ALL_FAMILIES if args.family is None else [FamilyId.parse(args.family)]
    reports, recons, ok = verify_all(
        families,
        N=args.max_n,
        exact=args.exact,
        tol=args.tol,
        precision_bits=args.precision,
    )
    identity_reports = []
    for params in default_test_params(exact=args.exact, precision_bits=args.precision):
        rep = cross_identities(params, N=args.max_n, tol=args.tol)
        identity_reports.append(rep)
        if not rep.ok:
            ok = False
    payload = {
        "ok": ok,
        "reports": [_report_to_json(r) for r in reports],
        "reconciliations": [_recon_to_json(r) for r in recons.values()],
        "cross_identities": [_report_to_json(r) for r in identity_reports],
    }
    _emit(json.dumps(payload, indent=2), args.out)
    return EXIT_OK if ok else EXIT_VERIFY_FAILED


def cmd_reconcile(args) -> int:
    families = ALL_FAMILIES if args.family is None else [FamilyId.parse(args.family)]
    payload = [_recon_to_json(reconcile(f)) for f in families]
    _emit(json.dumps(payload, indent=2), args.out)
    return EXIT_OK


def cmd_eval(args) -> int:
    family = FamilyId.parse(args.family)
    params = _params_from_args(args)
    validate(params, family)
    seq = generate(family, params, args.N)
    with precision(params.precision_bits):
        from .numerics import parse_scalar

        z = parse_scalar(args.z, False, params.precision_bits)
        if family.h_kind == "power" and not args.unsafe_disc:
            radius = safe_radius(family, params)
            if abs(z) > radius:
                raise EvaluationError(
                    f"|z| = {abs(z)} beyond the default safety disc "
                    f"(radius {radius}); pass --unsafe-disc to evaluate anyway"
                )
        res = evaluate(seq, z)
        ref = direct_value(family, params, z, terms=args.terms)
        residual = abs(res.value - ref)
        scale = max(gmpy2.mpfr(1), abs(ref))
    payload = {
        "family": family.name,
        "z": scalar_to_json(res.z, False),
        "value": scalar_to_json(res.value, False),
        "truncation_index": res.truncation_index,
        "tail_estimate": res.tail_estimate,
        "direct_value": scalar_to_json(ref, False),
        "residual": mpfr_to_decimal(residual),
        "relative_residual": mpfr_to_decimal(residual / scale),
        "source": seq.source,
    }
    _emit(json.dumps(payload, indent=2), args.out)
    return EXIT_OK


def cmd_bench(args) -> int:
    family = FamilyId.parse(args.family)
    params = _params_from_args(args)
    sizes = [int(s) for s in args.sizes.split(",")]
    result = bench(family, params, sizes)
    payload = {
        "family": result.family.name,
        "sizes": list(result.sizes),
        "recurrence_ns": list(result.recurrence_ns),
        "convolution_ns": list(result.convolution_ns),
        "fitted_exponents": {
            "recurrence": result.fitted_exponents[0],
            "convolution": result.fitted_exponents[1],
        },
    }
    _emit(json.dumps(payload, indent=2), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="besselprod",
        description="Maclaurin coefficients of elementary x Bessel products "
        "by verified recurrences, with an exact convolution oracle",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    g = subs.add_parser("gen", help="emit a coefficient table")
    _add_param_args(g)
    g.add_argument("-N", type=int, required=True, help="highest index")
    g.add_argument("--format", choices=("json", "csv"), default="json")
    g.add_argument("--out", default=None)
    g.set_defaults(fn=cmd_gen)

    v = subs.add_parser("verify", help="oracle comparison for families")
    v.add_argument("--family", default=None)
    v.add_argument("--all", action="store_true", help="verify every family (default)")
    v.add_argument("--max-n", type=int, default=40)
    v.add_argument("--tol", type=float, default=1e-25)
    v.add_argument("--exact", action="store_true")
    v.add_argument("--precision", type=int, default=128)
    v.add_argument("--out", default=None)
    v.set_defaults(fn=cmd_verify)

    r = subs.add_parser("reconcile", help="adjudicate published tables")
    r.add_argument("--family", default=None)
    r.add_argument("--all", action="store_true")
    r.add_argument("--out", default=None)
    r.set_defaults(fn=cmd_reconcile)

    e = subs.add_parser("eval", help="evaluate a truncated expansion")
    _add_param_args(e, need_z=True)
    e.add_argument("-N", type=int, default=60)
    e.add_argument("--terms", type=int, default=80, help="terms in the reference sum")
    e.add_argument("--unsafe-disc", action="store_true")
    e.add_argument("--out", default=None)
    e.set_defaults(fn=cmd_eval)

    b = subs.add_parser("bench", help="recurrence vs convolution scaling")
    b.add_argument("--family", default="exp-J")
    b.add_argument("--nu", default="1/3")
    b.add_argument("--p", default="2")
    b.add_argument("--theta", default=None)
    b.add_argument("--precision", type=int, default=128)
    b.add_argument(
        "--sizes", default="1024,2048,4096,8192,16384",
        help="comma-separated strictly increasing N values",
    )
    b.add_argument("--out", default=None)
    b.set_defaults(fn=cmd_bench)
    return parser


def cli_main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except ValidationError as exc:
        print(f"invalid parameters: {exc}", file=sys.stderr)
        return EXIT_INVALID_PARAMS
    except (EvaluationError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main():
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
