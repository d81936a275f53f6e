"""Command-line interface: ``awdaha verify|eval|reduce|table``."""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from . import ncalg
from . import operators as op
from .coeff import (
    ParamPack, aw3_constants, ext_constants, lambda_n, parse_params, recurrence_coeffs,
)
from .errors import DegenerateParams, NonTermination, NotDivisible
from .laurent import LaurentPoly
from .polyfamilies import FamilyTag, family
from .verify import SUITES, VerifyConfig, run_suite

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 3

DEFAULT_PARAMS = "1/2,2,3,5,7"


@dataclass
class CliConfig:
    params: str = DEFAULT_PARAMS
    N: int = 12
    seed: int = 0
    trials: int = 5
    fmt: str = "json"
    suites: list[str] = field(default_factory=list)

    def pack(self, min_depth: int = 0) -> ParamPack:
        return parse_params(self.params, depth=max(self.N + 4, min_depth))


def _config(args) -> CliConfig:
    return CliConfig(args.params, args.N, args.seed, args.trials, args.format,
                     list(getattr(args, "suite", None) or []))


def _emit(obj) -> None:
    print(json.dumps(obj, separators=(",", ":")))


def _poly_text(f: LaurentPoly) -> str:
    if not f:
        return "0"
    return "\n".join(f"z^{k}\t{v}" for k, v in f.items())


def cmd_verify(args) -> int:
    cfg = _config(args)
    vcfg = VerifyConfig(N=cfg.N, family_max=args.family_max, word_length=args.word_length)
    P = cfg.pack(vcfg.family_max + 1)
    names = cfg.suites or list(SUITES)
    ok = True
    for name in names:
        report = run_suite(name, P, cfg.N, cfg.seed, cfg.trials, vcfg, timing=args.timing)
        ok = ok and report.passed
        if cfg.fmt == "json":
            print(report.to_json())
        else:
            bad = report.failures()
            status = "pass" if not bad else "FAIL"
            print(f"{name:<24} {status}  {len(report.checks) - len(bad)}/{len(report.checks)} checks")
            for c in bad:
                print(f"    {c.name}: {json.dumps(c.detail, separators=(',', ':'))}")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_eval(args) -> int:
    cfg = _config(args)
    tag = FamilyTag.parse(args.family)
    P = cfg.pack(abs(tag.n) + 1)
    f = family(P, tag)
    if args.apply:
        f = op.apply(op.parse_op(args.apply), f, P)
    if cfg.fmt == "json":
        print(f.to_json())
    else:
        print(_poly_text(f))
    return EXIT_OK


def cmd_reduce(args) -> int:
    cfg = _config(args)
    P = cfg.pack()
    alg = ncalg.algebra_id(args.algebra)
    word = ncalg.parse_word(alg, args.word)
    sys_ = ncalg.rewrite_system(alg, P, with_casimir=not args.no_casimir)
    nf = sys_.reduce(ncalg.NCPoly.word(alg, word))
    if cfg.fmt == "json":
        print(nf.to_json())
    elif not nf:
        print("0")
    else:
        for w, c in nf.items():
            print(f"{c}\t{','.join(w) or '1'}")
    return EXIT_OK


def _table_rows(kind: str, P: ParamPack, n_max: int) -> tuple[list[str], list[list[str]]]:
    if kind == "recurrence":
        rows = []
        for n in range(n_max + 1):
            beta, gamma = recurrence_coeffs(P, n)
            rows.append([str(n), str(beta), "" if gamma is None else str(gamma)])
        return ["n", "beta", "gamma"], rows
    if kind == "eigenvalues":
        return ["n", "lambda"], [[str(n), str(lambda_n(P, n))] for n in range(n_max + 1)]
    consts = {**aw3_constants(P)._asdict(), **ext_constants(P)._asdict()}
    return ["name", "value"], [[k, str(v)] for k, v in consts.items()]


def cmd_table(args) -> int:
    cfg = _config(args)
    P = cfg.pack(args.n_max)
    header, rows = _table_rows(args.kind, P, args.n_max)
    if cfg.fmt == "json":
        _emit([dict(zip(header, r)) for r in rows])
    else:
        widths = [max(len(x) for x in col) for col in zip(header, *rows)]
        for r in [header] + rows:
            print("  ".join(x.rjust(w) for x, w in zip(r, widths)).rstrip())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--params", default=DEFAULT_PARAMS,
                        help="s,a,b,c,d as rationals p/q, with q = s^2 (default %(default)s)")
    common.add_argument("--N", type=int, default=12, help="truncation window |k| <= N")
    common.add_argument("--seed", type=int, default=0, help="seed for random trial packs")
    common.add_argument("--trials", type=int, default=5, help="number of random trial packs")
    common.add_argument("--format", choices=("json", "text"), default="json")

    parser = argparse.ArgumentParser(
        prog="awdaha",
        description="Exact verification engine for AW(3), the rank-one DAHA and "
                    "Askey-Wilson polynomials. Parameters are given as s,a,b,c,d "
                    "where q = s^2.")
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", parents=[common], help="run identity suites")
    v.add_argument("--suite", action="append", choices=SUITES,
                   help="suite to run (repeatable; default all)")
    v.add_argument("--family-max", type=int, default=10, help="largest family degree")
    v.add_argument("--word-length", type=int, default=5,
                   help="longest word in the normal-form sweep")
    v.add_argument("--timing", action="store_true",
                   help="record elapsed_ms (reports are then not byte-identical)")
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("eval", parents=[common], help="evaluate a polynomial family")
    e.add_argument("--family", required=True, help="P:n, Q:n, Pdag:n, Qdag:n or E:n")
    e.add_argument("--apply", help='operator expression, e.g. "T1*T0 + (1/4)*Yi"')
    e.set_defaults(func=cmd_eval)

    r = sub.add_parser("reduce", parents=[common], help="normal form of a word")
    r.add_argument("--algebra", required=True, choices=sorted(ncalg.ALGEBRA_ALIASES))
    r.add_argument("--word", required=True, help="comma-separated generators, e.g. K1,K0,K0")
    r.add_argument("--no-casimir", action="store_true",
                   help="drop the Casimir rule (AW(3) and its extension)")
    r.set_defaults(func=cmd_reduce)

    t = sub.add_parser("table", parents=[common], help="tables of scalar constants")
    t.add_argument("kind", choices=("recurrence", "eigenvalues", "constants"))
    t.add_argument("--n-max", type=int, default=10)
    t.set_defaults(func=cmd_table)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DegenerateParams as exc:
        print(f"awdaha: degenerate parameters: {exc.reason}", file=sys.stderr)
        return EXIT_INPUT
    except (NotDivisible, NonTermination) as exc:
        print(f"awdaha: internal fault: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except ValueError as exc:
        print(f"awdaha: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
