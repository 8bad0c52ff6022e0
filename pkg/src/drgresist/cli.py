"""Command-line front end.

    drgresist resist   --family biggs_smith --format json --exact
    drgresist resist   --array '{"b":[1],"c":[1]}'
    drgresist spectral --family hypercube --param d=3
    drgresist verify   --family hypercube --param d=4
    drgresist walk     --family cycle --param N=6 --walks 100000 --seed 1 --source 0/1
    drgresist families

Exit status: 0 success, 1 bad input, 2 verification mismatch.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .core import IntersectionArray
from .errors import DRGError
from .families import FamilySpec, family_array, list_families
from .oracle import (
    EXPLICIT_FAMILIES,
    MAX_ORACLE_ORDER,
    build_graph,
    mc_commute_time,
    oracle_resistance,
    stratify,
    verify_distance_regular,
)
from .orthopoly import resistance_spectral, spectral_data
from .resistance import resistance_table

EXIT_OK, EXIT_INPUT, EXIT_MISMATCH = 0, 1, 2
SPECTRAL_TOL = 1e-9


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _parse_params(items) -> dict[str, int]:
    params = {}
    for item in items or []:
        key, sep, value = item.partition("=")
        if not sep or not key:
            raise UsageError(f"--param expects key=value, got {item!r}")
        try:
            params[key.strip()] = int(value)
        except ValueError:
            raise UsageError(f"--param {key} must be an integer, got {value!r}") from None
    return params


def _resolve(args) -> tuple[IntersectionArray, FamilySpec | None]:
    if (args.family is None) == (args.array is None):
        raise UsageError("give exactly one of --family or --array")
    if args.family is not None:
        spec = FamilySpec(args.family, _parse_params(args.param))
        return family_array(spec), spec
    if args.param:
        raise UsageError("--param only applies with --family")
    try:
        obj = json.loads(args.array)
    except json.JSONDecodeError as exc:
        raise UsageError(f"--array is not valid JSON: {exc}") from None
    return IntersectionArray.from_json(obj), None


def _fmt_float(x: float) -> str:
    return f"{x:.15g}"


def _cmd_resist(args) -> int:
    arr, _ = _resolve(args)
    table = resistance_table(arr)
    if args.format == "json":
        print(json.dumps(table.to_json(exact=args.exact)))
    elif args.format == "csv":
        sys.stdout.write(table.to_csv())
    else:
        sys.stdout.write(table.to_text(exact=args.exact))
    return EXIT_OK


def _cmd_spectral(args) -> int:
    arr, _ = _resolve(args)
    sd = spectral_data(arr)
    if args.format == "json":
        print(json.dumps(sd.to_json()))
    elif args.format == "csv":
        print("l,eigenvalue,mass,multiplicity")
        for l, row in enumerate(zip(sd.eigenvalues, sd.masses, sd.multiplicities)):
            print(f"{l}," + ",".join(repr(v) for v in row))
    else:
        print(f"array {arr}  N={arr.N}")
        print(f"{'l':>3}  {'eigenvalue':>22}  {'mass':>22}  {'multiplicity':>22}")
        for l, (x, b, m) in enumerate(zip(sd.eigenvalues, sd.masses, sd.multiplicities)):
            print(f"{l:>3}  {_fmt_float(x):>22}  {_fmt_float(b):>22}  {_fmt_float(m):>22}")
    return EXIT_OK


def verify_report(arr: IntersectionArray, spec: FamilySpec | None) -> tuple[dict, bool]:
    """Cross-check the recursion for one array; returns (report, all_ok)."""
    table = resistance_table(arr)
    report: dict = {
        "family": spec.to_json() if spec else None,
        "array": {"b": list(arr.b), "c": list(arr.c)},
    }
    mismatches = []
    if spec is not None and spec.name in EXPLICIT_FAMILIES and arr.N <= MAX_ORACLE_ORDER:
        g = build_graph(spec)
        recovered = verify_distance_regular(g)
        if recovered != arr:
            mismatches.append({"kind": "array", "expected": str(arr), "recovered": str(recovered)})
        strata = stratify(g, 0)
        report["strata_sizes"] = list(strata.sizes())
        if list(strata.sizes()) != list(arr.kappa):
            mismatches.append({"kind": "strata", "expected": list(arr.kappa), "found": list(strata.sizes())})
        for m, layer in enumerate(strata.strata[1:], start=1):
            for beta in sorted(layer):
                r = oracle_resistance(g, 0, beta)
                if r != table.R[m - 1]:
                    mismatches.append({"kind": "resistance", "m": m, "beta": beta,
                                       "oracle": str(r), "recursion": str(table.R[m - 1])})
        report["method"] = "exact oracle"
        report["oracle_vs_recursion"] = "exact-match" if not mismatches else mismatches
    else:
        sd = spectral_data(arr)
        report["strata_sizes"] = list(arr.kappa)
        for m in range(1, arr.d + 1):
            s = resistance_spectral(arr, m, sd)
            if abs(s - float(table.R[m - 1])) >= SPECTRAL_TOL:
                mismatches.append({"kind": "resistance", "m": m, "spectral": s,
                                   "recursion": str(table.R[m - 1])})
        report["method"] = "spectral"
        report["oracle_vs_recursion"] = "spectral-match" if not mismatches else mismatches
    return report, not mismatches


def _cmd_verify(args) -> int:
    arr, spec = _resolve(args)
    report, ok = verify_report(arr, spec)
    if args.format == "json":
        print(json.dumps(report))
    else:
        print(f"array {arr}  N={arr.N}  method={report['method']}")
        print(f"strata sizes {report['strata_sizes']}")
        status = report["oracle_vs_recursion"]
        print(status if ok else "MISMATCH:\n" + "\n".join(json.dumps(x) for x in status))
    return EXIT_OK if ok else EXIT_MISMATCH


def _parse_source(text: str | None, g) -> tuple[int, int]:
    if text is None:
        return 0, g.neighbors[0][0]
    a, sep, b = text.partition("/")
    try:
        alpha, beta = int(a), int(b)
    except ValueError:
        raise UsageError(f"--source expects alpha/beta vertex indices, got {text!r}") from None
    if not sep or not (0 <= alpha < g.N and 0 <= beta < g.N) or alpha == beta:
        raise UsageError(f"--source needs two distinct indices in 0..{g.N - 1}")
    return alpha, beta


def _cmd_walk(args) -> int:
    if args.family is None:
        raise UsageError("walk needs --family (one of %s)" % ", ".join(EXPLICIT_FAMILIES))
    arr, spec = _resolve(args)
    g = build_graph(spec)
    alpha, beta = _parse_source(args.source, g)
    m = stratify(g, alpha).distance(beta)
    analytic = arr.N * arr.valency * resistance_table(arr).R[m - 1]
    seed = 0 if args.seed is None else args.seed
    walks = 10_000 if args.walks is None else args.walks
    if walks < 1:
        raise UsageError("--walks must be >= 1")
    mean, stderr = mc_commute_time(g, alpha, beta, walks, seed)
    out = {
        "family": spec.to_json(),
        "alpha": alpha,
        "beta": beta,
        "stratum": m,
        "walks": walks,
        "seed": seed,
        "mean": mean,
        "stderr": stderr,
        "analytic": {"num": str(analytic.numerator), "den": str(analytic.denominator), "value": float(analytic)},
    }
    if args.format == "json":
        print(json.dumps(out))
    else:
        print(f"{spec.label()}  alpha={alpha} beta={beta} (stratum {m})  walks={walks} seed={seed}")
        print(f"monte carlo  {_fmt_float(mean)} +/- {_fmt_float(stderr)}")
        print(f"N*kappa*R    {analytic} = {_fmt_float(float(analytic))}")
    return EXIT_OK


def _cmd_families(args) -> int:
    infos = list_families()
    if args.format == "json":
        print(json.dumps([
            {"name": f.name, "params": list(f.params), "domain": f.domain, "array": f.array,
             "order": f.order, **({"N": f.fixed_order} if f.fixed_order else {})}
            for f in infos
        ]))
    else:
        for f in infos:
            params = " ".join(f.params) or "-"
            print(f"{f.name:<14} params: {params:<20} domain: {f.domain}")
            print(f"{'':<14} array: {f.array}   N = {f.order}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="drgresist", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    def add_input(p):
        p.add_argument("--family", help="named family, see `drgresist families`")
        p.add_argument("--param", action="append", metavar="KEY=VALUE", help="family parameter (repeatable)")
        p.add_argument("--array", help='raw array JSON, e.g. \'{"b":[3,2,1],"c":[1,2,3]}\'')
        p.add_argument("--format", choices=("table", "json", "csv"), default="table")

    p = sub.add_parser("resist", help="per-stratum resistance table")
    add_input(p)
    p.add_argument("--exact", action="store_true", help="render rationals instead of floats")
    p.set_defaults(func=_cmd_resist)

    p = sub.add_parser("spectral", help="eigenvalues, masses and multiplicities")
    add_input(p)
    p.set_defaults(func=_cmd_spectral)

    p = sub.add_parser("verify", help="cross-check the recursion against an independent path")
    add_input(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("walk", help="Monte Carlo commute time vs N*kappa*R")
    add_input(p)
    p.add_argument("--seed", type=int)
    p.add_argument("--walks", type=int)
    p.add_argument("--source", metavar="ALPHA/BETA", help="vertex indices, default 0 and its first neighbour")
    p.set_defaults(func=_cmd_walk)

    p = sub.add_parser("families", help="list supported families")
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.set_defaults(func=_cmd_families)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError("missing subcommand")
        return args.func(args)
    except UsageError as exc:
        print(f"drgresist: error: {exc}", file=sys.stderr)
        print(parser.format_usage().rstrip(), file=sys.stderr)
        return EXIT_INPUT
    except DRGError as exc:
        print(f"drgresist: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
