"""Command-line front end.

Subcommands: compute, tau, check, scan, verify, regen-tables, lucas, curves.
Exit codes: 0 success / all checks pass, 1 check failure or violation found,
2 usage error, 3 factoring budget exceeded.  Long-running commands report
progress on stderr; stdout stays machine-parseable (and byte-deterministic
in JSON mode).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, fields
from pathlib import Path

from .arith import DEFAULT_MR_ROUNDS, FactorizationBudgetExceeded, Factorizer
from .congruence import SCOPE_PRIMES, regenerate_survivors, survivor_set_from_triples
from .curves import CurveForm, CurveSpec, scan_prime_points
from .exclusion import Target, decide
from .lucas import LucasParams, lucas_u, rank_of_apparition
from .tau import (
    TauTable,
    _trial_factor,
    compute_tau_table,
    load_tau_table,
    save_tau_table,
    tau_prime_power,
)
from .verify import (
    scan_for_value,
    scan_two_times_prime,
    verify_deligne,
    verify_hecke,
    verify_multiplicativity,
    verify_omega_inequality,
    verify_parity,
)

CONFIG_ENV = "EVENTAU_CONFIG"

_PROGRESS_THRESHOLD = 20_000


@dataclass
class Config:
    table_path: str | None = None
    default_bound: int = 1000
    factor_budget: int = 200_000
    mr_rounds: int = DEFAULT_MR_ROUNDS


def load_config() -> Config:
    path = os.environ.get(CONFIG_ENV)
    if not path:
        return Config()
    data = json.loads(Path(path).read_text(encoding="utf-8"))
    known = {f.name for f in fields(Config)}
    cfg = Config(**{k: v for k, v in data.items() if k in known})
    for name in ("default_bound", "factor_budget", "mr_rounds"):
        if getattr(cfg, name) < 1:
            raise ValueError(f"config field {name} must be positive")
    return cfg


def _progress(done: int, total: int) -> None:
    print(f"convolution pass {done}/{total}", file=sys.stderr)


def _build_table(bound: int) -> TauTable:
    callback = _progress if bound >= _PROGRESS_THRESHOLD else None
    return compute_tau_table(bound, progress=callback)


def _resolve_table(args: argparse.Namespace, cfg: Config, bound: int) -> TauTable:
    path = getattr(args, "table", None) or cfg.table_path
    if path and Path(path).exists():
        table = load_tau_table(path)
        if table.max_n >= bound:
            return table
        print(f"table {path} stops at {table.max_n} < {bound}; recomputing", file=sys.stderr)
    return _build_table(bound)


def cmd_compute(args, cfg: Config) -> int:
    table = _build_table(args.max)
    save_tau_table(table, args.out)
    print(f"wrote {args.out} (max={table.max_n})")
    return 0


def cmd_tau(args, cfg: Config) -> int:
    n = args.n
    if n < 1:
        print("error: --n must be >= 1", file=sys.stderr)
        return 2
    path = args.table or cfg.table_path
    if path and Path(path).exists():
        table = load_tau_table(path)
        if table.max_n >= n:
            print(table[n])
            return 0
    if n == 1:
        print(1)
        return 0
    # only tau at the primes of n is needed; prime powers come from the recursion
    factors = _trial_factor(n)
    table = _resolve_table(args, cfg, max(factors))
    result = 1
    for p, e in factors.items():
        result *= tau_prime_power(table[p], p, e)
    print(result)
    return 0


def cmd_check(args, cfg: Config) -> int:
    sign = 1 if args.sign == "+" else -1
    try:
        target = Target(sign=sign, ell=args.ell, j=args.j)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    verdict = decide(target)
    if args.json:
        print(json.dumps(verdict.to_dict(), sort_keys=True))
    else:
        print(f"{verdict.outcome.value}: {args.sign}2*{args.ell}^{args.j} = {verdict.target.value}")
        for step in verdict.trace:
            print(f"  [{'pass' if step.ok else 'FAIL'}] {step.step}: {step.cite}")
    return 0 if verdict.excluded else 1


def cmd_scan(args, cfg: Config) -> int:
    table = _resolve_table(args, cfg, args.bound or cfg.default_bound)
    if args.value is not None:
        hits = scan_for_value(table, args.value)
        if args.json:
            print(json.dumps({"value": str(args.value), "bound": table.max_n, "hits": hits},
                             sort_keys=True))
        else:
            for n in hits:
                print(n)
            print(f"{len(hits)} hit(s) up to {table.max_n}", file=sys.stderr)
        return 0
    report = scan_two_times_prime(table, cfg.mr_rounds)
    if args.json:
        payload = {
            "bound": report.bound,
            "hits": [[n, str(v), tag] for n, v, tag in report.hits],
            "violations": [[n, str(v), tag] for n, v, tag in report.violations],
        }
        print(json.dumps(payload, sort_keys=True))
    else:
        for n, v, tag in report.hits:
            print(f"{n}\t{v}\t{tag}")
        print(f"{len(report.hits)} hit(s), {len(report.violations)} violation(s) "
              f"up to {report.bound}", file=sys.stderr)
    return 0 if report.ok else 1


_STRUCTURAL = (
    ("hecke", verify_hecke),
    ("multiplicativity", verify_multiplicativity),
    ("deligne", verify_deligne),
)


def cmd_verify(args, cfg: Config) -> int:
    bound = args.bound or cfg.default_bound
    table = _resolve_table(args, cfg, bound)
    reports = []
    if args.suite in ("parity", "all"):
        reports.append(("parity", verify_parity(table)))
    if args.suite in ("hecke", "all"):
        reports.extend((name, fn(table)) for name, fn in _STRUCTURAL)
    if args.suite in ("omega", "all"):
        factorizer = Factorizer(rho_iterations=cfg.factor_budget, mr_rounds=cfg.mr_rounds)
        reports.append(("omega", verify_omega_inequality(table, min(bound, table.max_n), factorizer)))
    failed = False
    for name, report in reports:
        status = "OK" if report.ok else "FAIL"
        print(f"{name}: {status} checked={report.checked} hits={len(report.hits)} "
              f"violations={len(report.violations)} skipped={len(report.skipped)}")
        for n, v, tag in report.violations:
            print(f"  violation at n={n}: tau={v} ({tag})")
        failed = failed or not report.ok
    return 1 if failed else 0


def cmd_regen_tables(args, cfg: Config) -> int:
    all_match = True
    for ell in SCOPE_PRIMES:
        for sign, label in ((1, "+"), (-1, "-")):
            published = survivor_set_from_triples(ell, sign)
            regenerated = regenerate_survivors(ell, sign)
            match = published.survivors == regenerated.survivors
            all_match = all_match and match
            print(f"{label}{ell}: published={sorted(published.survivors)} "
                  f"regenerated={sorted(regenerated.survivors)} "
                  f"{'MATCH' if match else 'DIFF'}")
    return 0 if all_match else 1


def cmd_lucas(args, cfg: Config) -> int:
    try:
        params = LucasParams(A=args.A, p=args.p, weight_2k=args.weight)
        if args.n is not None:
            print(lucas_u(params, args.n))
        else:
            rank = rank_of_apparition(params, args.rank)
            print("NONE" if rank is None else rank)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


def cmd_curves(args, cfg: Config) -> int:
    try:
        spec = CurveSpec(form=CurveForm(args.form), exponent=args.exp)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    points = scan_prime_points(spec, args.bound)
    if points:
        for x, y in points:
            print(f"{x} {y}")
    else:
        print(f"NONE up to {args.bound}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eventau",
        description="tau-function tables, Lucas machinery, and even-value exclusion verdicts",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="build a tau table and persist it")
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("tau", help="print tau(n)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--table", help="tau table file to consult first")
    p.set_defaults(func=cmd_tau)

    p = sub.add_parser("check", help="exclusion verdict for sign*2*ell^j")
    p.add_argument("--sign", choices=["+", "-"], required=True)
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("scan", help="search the table for a value or census 2*prime values")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--value", type=int)
    group.add_argument("--form", choices=["2p"])
    p.add_argument("--bound", type=int)
    p.add_argument("--table")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("verify", help="run invariant scans over a table")
    p.add_argument("--suite", choices=["parity", "hecke", "omega", "all"], required=True)
    p.add_argument("--bound", type=int)
    p.add_argument("--table")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("regen-tables", help="diff published progression tables against regeneration")
    p.set_defaults(func=cmd_regen_tables)

    p = sub.add_parser("lucas", help="Lucas sequence values and ranks of apparition")
    p.add_argument("--A", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--weight", type=int, default=12)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--n", type=int)
    group.add_argument("--rank", type=int, metavar="L")
    p.set_defaults(func=cmd_lucas)

    p = sub.add_parser("curves", help="integer-point scans on the defective-case curves")
    p.add_argument("action", choices=["scan"])
    p.add_argument("--form", choices=[f.value for f in CurveForm], required=True)
    p.add_argument("--exp", type=int, default=11)
    p.add_argument("--bound", type=int, default=10 ** 6)
    p.set_defaults(func=cmd_curves)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = load_config()
        return args.func(args, cfg)
    except FactorizationBudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (OSError, json.JSONDecodeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
