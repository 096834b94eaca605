"""Command line front end.

Every command honors --format text|csv|json.  JSON payloads carry all numbers
as decimal strings so arbitrary precision survives any consumer.  Exit codes:
0 ok, 1 usage, 2 domain error, 3 verification failure, 4 resource cap.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction

from .core import (
    DomainError,
    InvariantViolation,
    ResourceLimitError,
    brute_force_split,
    gamma,
    solve_split,
)
from .density import DENSITY_CSV_HEADER, build_density_sequence, trace_rows, trace_to_json, verify_growth_bounds
from .explorer import (
    SCAN_CSV_HEADER,
    SCAN_METADATA,
    beiter_density,
    nvar_classify,
    record_to_csv_row,
    record_to_json,
    rs_solve,
    run_scan,
    scan_shard,
)
from .periodicity import (
    InconclusiveError,
    fibonacci_period_table,
    gamma_row,
    pisano,
    row_period,
    state_period_mod,
)
from .sequences import fib, fib_square_solution, fib_cube_solution, fib_identity_solution, fiblike_pair
from .sequences import closed_form_mod6_4, format_spec, parse_spec

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2
EXIT_VERIFY = 3
EXIT_RESOURCE = 4


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors; the contract here says 1
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _emit(fmt: str, payload: dict, text_lines: list[str], header=None, rows=None) -> None:
    if fmt == "json":
        print(json.dumps(payload, indent=2))
    elif fmt == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        if header:
            writer.writerow(header)
        for row in rows or []:
            writer.writerow(row)
    else:
        for line in text_lines:
            print(line)


def _yn(flag: bool) -> str:
    return "yes" if flag else "no"


# ---------------- Command handlers ----------------


def _cmd_gamma(args) -> int:
    g = gamma(args.a, args.b)
    payload = {"command": "gamma", "a": str(args.a), "b": str(args.b), "gamma": str(g)}
    _emit(args.format, payload, [str(g)], ("a", "b", "gamma"), [(args.a, args.b, g)])
    return EXIT_OK


def _cmd_solve(args) -> int:
    sol = solve_split(args.a, args.b)
    checked = False
    if args.oracle:
        report = brute_force_split(args.a, args.b)
        if sorted(report.counts) != [0, 1]:
            raise InvariantViolation(f"oracle found solution counts {report.counts} for ({args.a}, {args.b})")
        osol = report.solution
        if (osol.delta, osol.x, osol.y) != (sol.delta, sol.x, sol.y):
            raise InvariantViolation(f"oracle disagrees with solver on ({args.a}, {args.b})")
        checked = True
    payload = {
        "command": "solve",
        "a": str(args.a),
        "b": str(args.b),
        "delta": str(sol.delta),
        "x": str(sol.x),
        "y": str(sol.y),
        "oracle_checked": checked,
    }
    text = f"delta={sol.delta} x={sol.x} y={sol.y}" + (" oracle=ok" if checked else "")
    _emit(args.format, payload, [text], ("a", "b", "delta", "x", "y"), [(args.a, args.b, sol.delta, sol.x, sol.y)])
    return EXIT_OK


def _cmd_row(args) -> int:
    spec = parse_spec(args.seq)
    row = gamma_row(args.k, spec, args.start, args.count)
    payload = {
        "command": "row",
        "k": str(args.k),
        "seq": format_spec(spec),
        "start": str(args.start),
        "bits": [str(b) for b in row.bits],
    }
    rows = [(args.start + j, bit) for j, bit in enumerate(row.bits)]
    _emit(args.format, payload, [" ".join(str(b) for b in row.bits)], ("n", "bit"), rows)
    return EXIT_OK


def _cmd_period(args) -> int:
    spec = parse_spec(args.seq)
    rep = row_period(args.k, spec, args.window, args.min_repeats)
    try:
        sp = state_period_mod(spec, 2 * args.k)
    except DomainError:
        sp = None
    payload = {
        "command": "period",
        "k": str(args.k),
        "seq": format_spec(spec),
        "preperiod": str(rep.preperiod),
        "period": str(rep.period),
        "zeros": str(rep.zeros),
        "ones": str(rep.ones),
        "certified": rep.certified,
        "verified_repeats": str(rep.verified_repeats),
        "residue_preperiod": None if sp is None else str(sp.preperiod),
        "residue_period": None if sp is None else str(sp.period),
    }
    text = (
        f"period={rep.period} preperiod={rep.preperiod} zeros={rep.zeros} ones={rep.ones}"
        f" certified={_yn(rep.certified)} verified_repeats={rep.verified_repeats}"
    )
    if sp is not None:
        text += f" residue_period={sp.period} residue_preperiod={sp.preperiod}"
    header = (
        "k",
        "seq",
        "preperiod",
        "period",
        "zeros",
        "ones",
        "certified",
        "verified_repeats",
        "residue_preperiod",
        "residue_period",
    )
    row = (
        args.k,
        format_spec(spec),
        rep.preperiod,
        rep.period,
        rep.zeros,
        rep.ones,
        int(rep.certified),
        rep.verified_repeats,
        "" if sp is None else sp.preperiod,
        "" if sp is None else sp.period,
    )
    _emit(args.format, payload, [text], header, [row])
    return EXIT_OK


def _cmd_pisano(args) -> int:
    value = pisano(args.m)
    payload = {"command": "pisano", "m": str(args.m), "pisano": str(value)}
    _emit(args.format, payload, [str(value)], ("m", "pisano"), [(args.m, value)])
    return EXIT_OK


def _cmd_table1(args) -> int:
    rows = fibonacci_period_table(args.kmax)
    payload = {
        "command": "table1",
        "rows": [{"k": str(k), "t_k": str(t), "pi_2k": str(p)} for k, t, p in rows],
    }
    text = ["  k   t_k  pi(2k)"]
    text += [f"{k:>3} {t:>5} {p:>7}" for k, t, p in rows]
    _emit(args.format, payload, text, ("k", "t_k", "pi_2k"), rows)
    return EXIT_OK


def _cmd_density(args) -> int:
    try:
        p = Fraction(args.p)
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"cannot parse target density {args.p!r}") from exc
    trace = build_density_sequence(p, args.n)
    bounds = verify_growth_bounds(trace)
    final = trace.ratios[-1]
    payload = dict(trace_to_json(trace), command="density", growth_bounds_ok=bounds)
    text = [
        f"p={p}",
        f"terms={len(trace.terms)}",
        f"final_ratio={final.numerator}/{final.denominator}",
        f"crossings={len(trace.crossings)}" + (f" last={trace.crossings[-1]}" if trace.crossings else ""),
        f"growth_bounds={_yn(bounds)}",
    ]
    _emit(args.format, payload, text, DENSITY_CSV_HEADER, trace_rows(trace))
    return EXIT_OK


def _verify_items(family: str, lo: int, hi: int):
    if family == "fib":
        for n in range(max(lo, 6), hi + 1):
            if n % 6 in (0, 4):
                sol = fib_identity_solution(n)
                ref = solve_split(fib(n), fib(n + 1))
                yield f"n={n}", sol == ref
    elif family == "fib2":
        for n in range(max(lo, 2), hi + 1):
            if n % 6 in (0, 2, 3, 5):
                sol = fib_square_solution(n)
                ref = solve_split(fib(n) ** 2, fib(n + 1) ** 2)
                yield f"n={n}", sol == ref
    elif family == "fib3":
        for m in range(max(lo, 2), hi + 1):
            sol = fib_cube_solution(m)
            ref = solve_split(fib(2 * m - 1) ** 3, fib(2 * m) ** 3)
            yield f"m={m}", sol == ref
    elif family == "fiblike":
        import math as _math

        for u in range(max(lo, 1), hi + 1):
            for v in range(max(lo, 1), hi + 1):
                if _math.gcd(u, v) != 1:
                    continue
                ok = True
                x, y = u, v
                for n in range(1, 31):
                    pair = fiblike_pair(u, v, n)
                    if pair != (x, y) or _math.gcd(x, y) != 1:
                        ok = False
                        break
                    x, y = y, x + y
                yield f"u={u},v={v}", ok
    elif family == "mod6-4":
        import math as _math

        for u in range(max(lo, 1), hi + 1):
            for v in range(max(lo, 1), hi + 1):
                if _math.gcd(u, v) != 1:
                    continue
                ok = True
                for n in (4, 10, 16, 22):
                    tn, tn1 = fiblike_pair(u, v, n)
                    if closed_form_mod6_4(u, v, n) != solve_split(tn, tn1):
                        ok = False
                        break
                yield f"u={u},v={v}", ok
    else:
        raise DomainError(f"unknown verify family {family!r}")


_VERIFY_DEFAULT_RANGE = {
    "fib": (6, 30),
    "fib2": (2, 30),
    "fib3": (2, 8),
    "fiblike": (1, 8),
    "mod6-4": (1, 8),
}


def _cmd_verify(args) -> int:
    if args.range:
        try:
            lo, _, hi = args.range.partition(":")
            lo, hi = int(lo), int(hi)
        except ValueError as exc:
            raise DomainError(f"range must look like LO:HI, got {args.range!r}") from exc
    else:
        lo, hi = _VERIFY_DEFAULT_RANGE[args.family]
    items = list(_verify_items(args.family, lo, hi))
    failed = [label for label, ok in items if not ok]
    payload = {
        "command": "verify",
        "family": args.family,
        "range": f"{lo}:{hi}",
        "items": [{"item": label, "ok": ok} for label, ok in items],
        "checked": str(len(items)),
        "failed": str(len(failed)),
    }
    text = [("ok " if ok else "FAIL ") + label for label, ok in items]
    text.append(f"checked={len(items)} failed={len(failed)}")
    rows = [(args.family, label, int(ok)) for label, ok in items]
    _emit(args.format, payload, text, ("family", "item", "ok"), rows)
    return EXIT_VERIFY if failed else EXIT_OK


def _cmd_nvar(args) -> int:
    rep = nvar_classify(tuple(args.coeffs), args.cap)
    inst = rep.instance
    payload = {
        "command": "nvar",
        "coeffs": [str(c) for c in inst.coeffs],
        "rhs_numerator": str(inst.rhs_numerator),
        "rhs": None if inst.rhs is None else str(inst.rhs),
        "integral": inst.rhs is not None,
        "counts": [str(c) for c in rep.counts],
        "solvable": [str(i) for i in rep.solvable],
        "exactly_one": rep.exactly_one,
        "setwise_coprime": inst.setwise_coprime,
        "pairwise_coprime": inst.pairwise_coprime,
    }
    text = (
        f"coeffs={','.join(map(str, inst.coeffs))}"
        f" rhs={'none' if inst.rhs is None else inst.rhs}"
        f" counts={','.join(map(str, rep.counts))}"
        f" solvable={','.join(map(str, rep.solvable)) or '-'}"
        f" exactly_one={_yn(rep.exactly_one)}"
        f" setwise={_yn(inst.setwise_coprime)} pairwise={_yn(inst.pairwise_coprime)}"
    )
    header = (
        "coeffs",
        "rhs_numerator",
        "rhs",
        "integral",
        "counts",
        "solvable",
        "exactly_one",
        "setwise_coprime",
        "pairwise_coprime",
    )
    row = (
        ";".join(map(str, inst.coeffs)),
        inst.rhs_numerator,
        "" if inst.rhs is None else inst.rhs,
        int(inst.rhs is not None),
        ";".join(map(str, rep.counts)),
        ";".join(map(str, rep.solvable)),
        int(rep.exactly_one),
        int(inst.setwise_coprime),
        int(inst.pairwise_coprime),
    )
    _emit(args.format, payload, [text], header, [row])
    return EXIT_OK


def _cmd_rs(args) -> int:
    rec = rs_solve(args.a, args.b, args.r, args.s, args.cap)
    payload = dict(record_to_json(rec), command="rs")
    text = (
        f"a={rec.a} b={rec.b} r={rec.r} s={rec.s}"
        f" rhs={'none' if rec.rhs is None else rec.rhs} integral={_yn(rec.integral)}"
        f" solvable_i0={_yn(rec.solvable_i0)} solvable_i1={_yn(rec.solvable_i1)}"
        f" exactly_one={_yn(rec.exactly_one)}"
    )
    _emit(args.format, payload, [text], SCAN_CSV_HEADER, [record_to_csv_row(rec)])
    return EXIT_OK


def _cmd_beiter_scan(args) -> int:
    if args.resume and not args.out:
        raise DomainError("--resume needs --out")
    if args.out:
        fmt = "jsonl" if args.format == "json" else "csv"
        summary = run_scan(args.r, args.s, args.xmax, args.out, fmt, args.resume, args.jobs, args.cap)
        dens = summary["density"]
        payload = {
            "command": "beiter-scan",
            "r": str(summary["r"]),
            "s": str(summary["s"]),
            "x_max": str(summary["x_max"]),
            "pairs": str(summary["pairs"]),
            "exactly_one": str(summary["exactly_one"]),
            "density_num": str(dens.numerator),
            "density_den": str(dens.denominator),
            "out": str(args.out),
            "metadata": summary["metadata"],
        }
        text = [
            f"pairs={summary['pairs']} exactly_one={summary['exactly_one']}"
            f" density={dens.numerator}/{dens.denominator}",
            f"written={args.out}",
        ]
        header = ("r", "s", "x_max", "pairs", "exactly_one", "density_num", "density_den")
        row = (args.r, args.s, args.xmax, summary["pairs"], summary["exactly_one"], dens.numerator, dens.denominator)
        _emit(args.format, payload, text, header, [row])
        return EXIT_OK
    records = [rec for a in range(1, args.xmax + 1) for rec in scan_shard(a, args.r, args.s, args.xmax, args.cap)]
    hits = sum(rec.exactly_one for rec in records)
    dens = Fraction(hits, len(records))
    if args.format == "json":
        payload = {
            "command": "beiter-scan",
            "r": str(args.r),
            "s": str(args.s),
            "x_max": str(args.xmax),
            "pairs": str(len(records)),
            "exactly_one": str(hits),
            "density_num": str(dens.numerator),
            "density_den": str(dens.denominator),
            "metadata": dict(SCAN_METADATA),
            "records": [record_to_json(rec) for rec in records],
        }
        _emit("json", payload, [])
    elif args.format == "csv":
        _emit("csv", {}, [], SCAN_CSV_HEADER, [record_to_csv_row(rec) for rec in records])
    else:
        _emit(
            "text",
            {},
            [f"pairs={len(records)} exactly_one={hits} density={dens.numerator}/{dens.denominator}"],
        )
    return EXIT_OK


# ---------------- Parser ----------------


def build_parser() -> argparse.ArgumentParser:
    fmt_parent = argparse.ArgumentParser(add_help=False)
    fmt_parent.add_argument("--format", choices=("text", "csv", "json"), default="text")

    parser = _Parser(prog="splitgamma", description="Split-equation classifier, solver and explorer.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gamma", parents=[fmt_parent], help="which equation of the pair is solvable")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.set_defaults(func=_cmd_gamma)

    p = sub.add_parser("solve", parents=[fmt_parent], help="the unique nonnegative witness")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("--oracle", action="store_true", help="cross-check against brute-force enumeration")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("row", parents=[fmt_parent], help="classifier bits along a sequence")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--seq", required=True)
    p.add_argument("--start", type=int, default=1)
    p.add_argument("--count", type=int, required=True)
    p.set_defaults(func=_cmd_row)

    p = sub.add_parser("period", parents=[fmt_parent], help="eventual period of a classifier row")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--seq", required=True)
    p.add_argument("--window", type=int, default=None)
    p.add_argument("--min-repeats", type=int, default=3)
    p.set_defaults(func=_cmd_period)

    p = sub.add_parser("pisano", parents=[fmt_parent], help="Fibonacci period modulo m")
    p.add_argument("m", type=int)
    p.set_defaults(func=_cmd_pisano)

    p = sub.add_parser("table1", parents=[fmt_parent], help="row periods against Fibonacci for k = 1..kmax")
    p.add_argument("--kmax", type=int, default=10)
    p.set_defaults(func=_cmd_table1)

    p = sub.add_parser("density", parents=[fmt_parent], help="greedy chain hitting a target zero-bit density")
    p.add_argument("--p", required=True, help="target density, e.g. 1/2")
    p.add_argument("--n", type=int, required=True, help="number of steps")
    p.set_defaults(func=_cmd_density)

    p = sub.add_parser("verify", parents=[fmt_parent], help="closed-form witnesses against the solver")
    p.add_argument("--family", choices=("fib", "fib2", "fib3", "fiblike", "mod6-4"), required=True)
    p.add_argument("--range", default=None, help="LO:HI, meaning depends on the family")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("nvar", parents=[fmt_parent], help="solution counts for an n-variable instance")
    p.add_argument("coeffs", type=int, nargs="+")
    p.add_argument("--cap", type=int, default=1_000_000)
    p.set_defaults(func=_cmd_nvar)

    p = sub.add_parser("rs", parents=[fmt_parent], help="solvability with a shifted right-hand side")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--s", type=int, default=1)
    p.add_argument("--cap", type=int, default=1_000_000)
    p.set_defaults(func=_cmd_rs)

    p = sub.add_parser("beiter-scan", parents=[fmt_parent], help="scan coprime pairs for exactly-one solvability")
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--s", type=int, default=1)
    p.add_argument("--xmax", type=int, required=True)
    p.add_argument("--out", default=None, help="stream records to this file (csv, or json lines with --format json)")
    p.add_argument("--resume", action="store_true", help="continue from the checkpoint next to --out")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--cap", type=int, default=1_000_000)
    p.set_defaults(func=_cmd_beiter_scan)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except InconclusiveError as exc:
        print(f"inconclusive: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except InvariantViolation as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except ResourceLimitError as exc:
        print(f"resource cap: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
