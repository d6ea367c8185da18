"""Command-line surface.

Subcommands replay the elimination ledger, run the order sieve, and
answer exact-arithmetic queries (orders, parabolic indices, involution
class sizes, factorizations).  Structured output is a line-delimited
record stream with a trailing summary record, so long scans stay
streamable.  Exit codes: 0 success, 1 verdict failure, 2 usage error,
3 internal error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from . import __version__, ledger
from .catalog import catalog_records
from .exactmath import Factorization, factorize
from .groups import GroupSpec, parse_group, order, parabolic_index
from .scan import U_CAP, sieve_orders

Q_CAP = 2**10
RANK_CAP = 50


def _fmt_factors(f: Factorization) -> str:
    if not f.factors:
        return "1"
    return " * ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in f.factors)


def _check_caps(spec: GroupSpec) -> GroupSpec:
    if spec.q is not None and spec.q > Q_CAP:
        raise ValueError(f"q = {spec.q} exceeds the cap {Q_CAP}")
    if spec.n is not None and spec.n > RANK_CAP:
        raise ValueError(f"n = {spec.n} exceeds the cap {RANK_CAP}")
    return spec


def _parse_candidates(text: str) -> list[GroupSpec]:
    return [_check_caps(parse_group(part.split()))
            for part in text.split(",") if part.strip()]


def _emit(record: dict) -> None:
    print(json.dumps(record, sort_keys=True))


def _cmd_verify_all(args: argparse.Namespace) -> int:
    if args.u_max is not None and not 1 <= args.u_max <= U_CAP:
        raise ValueError(f"--u-max must be in [1, {U_CAP}]")
    if args.q_max is not None and not 1 <= args.q_max <= Q_CAP:
        raise ValueError(f"--q-max must be in [1, {Q_CAP}]")
    results = ledger.verify_all(jobs=args.jobs, u_max=args.u_max, q_max=args.q_max)
    counts = {"eliminated": 0, "violated": 0, "inconclusive": 0}
    for res in results:
        counts[res.verdict.value] += 1
        if args.format == "structured":
            _emit(ledger.report_record(res))
        else:
            line = f"{res.verdict.value.upper():12s} {res.id:16s} ({res.elapsed_ms:8.1f} ms)"
            if res.bound is not None:
                line += f"  bound={res.bound}"
            print(line)
    ok = ledger.all_eliminated(results)
    if args.format == "structured":
        _emit({"record": "summary", "cases": len(results), "ok": ok, **counts})
    else:
        print(f"{len(results)} cases: {counts['eliminated']} eliminated, "
              f"{counts['violated']} violated, {counts['inconclusive']} inconclusive")
    return 0 if ok else 1


def _cmd_verify(args: argparse.Namespace) -> int:
    res = ledger.replay(args.case_id, bound=args.bound)
    if args.format == "structured":
        _emit(ledger.report_record(res))
    else:
        case = ledger.get_case(args.case_id)
        print(f"{res.id}: {res.verdict.value.upper()}  ({res.elapsed_ms:.1f} ms)")
        print(f"  section:    {case.section}")
        print(f"  claim:      {case.anchor}")
        print(f"  parameters: {case.parameters}")
        if res.bound is not None:
            print(f"  bound:      {res.bound}")
        for w in res.witnesses[:10]:
            print(f"  witness:    {w}")
    return 0 if res.verdict is ledger.Verdict.ELIMINATED else 1


def _cmd_scan(args: argparse.Namespace) -> int:
    candidates = _parse_candidates(args.candidates) if args.candidates else None
    rows = sieve_orders(args.u_min, args.u_max, candidates)
    survivors = 0
    for row in rows:
        survivors += row.survived
        if args.format == "structured":
            _emit({"record": "row", "u": row.u, "v": row.v,
                   "v_factors": [list(pe) for pe in row.v_factors.factors],
                   "filters": [[name, passed] for name, passed in row.filter_trace],
                   "survived": row.survived})
        else:
            trace = " ".join(f"{name}{'+' if passed else '-'}"
                             for name, passed in row.filter_trace)
            tag = "survives" if row.survived else "ELIMINATED"
            print(f"u={row.u} v={row.v}={_fmt_factors(row.v_factors)} [{trace}] {tag}")
    if args.format == "structured":
        _emit({"record": "summary", "rows": len(rows), "survivors": survivors})
    else:
        print(f"{len(rows)} rows, {survivors} survive")
    return 0


def _cmd_order(args: argparse.Namespace) -> int:
    spec = _check_caps(parse_group(args.group))
    value = order(spec)
    print(f"|{spec}| = {value} = {_fmt_factors(factorize(value))}")
    return 0


def _cmd_index(args: argparse.Namespace) -> int:
    spec = _check_caps(parse_group(args.group))
    value = parabolic_index(spec, args.parabolic)
    print(f"[{spec} : P{args.parabolic}] = {value} = {_fmt_factors(factorize(value))}")
    return 0


def _cmd_factor(args: argparse.Namespace) -> int:
    if args.n < 1:
        raise ValueError(f"n must be >= 1, got {args.n}")
    print(f"{args.n} = {_fmt_factors(factorize(args.n))}")
    return 0


def _cmd_catalog(args: argparse.Namespace) -> int:
    records = catalog_records()
    for rec in records:
        if args.format == "structured":
            _emit({"record": "class", **rec})
        else:
            print(f"{rec['label']:18s} {rec['family']:8s} parity={rec['parity']:6s} "
                  f"exact={str(rec['exact']):5s} {rec['anchor']}")
    if args.format == "structured":
        _emit({"record": "summary", "classes": len(records)})
    else:
        print(f"{len(records)} involution classes")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="planesieve",
        description="Exact-integer sieve for transitive group actions on "
                    "projective planes of square order.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify-all", help="replay every registered elimination")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=("text", "structured"), default="text")
    p.add_argument("--u-max", type=int, default=None)
    p.add_argument("--q-max", type=int, default=None)
    p.set_defaults(fn=_cmd_verify_all)

    p = sub.add_parser("verify", help="replay one elimination by id")
    p.add_argument("case_id")
    p.add_argument("--bound", type=int, default=None)
    p.add_argument("--format", choices=("text", "structured"), default="text")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("scan", help="run the order sieve over a u range")
    p.add_argument("--u-min", type=int, required=True)
    p.add_argument("--u-max", type=int, required=True)
    p.add_argument("--candidates", default=None,
                   help='comma-separated group descriptions, e.g. "PSL 2 13,G2 7"')
    p.add_argument("--format", choices=("text", "structured"), default="text")
    p.set_defaults(fn=_cmd_scan)

    p = sub.add_parser("order", help="exact group order")
    p.add_argument("group", nargs="+", metavar="TOKEN")
    p.set_defaults(fn=_cmd_order)

    p = sub.add_parser("index", help="exact parabolic subgroup index")
    p.add_argument("group", nargs="+", metavar="TOKEN")
    p.add_argument("--parabolic", type=int, required=True, metavar="M")
    p.set_defaults(fn=_cmd_index)

    p = sub.add_parser("factor", help="factor an integer")
    p.add_argument("n", type=int)
    p.set_defaults(fn=_cmd_factor)

    p = sub.add_parser("catalog", help="dump the involution class catalog")
    p.add_argument("--format", choices=("text", "structured"), default="text")
    p.set_defaults(fn=_cmd_catalog)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        code = args.fn(args)
        sys.stdout.flush()
        return code
    except (ValueError, KeyError, LookupError) as exc:
        reason = exc.args[0] if exc.args else exc
        print(f"error: {reason}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        # Keep the interpreter from complaining when it flushes the
        # already-closed stream at shutdown.
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return 0
    except Exception as exc:  # pragma: no cover - defensive
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
