"""Command line front end: ``quadufd decide|certify|scan|rabinowitsch|classnumber|normeq|unit``."""

from __future__ import annotations

import argparse
import csv
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from .arith import InvalidDiscriminant, is_valid_discriminant, make_discriminant, render, render_uv
from .forms import class_number, is_fundamental
from .normeq import represents
from .pell import fundamental_unit
from .rabinowitsch import rabinowitsch_check
from .ufd import UfdVerdict, decide_ufd

EXIT_UFD, EXIT_NOT_UFD, EXIT_USAGE, EXIT_MISMATCH = 0, 1, 2, 3

_SAFE_INT = 2**53 - 1


def _num(n):
    if not isinstance(n, int) or isinstance(n, bool) or abs(n) <= _SAFE_INT:
        return n
    return str(n)


def certificate(verdict: UfdVerdict) -> dict:
    """The certificate as a JSON-ready dict with stable field order."""
    return {
        "D": _num(verdict.disc.D),
        "sigma": verdict.disc.sigma,
        "bound": _num(verdict.bound),
        "decision": verdict.decision,
        "witness": _num(verdict.witness),
        "evidence": [
            {
                "p": _num(ev.p),
                "splitting": ev.splitting.kind.value,
                "root": _num(ev.splitting.root),
                "status": ev.status.value,
                "factor": None if ev.factor is None else {"a": _num(ev.factor.a), "b": _num(ev.factor.b)},
            }
            for ev in verdict.evidence
        ],
    }


def _certificate_table(verdict: UfdVerdict) -> str:
    lines = [
        f"D = {verdict.disc.D}  sigma = {verdict.disc.sigma}  bound = {verdict.bound}",
        f"decision: {verdict.decision}"
        + (f"  (witness: irreducible-non-prime {verdict.witness})" if verdict.witness else ""),
    ]
    if verdict.evidence:
        lines.append(f"{'p':>6}  {'splitting':<9}  {'root':>6}  {'status':<20}  factor")
    for ev in verdict.evidence:
        root = "-" if ev.splitting.root is None else str(ev.splitting.root)
        factor = "-" if ev.factor is None else f"{render(ev.factor)} = {render_uv(ev.factor)}"
        lines.append(f"{ev.p:>6}  {ev.splitting.kind.value:<9}  {root:>6}  {ev.status.value:<20}  {factor}")
    return "\n".join(lines)


def _disc_or_exit(D: int):
    try:
        return make_discriminant(D)
    except InvalidDiscriminant as exc:
        print(f"error: invalid discriminant: {exc}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def cmd_decide(args) -> int:
    verdict = decide_ufd(_disc_or_exit(args.D), short_circuit=True)
    if verdict.is_ufd:
        print("UFD")
        return EXIT_UFD
    print(f"NOT_UFD witness={verdict.witness}")
    return EXIT_NOT_UFD


def cmd_certify(args) -> int:
    verdict = decide_ufd(_disc_or_exit(args.D))
    if args.format == "json":
        print(json.dumps(certificate(verdict)))
    else:
        print(_certificate_table(verdict))
    return EXIT_UFD if verdict.is_ufd else EXIT_NOT_UFD


SCAN_FIELDS = ("D", "decision", "bound", "witness", "fundamental", "class_number")


def scan_row(D: int, oracle: bool = False) -> dict:
    verdict = decide_ufd(D, short_circuit=True)
    fundamental = is_fundamental(D)
    row = {
        "D": D,
        "decision": verdict.decision,
        "bound": verdict.bound,
        "witness": verdict.witness,
        "fundamental": fundamental,
        "class_number": class_number(D) if oracle else None,
    }
    if oracle:
        row["mismatch"] = verdict.is_ufd != (fundamental and row["class_number"] == 1)
    return row


def _scan_chunk(args: tuple[list[int], bool]) -> list[dict]:
    Ds, oracle = args
    return [scan_row(D, oracle) for D in Ds]


def scan(lo: int, hi: int, oracle: bool = False, jobs: int = 1):
    """Yield scan rows for every valid discriminant in [lo, hi], in ascending D."""
    Ds = [D for D in range(lo, hi + 1) if is_valid_discriminant(D)]
    if jobs <= 1:
        for D in Ds:
            yield scan_row(D, oracle)
        return
    size = max(1, min(256, len(Ds) // (jobs * 8) or 1))
    chunks = [(Ds[i : i + size], oracle) for i in range(0, len(Ds), size)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        # map() yields results in submission order
        for rows in pool.map(_scan_chunk, chunks):
            yield from rows


def _fmt_csv_value(v):
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    return v


def cmd_scan(args) -> int:
    if args.min > args.max:
        print(f"error: empty range: --min {args.min} > --max {args.max}", file=sys.stderr)
        return EXIT_USAGE
    mismatches = []
    out = sys.stdout
    writer = csv.writer(out, lineterminator="\n")
    if args.format == "csv":
        writer.writerow(SCAN_FIELDS)
    for row in scan(args.min, args.max, args.oracle, args.jobs):
        if row.pop("mismatch", False):
            mismatches.append(row["D"])
        if args.format == "csv":
            writer.writerow([_fmt_csv_value(row[k]) for k in SCAN_FIELDS])
        else:
            out.write(json.dumps({k: _num(row[k]) for k in SCAN_FIELDS}) + "\n")
    out.flush()
    if mismatches:
        print(f"error: theorem/oracle mismatch at D = {mismatches}", file=sys.stderr)
        return EXIT_MISMATCH
    return 0


def cmd_rabinowitsch(args) -> int:
    if args.qmin < 2 or args.qmin > args.qmax:
        print("error: need 2 <= qmin <= qmax", file=sys.stderr)
        return EXIT_USAGE
    status = 0
    for q in range(args.qmin, args.qmax + 1):
        rep = rabinowitsch_check(q)
        line = (
            f"{q} {rep.D} {str(rep.polynomial_side).lower()} {str(rep.ufd_side).lower()} "
            f"{'agree' if rep.agree else 'disagree'}"
        )
        if args.prefix:
            line += f" prefix={rep.prime_prefix}/{q - 1}"
        if args.values:
            line += " values=" + ",".join(map(str, rep.prime_values))
        print(line)
        if not rep.agree:
            status = EXIT_MISMATCH
    return status


def cmd_classnumber(args) -> int:
    _disc_or_exit(args.D)
    print(f"D={args.D} fundamental={str(is_fundamental(args.D)).lower()} h={class_number(args.D)}")
    return 0


def cmd_normeq(args) -> int:
    disc = _disc_or_exit(args.D)
    if args.m == 0:
        print("error: m must be nonzero", file=sys.stderr)
        return EXIT_USAGE
    sol = represents(disc, args.m)
    if sol is None:
        print("none")
        return 1
    print(f"{render(sol.element)} = {render_uv(sol.element)}")
    return 0


def cmd_unit(args) -> int:
    disc = _disc_or_exit(args.D)
    if disc.D < 0:
        print("error: unit needs D > 0", file=sys.stderr)
        return EXIT_USAGE
    fu = fundamental_unit(disc)
    print(f"t={fu.t} u={fu.u} norm={fu.unit_norm} unit={render(fu.element(disc))}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="quadufd", description="Unique factorization in quadratic orders.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decide", help="print UFD or NOT_UFD for one discriminant")
    p.add_argument("D", type=int)
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("certify", help="full per-prime certificate")
    p.add_argument("D", type=int)
    p.add_argument("--format", choices=("json", "table"), default="json")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("scan", help="decide every valid discriminant in a range")
    p.add_argument("--min", type=int, required=True)
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--oracle", action="store_true", help="cross-check against class numbers")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("rabinowitsch", help="prime values of x^2-x+q against UFD verdicts")
    p.add_argument("--qmin", type=int, required=True)
    p.add_argument("--qmax", type=int, required=True)
    p.add_argument("--prefix", action="store_true", help="also report the length of the prime prefix")
    p.add_argument("--values", action="store_true", help="list the prime values")
    p.set_defaults(func=cmd_rabinowitsch)

    p = sub.add_parser("classnumber")
    p.add_argument("D", type=int)
    p.set_defaults(func=cmd_classnumber)

    p = sub.add_parser("normeq", help="find an element of norm m")
    p.add_argument("D", type=int)
    p.add_argument("m", type=int)
    p.set_defaults(func=cmd_normeq)

    p = sub.add_parser("unit", help="fundamental unit of a real order")
    p.add_argument("D", type=int)
    p.set_defaults(func=cmd_unit)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
