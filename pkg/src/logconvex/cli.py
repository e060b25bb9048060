"""Command-line front end.

Exit status: 0 when the command succeeds and any checked property holds,
1 when a property is violated or a certificate fails, 2 for usage errors,
3 for internal consistency failures (oracle mismatch, inexact division,
a certificate that does not re-verify).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from typing import Any, Callable, Optional, Sequence

from . import __version__
from .certify import (
    PatchworkSpec,
    VerificationError,
    alpha_root,
    asymptotic_check_motzkin,
    build_patchwork,
    certify_bounds,
    certify_increasing,
    check_log_behavior,
    interlace_check,
    limit_report,
    series_identity_check,
    surd_in_interval,
    verify_certificate,
)
from .certify.patchwork import PatchworkError
from .exactmath import QuadraticSurd, parse_rational, rational_str, to_decimal_string
from .oracles import (
    BUDGETS,
    BudgetExceeded,
    enum_delannoy,
    enum_dyck,
    enum_motzkin,
    enum_partitions_by_blocks,
    enum_permutations_by_cycles,
    enum_schroeder,
    enum_secondary,
)
from .sequences import (
    NonExactDivision,
    OracleMismatch,
    SequenceTable,
    binomial_row,
    catalan,
    catalan_via_motzkin,
    delannoy,
    legendre_values,
    motzkin_long,
    motzkin_short,
    motzkin_via_catalan,
    narayana,
    narayana_row,
    ratio_sequence,
    schroeder,
    sec_struct_general,
    sec_struct_rank1,
    stirling1_row,
    stirling2_row,
)

EXIT_OK, EXIT_VIOLATED, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _fmt(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (list, tuple)):
        return " ".join(_fmt(x) for x in v)
    if isinstance(v, Fraction):
        return rational_str(v)
    return str(v)


# -- sequence selectors --------------------------------------------------------


def _need_rank(args) -> int:
    if args.rank is None:
        raise UsageError("this sequence needs --rank")
    return args.rank


def _need_t(args) -> Fraction:
    if args.t is None:
        raise UsageError("this sequence needs --t")
    return args.t


# Sequences indexed 0..n.
TABLES: dict[str, Callable[[Any, int], SequenceTable]] = {
    "motzkin": lambda a, n: motzkin_short(n),
    "motzkin-long": lambda a, n: motzkin_long(n),
    "motzkin-binomial": lambda a, n: motzkin_via_catalan(n),
    "catalan": lambda a, n: catalan(n),
    "catalan-via-motzkin": lambda a, n: catalan_via_motzkin(n),
    "rank1": lambda a, n: sec_struct_rank1(n),
    "secondary": lambda a, n: (sec_struct_rank1(n) if _need_rank(a) == 1
                               else sec_struct_general(_need_rank(a), n)),
    "delannoy": lambda a, n: delannoy(n),
    "schroeder": lambda a, n: schroeder(n),
    "legendre": lambda a, n: legendre_values(_need_t(a), n),
}

# Rows of triangles: n selects the row.
ROWS: dict[str, Callable[[int], SequenceTable]] = {
    "binomial": binomial_row,
    "narayana": narayana_row,
    "stirling1": stirling1_row,
    "stirling2": stirling2_row,
}

SEQUENCE_NAMES = sorted(TABLES) + sorted(ROWS)


def _table(args, n: int) -> SequenceTable:
    if args.name in TABLES:
        return TABLES[args.name](args, n)
    return ROWS[args.name](n)


# -- output ------------------------------------------------------------------------


def emit_json(doc: dict) -> str:
    doc = dict(doc)
    doc.setdefault("tool_version", __version__)
    return json.dumps(doc, sort_keys=True, indent=1) + "\n"


def emit_csv(header: Sequence[str], rows: Sequence[Sequence]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([_fmt(v) for v in row])
    return buf.getvalue()


def _table_doc(t: SequenceTable) -> dict:
    return {
        "name": t.name,
        "provenance": t.provenance.value,
        "start_index": t.start_index,
        "values": [_fmt(v) for v in t.values],
    }


# -- commands --------------------------------------------------------------------


def cmd_seq(args) -> tuple[int, str]:
    n = 50 if args.n is None else args.n
    if n < 0:
        raise UsageError("--n must be non-negative")
    t = _table(args, n)
    if args.format == "csv":
        return EXIT_OK, emit_csv(["n", "value"], list(t.items()))
    return EXIT_OK, emit_json(_table_doc(t))


def _oracle_rows(family: str, n: int, rank: Optional[int]):
    """(n, enumeration, recursion) rows; rows are lists for triangle families."""
    if family == "dyck":
        c = catalan(n).values
        for m in range(n + 1):
            count, hist = enum_dyck(m)
            expected = [narayana(m, k) for k in sorted(hist)]
            yield m, [count] + list(hist.values()), [c[m]] + expected
    elif family == "motzkin":
        vals = motzkin_short(n).values
        for m in range(n + 1):
            yield m, enum_motzkin(m), vals[m]
    elif family == "secondary":
        l = 1 if rank is None else rank
        if l == -1:
            vals = catalan(n + 1).values[1:]
        elif l == 1:
            vals = sec_struct_rank1(n).values
        else:
            vals = sec_struct_general(l, n, validate_upto=0).values
        for m in range(n + 1):
            yield m, enum_secondary(l, m), vals[m]
    elif family == "delannoy":
        vals = delannoy(n).values
        for m in range(n + 1):
            yield m, enum_delannoy(m), vals[m]
    elif family == "schroeder":
        vals = schroeder(n, validate_upto=0).values
        for m in range(n + 1):
            yield m, enum_schroeder(m), vals[m]
    elif family == "permutations":
        for m in range(n + 1):
            yield m, enum_permutations_by_cycles(m), list(stirling1_row(m).values)
    elif family == "partitions":
        for m in range(n + 1):
            yield m, enum_partitions_by_blocks(m), list(stirling2_row(m).values)


def cmd_oracle(args) -> tuple[int, str]:
    n = BUDGETS[args.family] if args.n is None else args.n
    rows = []
    for m, got, expected in _oracle_rows(args.family, n, args.rank):
        if got != expected:
            raise OracleMismatch(f"{args.family}: n={m} enumeration {got} != recursion {expected}")
        rows.append((m, got, expected))
    if args.format == "csv":
        flat = [(m, g, e, True) for m, g, e in rows]
        return EXIT_OK, emit_csv(["n", "enumeration", "recursion", "match"], flat)
    doc = {"family": args.family, "rank": args.rank if args.family == "secondary" else None,
           "rows": [{"n": m, "enumeration": g, "recursion": e} for m, g, e in rows],
           "match": True}
    return EXIT_OK, emit_json(doc)


def cmd_check(args) -> tuple[int, str]:
    n = 50 if args.n is None else args.n
    t = _table(args, n)
    report = check_log_behavior(t)
    ok = True
    if args.expect is not None:
        ok = (report.log_convex if args.expect == "log-convex"
              else report.log_concave if args.expect == "log-concave"
              else report.property == args.expect)
    doc = report.to_dict()
    doc["expected"] = args.expect
    doc["holds"] = ok
    if args.format == "csv":
        return (EXIT_OK if ok else EXIT_VIOLATED,
                emit_csv(list(doc), [list(doc.values())]))
    return EXIT_OK if ok else EXIT_VIOLATED, emit_json(doc)


PATCHWORKS = {
    "motzkin-patchwork": "motzkin",
    "rank1-patchwork": "rank1",
    "rank1-literal-patchwork": "rank1-literal",
    "legendre-patchwork": "legendre",
}


def cmd_certify(args) -> tuple[int, str]:
    if args.verify is not None:
        with open(args.verify, encoding="utf-8") as fh:
            doc = json.load(fh)
        verdict = verify_certificate(doc)
        out = {"verified": True, "verdict": verdict, "type": doc.get("type"),
               "patchwork": doc["patchwork"]["kind"]}
        return EXIT_OK if verdict else EXIT_VIOLATED, emit_json(out)
    if args.target is None:
        raise UsageError("certify needs a patchwork name or --verify FILE")
    kind = PATCHWORKS[args.target]
    if kind == "legendre" and args.t is None:
        raise UsageError("legendre-patchwork needs --t")
    spec = PatchworkSpec.by_name(kind, args.t)
    to = 60 if args.to is None else args.to
    p = build_patchwork(spec, to)
    if args.lo is not None or args.hi is not None:
        cert = certify_bounds(p, args.lo, args.hi, from_x=args.from_x, k_max=args.kmax)
    else:
        from_n = None if args.from_x is None else args.from_x
        cert = certify_increasing(p, k_max=args.kmax, strict=args.strict, from_n=from_n,
                                  prefer_k=args.k)
    doc = cert.to_dict()
    # Every emitted certificate is re-checked by the independent verifier.
    if verify_certificate(json.loads(json.dumps(doc))) != cert.verdict:
        raise VerificationError("certificate does not reproduce its verdict")
    status = EXIT_OK if cert.verdict else EXIT_VIOLATED
    if args.format == "csv":
        rows = []
        for r in cert.intervals:
            for key, rec in r.checks:
                rows.append((r.n, rational_str(r.lo), rational_str(r.hi), key, rec.method,
                             rec.k, rec.verdict))
        return status, emit_csv(["n", "lo", "hi", "check", "method", "k", "verdict"], rows)
    return status, json.dumps(doc, sort_keys=True, indent=1) + "\n"


CLOSED_FORMS = {
    0: QuadraticSurd(3),
    1: QuadraticSurd(Fraction(3, 2), Fraction(1, 2), 5),
    2: QuadraticSurd(1, 1, 2),
}


def cmd_alpha(args) -> tuple[int, str]:
    rank = 1 if args.rank is None else args.rank
    if rank < 0:
        raise UsageError("--rank must be non-negative")
    tol = Fraction(1, 10**12) if args.tol is None else args.tol
    if tol <= 0:
        raise UsageError("--tol must be positive")
    lo, hi = alpha_root(rank, tol)
    digits = max(len(str(tol.denominator // max(tol.numerator, 1))), 1)
    doc = {"rank": rank, "tol": rational_str(tol), "lo": rational_str(lo), "hi": rational_str(hi),
           "lo_decimal": to_decimal_string(lo, digits), "hi_decimal": to_decimal_string(hi, digits)}
    ok = True
    if rank in CLOSED_FORMS:
        ok = surd_in_interval(CLOSED_FORMS[rank], (lo, hi))
        doc["closed_form"] = str(CLOSED_FORMS[rank])
        doc["contains_closed_form"] = ok
    status = EXIT_OK if ok else EXIT_VIOLATED
    if args.format == "csv":
        return status, emit_csv(list(doc), [list(doc.values())])
    return status, emit_json(doc)


LIMIT_TARGETS = {
    "motzkin": (motzkin_short, QuadraticSurd(3)),
    "delannoy": (delannoy, QuadraticSurd(3, 2, 2)),
    "rank1": (sec_struct_rank1, QuadraticSurd(Fraction(3, 2), Fraction(1, 2), 5)),
}


def cmd_report(args) -> tuple[int, str]:
    kind, subject = args.kind, args.subject
    if kind == "interlace":
        if subject not in ("motzkin", "rank1"):
            raise UsageError("interlace reports exist for motzkin and rank1")
        n = 1000 if args.n is None else args.n
        table = motzkin_short(n + 1) if subject == "motzkin" else sec_struct_rank1(n + 1)
        rep = interlace_check(ratio_sequence(table), subject, n_to=n)
        doc = {"kind": kind, "subject": subject, "range": [rep.results[0][0], n],
               "holds": rep.holds, "first_failure": rep.first_failure}
        ok = rep.holds
    elif kind == "limit":
        if subject not in LIMIT_TARGETS:
            raise UsageError(f"limit reports exist for {', '.join(sorted(LIMIT_TARGETS))}")
        n = 2000 if args.n is None else args.n
        build, target = LIMIT_TARGETS[subject]
        rep = limit_report(ratio_sequence(build(n)), target, args.tol)
        doc = {"kind": kind, "subject": subject, **rep.to_dict()}
        ok = rep.within_tol is not False
    elif kind == "asymptotic":
        if subject != "motzkin":
            raise UsageError("the asymptotic report exists for motzkin only")
        n = 2000 if args.n is None else args.n
        rep = asymptotic_check_motzkin(motzkin_short(n), n, args.precision)
        doc = {"kind": kind, "subject": subject, **rep.to_dict()}
        ok = True
        if args.tol is not None:
            ok = rep.deviation <= args.tol.numerator / args.tol.denominator
            doc["tol"] = rational_str(args.tol)
        doc["holds"] = ok
    elif kind == "series":
        if subject not in ("motzkin", "delannoy"):
            raise UsageError("series reports exist for motzkin and delannoy")
        order = 50 if args.n is None else args.n
        rep = series_identity_check(f"{subject}_gf", order)
        doc = {"kind": kind, "subject": subject, "order": order, "ok": rep.ok,
               "first_mismatch": rep.first_mismatch}
        ok = rep.ok
    else:  # pragma: no cover - argparse restricts the choices
        raise UsageError(f"unknown report {kind!r}")
    status = EXIT_OK if ok else EXIT_VIOLATED
    if args.format == "csv":
        return status, emit_csv(list(doc), [list(doc.values())])
    return status, emit_json(doc)


COMMANDS = {
    "seq": cmd_seq,
    "oracle": cmd_oracle,
    "check": cmd_check,
    "certify": cmd_certify,
    "alpha": cmd_alpha,
    "report": cmd_report,
}


# -- argument parsing ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"), default="json")
    common.add_argument("--output", "-o", help="write here instead of standard output")

    parser = argparse.ArgumentParser(prog="logconvex", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"logconvex {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("seq", parents=[common], help="compute a sequence or triangle row")
    p.add_argument("name", choices=SEQUENCE_NAMES)
    p.add_argument("--n", type=int, help="largest index, or the row for triangles (default 50)")
    p.add_argument("--rank", type=int)
    p.add_argument("--t", type=_rational)

    p = sub.add_parser("oracle", parents=[common], help="compare enumeration with recursion")
    p.add_argument("family", choices=sorted(BUDGETS))
    p.add_argument("--n", type=int, help="largest size (default: the family budget)")
    p.add_argument("--rank", type=int)

    p = sub.add_parser("check", parents=[common], help="log-convexity / log-concavity verdict")
    p.add_argument("name", choices=SEQUENCE_NAMES)
    p.add_argument("--n", type=int)
    p.add_argument("--rank", type=int)
    p.add_argument("--t", type=_rational)
    p.add_argument("--expect", choices=("log-convex", "log-concave", "log-straight", "neither"))

    p = sub.add_parser("certify", parents=[common], help="patchwork certificates")
    p.add_argument("target", nargs="?", choices=sorted(PATCHWORKS))
    p.add_argument("--to", type=int, help="last interval [to, to+1] (default 60)")
    p.add_argument("--from", dest="from_x", type=_rational, help="start of the certified range")
    p.add_argument("--kmax", type=int, default=8)
    p.add_argument("--k", type=int, help="shift tried first on every interval")
    p.add_argument("--strict", action="store_true", help="require f' > 0, not f' >= 0")
    p.add_argument("--lo", type=_rational, help="certify f >= lo instead of monotonicity")
    p.add_argument("--hi", type=_rational, help="certify f <= hi instead of monotonicity")
    p.add_argument("--t", type=_rational)
    p.add_argument("--verify", metavar="FILE", help="re-check a certificate file")

    p = sub.add_parser("alpha", parents=[common], help="enclose the growth constant alpha_l")
    p.add_argument("--rank", type=int)
    p.add_argument("--tol", type=_rational)

    p = sub.add_parser("report", parents=[common], help="limit, asymptotic, series, interlacing")
    p.add_argument("kind", choices=("interlace", "limit", "asymptotic", "series"))
    p.add_argument("subject")
    p.add_argument("--n", type=int)
    p.add_argument("--tol", type=_rational)
    p.add_argument("--precision", type=int, default=50, help="decimal digits (asymptotic only)")
    return parser


def run(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        status, text = COMMANDS[args.command](args)
    except (UsageError, BudgetExceeded, ValueError) as exc:
        print(f"logconvex: error: {exc}", file=stderr)
        return EXIT_USAGE
    except (OracleMismatch, NonExactDivision, VerificationError, PatchworkError) as exc:
        print(f"logconvex: internal consistency failure: {exc}", file=stderr)
        return EXIT_INTERNAL
    except Exception as exc:  # anything else is a bug, not a verdict
        print(f"logconvex: internal failure: {type(exc).__name__}: {exc}", file=stderr)
        return EXIT_INTERNAL
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return status


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
