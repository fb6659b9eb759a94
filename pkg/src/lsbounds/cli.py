"""Command line interface.

Exit codes: 0 success, 1 computation error (or failed verification /
sweep deviation), 2 usage error.
"""

from __future__ import annotations

import argparse
import contextlib
import dataclasses
import json
import sys
import time
from pathlib import Path

from . import __version__
from .bounds import BoundsReport, SpaceInfo, report
from .document import SCHEMA_VERSION, ReportDocument, render_table
from .errors import LSBoundsError, PresentationError
from .presentation import parse_presentation
from .spaces import cpn_space, fcpn_space, product_space
from .verify import verify_report

EXIT_OK = 0
EXIT_COMPUTATION = 1
EXIT_USAGE = 2

N_LIMIT = 64


class UsageError(Exception):
    pass


def _emit_verification(rep: BoundsReport, err) -> bool:
    ok = True
    for check in verify_report(rep):
        status = "ok" if check.ok else "FAILED"
        detail = f" ({check.detail})" if check.detail else ""
        print(f"verify [{rep.space.name}] {check.name}: {status}{detail}", file=err)
        ok &= check.ok
    return ok


def _check_n(args, name: str = "n") -> None:
    value = getattr(args, name)
    if value < 1:
        raise UsageError(f"--{name.replace('_', '-')} must be >= 1, got {value}")
    if value > N_LIMIT and not args.allow_large:
        raise UsageError(f"--{name.replace('_', '-')} {value} exceeds {N_LIMIT}; "
                         "pass --allow-large to override")


def cmd_fcpn(args, out, err) -> int:
    _check_n(args)
    rep = report(fcpn_space(args.n))
    doc = ReportDocument.from_report(rep)
    print(doc.to_json() if args.format == "json" else render_table(doc), file=out)
    if args.verify and not _emit_verification(rep, err):
        return EXIT_COMPUTATION
    return EXIT_OK


def cmd_ring(args, out, err) -> int:
    if (args.cw_dim is None) != (args.connectivity is None):
        raise UsageError("--cw-dim and --connectivity must be given together")
    path = Path(args.path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        print(f"error: cannot read {path}: {exc.strerror}", file=err)
        return EXIT_COMPUTATION
    try:
        pres = parse_presentation(text)
    except PresentationError as exc:
        where = ":".join(str(x) for x in (exc.line, exc.column) if x is not None)
        print(f"{path}:{where}: {type(exc).__name__}: {exc.message}", file=err)
        return EXIT_COMPUTATION
    if args.max_degree is not None:
        pres = dataclasses.replace(pres, max_degree=args.max_degree)
    space = SpaceInfo(path.name, pres, args.cw_dim, args.connectivity,
                      paracompact=not args.not_paracompact)
    rep = report(space)
    doc = ReportDocument.from_report(rep)
    print(doc.to_json() if args.format == "json" else render_table(doc), file=out)
    if args.verify and not _emit_verification(rep, err):
        return EXIT_COMPUTATION
    return EXIT_OK


def sweep_row(n: int) -> dict:
    start = time.perf_counter()
    rep = report(fcpn_space(n))
    row = {
        "n": n,
        "cup": rep.cup.cup_length,
        "cat": rep.cat_exact,
        "zcl": rep.zcl.lower,
        "tc": rep.tc_exact,
        "ganea": rep.ganea,
    }
    expected = {"cup": 2 * n - 1, "cat": 2 * n, "zcl": 4 * n - 2, "tc": 4 * n - 1, "ganea": True}
    row["deviations"] = [k for k, v in expected.items() if row[k] != v]
    row["runtime_ms"] = round((time.perf_counter() - start) * 1000.0, 3)
    return row, rep


def cmd_sweep(args, out, err) -> int:
    if args.from_ < 1 or args.from_ > args.to:
        raise UsageError(f"need 1 <= --from <= --to, got {args.from_} and {args.to}")
    if args.to > N_LIMIT and not args.allow_large:
        raise UsageError(f"--to {args.to} exceeds {N_LIMIT}; pass --allow-large to override")
    rows = []
    ok = True
    for n in range(args.from_, args.to + 1):
        row, rep = sweep_row(n)
        rows.append(row)
        if args.verify:
            ok &= _emit_verification(rep, err)
    deviations = sum(1 for r in rows if r["deviations"])
    if args.format == "json":
        print(json.dumps({"schema_version": SCHEMA_VERSION, "rows": rows,
                          "deviations": deviations}, indent=2), file=out)
    else:
        header = f"{'n':>3} {'cup':>5} {'cat':>5} {'zcl':>5} {'TC':>5} {'ganea':>6} {'ms':>9}"
        print(header, file=out)
        for r in rows:
            line = (f"{r['n']:>3} {r['cup']:>5} {r['cat']!s:>5} {r['zcl']:>5} {r['tc']!s:>5} "
                    f"{str(r['ganea']).lower():>6} {r['runtime_ms']:>9.1f}")
            if r["deviations"]:
                line += "   *** DEVIATION: " + ", ".join(r["deviations"]) + " ***"
            print(line, file=out)
    if deviations:
        print(f"error: {deviations} row(s) deviate from cup=2n-1, cat=2n, TC=4n-1", file=err)
        return EXIT_COMPUTATION
    return EXIT_OK if ok else EXIT_COMPUTATION


def cmd_compare(args, out, err) -> int:
    _check_n(args)
    conf = report(fcpn_space(args.n))
    prod = report(product_space(cpn_space(args.n), cpn_space(args.n)))
    diff = None
    if conf.tc_exact is not None and prod.tc_exact is not None:
        diff = prod.tc_exact - conf.tc_exact
    if args.format == "json":
        payload = {
            "schema_version": SCHEMA_VERSION,
            "n": args.n,
            "configuration": ReportDocument.from_report(conf).to_dict(),
            "product": ReportDocument.from_report(prod).to_dict(),
            "tc_difference": diff,
        }
        print(json.dumps(payload, indent=2), file=out)
    else:
        def tc(rep):
            return str(rep.tc_exact) if rep.tc_exact is not None else f"[{rep.tc_lower}, {rep.tc_upper}]"

        print(f"TC({conf.space.name}) = {tc(conf)}", file=out)
        print(f"TC({prod.space.name}) = {tc(prod)}", file=out)
        print(f"difference = {'unknown' if diff is None else diff}", file=out)
    ok = True
    if args.verify:
        ok = _emit_verification(conf, err) & _emit_verification(prod, err)
    return EXIT_OK if ok else EXIT_COMPUTATION


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lsbounds",
        description="Exact LS-category and topological complexity bounds from cohomology rings.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, n_guard=True):
        p.add_argument("--format", choices=("table", "json"), default="table")
        p.add_argument("--verify", action="store_true",
                       help="re-check every exact claim by an independent computation")
        if n_guard:
            p.add_argument("--allow-large", action="store_true",
                           help=f"permit n above {N_LIMIT}")

    p = sub.add_parser("fcpn", help="report for the configuration space F(CP^n, 2)")
    p.add_argument("--n", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_fcpn)

    p = sub.add_parser("ring", help="report for a ring given in a presentation file")
    p.add_argument("path")
    p.add_argument("--max-degree", type=int, help="degree cap when nilpotency cannot be proved")
    p.add_argument("--cw-dim", type=int, help="dimension of a CW model of the space")
    p.add_argument("--connectivity", type=int, help="the space is c-connected")
    p.add_argument("--not-paracompact", action="store_true",
                   help="drop the TC <= 2 cat - 1 upper bound")
    common(p, n_guard=False)
    p.set_defaults(func=cmd_ring)

    p = sub.add_parser("sweep", help="F(CP^n, 2) for a range of n")
    p.add_argument("--from", dest="from_", type=int, required=True)
    p.add_argument("--to", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("compare", help="TC of F(CP^n, 2) against CP^n x CP^n")
    p.add_argument("--n", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_compare)
    return parser


def main(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out, err)
    except UsageError as exc:
        parser.print_usage(err)
        print(f"{parser.prog}: error: {exc}", file=err)
        return EXIT_USAGE
    except LSBoundsError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=err)
        return EXIT_COMPUTATION


if __name__ == "__main__":
    sys.exit(main())
