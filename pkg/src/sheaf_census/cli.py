"""Command line front end.

Subcommands: orbits, census, verify, series. Output formats: json (default),
csv, table. Exit codes: 0 success / all checks pass, 1 verification
mismatch, 2 usage or parse error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import tempfile

from . import __version__, census, diagrams, groups, qseries, verify


def _default_order() -> int:
    raw = os.environ.get("SHEAF_CENSUS_ORDER")
    if raw is None:
        return qseries.DEFAULT_ORDER
    try:
        value = int(raw)
    except ValueError as exc:
        raise SystemExit(f"sheaf-census: bad SHEAF_CENSUS_ORDER {raw!r}") from exc
    return value


def _envelope(args: argparse.Namespace, payload: dict, warnings: list[str]) -> dict:
    return {
        "tool": "sheaf-census",
        "version": __version__,
        "command": " ".join(args._argv),
        "payload": payload,
        "warnings": warnings,
    }


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
        return
    directory = os.path.dirname(os.path.abspath(out)) or "."
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".sheaf-census-")
    try:
        with os.fdopen(fd, "w") as handle:
            handle.write(text if text.endswith("\n") else text + "\n")
        os.replace(tmp, out)
    except BaseException:
        os.unlink(tmp)
        raise


def _render_table(headers: list[str], rows: list[list], title: str | None = None) -> str:
    cells = [["" if c is None else str(c) for c in row] for row in rows]
    widths = [max(len(h), *(len(r[i]) for r in cells)) if cells else len(h)
              for i, h in enumerate(headers)]
    lines = []
    if title:
        lines.append(title)
    lines.append("  ".join(h.ljust(w) for h, w in zip(headers, widths)))
    lines.append("  ".join("-" * w for w in widths))
    for row in cells:
        lines.append("  ".join(c.ljust(w) for c, w in zip(row, widths)))
    return "\n".join(lines)


def _render_csv(headers: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(headers)
    writer.writerows(rows)
    return buf.getvalue()


# ---------------------------------------------------------------------------
# orbits
# ---------------------------------------------------------------------------

def _cmd_orbits(args: argparse.Namespace) -> int:
    rows = []
    if args.family == "bdi":
        if args.p is None or args.q is None:
            raise SystemExit(2)
        if args.richardson:
            members = diagrams.enum_sigma_b(args.p, args.q)
        else:
            members = diagrams.enum_sigma(args.p, args.q)
        for d in members:
            cls = diagrams.classify(d)
            if args.orbit_class and cls.index != int(args.orbit_class[-1]):
                continue
            k0 = 2 ** cls.r
            k1 = groups.kappa1_data_BDI(d).count
            if args.richardson:
                rows.append([str(d), None, cls.a, cls.b, cls.r,
                             f"sigma{cls.index}", k0, k1])
            else:
                mult = diagrams.orbit_multiplicity(d)
                for delta in (diagrams.DELTA_NAMES[:mult] if mult > 1 else [None]):
                    rows.append([str(d), delta, cls.a, cls.b, cls.r,
                                 f"sigma{cls.index}", k0, k1])
    else:
        if args.n is None:
            raise SystemExit(2)
        if args.orbit_class:
            raise SystemExit(2)
        members = diagrams.enum_lambda_b(args.n) if args.richardson else diagrams.enum_lambda(args.n)
        for d in members:
            k1 = groups.kappa1_data_DIII(d).count
            rows.append([str(d), None, None, None, 0, "lambda", 1, k1])

    headers = ["diagram", "delta", "a", "b", "r", "class", "k0_irreps", "k1_irreps"]
    payload = {"orbits": [dict(zip(headers, row)) for row in rows]}
    return _finish(args, payload, [], headers, rows)


# ---------------------------------------------------------------------------
# census
# ---------------------------------------------------------------------------

def _census_reports(args: argparse.Namespace) -> list[census.CensusReport]:
    if args.family == "bdi":
        if args.p is None or args.q is None:
            raise SystemExit(2)
        table = {"k0": lambda: [census.census_bdi_k0(args.p, args.q)],
                 "k1": lambda: [census.census_bdi_k1(args.p, args.q)]}
        if args.central == "both":
            reports = table["k0"]() + table["k1"]()
        else:
            reports = table[args.central]()
    else:
        if args.n is None:
            raise SystemExit(2)
        k0, k1 = census.census_diii(args.n)
        reports = {"k0": [k0], "k1": [k1], "both": [k0, k1]}[args.central]
    return [census.subset_report(r, args.subset) for r in reports]


def _cmd_census(args: argparse.Namespace) -> int:
    reports = _census_reports(args)
    mismatches = []
    if args.check:
        for r in reports:
            expected = census.expected_subset_total(r, args.subset)
            if r.total != expected:
                mismatches.append(f"{r.pair} {r.central} {args.subset}: "
                                  f"census {r.total} != formula {expected}")
    payload = {"reports": [r.to_json_dict() for r in reports]}
    if args.check:
        payload["check"] = {"passed": not mismatches, "mismatches": mismatches}
    warnings = sorted({w for r in reports for w in r.warnings})

    headers = ["central", "support", "delta", "m", "k", "mu", "family", "count"]
    rows = []
    for r in reports:
        for e in r.entries:
            rows.append([r.central, diagrams.format_diagram(e.support.diagram),
                         e.support.delta, e.m, e.k, diagrams.format_diagram(e.mu),
                         e.family, e.count])
        rows.append([r.central, "TOTAL", None, None, None, None, args.subset, r.total])
    code = _finish(args, payload, warnings, headers, rows)
    if mismatches:
        sys.stderr.write("\n".join(mismatches) + "\n")
        return 1
    return code


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def _cmd_verify(args: argparse.Namespace) -> int:
    ids = [piece for chunk in args.suite for piece in chunk.split(",") if piece]
    selection = "all" if ids == ["all"] else ids
    try:
        results = verify.run_suite(selection, order=args.order, sweep=args.sweep)
    except KeyError as exc:
        sys.stderr.write(f"sheaf-census: {exc.args[0]}\n")
        return 2
    payload = {
        "order": args.order,
        "sweep": args.sweep,
        "checks": [r.to_json_dict() for r in results],
        "all_pass": all(r.passed for r in results),
    }
    headers = ["id", "status", "scope", "detail"]
    rows = [[r.id, r.status, r.scope,
             json.dumps(r.detail) if r.detail else ""] for r in results]
    _finish(args, payload, [], headers, rows)
    return 0 if payload["all_pass"] else 1


# ---------------------------------------------------------------------------
# series
# ---------------------------------------------------------------------------

def _fmt_rational(value) -> str:
    return str(value)


def _cmd_series(args: argparse.Namespace) -> int:
    try:
        series = qseries.parse_series_expr(args.expr, args.order)
    except qseries.SeriesParseError as exc:
        sys.stderr.write("sheaf-census: series parse error: " + exc.diagnostic() + "\n")
        return 2
    if args.coeff is not None:
        if args.coeff > series.order:
            sys.stderr.write(f"sheaf-census: coefficient {args.coeff} beyond "
                             f"order {series.order}\n")
            return 2
        values = [series.coeff(args.coeff)]
        exponents = [args.coeff]
    else:
        values = list(series.coeffs)
        exponents = list(range(series.order + 1))
    payload = {"expr": args.expr, "order": args.order,
               "coefficients": {str(e): _fmt_rational(v)
                                for e, v in zip(exponents, values)}}
    if args.format == "json":
        _emit(json.dumps(_envelope(args, payload, []), indent=2), args.out)
    else:
        text = ", ".join(_fmt_rational(v) for v in values)
        _emit(text, args.out)
    return 0


def _finish(args: argparse.Namespace, payload: dict, warnings: list[str],
            headers: list[str], rows: list[list]) -> int:
    if args.format == "json":
        _emit(json.dumps(_envelope(args, payload, warnings), indent=2), args.out)
    elif args.format == "csv":
        _emit(_render_csv(headers, rows), args.out)
    else:
        title = " ".join(args._argv)
        body = _render_table(headers, rows, title)
        if warnings:
            body += "\n" + "\n".join(f"warning: {w}" for w in warnings)
        _emit(body, args.out)
    return 0


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sheaf-census",
        description="Exact censuses of character sheaves for the orthogonal "
                    "and equal-signature pairs of the double covers, plus a "
                    "generating-function identity verifier.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="subcommand", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "csv", "table"], default="json")
    common.add_argument("--out", metavar="FILE", default=None,
                        help="write output to FILE (atomically) instead of stdout")

    orbits = sub.add_parser("orbits", parents=[common],
                            help="list nilpotent orbits and their local-system counts")
    orbits.add_argument("family", choices=["bdi", "diii"])
    orbits.add_argument("--p", type=int)
    orbits.add_argument("--q", type=int)
    orbits.add_argument("--n", type=int)
    orbits.add_argument("--class", dest="orbit_class",
                        choices=["sigma1", "sigma2", "sigma3"], default=None)
    orbits.add_argument("--richardson", action="store_true",
                        help="restrict to the Richardson subsets")
    orbits.set_defaults(func=_cmd_orbits)

    cen = sub.add_parser("census", parents=[common],
                         help="count character sheaves by support stratum")
    cen.add_argument("family", choices=["bdi", "diii"])
    cen.add_argument("--p", type=int)
    cen.add_argument("--q", type=int)
    cen.add_argument("--n", type=int)
    cen.add_argument("--central", choices=["k0", "k1", "both"], default="both")
    cen.add_argument("--subset", choices=list(census.SUBSETS), default="all")
    cen.add_argument("--check", action="store_true",
                     help="cross-check totals against the closed formulas "
                          "(exit 1 on mismatch)")
    cen.set_defaults(func=_cmd_census)

    ver = sub.add_parser("verify", parents=[common],
                         help="run the generating-function identity suite")
    ver.add_argument("--suite", nargs="+", default=["all"],
                     help="check ids, or 'all'")
    ver.add_argument("--order", type=int, default=None)
    ver.add_argument("--sweep", type=int, default=verify.DEFAULT_SWEEP)
    ver.set_defaults(func=_cmd_verify)

    ser = sub.add_parser("series", parents=[common],
                         help="expand a product expression to exact coefficients")
    ser.add_argument("--expr", required=True)
    ser.add_argument("--order", type=int, default=None)
    ser.add_argument("--coeff", type=int, default=None)
    ser.set_defaults(func=_cmd_series)
    return parser


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    args._argv = ["sheaf-census"] + argv
    if getattr(args, "order", None) is None and args.subcommand in ("verify", "series"):
        args.order = _default_order()
    try:
        return args.func(args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    except (ValueError, KeyError) as exc:
        sys.stderr.write(f"sheaf-census: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
