"""Command-line interface.

Matrices are read from a file path, from stdin ("-"), or inline (rows
separated by ";"), in either whitespace-separated text or JSON
{"rows": [[...], ...]} form.

Exit codes: 0 success, 1 bad input, 2 purity inconclusive under the
given budgets, 3 conjecture contradiction found.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from typing import Optional

from . import __version__
from .analysis import (
    REPORT_COLUMNS,
    AnalysisReport,
    analyze_matrix,
    report_to_dict,
    report_to_row,
    run_conjecture,
    summary_to_dict,
)
from .degree_matrix import DegreeMatrix, DegreeMatrixError, parse_matrix, reduce_zeros
from .hseries import tau
from .level import socle_shifts
from .matroid import delta0, delta0_groups, delta0_h, represent_delta0
from .pure_osequence import SearchLimits, f_vector, gamma_from_matrix

EXIT_OK = 0
EXIT_BAD_INPUT = 1
EXIT_INCONCLUSIVE = 2
EXIT_CONTRADICTION = 3


def _read_matrix(arg: str) -> DegreeMatrix:
    if arg == "-":
        return parse_matrix(sys.stdin.read())
    if os.path.exists(arg):
        with open(arg, encoding="utf-8") as fh:
            return parse_matrix(fh.read())
    return parse_matrix(arg.replace(";", "\n"))


def _limits(args: argparse.Namespace) -> SearchLimits:
    nodes = getattr(args, "budget_nodes", 10_000_000)
    seconds = getattr(args, "budget_seconds", 60.0)
    return SearchLimits(
        max_nodes=None if nodes is not None and nodes <= 0 else nodes,
        max_seconds=None if seconds is not None and seconds <= 0 else seconds,
    )


def _print_kv(pairs: list[tuple[str, object]]) -> None:
    width = max(len(k) for k, _ in pairs)
    for k, v in pairs:
        print(f"{k.ljust(width)}  {v}")


def _print_csv(header: list[str], rows: list[list[str]]) -> None:
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)


def _fmt_rows(rows) -> str:
    return ";".join(" ".join(str(a) for a in row) for row in rows)


def _fmt_vec(vec) -> str:
    return " ".join(str(x) for x in vec)


# ---------------------------------------------------------------------------
# subcommands


def cmd_analyze(args: argparse.Namespace) -> int:
    A = _read_matrix(args.matrix)
    report = analyze_matrix(A, _limits(args))
    if args.format == "json":
        print(json.dumps(report_to_dict(report), indent=2))
    elif args.format == "csv":
        _print_csv(list(REPORT_COLUMNS), [report_to_row(report)])
    else:
        _print_analyze_text(report)
    return EXIT_INCONCLUSIVE if report.purity.status == "inconclusive" else EXIT_OK


def _print_analyze_text(rep: AnalysisReport) -> None:
    purity = rep.purity
    detail = []
    if purity.index is not None:
        detail.append(f"index {purity.index}")
    if purity.nodes:
        detail.append(f"{purity.nodes} nodes")
    if purity.witness is not None:
        detail.append("witness " + "|".join(",".join(map(str, m)) for m in purity.witness))
    pairs = [
        ("matrix", _fmt_rows(rep.matrix)),
        ("t, c", f"{rep.t}, {rep.c}"),
        ("zero-free", rep.zero_free),
    ]
    if rep.reduced_matrix is not None:
        pairs.append(("reduced matrix", _fmt_rows(rep.reduced_matrix)))
    pairs += [
        ("equal rows (r of t)", f"{rep.r} of {rep.t}"),
        ("h-vector", _fmt_vec(rep.h)),
        ("tau (socle degree)", rep.tau),
        ("last entry", rep.last_entry),
        ("socle shifts", _fmt_vec(rep.socle_shifts)),
        ("level", rep.level),
    ]
    if rep.level:
        pairs.append(("level type", f"({rep.socle_degree}, {rep.cm_type})"))
    pairs += [
        ("log-concave", rep.log_concave),
        ("flawless", rep.flawless if rep.flawless else f"no, at i={rep.flawless_violation}"),
        ("O-sequence", rep.osequence),
        ("pure O-sequence", f"{purity.status} ({purity.rule}"
         + (": " + ", ".join(detail) if detail else "") + ")"),
    ]
    _print_kv(pairs)


def cmd_conjecture(args: argparse.Namespace) -> int:
    if args.c < 2:
        raise ValueError("the conjecture concerns codimension >= 2; use --c 2 or more")
    summary = run_conjecture(
        t=args.t,
        c=args.c,
        max_entry=args.max_entry,
        zero_free=args.zero_free,
        limits=_limits(args),
        threads=args.threads,
    )
    if args.format == "json":
        print(json.dumps(summary_to_dict(summary), indent=2))
    elif args.format == "csv":
        _print_csv(list(REPORT_COLUMNS), [report_to_row(r) for r in summary.reports])
    else:
        _print_kv(
            [
                ("sweep", f"t={summary.t} c={summary.c} max_entry={summary.max_entry} "
                          f"zero_free={summary.zero_free}"),
                ("matrices", f"{summary.total} ({summary.equal_rows_matrices} with equal rows)"),
                ("verdicts", f"pure={summary.pure} not-pure={summary.not_pure} "
                             f"inconclusive={summary.inconclusive}"),
                ("rules", " ".join(f"{rule}={n}" for rule, n in summary.rule_counts)),
                ("contradictions", len(summary.contradictions) or "none"),
            ]
        )
        for rows in summary.contradictions:
            print(f"contradiction: {_fmt_rows(rows)}")
        for rows in summary.inconclusive_matrices:
            print(f"inconclusive: {_fmt_rows(rows)}")
    # inconclusive entries are reported in the output but do not fail the run
    return EXIT_CONTRADICTION if summary.contradictions else EXIT_OK


def cmd_gamma(args: argparse.Namespace) -> int:
    A = _read_matrix(args.matrix)
    ideal = gamma_from_matrix(A)
    f = f_vector(ideal)
    data = {
        "matrix": [list(r) for r in A.entries],
        "nvars": ideal.nvars,
        "degree": tau(A),
        "generator_count": len(ideal.generators),
        "generators": [list(g) for g in ideal.generators],
        "f_vector": list(f),
    }
    if args.format == "json":
        print(json.dumps(data, indent=2))
    elif args.format == "csv":
        _print_csv(
            ["matrix", "nvars", "degree", "generator_count", "generators", "f_vector"],
            [[
                _fmt_rows(A.entries),
                str(ideal.nvars),
                str(tau(A)),
                str(len(ideal.generators)),
                "|".join(",".join(map(str, g)) for g in ideal.generators),
                _fmt_vec(f),
            ]],
        )
    else:
        _print_kv(
            [
                ("matrix", _fmt_rows(A.entries)),
                ("variables", ideal.nvars),
                ("generator degree", tau(A)),
                ("generators", " ".join(",".join(map(str, g)) for g in ideal.generators)),
                ("f-vector", _fmt_vec(f)),
            ]
        )
    return EXIT_OK


def _parse_sizes(text: str) -> tuple[int, ...]:
    parts = text.replace(",", " ").split()
    if not parts:
        raise ValueError("empty group sizes")
    return tuple(int(p) for p in parts)


def cmd_matroid(args: argparse.Namespace) -> int:
    sizes = _parse_sizes(args.sizes)
    m = args.m if args.m is not None else len(sizes)
    cx = delta0(args.c, m, sizes)
    h = delta0_h(args.c, m, sizes)
    facets = sorted(sorted(F) for F in cx.facets)
    data = {
        "c": args.c,
        "m": m,
        "sizes": list(sizes),
        "groups": [list(g) for g in delta0_groups(sizes)],
        "n": sum(sizes),
        "facet_count": len(facets),
        "facets": facets,
        "h": list(h),
    }
    if args.represent:
        data["representation"] = [list(row) for row in represent_delta0(args.c, m, sizes)]
    if args.format == "json":
        print(json.dumps(data, indent=2))
    elif args.format == "csv":
        header = ["c", "m", "sizes", "n", "facet_count", "facets", "h"]
        row = [
            str(args.c),
            str(m),
            _fmt_vec(sizes),
            str(sum(sizes)),
            str(len(facets)),
            "|".join(",".join(map(str, F)) for F in facets),
            _fmt_vec(h),
        ]
        if args.represent:
            header.append("representation")
            row.append(";".join(_fmt_vec(r) for r in data["representation"]))
        _print_csv(header, [row])
    else:
        pairs = [
            ("delta0", f"c={args.c} m={m} sizes={_fmt_vec(sizes)}"),
            ("groups", " ".join("{" + ",".join(map(str, g)) + "}" for g in data["groups"])),
            ("facets", f"{len(facets)}: "
             + " ".join("{" + ",".join(map(str, F)) + "}" for F in facets)),
            ("h-vector", _fmt_vec(h)),
        ]
        if args.represent:
            pairs.append(("representation", ";".join(_fmt_vec(r) for r in data["representation"])))
        _print_kv(pairs)
    return EXIT_OK


def cmd_level(args: argparse.Namespace) -> int:
    A = _read_matrix(args.matrix)
    B = reduce_zeros(A)
    shifts = socle_shifts(B)
    level = shifts.all_equal
    data = {
        "matrix": [list(r) for r in A.entries],
        "reduced_matrix": None if B is A else [list(r) for r in B.entries],
        "socle_shifts": list(shifts.shifts),
        "level": level,
        "socle_degree": tau(B) if level else None,
        "cm_type": shifts.rank if level else None,
    }
    if args.format == "json":
        print(json.dumps(data, indent=2))
    elif args.format == "csv":
        _print_csv(
            ["matrix", "reduced_matrix", "socle_shifts", "level", "socle_degree", "cm_type"],
            [[
                _fmt_rows(A.entries),
                "" if B is A else _fmt_rows(B.entries),
                _fmt_vec(shifts.shifts),
                str(level),
                "" if data["socle_degree"] is None else str(data["socle_degree"]),
                "" if data["cm_type"] is None else str(data["cm_type"]),
            ]],
        )
    else:
        pairs = [("matrix", _fmt_rows(A.entries))]
        if B is not A:
            pairs.append(("reduced matrix", _fmt_rows(B.entries)))
        pairs += [
            ("socle shifts", _fmt_vec(shifts.shifts)),
            ("level", level),
        ]
        if level:
            pairs.append(("level type", f"({data['socle_degree']}, {data['cm_type']})"))
        _print_kv(pairs)
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="detlevel",
        description="h-vectors of standard determinantal schemes: levelness, "
        "pure O-sequences, witnesses, and counterexample sweeps.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument(
        "--format", choices=("text", "json", "csv"), default="text",
        help="output format (default text)",
    )

    budgets = argparse.ArgumentParser(add_help=False)
    budgets.add_argument(
        "--budget-nodes", type=int, default=10_000_000, metavar="N",
        help="purity search node budget; 0 disables (default 10^7)",
    )
    budgets.add_argument(
        "--budget-seconds", type=float, default=60.0, metavar="S",
        help="purity search time budget; 0 disables (default 60)",
    )

    p = sub.add_parser(
        "analyze", parents=[fmt, budgets],
        help="full report for one degree matrix",
    )
    p.add_argument("matrix", help="file path, - for stdin, or inline rows 'a b c;d e f'")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser(
        "conjecture", parents=[fmt, budgets],
        help="sweep a family for counterexamples to purity <=> equal rows",
    )
    p.add_argument("--t", type=int, required=True, help="number of rows")
    p.add_argument("--c", type=int, required=True, help="codimension (>= 2)")
    p.add_argument("--max-entry", type=int, required=True, help="largest allowed entry")
    p.add_argument(
        "--zero-free", action=argparse.BooleanOptionalAction, default=True,
        help="restrict to zero-free matrices (default on)",
    )
    p.add_argument("--threads", type=int, default=1, help="worker threads (default 1)")
    p.set_defaults(func=cmd_conjecture)

    p = sub.add_parser(
        "gamma", parents=[fmt],
        help="pure order ideal witnessing h(A) for an equal-rows matrix",
    )
    p.add_argument("matrix", help="file path, - for stdin, or inline rows")
    p.set_defaults(func=cmd_gamma)

    p = sub.add_parser(
        "matroid", parents=[fmt],
        help="the transversal complex delta0(c, m, sizes) and its h-vector",
    )
    p.add_argument("--c", type=int, required=True, help="facet size (groups per transversal)")
    p.add_argument("--m", type=int, default=None, help="group count (default: len(sizes))")
    p.add_argument("--sizes", required=True, help="group sizes, e.g. '1,2,2'")
    p.add_argument("--represent", action="store_true", help="include a linear representation")
    p.set_defaults(func=cmd_matroid)

    p = sub.add_parser(
        "level", parents=[fmt],
        help="socle shifts and levelness for one degree matrix",
    )
    p.add_argument("matrix", help="file path, - for stdin, or inline rows")
    p.set_defaults(func=cmd_level)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (DegreeMatrixError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
