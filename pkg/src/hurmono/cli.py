"""Command-line front end.

Subcommands:

  sheets   enumerate the canonical sheets of a space
  report   connected components with degree, ramification, and genus (m = 4)
  verify   recompute the shipped golden tables and compare

Spec grammar: ``--degrees 2,1 --genera 1,0 --profiles "2,1;2,1;2,1;2,1"``
(``--profiles "2,1^4"`` is accepted sugar).  ``--format text|json|csv``
selects the output form; text is the default.  Exit codes: 0 success
(including empty spaces), 1 verification failure, 2 usage or parse error,
3 enumeration guard exceeded.  ``--threads`` caps parallelism and falls back
to the HURMONO_THREADS environment variable, then to the available cores.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from .golden import (
    GoldenParseError,
    default_rows,
    load_golden_file,
    parse_int_csv,
    parse_profiles,
    spec_line,
    verify_all,
)
from .marked import (
    HurwitzSpec,
    SpecError,
    TooLargeError,
    marked_fiber_str,
    marked_tuple_json,
    marked_tuple_str,
)
from .moves import ComponentReport, build_sheet_graph, components
from .perms import partition_str, perm_str
from .sheets import enumerate_sheets

SCHEMA_VERSION = 1


def _spec_from_args(args) -> HurwitzSpec:
    """Build the spec, naming the offending flag on parse errors."""
    try:
        degrees = parse_int_csv(args.degrees, "degrees")
    except SpecError as exc:
        raise SpecError(f"--degrees: {exc}") from None
    try:
        genera = parse_int_csv(args.genera, "genera")
    except SpecError as exc:
        raise SpecError(f"--genera: {exc}") from None
    try:
        profiles = parse_profiles(args.profiles)
    except SpecError as exc:
        raise SpecError(f"--profiles: {exc}") from None
    try:
        return HurwitzSpec(degrees=degrees, genera=genera, profiles=profiles)
    except SpecError as exc:
        raise SpecError(f"--degrees/--genera/--profiles: {exc}") from None


def _resolve_threads(args) -> int:
    if getattr(args, "threads", None) is not None:
        if args.threads < 1:
            raise SpecError("--threads: must be a positive integer")
        return args.threads
    env = os.environ.get("HURMONO_THREADS")
    if env:
        try:
            value = int(env)
        except ValueError:
            raise SpecError(f"HURMONO_THREADS: not an integer: {env!r}") from None
        if value < 1:
            raise SpecError(f"HURMONO_THREADS: must be positive, got {env!r}")
        return value
    return os.cpu_count() or 1


def _spec_json(spec: HurwitzSpec) -> dict:
    return {
        "degrees": list(spec.degrees),
        "genera": list(spec.genera),
        "profiles": [list(mu) for mu in spec.profiles],
    }


# ---------------------------------------------------------------------------
# sheets


def cmd_sheets(args) -> int:
    spec = _spec_from_args(args)
    _resolve_threads(args)
    sheets = enumerate_sheets(spec)
    out = io.StringIO()
    if args.format == "text":
        for k, t in enumerate(sheets, start=1):
            out.write(f"sheet {k}: {marked_tuple_str(t)}\n")
        out.write(f"total {len(sheets)} sheets\n")
    elif args.format == "json":
        payload = {
            "schema_version": SCHEMA_VERSION,
            "spec": _spec_json(spec),
            "count": len(sheets),
            "sheets": [marked_tuple_json(t) for t in sheets],
        }
        out.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    else:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["sheet", "fiber", "marking"])
        for k, t in enumerate(sheets, start=1):
            for i, (p, lab) in enumerate(zip(t.perms, t.labels), start=1):
                writer.writerow([k, i, marked_fiber_str(p, lab)])
    sys.stdout.write(out.getvalue())
    return 0


# ---------------------------------------------------------------------------
# report


def _nodes_str(nodes) -> str:
    return "".join("(" + partition_str(mu) + ")" for mu in nodes)


def _local_restriction(graph, report: ComponentReport, boundary: str):
    """The sheet permutation restricted to the component, on local indices."""
    order = {sheet: k for k, sheet in enumerate(report.sheet_indices)}
    s = graph.s(boundary)
    return tuple(order[s[sheet]] for sheet in report.sheet_indices)


def _report_json(graph, reports) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "spec": _spec_json(graph.spec),
        "sheet_count": len(graph.sheets),
        "boundary_product_is_identity": graph.boundary_product_is_identity,
        "components": [
            {
                "degree": r.degree,
                "genus": r.genus,
                "ram": {b: list(r.ram(b)) for b in ("zero", "one", "infty")},
                "nodes": {
                    b: [list(mu) for mu in r.nodes(b)] for b in ("zero", "one", "infty")
                },
                "sheets": [k + 1 for k in r.sheet_indices],
            }
            for r in reports
        ],
    }


def report_from_json_obj(obj) -> tuple[ComponentReport, ...]:
    """Rebuild ComponentReport values from a parsed JSON report."""
    out = []
    for c in obj["components"]:
        out.append(
            ComponentReport(
                sheet_indices=tuple(k - 1 for k in c["sheets"]),
                degree=c["degree"],
                genus=c["genus"],
                ram_zero=tuple(c["ram"]["zero"]),
                ram_one=tuple(c["ram"]["one"]),
                ram_infty=tuple(c["ram"]["infty"]),
                nodes_zero=tuple(tuple(mu) for mu in c["nodes"]["zero"]),
                nodes_one=tuple(tuple(mu) for mu in c["nodes"]["one"]),
                nodes_infty=tuple(tuple(mu) for mu in c["nodes"]["infty"]),
            )
        )
    return tuple(out)


def cmd_report(args) -> int:
    spec = _spec_from_args(args)
    _resolve_threads(args)
    graph = build_sheet_graph(spec)
    reports = components(graph)
    out = io.StringIO()
    if args.format == "text":
        for k, r in enumerate(reports, start=1):
            out.write(f"component {k}: degree {r.degree}, genus {r.genus}\n")
            out.write(
                "  ram zero={} one={} infty={}\n".format(
                    partition_str(r.ram_zero),
                    partition_str(r.ram_one),
                    partition_str(r.ram_infty),
                )
            )
            out.write(
                "  nodes zero={} one={} infty={}\n".format(
                    _nodes_str(r.nodes_zero),
                    _nodes_str(r.nodes_one),
                    _nodes_str(r.nodes_infty),
                )
            )
            if args.verbose >= 1:
                out.write(
                    "  sheets: {}\n".format(
                        ",".join(str(k + 1) for k in r.sheet_indices)
                    )
                )
                out.write(
                    "  s zero={} one={} infty={}\n".format(
                        perm_str(_local_restriction(graph, r, "zero")),
                        perm_str(_local_restriction(graph, r, "one")),
                        perm_str(_local_restriction(graph, r, "infty")),
                    )
                )
        out.write(f"total {len(graph.sheets)} sheets in {len(reports)} components\n")
        if args.verbose >= 1:
            out.write(
                "s_zero*s_one*s_infty is identity: "
                f"{'yes' if graph.boundary_product_is_identity else 'no'}\n"
            )
    elif args.format == "json":
        out.write(json.dumps(_report_json(graph, reports), indent=2, sort_keys=True) + "\n")
    else:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(
            [
                "component",
                "degree",
                "genus",
                "ram_zero",
                "ram_one",
                "ram_infty",
                "nodes_zero",
                "nodes_one",
                "nodes_infty",
                "sheets",
            ]
        )
        for k, r in enumerate(reports, start=1):
            writer.writerow(
                [
                    k,
                    r.degree,
                    r.genus,
                    partition_str(r.ram_zero),
                    partition_str(r.ram_one),
                    partition_str(r.ram_infty),
                    _nodes_str(r.nodes_zero),
                    _nodes_str(r.nodes_one),
                    _nodes_str(r.nodes_infty),
                    " ".join(str(x + 1) for x in r.sheet_indices),
                ]
            )
    sys.stdout.write(out.getvalue())
    return 0


# ---------------------------------------------------------------------------
# verify


def _expect_str(expected) -> str:
    return ",".join(f"{c}:{g}:{'?' if deg is None else deg}" for c, g, deg in expected)


def _computed_str(computed) -> str:
    return ",".join(f"{c}:{g}:{deg}" for c, g, deg in computed) or "(empty)"


def cmd_verify(args) -> int:
    if args.goldens:
        rows = load_golden_file(args.goldens)
    else:
        rows = default_rows()
    threads = _resolve_threads(args)
    summary = verify_all(rows, degree=args.degree, threads=threads)
    out = io.StringIO()
    if args.format == "text":
        for v in summary.verdicts:
            line = f"row {v.row.line_no} [{spec_line(v.row.spec)}]"
            if v.passed:
                out.write(f"{line}: PASS\n")
            else:
                out.write(f"{line}: FAIL\n")
                out.write(f"  expected {_expect_str(v.row.expected)}\n")
                out.write(f"  computed {_computed_str(v.computed)}\n")
        out.write(f"{summary.n_pass}/{len(summary.verdicts)} pass\n")
    elif args.format == "json":
        payload = {
            "schema_version": SCHEMA_VERSION,
            "rows": [
                {
                    "line": v.row.line_no,
                    "spec": _spec_json(v.row.spec),
                    "expected": [
                        [c, g, deg] for c, g, deg in v.row.expected
                    ],
                    "computed": [[c, g, deg] for c, g, deg in v.computed],
                    "passed": v.passed,
                }
                for v in summary.verdicts
            ],
            "pass": summary.n_pass,
            "fail": summary.n_fail,
        }
        out.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    else:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["line", "spec", "expected", "computed", "status"])
        for v in summary.verdicts:
            writer.writerow(
                [
                    v.row.line_no,
                    spec_line(v.row.spec),
                    _expect_str(v.row.expected),
                    _computed_str(v.computed),
                    "pass" if v.passed else "fail",
                ]
            )
    sys.stdout.write(out.getvalue())
    return 0 if summary.all_passed else 1


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hurmono",
        description="Sheets and target-map monodromy of Hurwitz spaces of "
        "fully-marked admissible covers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_spec_flags(p):
        p.add_argument("--degrees", required=True, help="source component degrees, e.g. 2,1")
        p.add_argument("--genera", required=True, help="source component genera, e.g. 1,0")
        p.add_argument(
            "--profiles",
            required=True,
            help='ramification profiles, e.g. "2,1;2,1;2,1;2,1" or "2,1^4"',
        )

    def add_common(p):
        p.add_argument("--format", choices=("text", "json", "csv"), default="text")
        p.add_argument("--threads", type=int, default=None, help="parallelism cap")

    p_sheets = sub.add_parser("sheets", help="enumerate canonical sheets")
    add_spec_flags(p_sheets)
    add_common(p_sheets)
    p_sheets.set_defaults(func=cmd_sheets)

    p_report = sub.add_parser("report", help="connected components (m = 4)")
    add_spec_flags(p_report)
    add_common(p_report)
    p_report.add_argument("-v", "--verbose", action="count", default=0)
    p_report.set_defaults(func=cmd_report)

    p_verify = sub.add_parser("verify", help="check the golden tables")
    add_common(p_verify)
    p_verify.add_argument("--degree", type=int, default=None, help="filter by total degree")
    p_verify.add_argument("--goldens", default=None, help="path to an alternate golden file")
    p_verify.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except TooLargeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (SpecError, GoldenParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
