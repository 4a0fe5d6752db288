from __future__ import annotations

import argparse
from pathlib import Path

from settings import DEFAULT_TRUNCATION, OUTPUT_FORMATS, SERIES_NAMES
from utils import log_info, log_ok, log_warn, table_print

from tools.barcores import abacus_display, bar_core
from tools.cores import e_core, nvector_from_core
from tools.golden import PRINTED_TABLE_E4
from tools.harness import SUITES, computed_table, run_suites
from tools.models import MullineuxError
from tools.mullineux import compute_symbol, fixed_points, mullineux_map
from tools.partitions import parse_partition
from tools.qseries import build_series
from tools.reports import dumps_json, grid_frame, render_decomposition, render_grid, render_partition, render_partitions, render_reports, render_series, render_symbol, report_rows, write_reports


def _format_arg(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=OUTPUT_FORMATS, default="plain")


def _emit(text: str) -> None:
    # csv renderers already end in a newline
    print(text.rstrip("\n"))


def add_symbol_parser(sub: argparse._SubParsersAction) -> None:
    p = sub.add_parser("symbol", help="Mullineux symbol of an e-regular partition")
    p.add_argument("partition", help="Comma-separated parts, e.g. 7,7,7,4,4,1,1")
    p.add_argument("--e", type=int, required=True)
    _format_arg(p)


def add_map_parser(sub: argparse._SubParsersAction) -> None:
    p = sub.add_parser("map", help="Image of a partition under m_e")
    p.add_argument("partition")
    p.add_argument("--e", type=int, required=True)
    _format_arg(p)


def add_fixed_parser(sub: argparse._SubParsersAction) -> None:
    p = sub.add_parser("fixed", help="List or count the fixed points of m_e on partitions of n")
    p.add_argument("n", type=int)
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--weight", type=int, help="Keep fixed points of this e-weight")
    p.add_argument("--core", help="Keep fixed points with this e-core")
    p.add_argument("--count", action="store_true", help="Print only the number of fixed points")
    _format_arg(p)


def add_core_parser(sub: argparse._SubParsersAction) -> None:
    p = sub.add_parser("core", help="e-core and e-weight of a partition")
    p.add_argument("partition")
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--strategy", choices=["rim", "abacus"], default="rim")
    p.add_argument("--nvector", action="store_true", help="Also print the n-vector of the core")
    _format_arg(p)


def add_barcore_parser(sub: argparse._SubParsersAction) -> None:
    p = sub.add_parser("barcore", help="t-bar core and bar weight of a distinct-part partition")
    p.add_argument("partition")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--abacus", action="store_true", help="Render the abacus of the core")
    _format_arg(p)


def add_series_parser(sub: argparse._SubParsersAction) -> None:
    p = sub.add_parser("series", help="Coefficients of a generating function")
    p.add_argument("name", choices=SERIES_NAMES)
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--trunc", type=int, default=DEFAULT_TRUNCATION, help="Highest power of q to print")
    _format_arg(p)


def add_table_parser(sub: argparse._SubParsersAction) -> None:
    p = sub.add_parser("table", help="Fixed points by size and e-weight")
    p.add_argument("--e", type=int, default=4)
    p.add_argument("--n-max", type=int, default=20)
    p.add_argument("--w-max", type=int, default=5)
    p.add_argument("--printed", action="store_true", help="Show the published e=4 table as transcribed")
    _format_arg(p)


def add_verify_parser(sub: argparse._SubParsersAction) -> None:
    p = sub.add_parser("verify", help="Run verification suites")
    p.add_argument("suites", nargs="*", default=["all"], help=f"Suites to run: all, {', '.join(SUITES)}")
    p.add_argument("--e", type=int, nargs="+", help="Override each suite's e range")
    p.add_argument("--n-max", type=int, help="Override each suite's size bound")
    p.add_argument("--threads", type=int, help="Worker threads (default: MULLINEUX_THREADS or 1)")
    p.add_argument("--output", "-o", help="Also write reports.json and reports.csv here")
    p.add_argument("--quiet", action="store_true")
    _format_arg(p)


def add_all_parsers(sub: argparse._SubParsersAction) -> None:
    for add in (add_symbol_parser, add_map_parser, add_fixed_parser, add_core_parser, add_barcore_parser, add_series_parser, add_table_parser, add_verify_parser):
        add(sub)


def cmd_symbol(args: argparse.Namespace) -> int:
    _emit(render_symbol(compute_symbol(parse_partition(args.partition), args.e), args.format))
    return 0


def cmd_map(args: argparse.Namespace) -> int:
    _emit(render_partition(mullineux_map(parse_partition(args.partition), args.e), args.format))
    return 0


def cmd_fixed(args: argparse.Namespace) -> int:
    found = list(fixed_points(args.n, args.e))
    if args.weight is not None or args.core is not None:
        wanted_core = parse_partition(args.core) if args.core is not None else None
        kept = []
        for lam in found:
            dec = e_core(lam, args.e)
            if args.weight is not None and dec.weight != args.weight:
                continue
            if wanted_core is not None and dec.core != wanted_core:
                continue
            kept.append(lam)
        found = kept
    if args.count:
        _emit(dumps_json({"n": args.n, "e": args.e, "count": len(found)}) if args.format == "json" else str(len(found)))
        return 0
    _emit(render_partitions(found, args.format))
    return 0


def cmd_core(args: argparse.Namespace) -> int:
    dec = e_core(parse_partition(args.partition), args.e, args.strategy)
    v = nvector_from_core(dec.core, args.e) if args.nvector else None
    _emit(render_decomposition(dec, args.format, nvector=v))
    return 0


def cmd_barcore(args: argparse.Namespace) -> int:
    dec = bar_core(parse_partition(args.partition), args.t)
    if not dec.canonical_domain:
        log_warn(f"Outside distinct odd parts with t divisible by 4; the {args.t}-bar core may depend on the order of operations")
    abacus = abacus_display(dec.core, args.t) if args.abacus else None
    _emit(render_decomposition(dec, args.format, abacus))
    return 0


def cmd_series(args: argparse.Namespace) -> int:
    _emit(render_series(build_series(args.name, args.e, args.trunc), args.format))
    return 0


def cmd_table(args: argparse.Namespace) -> int:
    if args.printed:
        if args.e != PRINTED_TABLE_E4.e:
            raise MullineuxError("Only the e=4 table has a published version")
        grid = [list(row) for row in PRINTED_TABLE_E4.grid[: args.n_max]]
        log_info(PRINTED_TABLE_E4.provenance)
    else:
        grid = computed_table(args.e, args.n_max, args.w_max)
    _emit(render_grid(grid_frame(grid, args.e, args.w_max), args.format))
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    quiet = args.quiet or args.format != "plain"
    reports = run_suites(args.suites, args.e, args.n_max, args.threads, progress=not quiet)
    if args.output:
        write_reports(Path(args.output), reports)
        log_info(f"Reports written to {args.output}")
    _emit(render_reports(reports, args.format))
    if not quiet:
        table_print("Verification", report_rows(reports), limit=len(reports))
    failed = [r.check for r in reports if not r.passed]
    if failed:
        log_warn(f"Failed suites: {', '.join(failed)}")
        return 1
    log_ok(f"All {len(reports)} suite(s) passed")
    return 0


COMMANDS = {
    "symbol": cmd_symbol,
    "map": cmd_map,
    "fixed": cmd_fixed,
    "core": cmd_core,
    "barcore": cmd_barcore,
    "series": cmd_series,
    "table": cmd_table,
    "verify": cmd_verify,
}
