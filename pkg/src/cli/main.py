"""Command-line surface: check, drill, twist, search, dinv, prop4.

Exit codes: 0 not obstructed / success, 10 obstructed, 2 invalid input,
3 unsolvable linking data.
"""

import argparse
import csv
import json
import sys
from collections.abc import Sequence
from typing import Any

from src.common.config import get_settings
from src.common.logging import get_logger, setup_logging
from src.common.metrics import write_metrics
from src.dinv import integral_surgery_obstruction, lens_d_invariants, parse_dvector
from src.lens import case_analysis
from src.search import (
    SearchConfig,
    TorqueFilter,
    bound_sweep,
    prop4_family_check,
    run_census,
    write_census,
)
from src.search.store import census_summary
from src.seiferter import UnsolvableLinkingError, drill, theorem2_check, twist, twist_ordinary
from src.sfs import (
    canonical_positions,
    h1_invariant_factors,
    h_invariant,
    parse_form,
    torque_profile,
)

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_UNSOLVABLE = 3
EXIT_OBSTRUCTED = 10


def _emit_json(payload: Any) -> None:
    print(json.dumps(payload, sort_keys=False))


def _group_text(factors: list[int]) -> str:
    if not factors:
        return "0"
    return " + ".join("Z" if f == 0 else f"Z/{f}" for f in factors)


def _int_list(text: str) -> list[int]:
    try:
        return [int(item) for item in text.split(",") if item.strip()]
    except ValueError as e:
        raise ValueError(f"expected a comma-separated list of integers, got {text!r}") from e


# ---------------------------------------------------------------------------
# Command handlers
# ---------------------------------------------------------------------------


def _cmd_check(args: argparse.Namespace) -> int:
    form = parse_form(args.form, max_fibres=3)
    report = theorem2_check(form)
    factors = h1_invariant_factors(form)
    profile = torque_profile(form)
    # candidate labels count canonical fibres; drill --fibre counts input fibres
    positions = canonical_positions(form)
    logger.info("obstruction_checked", form=str(form), h=report.h, obstructed=report.obstructed)

    if args.json:
        payload = report.model_dump(mode="json")
        payload["h1_invariant_factors"] = factors
        payload["torque_profile"] = profile
        payload["input_positions"] = list(positions)
        _emit_json(payload)
    else:
        print(f"form {form}")
        print(f"canonical {report.canonical}")
        print(f"H {report.h}")
        print(f"H1 {_group_text(factors)}")
        print(f"torque_profile {profile}")
        rendered = " ".join(
            f"{c.label}{c.sign}:{c.value}" for c in report.candidates
        )
        print(f"candidates {rendered}")
        labels = " ".join(f"{label}:{position}" for label, position in enumerate(positions, 1))
        print(f"label_to_input {labels}")
        print(f"verdict {'obstructed' if report.obstructed else 'not obstructed'}")
    return EXIT_OBSTRUCTED if report.obstructed else EXIT_OK


def _cmd_drill(args: argparse.Namespace) -> int:
    form = parse_form(args.form, max_fibres=3)
    sign = 1 if args.sign == "+" else -1
    result = drill(form, args.fibre, args.linking, sign)
    ambient = result.ambient.reduced()
    first, second = (s.reduced() for s in result.summands)
    cases = case_analysis(ambient, (first, second))

    if args.json:
        payload = result.model_dump(mode="json")
        payload["cases"] = cases.model_dump()
        _emit_json(payload)
    else:
        print(
            f"ambient {ambient}; summands {first} # {second}; "
            f"klein:{str(cases.klein).lower()} torus:{str(cases.torus).lower()} "
            f"cable:{str(cases.cable).lower()} ball:{str(cases.ball).lower()}"
        )
        if args.verbose:
            print(
                f"slope {result.slope}; knot class {result.knot_class} "
                f"null_homologous:{str(result.null_homologous).lower()} "
                f"primitive:{str(result.primitive).lower()}"
            )
    return EXIT_OK


def _cmd_twist(args: argparse.Namespace) -> int:
    form = parse_form(args.form, max_fibres=3)
    if args.ordinary:
        if args.n is None:
            raise ValueError("--ordinary needs --n")
        twisted = twist_ordinary(form, args.n, args.t)
    else:
        if args.fibre is None or args.q is None:
            raise ValueError("twisting an exceptional fibre needs --fibre and --q")
        twisted = twist(form, args.fibre, args.q, args.t)

    h = h_invariant(twisted)
    order: int | None = abs(h) if h else None
    if args.json:
        _emit_json({"form": str(twisted), "h": h, "h1_order": order})
    else:
        print(f"form {twisted}")
        print(f"H {h}")
        print(f"|H1| {order if order is not None else 'infinite'}")
    return EXIT_OK


def _search_config(args: argparse.Namespace, max_p: int, max_h: int | None) -> SearchConfig:
    settings = get_settings()
    if settings.workers is not None:
        workers = settings.workers
    elif args.workers is not None:
        workers = args.workers
    else:
        workers = 1
    return SearchConfig(
        max_multiplicity=max_p,
        max_abs_h=max_h,
        max_abs_background=args.max_background,
        torque_filter=TorqueFilter(args.filter),
        require_cyclic=not args.all_homology,
        merge_mirrors=args.merge_mirrors,
        worker_count=workers,
    )


def _print_rows(rows: list[dict[str, Any]], output_format: str) -> None:
    if output_format == "json":
        _emit_json(rows)
        return
    if not rows:
        return
    columns = list(rows[0])
    if output_format == "csv":
        writer = csv.DictWriter(sys.stdout, fieldnames=columns, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        return
    widths = {c: max(len(c), *(len(str(r[c])) for r in rows)) for c in columns}
    print("  ".join(c.rjust(widths[c]) for c in columns))
    for row in rows:
        print("  ".join(str(row[c]).rjust(widths[c]) for c in columns))


def _cmd_search(args: argparse.Namespace) -> int:
    settings = get_settings()
    max_ps = _int_list(args.max_p) if args.max_p else [settings.default_max_multiplicity]
    if args.max_h is None:
        max_hs: list[int | None] = [settings.default_max_abs_h]
    elif args.max_h == "none":
        max_hs = [None]
    else:
        max_hs = [h for h in _int_list(args.max_h)]
    output_format = "json" if args.json else args.format

    if len(max_ps) > 1 or len(max_hs) > 1:
        base = _search_config(args, max_ps[0], max_hs[0])
        points = bound_sweep(base, max_ps, max_hs)
        _print_rows([p.model_dump() for p in points], output_format)
    else:
        config = _search_config(args, max_ps[0], max_hs[0])
        census = run_census(config)
        out = args.out or settings.census_output_dir
        write_census(census, out)
        if output_format == "table":
            print(f"run {census.run_id}")
            print(f"examined {census.total_examined}")
            print(f"obstructed {census.total_obstructed}")
            print(f"written to {out}")
        elif output_format == "json":
            # run_id and wall_time_ms stay in summary.json and the logs
            _emit_json(census_summary(census, include_volatile=False))
        else:
            row = {
                "max_multiplicity": config.max_multiplicity,
                "max_abs_h": config.max_abs_h,
                "total_examined": census.total_examined,
                "total_obstructed": census.total_obstructed,
            }
            _print_rows([row], "csv")

    if settings.metrics_file:
        write_metrics(settings.metrics_file)
    return EXIT_OK


def _cmd_dinv(args: argparse.Namespace) -> int:
    if args.test is not None:
        if args.n is None:
            raise ValueError("--test needs --n")
        d = parse_dvector(args.test)
        obstructed = integral_surgery_obstruction(d, args.n)
        if args.json:
            _emit_json({"d": d.model_dump(mode="json")["values"], "n": args.n,
                        "obstructed": obstructed})
        else:
            print(f"obstructed: {str(obstructed).lower()}")
        return EXIT_OBSTRUCTED if obstructed else EXIT_OK

    if args.p is None or args.q is None:
        raise ValueError("dinv needs P Q, or --test VALUES --n N")
    values = lens_d_invariants(args.p, args.q)
    if args.json:
        _emit_json([str(v) for v in values.values])
    else:
        for i, value in enumerate(values.values):
            print(f"{i} {value}")
    return EXIT_OK


def _cmd_prop4(args: argparse.Namespace) -> int:
    reports = prop4_family_check(args.p)
    if args.json:
        _emit_json([{**r.model_dump(), "holds": r.holds} for r in reports])
    else:
        for r in reports:
            residues = " ".join(str(x) for x in r.residues)
            verdict = "obstructed" if r.obstructed else "not obstructed"
            print(f"p={r.p} residues {residues} H={r.h} {verdict} holds:{str(r.holds).lower()}")
    return EXIT_OK if all(r.holds for r in reports) else EXIT_FAILED


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="seifcalc",
        description=(
            "Seifert fibred surgery arithmetic with seiferters.\n\n"
            "  seifcalc check '(3,-17)(5,17)(7,17)'\n"
            "  seifcalc drill '(5,-2)(3,-1)(4,3)' --fibre 3 --linking 0 --sign +\n"
            "  seifcalc search --max-p 6 --max-h 50\n"
        ),
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="Emit one JSON document.")
    common.add_argument(
        "-v", "--verbose", action="store_true", help="Log at INFO level to stderr."
    )

    subparsers = parser.add_subparsers(dest="command", required=True)

    check = subparsers.add_parser("check", parents=[common], help="Run the obstruction.")
    check.add_argument("form", help="Form text, e.g. '(5,-2)(3,-1)(4,3)'.")
    check.set_defaults(handler=_cmd_check)

    drill_parser = subparsers.add_parser(
        "drill", parents=[common], help="Drill a seiferter fibre into a lens space."
    )
    drill_parser.add_argument("form")
    drill_parser.add_argument("--fibre", type=int, required=True, help="1-based fibre index.")
    drill_parser.add_argument("--linking", type=int, required=True)
    drill_parser.add_argument("--sign", choices=["+", "-"], default="+")
    drill_parser.set_defaults(handler=_cmd_drill)

    twist_parser = subparsers.add_parser("twist", parents=[common], help="Twist along a seiferter.")
    twist_parser.add_argument("form")
    twist_parser.add_argument("--fibre", type=int)
    twist_parser.add_argument("--q", type=int)
    twist_parser.add_argument("--ordinary", action="store_true")
    twist_parser.add_argument("--n", type=int)
    twist_parser.add_argument("--t", type=int, required=True)
    twist_parser.set_defaults(handler=_cmd_twist)

    search = subparsers.add_parser("search", parents=[common], help="Run a census.")
    search.add_argument("--max-p", help="Largest multiplicity; a comma list runs a sweep.")
    search.add_argument("--max-h", help="Bound on |H|; a comma list runs a sweep; 'none' drops it.")
    search.add_argument("--max-background", type=int, help="Bound on |e0|.")
    search.add_argument(
        "--filter", choices=[f.value for f in TorqueFilter], default=TorqueFilter.ANY.value
    )
    search.add_argument("--workers", type=int)
    search.add_argument("--out", help="Census output directory.")
    search.add_argument("--merge-mirrors", action="store_true")
    search.add_argument(
        "--all-homology", action="store_true", help="Do not require cyclic H_1."
    )
    search.add_argument("--format", choices=["table", "json", "csv"], default="table")
    search.set_defaults(handler=_cmd_search)

    dinv = subparsers.add_parser("dinv", parents=[common], help="Lens space d-invariants.")
    dinv.add_argument("p", type=int, nargs="?")
    dinv.add_argument("q", type=int, nargs="?")
    dinv.add_argument("--test", help="Comma-separated d-invariants to test against L(n,1).")
    dinv.add_argument("--n", type=int)
    dinv.set_defaults(handler=_cmd_dinv)

    prop4 = subparsers.add_parser(
        "prop4", parents=[common], help="Check the H = 17 obstructed family."
    )
    prop4.add_argument("p", type=int, nargs="+")
    prop4.set_defaults(handler=_cmd_prop4)

    return parser


# ---------------------------------------------------------------------------
# Entrypoints
# ---------------------------------------------------------------------------


def run_cli(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv) if argv is not None else None)
    except SystemExit as exc:
        return int(exc.code or 0)

    setup_logging("INFO" if args.verbose else None)
    try:
        return int(args.handler(args))
    except UnsolvableLinkingError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_UNSOLVABLE
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


def main(argv: Sequence[str] | None = None) -> int:
    return run_cli(argv)


def cli_entrypoint() -> None:
    raise SystemExit(run_cli())


if __name__ == "__main__":
    cli_entrypoint()
