# src/api/cli.py

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

import pandas as pd

from analysis.graph.distance_calculations import DistanceCalculator
from analysis.spectral.spectral_analysis import SpectralAnalyzer
from analysis.trees.tree_enumeration import TreeEnumerator
from analysis.trees.tree_families import TreeFamilies, parse_family_spec
from analysis.trees.tree_predicates import TreePredicates, parse_class_filter
from api.extremal_verify import ClaimBatchVerification, TheoremVerifier
from data.edge_list_adapter import EdgeListAdapter
from models.settings import SpectraSettings
from models.verification_models import Status, VerificationReport
from utils.config_util import resolve_settings
from utils.data_printer import DictPrinter, print_data, print_table
from utils.exceptions import ConfigError, SpectraGraftError

logger = logging.getLogger(__name__)

PROG = "spectra-graft"
USAGE_EXIT_CODE = 2
SUMMARY_COLUMNS = ["claim", "n", "class_size", "status", "rho_extremal", "margin", "ties", "extremal_code"]

# CLI flag dest -> SpectraSettings field
SETTING_FLAGS = {
    "tol": "tol",
    "jobs": "jobs",
    "seed": "seed",
    "cap": "enumeration_cap",
    "samples": "samples",
    "cache": "cache_enabled",
    "cache_path": "cache_path",
}


class CliParser(argparse.ArgumentParser):
    """ArgumentParser whose usage errors are one machine-parsable line and exit code 2"""

    def error(self, message: str):
        fail("UsageError", message)


def fail(kind: str, message: str):
    print(f"{PROG}: error[{kind}]: {message}", file=sys.stderr)
    raise SystemExit(USAGE_EXIT_CODE)


def build_parser() -> CliParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, help="power iteration relative residual tolerance")
    common.add_argument("--jobs", type=int, help="worker threads for spectral work")
    common.add_argument("--seed", type=int, help="seed for random vectors and sampling")
    common.add_argument("--cap", type=int, help="largest order the enumerator accepts")
    common.add_argument("--samples", type=int, help="configurations per tree in sampled mode")
    common.add_argument("--cache", action="store_true", default=None, help="enable the spectrum cache")
    common.add_argument("--cache-path", help="SQLite file of the spectrum cache")
    common.add_argument("--config", help="JSON config file, keys equal flag names")
    common.add_argument("--verbose", action="store_true", help="debug logging")

    parser = CliParser(prog=PROG, description="Distance signless Laplacian spectral radius of trees")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=CliParser)

    rho = sub.add_parser("rho", parents=[common], help="spectral radius of a graph")
    rho.add_argument("edges", nargs="?", help="edge-list file")
    rho.add_argument("--family", help="family spec, e.g. S:n=7,legs=2,2,2")
    rho.add_argument("--oracle", action="store_true", help="also print the full spectrum (Jacobi oracle)")

    family = sub.add_parser("family", parents=[common], help="construct a tree from a family spec")
    family.add_argument("spec", help="family spec, e.g. B:n=10,n0=3,parts=1,1,1")

    enum = sub.add_parser("enumerate", parents=[common], help="list trees of one order")
    enum.add_argument("--order", type=int, required=True)
    enum.add_argument("--filter", default="all",
                      help="all, non-caterpillar, non-starlike, intersection, pendants=k or a +-joined combination")
    enum.add_argument("--out", help="fixture file to write (code<TAB>edges per line)")
    enum.add_argument("--prufer-check", action="store_true",
                      help="cross-check the unfiltered count against the Prüfer oracle")

    verify = sub.add_parser("verify", parents=[common], help="verify a claim over a range of orders")
    verify.add_argument("--claim", required=True, choices=sorted(TheoremVerifier.CLAIMS) + ["all"])
    verify.add_argument("--n-min", type=int)
    verify.add_argument("--n-max", type=int)
    verify.add_argument("--mode", choices=TheoremVerifier.MODES, default="exhaustive")
    verify.add_argument("--json", help="write the JSON report here")
    verify.add_argument("--csv", help="write the per-order CSV summary here")

    report = sub.add_parser("report", parents=[common], help="summarize a saved JSON report")
    report.add_argument("path", help="JSON report written by verify --json")
    report.add_argument("--csv", help="write the per-order CSV summary here")
    return parser


def settings_from_args(args: argparse.Namespace) -> SpectraSettings:
    flags = {field: getattr(args, dest, None) for dest, field in SETTING_FLAGS.items()}
    return resolve_settings(flags, args.config)




def cmd_rho(args: argparse.Namespace, settings: SpectraSettings) -> int:
    if bool(args.edges) == bool(args.family):
        raise ConfigError("rho takes exactly one of an edge-list file or --family")
    g = (EdgeListAdapter.read_edge_list_file(args.edges) if args.edges
         else TreeFamilies.build(parse_family_spec(args.family)))

    result = SpectralAnalyzer.spectral_radius(g, settings.tol, settings.max_iterations)
    tr = DistanceCalculator.transmissions(DistanceCalculator.all_pairs_distances(g))
    data: Dict[str, Any] = {
        "order": g.order,
        "rho_Q": result.rho,
        "Tr_max": tr.tr_max,
        "residual": result.residual,
        "method": result.method,
        "iterations": result.iterations,
        "perron": result.perron,
    }
    if args.oracle:
        data["spectrum"] = SpectralAnalyzer.full_spectrum_oracle(
            DistanceCalculator.q_matrix(g), settings.oracle_tolerance, settings.oracle_max_sweeps)
    DictPrinter(max_list_items=g.order).print_dict(data)
    return 0


def cmd_family(args: argparse.Namespace, settings: SpectraSettings) -> int:
    spec = parse_family_spec(args.spec)
    g = TreeFamilies.build(spec)
    stats = DistanceCalculator.graph_stats(g)
    membership = TreePredicates.class_membership(g)
    print_data({
        "canonical_code": TreeEnumerator.canonical_code(g),
        "diameter": stats.diameter,
        "wiener_index": stats.wiener_index,
        "pendant_count": stats.pendant_count,
        "branching_vertices": stats.branching_vertices,
        "non_caterpillar": membership.non_caterpillar,
        "non_starlike": membership.non_starlike,
        "double_broom": membership.double_broom,
        "broom_ends": membership.broom_ends,
    }, title=str(spec))
    print()
    print(EdgeListAdapter.write_edge_list(g), end="")
    return 0


def cmd_enumerate(args: argparse.Namespace, settings: SpectraSettings) -> int:
    class_filter = parse_class_filter(args.filter)
    entries = []
    for code in TreeEnumerator.tree_codes(args.order, settings.enumeration_cap):
        g = TreeEnumerator.graph_from_code(code)
        if class_filter.accepts(TreePredicates.class_membership(g)):
            entries.append((code, g))

    if args.out:
        EdgeListAdapter.write_fixture(args.out, entries)
    else:
        for code, g in entries:
            print(EdgeListAdapter.format_fixture_line(code, g))
    print(f"{len(entries)} trees of order {args.order} in {class_filter.label}")
    if args.prufer_check:
        expected = TreeEnumerator.prufer_count_oracle(args.order, settings.prufer_cap)
        total = len(TreeEnumerator.tree_codes(args.order, settings.enumeration_cap))
        print(f"Prüfer oracle: {expected} trees of order {args.order}, enumerated {total}")
        if expected != total:
            logger.error("enumeration disagrees with the Prüfer oracle at n=%d", args.order)
            return 1
    return 0


def cmd_verify(args: argparse.Namespace, settings: SpectraSettings) -> int:
    verifier = TheoremVerifier(settings)
    if args.claim == "all":
        batch = ClaimBatchVerification(verifier)
        reports = batch.run(args.n_min, args.n_max, args.mode)
        payload = batch.to_dict()
    else:
        reports = [verifier.verify(args.claim, args.n_min, args.n_max, args.mode)]
        payload = reports[0].to_dict()

    if args.json:
        Path(args.json).write_text(json.dumps(payload, indent=2) + "\n")
    return summarize(reports, args.csv)


def cmd_report(args: argparse.Namespace, settings: SpectraSettings) -> int:
    try:
        payload = json.loads(Path(args.path).read_text(encoding="utf-8"))
        raw_reports = payload["reports"] if "reports" in payload else [payload]
        reports = [VerificationReport.from_dict(r) for r in raw_reports]
    except (OSError, UnicodeDecodeError, json.JSONDecodeError, KeyError, TypeError) as e:
        raise ConfigError(f"{args.path} is not a verification report: {e}")
    return summarize(reports, args.csv)


def summarize(reports: List[VerificationReport], csv_path: Optional[str]) -> int:
    """Print the human summary, optionally write the CSV, and return the exit code"""
    rows = [row for report in reports for row in report.summary_rows()]
    for report in reports:
        lo, hi = report.n_range
        print(f"\nclaim {report.claim}, n={lo}..{hi}: {report.status}")
        if report.note:
            print(f"note: {report.note}")
        print_table(report.summary_rows(), SUMMARY_COLUMNS)
        for outcome in report.outcomes:
            if outcome.status == Status.COUNTEREXAMPLE:
                witness = outcome.details.get("witness", outcome.details)
                print(f"counterexample at n={outcome.n}:")
                print(witness.get("edge_list", ""), end="")

    if csv_path:
        pd.DataFrame(rows, columns=list(rows[0]) if rows else SUMMARY_COLUMNS).to_csv(
            csv_path, index=False, float_format="%.12g")

    status = Status.combine([r.status for r in reports])
    print(f"\noverall: {status}")
    return Status.exit_code(status)


COMMANDS = {
    "rho": cmd_rho,
    "family": cmd_family,
    "enumerate": cmd_enumerate,
    "verify": cmd_verify,
    "report": cmd_report,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(asctime)s %(name)s %(levelname)s: %(message)s")
    try:
        settings = settings_from_args(args)
        return COMMANDS[args.command](args, settings)
    except SpectraGraftError as e:
        fail(type(e).__name__, str(e).replace("\n", " "))
    except OSError as e:
        fail(type(e).__name__, str(e))
