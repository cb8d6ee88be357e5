"""CLI entry point for antimagic-kn."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Optional, Sequence

from tabulate import tabulate

from antimagic.config import DEFAULT_LIMITS
from antimagic.core.certifier import certify, scan_range
from antimagic.core.closed_forms import sums_report
from antimagic.core.edgelist import EdgeListDocument, parse_file, serialize
from antimagic.core.errors import LabelingError
from antimagic.core.graphs import complete_graph
from antimagic.core.labeling import label_all, label_inverse, label_subgraph
from antimagic.core.models import (
    Certificate,
    CheckResult,
    LabelKind,
    ScanSummary,
    SearchOutcome,
    SumsReport,
    TotalCheck,
)
from antimagic.core.oracle import (
    check_antimagic,
    check_oriented_antimagic,
    check_total,
    exhaustive_antimagic,
    exhaustive_orientation_antimagic,
)

logger = logging.getLogger(__name__)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="antimagic",
        description="Canonical antimagic labelings of complete graphs: construct, report, certify, search.",
    )
    parser.add_argument(
        "-v",
        "--verbose",
        action="store_true",
        default=False,
        help="Log debug detail to stderr",
    )
    subparsers = parser.add_subparsers(dest="command", help="Available commands")

    # --- label command ---
    label_parser = subparsers.add_parser(
        "label",
        help="Print the canonical labeling of K_n or of a subgraph file",
    )
    label_parser.add_argument("n", nargs="?", type=int, help="Vertex count of K_n")
    label_source = label_parser.add_mutually_exclusive_group()
    label_source.add_argument(
        "--inverse",
        type=int,
        metavar="K",
        default=None,
        help="Print the edge carrying label K instead",
    )
    label_source.add_argument(
        "--graph",
        type=str,
        metavar="FILE",
        default=None,
        help="Label the edges of the subgraph in FILE",
    )

    # --- sums command ---
    sums_parser = subparsers.add_parser(
        "sums",
        help="Report S-, S+, S, S° and w_f for every vertex of K_n",
    )
    sums_parser.add_argument("n", type=int, help="Vertex count of K_n")
    _add_max_order(sums_parser)
    _add_format(sums_parser)

    # --- certify command ---
    certify_parser = subparsers.add_parser(
        "certify",
        help="Certify every theorem for one K_n",
    )
    certify_parser.add_argument("n", type=int, help="Vertex count of K_n")
    _add_max_order(certify_parser)
    _add_format(certify_parser)

    # --- scan command ---
    scan_parser = subparsers.add_parser(
        "scan",
        help="Certify every n in a range",
    )
    scan_parser.add_argument("n_lo", type=int, help="First vertex count")
    scan_parser.add_argument("n_hi", type=int, help="Last vertex count")
    scan_parser.add_argument(
        "--max-span",
        type=int,
        default=None,
        help=f"Largest allowed range (default: {DEFAULT_LIMITS.scan_span})",
    )
    _add_max_order(scan_parser)
    _add_workers(scan_parser)
    _add_format(scan_parser)

    # --- verify command ---
    verify_parser = subparsers.add_parser(
        "verify",
        help="Check a labeled edge-list file against the definitions",
    )
    verify_parser.add_argument("file", type=str, help="Labeled edge-list file")
    verify_parser.add_argument(
        "--directed",
        action="store_true",
        default=False,
        help=(
            "Read edges as arcs even without a `directed` header; "
            "arc lists always get the oriented check"
        ),
    )
    verify_parser.add_argument(
        "--total",
        action="store_true",
        default=False,
        help="Check the file's total labeling (vertex lines required)",
    )
    _add_format(verify_parser)

    # --- search command ---
    search_parser = subparsers.add_parser(
        "search",
        help="Exhaustively search labelings (and orientations) of a small graph",
    )
    search_parser.add_argument("file", type=str, help="Edge-list file")
    search_parser.add_argument(
        "--orientations",
        action="store_true",
        default=False,
        help="Search orientations x labelings for oriented antimagicness",
    )
    search_parser.add_argument(
        "--cap",
        type=int,
        default=None,
        help=(
            f"Largest edge count to search (default: {DEFAULT_LIMITS.search_cap}, "
            f"or {DEFAULT_LIMITS.orientation_cap} with --orientations)"
        ),
    )
    _add_workers(search_parser)
    _add_format(search_parser)

    return parser


def _add_format(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--format",
        type=str,
        choices=["table", "json"],
        default="table",
        help="Output format (default: table)",
    )


def _add_max_order(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--max-order",
        type=int,
        default=None,
        help=f"Largest n accepted (default: {DEFAULT_LIMITS.max_order})",
    )


def _add_workers(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--workers",
        type=int,
        default=None,
        help="Worker processes (default: 1, in-process)",
    )


def main(argv: Optional[Sequence[str]] = None) -> None:
    """Main CLI entry point."""
    parser = build_parser()
    args = parser.parse_args(argv)

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )

    if args.command is None:
        parser.print_help()
        sys.exit(0)

    if args.command == "label" and (args.n is None) == (args.graph is None):
        parser.error("label needs exactly one of n or --graph")

    commands = {
        "label": _cmd_label,
        "sums": _cmd_sums,
        "certify": _cmd_certify,
        "scan": _cmd_scan,
        "verify": _cmd_verify,
        "search": _cmd_search,
    }
    try:
        commands[args.command](args)
    except (LabelingError, OSError) as e:
        print(f"Error: {e}", file=sys.stderr)
        sys.exit(1)


def _verdict(value: Optional[bool]) -> str:
    return "n/a" if value is None else str(value).lower()


def _print_json(payload: dict) -> None:
    print(json.dumps(payload, indent=2))


def _load(path: str, directed: bool = False) -> EdgeListDocument:
    logger.debug("reading %s", path)
    return parse_file(path, directed=directed or None)


# --- label ---


def _cmd_label(args: argparse.Namespace) -> None:
    """Print a labeled edge list or a single inverse lookup."""
    if args.graph is not None:
        doc = _load(args.graph)
        print(serialize(doc.graph, label_subgraph(doc.graph)), end="")
        return
    if args.inverse is not None:
        i, j = label_inverse(args.n, args.inverse)
        print(f"{i} {j}")
        return
    print(serialize(complete_graph(args.n), label_all(args.n)), end="")


# --- sums ---


def _cmd_sums(args: argparse.Namespace) -> None:
    report = sums_report(args.n, max_order=args.max_order)
    if args.format == "json":
        _print_json(report.to_json())
    else:
        _print_sums(report)


def _print_sums(report: SumsReport) -> None:
    rows = [
        [r.vertex, r.in_sum, r.out_sum, r.total_sum, r.oriented_sum, r.vertex_weight]
        for r in report.rows
    ]
    print(f"Vertex sums of K_{report.order}")
    print(tabulate(rows, headers=["vertex", "S-", "S+", "S", "S°", "w_f"], tablefmt="github"))
    print()
    print(f"closed forms match direct summation: {_verdict(report.closed_vs_direct_ok)}")
    print(f"conservation (sum S = N(N+1), sum S° = 0): {_verdict(report.conservation_ok)}")
    if not report.sums_distinct:
        print("Warning: vertex sums are not pairwise distinct")


# --- certify / scan ---


def _cmd_certify(args: argparse.Namespace) -> None:
    cert = certify(args.n, max_order=args.max_order)
    if args.format == "json":
        _print_json(cert.to_json())
    else:
        _print_certificate(cert)


def _print_certificate(cert: Certificate) -> None:
    print(f"Certificate for K_{cert.order}")
    rows = [[name, _verdict(value)] for name, value in cert.flags().items()]
    print(tabulate(rows, headers=["flag", "verdict"], tablefmt="github"))

    checks = [
        ("vertex sums", cert.sums_check),
        ("vertex weights", cert.weights_check),
        ("oriented sums", cert.oriented_check),
    ]
    for name, check in checks:
        if check is None:
            continue
        if check.holds is False and check.witness is not None:
            a, b = check.witness
            print(f"{name}: v{a},v{b} both {check.witness_value}")
        if check.note:
            print(f"{name}: {check.note}")

    if cert.collisions:
        print("edge-weight collisions:")
        for c in cert.collisions:
            print(f"  {c}")
    if cert.exceptions:
        print("exception quadruples (i, i', j', j):")
        for q in cert.exceptions:
            print(f"  {q.as_tuple()}")


def _cmd_scan(args: argparse.Namespace) -> None:
    summary = scan_range(
        args.n_lo,
        args.n_hi,
        max_span=args.max_span,
        workers=args.workers,
        max_order=args.max_order,
    )
    if args.format == "json":
        _print_json(summary.to_json())
    else:
        _print_scan(summary)


def _print_scan(summary: ScanSummary) -> None:
    headers = ["n", "antimagic", "vertex_total", "edge_total", "totally_total", "oriented", "collisions"]
    rows = [
        [
            c.order,
            _verdict(c.antimagic_ok),
            _verdict(c.vertex_total_ok),
            _verdict(c.edge_total_ok),
            _verdict(c.totally_total_ok),
            _verdict(c.oriented_ok),
            len(c.collisions),
        ]
        for c in summary.rows
    ]
    print(tabulate(rows, headers=headers, tablefmt="github"))
    certified = ", ".join(str(n) for n in summary.edge_total_certified) or "none"
    print(f"\nedge-antimagic total certified for n in: {certified}")


# --- verify ---


def _cmd_verify(args: argparse.Namespace) -> None:
    doc = _load(args.file, directed=args.directed)
    if doc.labeling is None:
        raise LabelingError(f"{args.file} has no labels to verify")

    if args.total:
        if doc.labeling.kind != LabelKind.TOTAL:
            raise LabelingError(f"{args.file} has no vertex labels; --total needs 'v i k' lines")
        result = check_total(doc.graph, doc.labeling)
        if args.format == "json":
            _print_json({"order": doc.graph.n, **result.to_json()})
        else:
            _print_total(result)
        return

    if doc.directed:
        check = check_oriented_antimagic(doc.graph, doc.labeling)
        name = "oriented-antimagic"
    else:
        check = check_antimagic(doc.graph, doc.labeling)
        name = "antimagic"
    if args.format == "json":
        _print_json({"order": doc.graph.n, "flags": {name: check.holds}, "witnesses": check.to_json()})
    else:
        _print_check(name, check)


def _print_check(name: str, check: CheckResult) -> None:
    if check.holds:
        print(f"{name}: sums {' '.join(str(v) for v in check.values)}")
        return
    a, b = check.witness
    print(f"NOT {name}: v{a},v{b} both {check.witness_value}")


def _print_total(result: TotalCheck) -> None:
    details = {
        "vertex_antimagic_total": result.vertex_check,
        "edge_antimagic_total": result.edge_check,
    }
    for name, value in result.flags().items():
        line = f"{name.replace('_', '-')}: {_verdict(value)}"
        check = details.get(name)
        if check is not None and not check.holds:
            a, b = check.witness
            line += f" (collision at {check.witness_value}: {_key(a)} and {_key(b)})"
        print(line)
    for defect in result.defects:
        print(f"  defect: {defect}")


def _key(key: object) -> str:
    if isinstance(key, tuple):
        return f"({key[0]},{key[1]})"
    return f"v{key}"


# --- search ---


def _cmd_search(args: argparse.Namespace) -> None:
    doc = _load(args.file)
    if args.orientations:
        outcome = exhaustive_orientation_antimagic(doc.graph, cap=args.cap, workers=args.workers)
    else:
        outcome = exhaustive_antimagic(doc.graph, cap=args.cap, workers=args.workers)
    if args.format == "json":
        _print_json({"order": doc.graph.n, **outcome.to_json()})
    else:
        _print_search(doc, outcome, args.orientations)


def _print_search(doc: EdgeListDocument, outcome: SearchOutcome, orientations: bool) -> None:
    kind = "oriented-antimagic" if orientations else "antimagic"
    print(f"exists: {'yes' if outcome.exists else f'no (not {kind})'}")
    print(f"count: {outcome.count} of {outcome.examined} examined")
    if outcome.orientations_total is not None:
        print(
            f"orientations admitting an antimagic labeling: "
            f"{outcome.orientations_antimagic} of {outcome.orientations_total}"
        )
    if outcome.example is not None:
        graph = outcome.orientation if orientations else doc.graph
        print("witness:")
        print(serialize(graph, outcome.example), end="")


if __name__ == "__main__":
    main()
