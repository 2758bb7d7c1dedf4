#!/usr/bin/env python3
"""
Nichols algebra classification runner.

Classifies diagrams of diagonal type, explores Weyl groupoids, runs the
criteria, enumerates rank-3 lines and triangles and sweeps the compactly
hyperbolic Cartan matrices.

Usage:
    python nichols.py classify "3; 1/5 1/5 1/5; 12:4/5 23:4/5"
    python nichols.py reflect "2; 1/3 1/3; 12:2/3" -i 1
    python nichols.py groupoid "2; 1/2 1/2; 12:1/3" --dot
    python nichols.py roots "2; 1/5 1/5; 12:4/5"
    python nichols.py criteria "3; 1/5 1/5 1/5; 12:1/5 13:1/5 23:1/5"
    python nichols.py enumerate lines --jobs 8 --out reports/lines.json --report reports/lines.md
    python nichols.py enumerate triangles --domain "order<=12"
    python nichols.py hyperbolic-sweep --census
    python nichols.py check-assets

Exit codes: 0 success, 1 acceptance mismatch, 2 input or configuration
error, 3 undecided (Unknown where a decision was required).
"""

import argparse
import json
import re
import sys
from dataclasses import asdict
from pathlib import Path
from typing import List, Optional

from rich.console import Console
from rich.table import Table

from src.config import DEFAULT_BOUNDS, MEMBERSHIP_MODES, ATOM_SOURCES, config
from src.criteria import all_candidates, blocked_shortcut, classify, evaluate_candidate
from src.diagram import DynkinDiagram, format_diagram, parse_diagram
from src.errors import ConfigurationError, InvalidArgument
from src.groupoid import Outcome, explore, reflect, to_dot, to_json
from src.harness import (
    compare_survivors,
    enumerate_lines,
    enumerate_triangles,
    expected_lines,
    expected_triangles,
    hyperbolic_sweep,
    sa1_cross_check,
)
from src.logs import setup_logging
from src.quality import AssetQualityChecker, replay_sample, survivor_coherence
from src.ranktwo import RankTwoOracle
from src.reporting import RunReportBuilder
from src.scalar import format_scalar, gf_domain, order_domain

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT, EXIT_UNDECIDED = 0, 1, 2, 3

console = Console()


def parse_args(argv: Optional[List[str]] = None) -> argparse.Namespace:
    """Parse command line arguments."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--max-nodes', type=int, default=None, help='Groupoid node bound')
    common.add_argument('--max-roots', type=int, default=None, help='Real root bound')
    common.add_argument('--max-height', type=int, default=None, help='Root height bound')
    common.add_argument('--membership', choices=MEMBERSHIP_MODES, default=None,
                        help='Rank-2 membership mode (default from config)')
    common.add_argument('--quiet', '-q', action='store_true', help='Minimal console output')
    common.add_argument('--verbose', '-v', action='store_true', help='Debug logging')

    parser = argparse.ArgumentParser(
        description='Nichols algebras of diagonal type - classification toolkit',
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=__doc__.split("Usage:")[1],
    )
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('classify', parents=[common], help='FiniteRoots, InfiniteGK or Unknown')
    p.add_argument('diagram')
    p.add_argument('--json', action='store_true', help='Print the verdict as JSON')

    p = sub.add_parser('reflect', parents=[common], help='Reflect a diagram at one vertex')
    p.add_argument('diagram')
    p.add_argument('-i', type=int, required=True, help='Vertex (1-based)')

    p = sub.add_parser('groupoid', parents=[common], help='Explore the Weyl groupoid')
    p.add_argument('diagram')
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument('--dot', action='store_true')
    fmt.add_argument('--json', action='store_true')

    p = sub.add_parser('roots', parents=[common], help='Positive real roots at the base node')
    p.add_argument('diagram')

    p = sub.add_parser('criteria', parents=[common], help='Criterion candidates as JSON lines')
    p.add_argument('diagram')

    p = sub.add_parser('enumerate', parents=[common], help='Rank-3 line or triangle enumeration')
    p.add_argument('shape', choices=['lines', 'triangles'])
    p.add_argument('--domain', default='gf', help='gf or order<=N (default: gf)')
    p.add_argument('--atoms', choices=ATOM_SOURCES, default=None, help='Atom source')
    p.add_argument('--jobs', type=int, default=None, help='Worker processes')
    p.add_argument('--replay', type=int, default=None, help='Kill certificates to replay')
    p.add_argument('--out', type=str, default=None, help='JSON report path')
    p.add_argument('--report', type=str, default=None, help='Markdown report path')

    p = sub.add_parser('hyperbolic-sweep', parents=[common], help='Compactly hyperbolic sweep')
    p.add_argument('--census', action='store_true', help='Show the census distribution')
    p.add_argument('--out', type=str, default=None, help='JSON report path')
    p.add_argument('--report', type=str, default=None, help='Markdown report path')

    p = sub.add_parser('check-assets', parents=[common], help='Validate the shipped data assets')
    p.add_argument('--report', type=str, default=None, help='Markdown report path')

    return parser.parse_args(argv)


def log(message: str, quiet: bool = False) -> None:
    """Print message unless quiet mode enabled."""
    if not quiet:
        console.print(message)


def parse_domain(text: str):
    """``gf`` or ``order<=N``."""
    if text == 'gf':
        return gf_domain(config.ranktwo.gf_generators)
    match = re.fullmatch(r'order<=(\d+)', text.replace(' ', ''))
    if match is None or int(match.group(1)) < 2:
        raise InvalidArgument(f"domain must be 'gf' or 'order<=N' with N >= 2, got {text!r}")
    return order_domain(int(match.group(1)))


def _bounds(args):
    return DEFAULT_BOUNDS.replace(
        max_nodes=args.max_nodes, max_roots=args.max_roots, max_root_height=args.max_height,
    )


def _oracle(args) -> RankTwoOracle:
    return RankTwoOracle(mode=args.membership or config.ranktwo.membership_mode, bounds=_bounds(args))


def _write(path: Optional[str], text: str, quiet: bool) -> None:
    if path:
        Path(path).parent.mkdir(parents=True, exist_ok=True)
        Path(path).write_text(text + "\n")
        log(f"  ✓ Saved: {path}", quiet)


# ============================================================================
# COMMANDS
# ============================================================================

def cmd_classify(args) -> int:
    d = parse_diagram(args.diagram)
    verdict = classify(d, _bounds(args), _oracle(args))
    if args.json:
        print(json.dumps(verdict.to_dict(), indent=2, sort_keys=True))
    else:
        table = Table(title=format_diagram(d))
        table.add_column("Outcome")
        table.add_column("Certificate")
        table.add_column("Note")
        cert = json.dumps(verdict.to_dict().get("certificate", {}), sort_keys=True) if verdict.certificate else "-"
        table.add_row(verdict.label, cert, verdict.note or "-")
        console.print(table)
    return EXIT_UNDECIDED if verdict.outcome is Outcome.UNKNOWN else EXIT_OK


def cmd_reflect(args) -> int:
    d = parse_diagram(args.diagram)
    if not 1 <= args.i <= d.rank:
        raise InvalidArgument(f"vertex must be in 1..{d.rank}, got {args.i}")
    result = reflect(d, args.i - 1)
    if isinstance(result, DynkinDiagram):
        print(format_diagram(result))
    else:
        print(f"Blocked: {result.describe()}")
    return EXIT_OK


def cmd_groupoid(args) -> int:
    d = parse_diagram(args.diagram)
    datum = explore(d, _bounds(args), with_roots=args.json)
    if args.dot:
        print(to_dot(datum), end="")
    elif args.json:
        print(to_json(datum))
    else:
        table = Table(title=f"Weyl groupoid of {format_diagram(d)}")
        table.add_column("#", justify="right")
        table.add_column("Node")
        table.add_column("Depth", justify="right")
        table.add_column("Neighbours")
        for x, node in enumerate(datum.nodes):
            neighbours = ", ".join(
                f"{i + 1}→{datum.edges[(x, i)]}" for i in range(d.rank) if (x, i) in datum.edges
            )
            table.add_row(str(x), format_diagram(node), str(datum.depth[x]), neighbours)
        console.print(table)
        log(f"Status: {datum.status.describe()}", args.quiet)
    return EXIT_OK if datum.graph_complete else EXIT_UNDECIDED


def cmd_roots(args) -> int:
    d = parse_diagram(args.diagram)
    datum = explore(d, _bounds(args), with_roots=True)
    if not datum.is_complete:
        log(f"[yellow]No finite root set: {datum.status.describe()}[/yellow]", args.quiet)
        return EXIT_UNDECIDED
    roots = sorted(datum.roots[0], key=lambda r: (sum(r), r))
    for root in roots:
        print(" ".join(str(x) for x in root))
    log(f"{len(roots)} positive real roots", args.quiet)
    return EXIT_OK


def cmd_criteria(args) -> int:
    d = parse_diagram(args.diagram)
    if d.rank != 3:
        raise InvalidArgument(f"criteria apply to rank 3 diagrams, got rank {d.rank}")
    oracle = _oracle(args)
    datum = explore(d, _bounds(args), with_roots=False)
    for x, node in enumerate(datum.nodes):
        shortcut = blocked_shortcut(node, datum.path_to(x))
        if shortcut is not None:
            print(json.dumps({"node": x, **asdict(shortcut), "path": [i + 1 for i in shortcut.path]}))
            continue
        for candidate in all_candidates(node):
            derived, result = evaluate_candidate(node, candidate, oracle)
            print(json.dumps({
                "node": x,
                "diagram": format_diagram(node),
                "path": [i + 1 for i in datum.path_to(x)],
                "criterion": candidate.criterion,
                "omega": list(candidate.omega),
                "alpha": list(candidate.alpha),
                "beta": list(candidate.beta),
                "applicability": list(candidate.applicability),
                "derived": [format_scalar(v) for v in derived],
                "match": result.status.value,
            }))
    return EXIT_OK


def cmd_enumerate(args) -> int:
    quiet = args.quiet
    shape = args.shape[:-1]

    log(f"\n[1/4] Enumerating {args.shape} over {args.domain}...", quiet)
    run = enumerate_lines if shape == "line" else enumerate_triangles
    report = run(
        domain=parse_domain(args.domain),
        jobs=args.jobs,
        mode=args.membership,
        bounds=_bounds(args),
        atom_source=args.atoms,
    )

    log("\n[2/4] Replaying kill certificates...", quiet)
    oracle = _oracle(args)
    report.replay = replay_sample(report.kills, sample=args.replay, oracle=oracle, bounds=_bounds(args))
    report.replay["coherence"] = survivor_coherence(
        [s.diagram for s in report.survivors], oracle=oracle, bounds=_bounds(args),
    )
    if shape == "triangle":
        check = sa1_cross_check(oracle=oracle, bounds=_bounds(args))
        report.runtime["sa1_cross_check"] = {
            "samples": check["samples"],
            "deferred": check["deferred"],
            "general": check["general"],
            "disagreements": len(check["disagreements"]),
        }

    log("\n[3/4] Comparing survivors...", quiet)
    comparison = None
    if args.domain == 'gf':
        expected = expected_lines() if shape == "line" else expected_triangles()
        comparison = compare_survivors(
            ((parse_diagram(s.diagram), s.label) for s in report.survivors), expected,
        )

    table = Table(title=f"{len(report.survivors)} surviving {args.shape}")
    table.add_column("Diagram")
    table.add_column("Label")
    for s in report.survivors:
        table.add_row(s.diagram, s.label)
    if not quiet:
        console.print(table)
        console.print(f"Kills: {report.killed}  In list: {report.in_list}  Deferred: {report.deferred}")

    log("\n[4/4] Writing artifacts...", quiet)
    checker = AssetQualityChecker()
    checker.add_replay(report.replay)
    _write(args.out, report.to_json(include_kills=True), quiet)
    if args.report:
        RunReportBuilder().create_enumeration_report(
            report, comparison, checker.gate_lines(), output_path=Path(args.report),
        )
        log(f"  ✓ Saved: {args.report}", quiet)

    failed = (
        not report.conserved
        or checker.has_errors()
        or (comparison is not None and not comparison["ok"])
        or report.runtime.get("sa1_cross_check", {}).get("disagreements", 0) > 0
    )
    if failed:
        log("\n❌ Enumeration does not match the expected result", quiet)
        return EXIT_MISMATCH
    if any(s.label == "Unknown" for s in report.survivors):
        return EXIT_UNDECIDED
    log("\n✅ Enumeration complete", quiet)
    return EXIT_OK


def cmd_sweep(args) -> int:
    quiet = args.quiet
    log("\n[1/2] Sweeping compactly hyperbolic rows...", quiet)
    sweep = hyperbolic_sweep(bounds=_bounds(args), oracle=_oracle(args))

    if args.census and not quiet:
        table = Table(title="Rank-3 census")
        table.add_column("Quantity")
        table.add_column("Found")
        table.add_column("Expected")
        for key, found in sweep.census["found"].items():
            table.add_row(key, str(found), str(sweep.census["expected"].get(key)))
        console.print(table)

    table = Table(title="Compactly hyperbolic rows")
    for column in ("Row", "Rank", "Source", "Expected", "Found", "Status"):
        table.add_column(column)
    for row in sweep.rows:
        table.add_row(str(row.row), str(row.rank), row.source, row.expected, row.found or "-", row.status)
    if not quiet:
        console.print(table)
        if sweep.classes:
            log(f"  census classes: {sweep.class_counts()}", quiet)

    log("\n[2/2] Writing artifacts...", quiet)
    _write(args.out, json.dumps(sweep.to_dict(), indent=2, sort_keys=True), quiet)
    if args.report:
        RunReportBuilder().create_sweep_report(sweep, output_path=Path(args.report))
        log(f"  ✓ Saved: {args.report}", quiet)

    if not sweep.passed:
        return EXIT_MISMATCH if sweep.failed else EXIT_UNDECIDED
    return EXIT_OK


def cmd_check_assets(args) -> int:
    checker = AssetQualityChecker()
    results = checker.check_all()
    table = Table(title="Data asset checks")
    table.add_column("Check")
    table.add_column("Status")
    table.add_column("Message")
    for r in results:
        table.add_row(r.check_name, "✅" if r.passed else r.severity.value, r.message)
    if not args.quiet:
        console.print(table)
    if args.report:
        checker.generate_report(Path(args.report))
    return EXIT_MISMATCH if checker.has_errors() else EXIT_OK


COMMANDS = {
    'classify': cmd_classify,
    'reflect': cmd_reflect,
    'groupoid': cmd_groupoid,
    'roots': cmd_roots,
    'criteria': cmd_criteria,
    'enumerate': cmd_enumerate,
    'hyperbolic-sweep': cmd_sweep,
    'check-assets': cmd_check_assets,
}


def main(argv: Optional[List[str]] = None) -> int:
    """
    Dispatch one command.

    Returns:
        Exit code: 0 success, 1 mismatch, 2 input error, 3 undecided
    """
    args = parse_args(argv)
    level = "DEBUG" if args.verbose else ("WARNING" if args.quiet else config.logging.level)
    setup_logging(level)

    try:
        return COMMANDS[args.command](args)
    except (InvalidArgument, ConfigurationError) as e:
        console.print(f"[red]ERROR:[/red] {e}")
        return EXIT_INPUT
    except KeyboardInterrupt:
        console.print("\n\nInterrupted by user")
        return 130


if __name__ == "__main__":
    sys.exit(main())
