#
#   Copyright (C) 2026  pymotif developers
#
#   This library is free software; you can redistribute it and/or
#   modify it under the terms of the GNU Lesser General Public
#   License as published by the Free Software Foundation; either
#   version 2.1 of the License, or (at your option) any later version.

#   This library is distributed in the hope that it will be useful,
#   but WITHOUT ANY WARRANTY; without even the implied warranty of
#   MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the GNU
#   Lesser General Public License for more details.

#   You should have received a copy of the GNU Lesser General Public License
#   along with this library; if not, write to the Free Software Foundation,
#   Inc., 51 Franklin Street, Fifth Floor, Boston, MA  02110-1301  USA
#
"""
Command line interface.

Exit status: 0 success, SAT or pass; 1 UNSAT or no clique; 2 verification
failure; 64 usage error; 65 malformed input; 70 resource cap hit.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import Callable
from typing import Dict
from typing import List
from typing import NoReturn
from typing import Optional
from typing import Sequence

from pymotif.about import __version__
from pymotif.exceptions import GraphFormatError
from pymotif.exceptions import InstanceFormatError
from pymotif.exceptions import InvalidParameterError
from pymotif.exceptions import ResourceLimitError
from pymotif.factories import parse_graph
from pymotif.factories import parse_instance
from pymotif.factories import serialize_instance
from pymotif.factories import serialize_legend
from pymotif.graphs import Graph
from pymotif.graphs import find_clique
from pymotif.harness import GraphSource
from pymotif.harness import round_trip
from pymotif.harness import selftest
from pymotif.harness import sweep
from pymotif.reductions import reduce
from pymotif.solvers import DEFAULT_DP_CAP
from pymotif.solvers import DEFAULT_NAIVE_CAP
from pymotif.solvers import SolverConfig
from pymotif.solvers import naive_center_oracle
from pymotif.solvers import solve
from pymotif.types import Variant

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_FAILED = 2
EXIT_USAGE = 64
EXIT_DATAERR = 65
EXIT_SOFTWARE = 70


class UsageError(Exception):
    """Command line arguments are inconsistent or a file cannot be read."""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _read(path: Path) -> str:
    try:
        return path.read_text(encoding="utf-8")
    except OSError as exc:
        msg = f"cannot read {path}: {exc.strerror}"
        raise UsageError(msg) from exc


def _write(path: Path, text: str) -> None:
    try:
        path.write_text(text, encoding="utf-8")
    except OSError as exc:
        msg = f"cannot write {path}: {exc.strerror}"
        raise UsageError(msg) from exc


def _config(args: argparse.Namespace) -> SolverConfig:
    return SolverConfig(
        naive_cap=args.naive_cap,
        dp_cap=args.dp_cap,
        node_cap=args.node_cap,
        threads=args.threads,
    )


def _load_graph(path: Path) -> Graph:
    return parse_graph(_read(path))


def cmd_reduce(args: argparse.Namespace) -> int:
    """Write the reduced instance and print its parameters."""
    variant = Variant(args.variant)
    if args.legend is not None and variant is not Variant.UNBOUNDED:
        msg = "--legend is only defined for the unbounded variant"
        raise UsageError(msg)
    graph = _load_graph(args.graph)
    instance, meta = reduce(graph, args.k, variant)
    _write(args.out, serialize_instance(instance))
    if args.legend is not None and meta.legend is not None:
        _write(args.legend, serialize_legend(meta.legend))
    profile = meta.parameters(instance)
    print(f"variant {variant.value} n {graph.n} m {graph.m} k {args.k}")
    print(
        f"strings {profile['strings']} length {profile['length']}"
        f" distance {profile['distance']} alphabet {profile['alphabet']}",
    )
    print(f"wrote {args.out}")
    return EXIT_OK


def cmd_solve(args: argparse.Namespace) -> int:
    """Solve an instance file and print the report."""
    instance = parse_instance(_read(args.input))
    if args.naive:
        report = naive_center_oracle(instance, args.naive_cap)
    else:
        report = solve(instance, _config(args))
    text = report.to_text()
    print(text, end="")
    if args.out is not None:
        _write(args.out, text)
    return EXIT_OK if report.sat else EXIT_NEGATIVE


def cmd_clique(args: argparse.Namespace) -> int:
    """Print the lexicographically smallest k-clique."""
    if args.k < 1:
        msg = f"--k must be positive, got {args.k}"
        raise UsageError(msg)
    clique = find_clique(_load_graph(args.graph), args.k)
    if clique is None:
        print(f"no {args.k}-clique")
        return EXIT_NEGATIVE
    print(clique)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    """Run round trips on one graph or a graph family."""
    variant = Variant(args.variant)
    config = _config(args)
    if args.graph is not None:
        report = round_trip(_load_graph(args.graph), args.k, variant, config)
        print(report.to_line(0))
        if report.message:
            print(f"# {report.message}")
        passes = int(report.verdict == "pass")
        print(f"{passes} pass / {int(report.verdict == 'fail')} fail")
        failed = report.verdict == "fail"
        inconclusive = report.verdict == "inconclusive"
    else:
        if args.exhaustive_n is not None:
            n, source = args.exhaustive_n, GraphSource.exhaustive()
        else:
            if args.n is None:
                msg = "--random needs --n"
                raise UsageError(msg)
            n, source = args.n, GraphSource.random(args.random, args.seed)
        summary = sweep(n, args.k, variant, source, config)
        print(summary.to_text(), end="")
        failed, inconclusive = bool(summary.fails), bool(summary.inconclusives)
    if failed:
        return EXIT_FAILED
    return EXIT_SOFTWARE if inconclusive else EXIT_OK


def cmd_selftest(args: argparse.Namespace) -> int:  # noqa: ARG001
    """Check the golden values end to end."""
    results = selftest()
    for check in results:
        print(f"{'ok' if check.ok else 'FAIL'} {check.name}: {check.detail}")
    return EXIT_OK if all(check.ok for check in results) else EXIT_FAILED


def _add_solver_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--naive-cap", type=int, default=DEFAULT_NAIVE_CAP)
    parser.add_argument("--dp-cap", type=int, default=DEFAULT_DP_CAP)
    parser.add_argument("--node-cap", type=int, default=None)
    parser.add_argument("--threads", type=int, default=1)


def build_parser() -> argparse.ArgumentParser:
    """Return the argument parser with all subcommands."""
    parser = _Parser(
        prog="pymotif",
        description="Clique reductions to motif search problems and exact solvers.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=0,
        help="log progress to stderr, twice for debug output",
    )
    commands = parser.add_subparsers(dest="command", required=True)
    variants = [variant.value for variant in Variant]

    reduce_cmd = commands.add_parser("reduce", help="reduce a Clique instance")
    reduce_cmd.add_argument("--variant", choices=variants, required=True)
    reduce_cmd.add_argument("--k", type=int, required=True)
    reduce_cmd.add_argument("--graph", type=Path, required=True)
    reduce_cmd.add_argument("--out", type=Path, required=True)
    reduce_cmd.add_argument("--legend", type=Path)
    reduce_cmd.set_defaults(handler=cmd_reduce)

    solve_cmd = commands.add_parser("solve", help="solve an MSI instance")
    solve_cmd.add_argument("--in", dest="input", type=Path, required=True)
    solve_cmd.add_argument(
        "--naive",
        action="store_true",
        help="enumerate all centers instead of searching offsets",
    )
    solve_cmd.add_argument("--out", type=Path, help="also write the report here")
    _add_solver_options(solve_cmd)
    solve_cmd.set_defaults(handler=cmd_solve)

    clique_cmd = commands.add_parser("clique", help="find a k-clique")
    clique_cmd.add_argument("--k", type=int, required=True)
    clique_cmd.add_argument("--graph", type=Path, required=True)
    clique_cmd.set_defaults(handler=cmd_clique)

    verify_cmd = commands.add_parser("verify", help="run round trips")
    verify_cmd.add_argument("--variant", choices=variants, required=True)
    verify_cmd.add_argument("--k", type=int, required=True)
    family = verify_cmd.add_mutually_exclusive_group(required=True)
    family.add_argument("--graph", type=Path)
    family.add_argument("--exhaustive-n", type=int)
    family.add_argument("--random", type=int, metavar="COUNT")
    verify_cmd.add_argument("--n", type=int)
    verify_cmd.add_argument("--seed", type=int, default=0)
    _add_solver_options(verify_cmd)
    verify_cmd.set_defaults(handler=cmd_verify)

    selftest_cmd = commands.add_parser("selftest", help="check the golden values")
    selftest_cmd.set_defaults(handler=cmd_selftest)
    return parser


def _configure_logging(verbosity: int) -> None:
    levels = {0: logging.WARNING, 1: logging.INFO}
    logging.basicConfig(
        level=levels.get(verbosity, logging.DEBUG),
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run the command line and return the exit status."""
    args = build_parser().parse_args(argv)
    _configure_logging(args.verbose)
    handler: Callable[[argparse.Namespace], int] = args.handler
    errors: Dict[type, int] = {
        UsageError: EXIT_USAGE,
        InvalidParameterError: EXIT_USAGE,
        GraphFormatError: EXIT_DATAERR,
        InstanceFormatError: EXIT_DATAERR,
        ResourceLimitError: EXIT_SOFTWARE,
        ValueError: EXIT_DATAERR,
    }
    try:
        return handler(args)
    except tuple(errors) as exc:
        status = next(code for kind, code in errors.items() if isinstance(exc, kind))
        print(f"pymotif: {exc}", file=sys.stderr)
        return status


def run(argv: Optional[List[str]] = None) -> NoReturn:
    """Run the command line and exit with its status."""
    sys.exit(main(argv))


__all__ = ["build_parser", "main", "run"]
