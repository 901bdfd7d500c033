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
Round trips between Clique and the motif problems.

A round trip checks, for one graph, that a k-clique exists exactly when the
reduced instance is solvable, that a solver center decodes to a clique and
that the forward witness has its exact distance profile.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from dataclasses import replace
from typing import Callable
from typing import Iterable
from typing import List
from typing import NamedTuple
from typing import Optional
from typing import Tuple

from typing_extensions import Literal

from pymotif.exceptions import DecodingError
from pymotif.exceptions import ResourceLimitError
from pymotif.exceptions import WitnessProfileError
from pymotif.factories import serialize_graph
from pymotif.graphs import Graph
from pymotif.graphs import VertexSet
from pymotif.graphs import all_graphs
from pymotif.graphs import find_clique
from pymotif.graphs import is_clique
from pymotif.graphs import random_graphs
from pymotif.instances import SymbolString
from pymotif.instances import evaluate
from pymotif.reduce_binary import front_tag
from pymotif.reductions import WitnessProfile
from pymotif.reductions import extract_clique
from pymotif.reductions import forward_witness
from pymotif.reductions import reduce
from pymotif.reductions import witness_profile
from pymotif.solvers import SolverConfig
from pymotif.solvers import prune_offsets
from pymotif.solvers import solve
from pymotif.types import RoundTripVerdict
from pymotif.types import Variant

logger = logging.getLogger(__name__)

EXAMPLE_GRAPH = Graph(4, [(1, 3), (1, 4), (2, 3), (3, 4)])


@dataclass(frozen=True)
class RoundTripReport:
    """Everything a round trip computed for one graph."""

    graph: Graph
    k: int
    variant: Variant
    verdict: RoundTripVerdict
    clique: Optional[VertexSet] = None
    sat: Optional[bool] = None
    aggregate: Optional[int] = None
    profile: Optional[WitnessProfile] = None
    extracted: Optional[VertexSet] = None
    nodes_explored: int = 0
    offsets_pruned: int = 0
    message: str = ""

    def to_line(self, index: int) -> str:
        """
        Return ``<index> <verdict> <clique?> <sat?> <aggregate>``.

        >>> RoundTripReport(Graph(3), 3, Variant.BINARY, "pass", sat=False).to_line(0)
        '0 pass - UNSAT -'
        """
        clique = "-" if self.clique is None else str(self.clique)
        sat = "?" if self.sat is None else ("SAT" if self.sat else "UNSAT")
        aggregate = "-" if self.aggregate is None else str(self.aggregate)
        return f"{index} {self.verdict} {clique} {sat} {aggregate}"


class GraphSource(NamedTuple):
    """Graph family of a sweep: every labelled graph, or seeded G(n, 1/2) graphs."""

    mode: Literal["exhaustive", "random"]
    count: int = 0
    seed: int = 0

    @classmethod
    def exhaustive(cls) -> "GraphSource":
        """Return the source enumerating all labelled graphs."""
        return cls("exhaustive")

    @classmethod
    def random(cls, count: int, seed: int) -> "GraphSource":
        """Return the source drawing ``count`` graphs from ``seed`` on."""
        return cls("random", count, seed)

    def graphs(self, n: int) -> Iterable[Graph]:
        """Yield the graphs on n vertices in index order."""
        if self.mode == "exhaustive":
            return all_graphs(n)
        return random_graphs(n, self.count, self.seed)


@dataclass(frozen=True)
class SweepSummary:
    """Round trip reports of a graph family, in graph index order."""

    reports: Tuple[RoundTripReport, ...]
    source: GraphSource

    def _count(self, verdict: RoundTripVerdict) -> int:
        return sum(report.verdict == verdict for report in self.reports)

    @property
    def passes(self) -> int:
        """Return the number of passing graphs."""
        return self._count("pass")

    @property
    def fails(self) -> int:
        """Return the number of failing graphs."""
        return self._count("fail")

    @property
    def inconclusives(self) -> int:
        """Return the number of graphs where a solver cap was hit."""
        return self._count("inconclusive")

    @property
    def nodes_explored(self) -> int:
        """Return the search nodes summed over all graphs."""
        return sum(report.nodes_explored for report in self.reports)

    @property
    def offsets_pruned(self) -> int:
        """Return the pruned offsets summed over all graphs."""
        return sum(report.offsets_pruned for report in self.reports)

    def failing(self) -> List[Tuple[int, RoundTripReport]]:
        """Return the failing reports with their graph index."""
        return [
            (index, report)
            for index, report in enumerate(self.reports)
            if report.verdict == "fail"
        ]

    def to_text(self) -> str:
        """Return one line per graph and the trailing summary block."""
        lines = [report.to_line(index) for index, report in enumerate(self.reports)]
        lines.append(f"# graphs {len(self.reports)}")
        if self.source.mode == "random":
            lines.append(f"# seed {self.source.seed}")
        lines.extend(
            [
                f"# inconclusive {self.inconclusives}",
                f"# nodes_explored {self.nodes_explored}",
                f"# offsets_pruned {self.offsets_pruned}",
            ],
        )
        for index, report in self.failing():
            lines.append(f"# failing graph {index}: {report.message}")
            lines.extend(
                f"# {line}" for line in serialize_graph(report.graph).splitlines()
            )
        lines.append(f"{self.passes} pass / {self.fails} fail")
        return "\n".join(lines) + "\n"


def round_trip(
    graph: Graph,
    k: int,
    variant: Variant,
    config: Optional[SolverConfig] = None,
) -> RoundTripReport:
    """
    Check ``graph has a k-clique <=> reduced instance is solvable`` on one graph.

    When a clique exists its forward witness must have the exact distance
    profile of the construction and survive offset pruning.
    When the solver finds a solution its center must decode to a k-clique.
    A solver cap makes the result inconclusive.
    """
    clique = find_clique(graph, k)
    instance, meta = reduce(graph, k, variant)
    report = RoundTripReport(graph, k, variant, "pass", clique=clique)
    if clique is not None:
        try:
            witness = forward_witness(meta, clique, instance)
            report = replace(report, profile=witness_profile(instance, meta, witness))
        except WitnessProfileError as exc:
            return replace(report, verdict="fail", message=str(exc))
        domain = prune_offsets(instance)
        if any(
            offset not in domain[index] for index, offset in enumerate(witness.offsets)
        ):
            msg = f"Witness offsets {witness.offsets} were pruned"
            return replace(report, verdict="fail", message=msg)
    try:
        solved = solve(instance, config)
    except ResourceLimitError as exc:
        logger.warning("round trip on %r inconclusive: %s", graph, exc)
        return replace(report, verdict="inconclusive", message=str(exc))
    report = replace(
        report,
        sat=solved.sat,
        aggregate=solved.aggregate,
        **solved.counters,
    )
    if solved.sat != (clique is not None):
        msg = f"clique {'present' if clique else 'absent'} but solver {solved.verdict}"
        return replace(report, verdict="fail", message=msg)
    if solved.solution is None:
        return report
    try:
        extracted = extract_clique(meta, solved.solution.center)
    except DecodingError as exc:
        return replace(report, verdict="fail", message=str(exc))
    report = replace(report, extracted=extracted)
    if len(extracted) != k or not is_clique(graph, extracted):
        msg = f"Solver center decodes to {extracted}, not a {k}-clique"
        return replace(report, verdict="fail", message=msg)
    return report


def sweep(
    n_max: int,
    k: int,
    variant: Variant,
    source: GraphSource,
    config: Optional[SolverConfig] = None,
    workers: int = 1,
) -> SweepSummary:
    """
    Run round trips over a family of graphs on ``n_max`` vertices.

    Reports are merged by graph index whatever the number of workers.
    """
    graphs = list(source.graphs(n_max))
    logger.info(
        "sweeping %d %s graphs on %d vertices, k=%d, %s variant",
        len(graphs),
        source.mode,
        n_max,
        k,
        variant.value,
    )

    def check(graph: Graph) -> RoundTripReport:
        return round_trip(graph, k, variant, config)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            reports = tuple(pool.map(check, graphs))
    else:
        reports = tuple(check(graph) for graph in graphs)
    summary = SweepSummary(reports=reports, source=source)
    logger.info("%d pass / %d fail", summary.passes, summary.fails)
    if summary.inconclusives:
        logger.warning("%d round trips were inconclusive", summary.inconclusives)
    return summary


class SelfTestCheck(NamedTuple):
    """Outcome of one golden value check."""

    name: str
    ok: bool
    detail: str


def _golden_unbounded() -> List[Tuple[str, Callable[[], Tuple[bool, str]]]]:
    instance, meta = reduce(EXAMPLE_GRAPH, 3, Variant.UNBOUNDED)
    blocks = [
        (0, 0, [0, 2, 4, 7]),
        (1, meta.block_offset(2), [0, 5, 3, 7]),
        (2, meta.block_offset(4), [6, 2, 3, 7]),
    ]

    def parameters() -> Tuple[bool, str]:
        lengths = [len(string) for string in instance.strings]
        found = (
            instance.count,
            instance.alphabet_size,
            instance.length,
            instance.budget,
            lengths,
        )
        return found == (3, 8, 4, 1, [25, 25, 25]), f"K, A, L, d, lengths = {found}"

    def block_contents() -> Tuple[bool, str]:
        found = [instance.substring(i, offset).to_list() for i, offset, _ in blocks]
        return found == [expected for *_, expected in blocks], f"blocks {found}"

    def witness() -> Tuple[bool, str]:
        solution = forward_witness(meta, VertexSet([1, 3, 4]), instance)
        distances = evaluate(instance, solution).distances
        return distances == (1, 1, 1), f"distances {distances}"

    return [
        ("unbounded parameters", parameters),
        ("unbounded blocks", block_contents),
        ("unbounded witness", witness),
        ("unbounded solver", lambda: _solved(EXAMPLE_GRAPH, Variant.UNBOUNDED)),
    ]


def _golden_binary() -> List[Tuple[str, Callable[[], Tuple[bool, str]]]]:
    instance, meta = reduce(EXAMPLE_GRAPH, 3, Variant.BINARY)

    def parameters() -> Tuple[bool, str]:
        lengths = [len(string) for string in instance.strings]
        found = (instance.length, instance.budget, instance.count, lengths)
        expected = (480, 9, 4, [1920, 1920, 1920, 480])
        return found == expected, f"L, d, K, lengths = {found}"

    def tags() -> Tuple[bool, str]:
        expected = SymbolString.join([[1] * 36 + [0]] * 12)
        section = meta.layout.back_len // meta.choice_count
        ok = front_tag(4, 3) == expected and section == 8  # noqa: PLR2004
        return ok, f"front tag length {len(expected)}, back section {section}"

    def witness() -> Tuple[bool, str]:
        solution = forward_witness(meta, VertexSet([1, 3, 4]), instance)
        table = witness_profile(instance, meta, solution)
        expected = ((0, 1, 8),) * 3 + ((0, 9, 0),)
        return table == expected, f"region distances {table}"

    return [
        ("binary parameters", parameters),
        ("binary tags", tags),
        ("binary witness", witness),
        ("binary solver", lambda: _solved(EXAMPLE_GRAPH, Variant.BINARY)),
    ]


def _golden_consensus() -> List[Tuple[str, Callable[[], Tuple[bool, str]]]]:
    instance, meta = reduce(EXAMPLE_GRAPH, 3, Variant.CONSENSUS)

    def parameters() -> Tuple[bool, str]:
        found = (instance.length, instance.budget, instance.count, meta.template_count)
        return found == (11892, 12, 4, 1), f"L, d, K, templates = {found}"

    def witness() -> Tuple[bool, str]:
        solution = forward_witness(meta, VertexSet([1, 3, 4]), instance)
        total = evaluate(instance, solution).aggregate
        return total == 12, f"total distance {total}"  # noqa: PLR2004

    def without_edge() -> Tuple[bool, str]:
        graph = EXAMPLE_GRAPH.without_edge(3, 4)
        report = solve(reduce(graph, 3, Variant.CONSENSUS)[0])
        return not report.sat, f"without edge (3, 4): {report.verdict}"

    return [
        ("consensus parameters", parameters),
        ("consensus witness", witness),
        ("consensus solver", lambda: _solved(EXAMPLE_GRAPH, Variant.CONSENSUS)),
        ("consensus without edge", without_edge),
    ]


def _solved(graph: Graph, variant: Variant) -> Tuple[bool, str]:
    instance, meta = reduce(graph, 3, variant)
    report = solve(instance)
    if report.solution is None:
        return False, report.verdict
    extracted = extract_clique(meta, report.solution.center)
    return extracted == VertexSet([1, 3, 4]), f"{report.verdict}, clique {extracted}"


def selftest() -> List[SelfTestCheck]:
    """
    Check the golden values of the three reductions on the four-vertex example.

    The example graph has edges (1, 3), (1, 4), (2, 3), (3, 4) and the single
    triangle {1, 3, 4}.
    """
    results = []
    checks = []
    for golden in (_golden_unbounded, _golden_binary, _golden_consensus):
        try:
            checks.extend(golden())
        except ValueError as exc:
            name = golden.__name__[len("_golden_") :]
            results.append(SelfTestCheck(name, ok=False, detail=str(exc)))
    for name, check in checks:
        try:
            ok, detail = check()
        except (ValueError, AssertionError, ResourceLimitError) as exc:
            ok, detail = False, f"{exc.__class__.__name__}: {exc}"
        logger.info("selftest %s: %s", name, "ok" if ok else "FAIL")
        results.append(SelfTestCheck(name, ok, detail))
    return results


__all__ = [
    "EXAMPLE_GRAPH",
    "GraphSource",
    "RoundTripReport",
    "SelfTestCheck",
    "SweepSummary",
    "round_trip",
    "selftest",
    "sweep",
]
