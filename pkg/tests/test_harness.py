"""Test round trips, sweeps and the self test."""

import logging

import pytest

from pymotif import harness
from pymotif.graphs import Graph
from pymotif.graphs import VertexSet
from pymotif.reductions import reduce
from pymotif.solvers import SolverConfig
from pymotif.solvers import solve
from pymotif.types import Variant

TRIANGLE = VertexSet([1, 3, 4])


@pytest.mark.parametrize("variant", list(Variant))
def test_round_trip_with_clique(variant: Variant) -> None:
    report = harness.round_trip(harness.EXAMPLE_GRAPH, 3, variant)

    assert report.verdict == "pass"
    assert report.clique == TRIANGLE
    assert report.sat
    assert report.extracted == TRIANGLE
    assert report.profile is not None
    assert report.message == ""


@pytest.mark.parametrize("variant", list(Variant))
def test_round_trip_without_clique(variant: Variant) -> None:
    graph = harness.EXAMPLE_GRAPH.without_edge(1, 3)

    report = harness.round_trip(graph, 3, variant)

    assert report.verdict == "pass"
    assert report.clique is None
    assert report.sat is False
    assert report.profile is None


def test_round_trip_inconclusive(caplog: pytest.LogCaptureFixture) -> None:
    with caplog.at_level(logging.WARNING, logger="pymotif.harness"):
        report = harness.round_trip(
            harness.EXAMPLE_GRAPH,
            3,
            Variant.BINARY,
            SolverConfig(node_cap=1),
        )

    assert report.verdict == "inconclusive"
    assert "node_cap" in report.message
    assert "inconclusive" in caplog.text


def test_round_trip_keeps_solver_counters() -> None:
    instance, _ = reduce(harness.EXAMPLE_GRAPH, 3, Variant.BINARY)
    solved = solve(instance)

    report = harness.round_trip(harness.EXAMPLE_GRAPH, 3, Variant.BINARY)

    assert report.nodes_explored == solved.counters["nodes_explored"]
    assert report.offsets_pruned == solved.counters["offsets_pruned"]


def test_round_trip_line() -> None:
    report = harness.round_trip(harness.EXAMPLE_GRAPH, 3, Variant.UNBOUNDED)

    assert report.to_line(7) == "7 pass {1,3,4} SAT 1"


def test_round_trip_line_unsolved() -> None:
    report = harness.RoundTripReport(Graph(3), 3, Variant.BINARY, "inconclusive")

    assert report.to_line(0) == "0 inconclusive - ? -"


def test_graph_source() -> None:
    assert len(list(harness.GraphSource.exhaustive().graphs(3))) == 8
    assert len(list(harness.GraphSource.random(5, seed=2).graphs(4))) == 5


def test_sweep_small() -> None:
    summary = harness.sweep(3, 3, Variant.UNBOUNDED, harness.GraphSource.exhaustive())

    assert len(summary.reports) == 8
    assert summary.passes == 8
    assert summary.fails == 0
    assert summary.inconclusives == 0
    assert summary.failing() == []


def test_sweep_text() -> None:
    summary = harness.sweep(3, 3, Variant.UNBOUNDED, harness.GraphSource.exhaustive())

    lines = summary.to_text().splitlines()

    assert lines[0] == "0 pass - UNSAT -"
    assert lines[7] == "7 pass {1,2,3} SAT 1"
    assert "# graphs 8" in lines
    assert "# inconclusive 0" in lines
    assert lines[-1] == "8 pass / 0 fail"


def test_sweep_text_random_has_seed() -> None:
    source = harness.GraphSource.random(2, seed=9)

    summary = harness.sweep(4, 3, Variant.UNBOUNDED, source)

    assert "# seed 9" in summary.to_text().splitlines()


def test_sweep_failing_graphs_are_listed() -> None:
    failing = harness.RoundTripReport(
        Graph(3, [(1, 2)]),
        3,
        Variant.UNBOUNDED,
        "fail",
        message="broken",
    )
    summary = harness.SweepSummary((failing,), harness.GraphSource.exhaustive())

    text = summary.to_text()

    assert "# failing graph 0: broken\n# p edge 3 1\n# e 1 2\n" in text
    assert text.endswith("0 pass / 1 fail\n")


def test_sweep_workers_keep_order() -> None:
    source = harness.GraphSource.exhaustive()

    sequential = harness.sweep(3, 3, Variant.UNBOUNDED, source)
    parallel = harness.sweep(3, 3, Variant.UNBOUNDED, source, workers=4)

    assert parallel.to_text() == sequential.to_text()


def test_selftest() -> None:
    checks = harness.selftest()

    assert len(checks) == 12
    assert all(check.ok for check in checks), [c for c in checks if not c.ok]


@pytest.mark.slow
@pytest.mark.parametrize("variant", list(Variant))
def test_exhaustive_four_vertices(variant: Variant) -> None:
    summary = harness.sweep(4, 3, variant, harness.GraphSource.exhaustive())

    assert summary.passes == 64
    assert summary.inconclusives == 0


@pytest.mark.slow
@pytest.mark.parametrize("variant", [Variant.UNBOUNDED, Variant.BINARY])
def test_random_five_vertices(variant: Variant) -> None:
    summary = harness.sweep(5, 3, variant, harness.GraphSource.random(32, seed=0))

    assert summary.passes == 32
