"""Check clique <=> solvable and the layout of every reduction on small graphs."""

from math import comb

import pytest
from hypothesis import given
from hypothesis import settings
from hypothesis import strategies as st

from pymotif.graphs import Graph
from pymotif.graphs import all_graphs
from pymotif.graphs import find_clique
from pymotif.graphs import random_graphs
from pymotif.harness import round_trip
from pymotif.hypothesis.strategies import graphs
from pymotif.instances import column_mismatches
from pymotif.instances import evaluate
from pymotif.reduce_binary import reduce_binary
from pymotif.reduce_consensus import forward_witness_cp
from pymotif.reduce_consensus import reduce_consensus
from pymotif.reduce_consensus import template_count_cp
from pymotif.reduce_unbounded import reduce_unbounded
from pymotif.reductions import forward_witness
from pymotif.reductions import reduce
from pymotif.solvers import prune_offsets
from pymotif.types import Variant


@settings(max_examples=60, deadline=None)
@given(graph=graphs(min_vertices=3, max_vertices=5))
def test_unbounded_round_trip(graph: Graph) -> None:
    report = round_trip(graph, 3, Variant.UNBOUNDED)

    assert report.verdict == "pass", report.message


@settings(max_examples=30, deadline=None)
@given(graph=graphs(min_vertices=2, max_vertices=5))
def test_binary_round_trip(graph: Graph) -> None:
    report = round_trip(graph, 3, Variant.BINARY)

    assert report.verdict == "pass", report.message


@settings(max_examples=30, deadline=None)
@given(graph=graphs(min_vertices=3, max_vertices=5))
def test_binary_witness_meets_budget(graph: Graph) -> None:
    clique = find_clique(graph, 3)
    if clique is None:
        return
    instance, meta = reduce(graph, 3, Variant.BINARY)

    witness = forward_witness(meta, clique, instance)

    assert max(evaluate(instance, witness).distances) == instance.budget


@settings(max_examples=100, deadline=None)
@given(graph=graphs(min_vertices=2, max_vertices=6), k=st.sampled_from([3, 4]))
def test_unbounded_layout(graph: Graph, k: int) -> None:
    instance, meta = reduce_unbounded(graph, k)
    legend = meta.legend
    m = graph.m
    assert legend is not None

    assert instance.count == comb(k, 2)
    for (i, j), string in zip(meta.pairs, instance.strings):
        symbols = string.to_list()
        filler = legend.phi(meta.iprime(i, j))
        assert len(symbols) == (m * (k + 1) + (m - 1) * k if m else 0)
        assert symbols.count(legend.hash_id) == m
        for block, (r, s) in enumerate(graph.edges, start=1):
            start = meta.block_offset(block)
            content = symbols[start : start + k + 1]
            assert content[i - 1] == legend.sigma(r)
            assert content[j - 1] == legend.sigma(s)
            assert content[k] == legend.hash_id
            assert all(
                symbol == filler
                for position, symbol in enumerate(content)
                if position not in (i - 1, j - 1, k)
            )
            if block < m:
                assert symbols[start + k + 1 : start + 2 * k + 1] == [filler] * k


@settings(max_examples=40, deadline=None)
@given(graph=graphs(min_vertices=2, max_vertices=6), k=st.sampled_from([3, 4]))
def test_binary_layout(graph: Graph, k: int) -> None:
    instance, meta = reduce_binary(graph, k)
    layout = meta.layout
    nk = graph.n * k
    section = nk - 2 * k + 2

    assert layout.front_len == (3 * nk + 1) * nk
    assert layout.enc_len == nk
    assert instance.length == (3 * nk + 1) * nk + nk + comb(k, 2) * section
    assert instance.budget == nk - k
    assert instance.count == comb(k, 2) + 1
    for pair, string in zip(meta.pairs, instance.strings):
        assert len(string) == graph.m * instance.length
        start = (meta.iprime(*pair) - 1) * section
        for block in string.symbols.reshape(graph.m, instance.length):
            back = block[layout.back]
            assert int(block[layout.front].sum()) == 3 * nk * nk
            assert int(block[layout.encoding].sum()) == 2
            assert int(back.sum()) == section
            assert back[start : start + section].all()
    template = instance.strings[-1]
    assert len(template) == instance.length
    assert int(template.symbols.sum()) == 3 * nk * nk + nk


@pytest.mark.parametrize("n", [3, 4])
@pytest.mark.parametrize("k", [3, 4])
def test_consensus_witness_spends_the_whole_budget(n: int, k: int) -> None:
    for graph in all_graphs(n):
        clique = find_clique(graph, k)
        if clique is None:
            continue
        instance, meta = reduce_consensus(graph, k)

        witness = forward_witness_cp(meta, clique, instance)

        columns = column_mismatches(instance, witness)
        assert evaluate(instance, witness).aggregate == instance.budget
        assert not columns[meta.layout.front].any()
        assert (columns[meta.layout.encoding] == template_count_cp(k)).all()


@pytest.mark.slow
@pytest.mark.parametrize("variant", [Variant.BINARY, Variant.CONSENSUS])
def test_pruning_keeps_block_starts_only(variant: Variant) -> None:
    for graph in [*all_graphs(4), *random_graphs(5, 32, seed=0)]:
        instance, meta = reduce(graph, 3, variant)
        clique = find_clique(graph, 3)

        domain = prune_offsets(instance)

        assert domain.aligned(meta.block_period, range(meta.choice_count)), graph
        assert all(domain[index] == (0,) for index in meta.template_indices)
        if clique is not None:
            offsets = meta.witness_offsets(clique)
            assert all(
                offset in domain[index] for index, offset in enumerate(offsets)
            )
