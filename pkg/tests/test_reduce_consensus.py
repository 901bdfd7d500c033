"""Test the reduction to binary Consensus Patterns."""

import numpy as np
import pytest

from pymotif.exceptions import DecodingError
from pymotif.exceptions import InvalidParameterError
from pymotif.exceptions import WitnessProfileError
from pymotif.graphs import Graph
from pymotif.graphs import VertexSet
from pymotif.instances import Solution
from pymotif.instances import SymbolString
from pymotif.instances import column_mismatches
from pymotif.instances import evaluate
from pymotif.reduce_binary import encode_part
from pymotif.reduce_binary import witness_center
from pymotif.reduce_consensus import extract_clique_cp
from pymotif.reduce_consensus import forward_witness_cp
from pymotif.reduce_consensus import front_tag_cp
from pymotif.reduce_consensus import reduce_consensus
from pymotif.reduce_consensus import template_count_cp
from pymotif.reduce_consensus import witness_profile_cp
from pymotif.types import Metric

EXAMPLE = Graph(4, [(1, 3), (1, 4), (2, 3), (3, 4)])


def test_front_tag() -> None:
    assert front_tag_cp(1, 1).to_text() == "1 0 0"
    assert len(front_tag_cp(4, 3)) == 11880


def test_front_tag_runs() -> None:
    tag = front_tag_cp(1, 2).to_list()

    assert tag == ([1] * 8 + [0]) * 8 + [0] * 8


@pytest.mark.parametrize(("k", "count"), [(3, 1), (4, 3), (5, 6)])
def test_template_count(k: int, count: int) -> None:
    assert template_count_cp(k) == count


def test_parameters() -> None:
    instance, meta = reduce_consensus(EXAMPLE, 3)

    assert instance.metric is Metric.SUM
    assert instance.alphabet_size == 2
    assert instance.length == 11892
    assert instance.budget == 12
    assert instance.count == 4
    assert meta.template_count == 1
    assert [len(string) for string in instance.strings[:3]] == [4 * 11892] * 3
    assert len(instance.strings[3]) == 11892


def test_template() -> None:
    instance, meta = reduce_consensus(EXAMPLE, 3)
    template = instance.strings[-1]

    assert template[meta.layout.front] == front_tag_cp(4, 3)
    assert template[meta.layout.encoding].to_list() == [1] * 12


def test_blocks_have_no_back_tag() -> None:
    instance, meta = reduce_consensus(EXAMPLE, 3)
    block = instance.substring(1, meta.block_offset(2))

    assert meta.layout.back_len == 0
    assert block[meta.layout.encoding] == encode_part(1, 3, (1, 4), 4, 3)


def test_needs_a_vertex() -> None:
    with pytest.raises(InvalidParameterError):
        reduce_consensus(Graph(0), 3)


def test_clique_size_too_small() -> None:
    with pytest.raises(InvalidParameterError):
        reduce_consensus(EXAMPLE, 2)


def test_forward_witness() -> None:
    instance, meta = reduce_consensus(EXAMPLE, 3)

    solution = forward_witness_cp(meta, VertexSet([1, 3, 4]), instance)

    assert evaluate(instance, solution).distances == (1, 1, 1, 9)
    assert witness_profile_cp(instance, meta, solution) == 12


def test_witness_columns() -> None:
    instance, meta = reduce_consensus(EXAMPLE, 3)
    solution = forward_witness_cp(meta, VertexSet([1, 3, 4]), instance)

    columns = column_mismatches(instance, solution)

    assert not columns[meta.layout.front].any()
    assert columns[meta.layout.encoding].tolist() == [1] * 12


def test_forward_witness_k4() -> None:
    graph = Graph(4, [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)])
    _, meta = reduce_consensus(graph, 4)

    solution = forward_witness_cp(meta, VertexSet([1, 2, 3, 4]))

    assert len(solution.offsets) == 6 + 3


def test_witness_profile_mismatch() -> None:
    instance, meta = reduce_consensus(EXAMPLE, 3)
    center = witness_center(meta, front_tag_cp(4, 3), VertexSet([1, 3, 4]))
    solution = Solution(center, (0, 0, 0, 0))

    with pytest.raises(WitnessProfileError):
        witness_profile_cp(instance, meta, solution)


def test_extract_clique() -> None:
    _, meta = reduce_consensus(EXAMPLE, 3)
    center = witness_center(meta, front_tag_cp(4, 3), VertexSet([1, 3, 4]))

    assert extract_clique_cp(meta, center) == VertexSet([1, 3, 4])


def test_extract_all_ones() -> None:
    _, meta = reduce_consensus(EXAMPLE, 3)
    center = SymbolString.join([front_tag_cp(4, 3), np.ones(12, dtype=np.int64)])

    with pytest.raises(DecodingError, match="holds 4 ones"):
        extract_clique_cp(meta, center)
