"""Test the unbounded alphabet reduction to Closest Substring."""

import pytest

from pymotif.exceptions import DecodingError
from pymotif.exceptions import InvalidParameterError
from pymotif.exceptions import NotACliqueError
from pymotif.exceptions import WitnessProfileError
from pymotif.graphs import Graph
from pymotif.graphs import VertexSet
from pymotif.instances import Legend
from pymotif.instances import Solution
from pymotif.instances import SymbolString
from pymotif.instances import evaluate
from pymotif.reduce_unbounded import block_unbounded
from pymotif.reduce_unbounded import extract_clique_unbounded
from pymotif.reduce_unbounded import forward_witness_unbounded
from pymotif.reduce_unbounded import reduce_unbounded
from pymotif.reduce_unbounded import witness_profile_unbounded
from pymotif.types import Metric

EXAMPLE = Graph(4, [(1, 3), (1, 4), (2, 3), (3, 4)])


def test_block() -> None:
    block = block_unbounded(1, 2, (1, 3), 3, 1, Legend(4, 3))

    assert block == SymbolString([0, 2, 4, 7])


def test_block_bad_pair() -> None:
    with pytest.raises(InvalidParameterError):
        block_unbounded(2, 2, (1, 3), 3, 1, Legend(4, 3))


def test_block_bad_edge() -> None:
    with pytest.raises(InvalidParameterError):
        block_unbounded(1, 2, (3, 1), 3, 1, Legend(4, 3))


def test_parameters() -> None:
    instance, meta = reduce_unbounded(EXAMPLE, 3)

    assert instance.metric is Metric.MAX
    assert instance.count == 3
    assert instance.alphabet_size == 8
    assert instance.length == 4
    assert instance.budget == 1
    assert [len(string) for string in instance.strings] == [25, 25, 25]
    assert meta.legend == Legend(4, 3)
    assert meta.template_count == 0


def test_parameters_k4() -> None:
    instance, _ = reduce_unbounded(EXAMPLE, 4)

    assert instance.count == 6
    assert instance.alphabet_size == 11
    assert instance.length == 5
    assert instance.budget == 2


def test_blocks_and_barriers() -> None:
    instance, meta = reduce_unbounded(EXAMPLE, 3)

    assert instance.substring(0, 0).to_list() == [0, 2, 4, 7]
    assert instance.substring(1, meta.block_offset(2)).to_list() == [0, 5, 3, 7]
    assert instance.substring(2, meta.block_offset(4)).to_list() == [6, 2, 3, 7]
    assert instance.strings[0][4:7].to_list() == [4, 4, 4]
    assert instance.strings[2][-4:].to_list() == [6, 2, 3, 7]


def test_clique_size_too_small() -> None:
    with pytest.raises(InvalidParameterError):
        reduce_unbounded(EXAMPLE, 2)


def test_edgeless_graph() -> None:
    instance, _ = reduce_unbounded(Graph(3), 3)

    assert all(len(string) == 0 for string in instance.strings)


def test_forward_witness() -> None:
    instance, meta = reduce_unbounded(EXAMPLE, 3)

    solution = forward_witness_unbounded(meta, VertexSet([1, 3, 4]))

    assert solution.center == SymbolString([0, 2, 3, 7])
    assert solution.offsets == (0, 7, 21)
    assert evaluate(instance, solution).distances == (1, 1, 1)
    assert witness_profile_unbounded(instance, meta, solution) == (1, 1, 1)


def test_forward_witness_not_a_clique() -> None:
    _, meta = reduce_unbounded(EXAMPLE, 3)

    with pytest.raises(NotACliqueError):
        forward_witness_unbounded(meta, VertexSet([1, 2, 3]))


def test_forward_witness_checks_the_instance() -> None:
    _, meta = reduce_unbounded(EXAMPLE, 3)
    other, _ = reduce_unbounded(Graph(4, [(1, 2), *EXAMPLE.edges]), 3)

    with pytest.raises(WitnessProfileError, match="k - 2"):
        forward_witness_unbounded(meta, VertexSet([1, 3, 4]), other)


def test_witness_profile_mismatch() -> None:
    instance, meta = reduce_unbounded(EXAMPLE, 3)
    solution = Solution(SymbolString([0, 2, 3, 6]), (0, 7, 21))

    with pytest.raises(WitnessProfileError):
        witness_profile_unbounded(instance, meta, solution)


def test_extract_clique() -> None:
    _, meta = reduce_unbounded(EXAMPLE, 3)

    assert extract_clique_unbounded(meta, SymbolString([0, 2, 3, 7])) == VertexSet(
        [1, 3, 4],
    )


@pytest.mark.parametrize(
    ("center", "match"),
    [
        ([0, 2, 3], "length"),
        ([0, 2, 3, 6], "is not #"),
        ([0, 5, 3, 7], "not a vertex"),
        ([0, 0, 3, 7], "Duplicate"),
    ],
)
def test_extract_clique_errors(center: list, match: str) -> None:
    _, meta = reduce_unbounded(EXAMPLE, 3)

    with pytest.raises(DecodingError, match=match):
        extract_clique_unbounded(meta, SymbolString(center))
