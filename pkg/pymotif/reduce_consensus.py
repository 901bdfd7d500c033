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
Clique to Consensus Patterns over the binary alphabet.

Blocks are ``front tag | encoding part`` without a back tag; the encoding
part is the one of the binary Closest Substring reduction.
Instead of a back tag the instance carries ``C(k, 2) - (k - 1)`` identical
template strings, front tag then ``1^{nk}``.
"""

import logging
from math import comb
from typing import Optional
from typing import Tuple

import numpy as np

from pymotif.exceptions import InvalidParameterError
from pymotif.exceptions import WitnessProfileError
from pymotif.graphs import Graph
from pymotif.graphs import VertexSet
from pymotif.instances import BlockLayout
from pymotif.instances import MotifInstance
from pymotif.instances import ReductionMeta
from pymotif.instances import Solution
from pymotif.instances import SymbolString
from pymotif.instances import check_clique_size
from pymotif.instances import column_mismatches
from pymotif.instances import evaluate
from pymotif.reduce_binary import choice_string
from pymotif.reduce_binary import decode_sections
from pymotif.reduce_binary import witness_center
from pymotif.types import Metric
from pymotif.types import Variant

logger = logging.getLogger(__name__)


def front_tag_cp(n: int, k: int) -> SymbolString:
    """
    Return ``(1^{nk^3} 0)^{nk^3} 0^{nk^3}``, of length ``n^2 k^6 + 2 n k^3``.

    >>> front_tag_cp(1, 1).to_text()
    '1 0 0'
    """
    width = n * k**3
    period = np.ones(width + 1, dtype=np.uint8)
    period[-1] = 0
    return SymbolString(
        np.concatenate([np.tile(period, width), np.zeros(width, dtype=np.uint8)]),
    )


def template_count_cp(k: int) -> int:
    """Return the number ``C(k, 2) - (k - 1)`` of template strings."""
    return comb(k, 2) - (k - 1)


def reduce_consensus(graph: Graph, k: int) -> Tuple[MotifInstance, ReductionMeta]:
    """
    Reduce a Clique instance ``(graph, k)`` to binary Consensus Patterns.

    ``L = n^2 k^6 + 2 n k^3 + nk`` and ``d = (C(k, 2) - (k - 1)) nk``.
    """
    check_clique_size(k)
    n = graph.n
    if n < 1:
        msg = "The consensus reduction needs at least one vertex"
        raise InvalidParameterError(msg)
    layout = BlockLayout(front_len=n * n * k**6 + 2 * n * k**3, enc_len=n * k)
    templates = template_count_cp(k)
    meta = ReductionMeta(
        variant=Variant.CONSENSUS,
        n=n,
        m=graph.m,
        k=k,
        edge_order=graph.edges,
        layout=layout,
        template_count=templates,
    )
    front = front_tag_cp(n, k)
    no_back = SymbolString([])
    strings = [choice_string(meta, pair, front, no_back) for pair in meta.pairs]
    template = SymbolString.join([front, np.ones(n * k, dtype=np.int64)])
    instance = MotifInstance(
        metric=Metric.SUM,
        alphabet_size=2,
        strings=(*strings, *([template] * templates)),
        length=layout.length,
        budget=templates * n * k,
    )
    logger.debug(
        "consensus reduction n=%d m=%d k=%d: K=%d L=%d d=%d",
        n,
        graph.m,
        k,
        instance.count,
        instance.length,
        instance.budget,
    )
    return instance, meta


def witness_profile_cp(
    instance: MotifInstance,
    meta: ReductionMeta,
    solution: Solution,
) -> int:
    """
    Return the total distance of the witness, which must equal d.

    Every encoding column must also disagree with exactly
    ``C(k, 2) - (k - 1)`` of the selected substrings, and the front tag with none.
    """
    total = evaluate(instance, solution).aggregate
    if total != instance.budget:
        msg = f"Witness total distance {total} differs from d = {instance.budget}"
        raise WitnessProfileError(msg)
    columns = column_mismatches(instance, solution)
    layout = meta.layout
    if columns[layout.front].any() or not np.all(
        columns[layout.encoding] == template_count_cp(meta.k),
    ):
        msg = "Witness column mismatches do not follow the encoding structure"
        raise WitnessProfileError(msg)
    return total


def forward_witness_cp(
    meta: ReductionMeta,
    clique: VertexSet,
    instance: Optional[MotifInstance] = None,
) -> Solution:
    """Build the solution a k-clique induces and check its total distance."""
    offsets = meta.witness_offsets(clique)
    solution = Solution(
        center=witness_center(meta, front_tag_cp(meta.n, meta.k), clique),
        offsets=offsets,
    )
    if instance is None:
        instance, _ = reduce_consensus(meta.graph, meta.k)
    witness_profile_cp(instance, meta, solution)
    return solution


def extract_clique_cp(meta: ReductionMeta, center: SymbolString) -> VertexSet:
    """Decode a length-L center of a consensus instance into k vertices."""
    return decode_sections(meta, center)


__all__ = [
    "extract_clique_cp",
    "forward_witness_cp",
    "front_tag_cp",
    "reduce_consensus",
    "template_count_cp",
    "witness_profile_cp",
]
