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
Clique to Closest Substring over an unbounded alphabet.

Every pair of clique slots ``i < j`` gets a choice string ``c_{i,j}`` with
one block per edge.
A block is ``k + 1`` symbols long: the encoding symbols of the edge's
endpoints at positions i and j, the synchronizing symbol ``#`` last, and the
string's identification symbol everywhere else.
Consecutive blocks are separated by k identification symbols.
"""

import logging
from math import comb
from typing import List
from typing import Optional
from typing import Tuple

from pymotif.exceptions import DecodingError
from pymotif.exceptions import InvalidGraphError
from pymotif.exceptions import InvalidParameterError
from pymotif.exceptions import WitnessProfileError
from pymotif.graphs import Graph
from pymotif.graphs import VertexSet
from pymotif.instances import BlockLayout
from pymotif.instances import Legend
from pymotif.instances import MotifInstance
from pymotif.instances import ReductionMeta
from pymotif.instances import Solution
from pymotif.instances import SymbolString
from pymotif.instances import check_clique_size
from pymotif.instances import evaluate
from pymotif.types import Edge
from pymotif.types import Metric
from pymotif.types import Variant

logger = logging.getLogger(__name__)


def block_unbounded(
    i: int,
    j: int,
    edge: Edge,
    k: int,
    iprime: int,
    legend: Legend,
) -> SymbolString:
    """
    Return the block of edge ``(r, s)`` in choice string ``c_{i,j}``.

    >>> block_unbounded(1, 2, (1, 3), 3, 1, Legend(4, 3))
    SymbolString([0, 2, 4, 7])
    """
    r, s = edge
    if not 1 <= i < j <= k:
        msg = f"Need 1 <= i < j <= k, got i={i}, j={j}, k={k}"
        raise InvalidParameterError(msg)
    if not 1 <= r < s <= legend.n:
        msg = f"Need 1 <= r < s <= {legend.n}, got {edge}"
        raise InvalidParameterError(msg)
    filler = legend.phi(iprime)
    symbols = [filler] * (k + 1)
    symbols[i - 1] = legend.sigma(r)
    symbols[j - 1] = legend.sigma(s)
    symbols[k] = legend.hash_id
    return SymbolString(symbols)


def reduce_unbounded(graph: Graph, k: int) -> Tuple[MotifInstance, ReductionMeta]:
    """
    Reduce a Clique instance ``(graph, k)`` to Closest Substring.

    The result has C(k, 2) choice strings over ``n + C(k, 2) + 1`` symbols,
    substring length ``k + 1`` and distance budget ``k - 2``.
    """
    check_clique_size(k)
    legend = Legend(n=graph.n, pair_count=comb(k, 2))
    meta = ReductionMeta(
        variant=Variant.UNBOUNDED,
        n=graph.n,
        m=graph.m,
        k=k,
        edge_order=graph.edges,
        layout=BlockLayout(front_len=0, enc_len=k, back_len=1),
        legend=legend,
    )
    strings = []
    for i, j in meta.pairs:
        iprime = meta.iprime(i, j)
        barrier = [legend.phi(iprime)] * k
        parts: List[SymbolString] = []
        for index, edge in enumerate(graph.edges):
            if index:
                parts.append(SymbolString(barrier))
            parts.append(block_unbounded(i, j, edge, k, iprime, legend))
        strings.append(SymbolString.join(parts))
    instance = MotifInstance(
        metric=Metric.MAX,
        alphabet_size=legend.alphabet_size,
        strings=tuple(strings),
        length=k + 1,
        budget=k - 2,
    )
    logger.debug(
        "unbounded reduction n=%d m=%d k=%d: K=%d A=%d L=%d d=%d",
        graph.n,
        graph.m,
        k,
        instance.count,
        instance.alphabet_size,
        instance.length,
        instance.budget,
    )
    return instance, meta


def forward_witness_unbounded(
    meta: ReductionMeta,
    clique: VertexSet,
    instance: Optional[MotifInstance] = None,
) -> Solution:
    """
    Build the solution a k-clique ``h_1 < ... < h_k`` induces.

    The center is ``sigma_{h_1} ... sigma_{h_k} #``; in ``c_{i,j}`` it matches
    the block of edge ``(h_i, h_j)`` at distance exactly ``k - 2``, which is
    checked against the instance, rebuilt from the metadata when not given.
    """
    if meta.legend is None:
        msg = "Reduction metadata carries no legend"
        raise DecodingError(msg)
    offsets = meta.witness_offsets(clique)
    center = SymbolString(
        [*(meta.legend.sigma(vertex) for vertex in clique), meta.legend.hash_id],
    )
    solution = Solution(center=center, offsets=offsets)
    if instance is None:
        instance, _ = reduce_unbounded(meta.graph, meta.k)
    witness_profile_unbounded(instance, meta, solution)
    return solution


def extract_clique_unbounded(meta: ReductionMeta, center: SymbolString) -> VertexSet:
    """
    Decode the first k symbols of a center into vertex names.

    >>> from pymotif.graphs import Graph
    >>> _, meta = reduce_unbounded(Graph(4, [(1, 3), (1, 4), (2, 3), (3, 4)]), 3)
    >>> extract_clique_unbounded(meta, SymbolString([0, 2, 3, 7]))
    VertexSet([1, 3, 4])
    """
    legend = meta.legend
    if legend is None:
        msg = "Reduction metadata carries no legend"
        raise DecodingError(msg)
    if len(center) != meta.k + 1:
        msg = f"Center has length {len(center)}, expected {meta.k + 1}"
        raise DecodingError(msg)
    if center[meta.k] != legend.hash_id:
        msg = f"Last center symbol {center[meta.k]} is not #"
        raise DecodingError(msg)
    vertices = []
    for position, symbol in enumerate(center[: meta.k], 1):
        kind, index = legend.decode(symbol)
        if kind != "sigma":
            msg = f"Center symbol {symbol} at position {position} is not a vertex"
            raise DecodingError(msg)
        vertices.append(index)
    try:
        return VertexSet(vertices)
    except InvalidGraphError as exc:
        raise DecodingError(str(exc)) from exc


def witness_profile_unbounded(
    instance: MotifInstance,
    meta: ReductionMeta,
    solution: Solution,
) -> Tuple[int, ...]:
    """Return the witness distances, raising unless every one is exactly k - 2."""
    distances = evaluate(instance, solution).distances
    if any(distance != meta.k - 2 for distance in distances):
        msg = f"Witness distances {distances} differ from k - 2 = {meta.k - 2}"
        raise WitnessProfileError(msg)
    return distances


__all__ = [
    "block_unbounded",
    "extract_clique_unbounded",
    "forward_witness_unbounded",
    "reduce_unbounded",
    "witness_profile_unbounded",
]
