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
Clique to Closest Substring over the binary alphabet.

A block is ``front tag | encoding part | back tag``:

* the front tag ``(1^{3nk} 0)^{nk}`` forces matches onto block boundaries,
* the encoding part has k sections of length n; in the block of edge
  ``(r, s)`` of ``c_{i,j}`` section i holds the number string of r, section j
  the one of s, every other section is zero,
* the back tag of ``c_{i,j}`` is all ones in section ``i'`` of C(k, 2)
  sections of length ``nk - 2k + 2``.

Choice strings are abutting blocks, one per edge.
A single template string, front tag then ``1^{nk}`` then zeros, comes last.
"""

import logging
from math import comb
from typing import Optional
from typing import Tuple

import numpy as np

from pymotif.exceptions import DecodingError
from pymotif.exceptions import InvalidGraphError
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
from pymotif.instances import region_distances
from pymotif.types import Edge
from pymotif.types import Metric
from pymotif.types import RegionDistances
from pymotif.types import Variant

logger = logging.getLogger(__name__)


def number_string(pos: int, n: int) -> SymbolString:
    """
    Return ``0^{pos-1} 1 0^{n-pos}``.

    >>> number_string(3, 4).to_text()
    '0 0 1 0'
    """
    if not 1 <= pos <= n:
        msg = f"Need 1 <= pos <= {n}, got {pos}"
        raise InvalidParameterError(msg)
    symbols = np.zeros(n, dtype=np.uint8)
    symbols[pos - 1] = 1
    return SymbolString(symbols)


def front_tag(n: int, k: int) -> SymbolString:
    """
    Return ``(1^{3nk} 0)^{nk}``, of length ``(3nk + 1) nk``.

    >>> front_tag(1, 1).to_text()
    '1 1 1 0'
    """
    period = np.ones(3 * n * k + 1, dtype=np.uint8)
    period[-1] = 0
    return SymbolString(np.tile(period, n * k))


def back_section_length(n: int, k: int) -> int:
    """Return the length ``nk - 2k + 2`` of one back tag section."""
    length = n * k - 2 * k + 2
    if length < 0:
        msg = f"The binary reduction needs n >= 2, got n={n}"
        raise InvalidParameterError(msg)
    return length


def back_tag(iprime: int, n: int, k: int) -> SymbolString:
    """
    Return the back tag of choice string ``iprime``: ones in section iprime only.

    >>> back_tag(2, 3, 3).to_text()
    '0 0 0 0 0 1 1 1 1 1 0 0 0 0 0'
    """
    pairs = comb(k, 2)
    if not 1 <= iprime <= pairs:
        msg = f"Need 1 <= iprime <= {pairs}, got {iprime}"
        raise InvalidParameterError(msg)
    section = back_section_length(n, k)
    symbols = np.zeros(pairs * section, dtype=np.uint8)
    symbols[(iprime - 1) * section : iprime * section] = 1
    return SymbolString(symbols)


def encode_part(i: int, j: int, edge: Edge, n: int, k: int) -> SymbolString:
    """
    Return the encoding part of the block of ``edge`` in ``c_{i,j}``.

    >>> encode_part(1, 2, (1, 3), 4, 3).to_text()
    '1 0 0 0 0 0 1 0 0 0 0 0'
    """
    r, s = edge
    if not 1 <= i < j <= k:
        msg = f"Need 1 <= i < j <= k, got i={i}, j={j}, k={k}"
        raise InvalidParameterError(msg)
    if not 1 <= r < s <= n:
        msg = f"Need 1 <= r < s <= {n}, got {edge}"
        raise InvalidParameterError(msg)
    symbols = np.zeros(n * k, dtype=np.uint8)
    symbols[(i - 1) * n + r - 1] = 1
    symbols[(j - 1) * n + s - 1] = 1
    return SymbolString(symbols)


def choice_string(
    meta: ReductionMeta,
    pair: Tuple[int, int],
    front: SymbolString,
    back: SymbolString,
) -> SymbolString:
    """Return one abutting block ``front | encode(pair, edge) | back`` per edge."""
    i, j = pair
    layout = meta.layout
    rows = np.zeros((meta.m, layout.length), dtype=np.uint8)
    rows[:, layout.front] = front.symbols
    rows[:, layout.back] = back.symbols
    for row, edge in zip(rows, meta.edge_order):
        row[layout.encoding] = encode_part(i, j, edge, meta.n, meta.k).symbols
    return SymbolString(rows.reshape(-1))


def reduce_binary(graph: Graph, k: int) -> Tuple[MotifInstance, ReductionMeta]:
    """
    Reduce a Clique instance ``(graph, k)`` to binary Closest Substring.

    ``L = (3nk + 1) nk + nk + C(k, 2)(nk - 2k + 2)`` and ``d = nk - k``;
    the instance has C(k, 2) choice strings and one template.
    """
    check_clique_size(k)
    n = graph.n
    section = back_section_length(n, k)
    layout = BlockLayout(
        front_len=(3 * n * k + 1) * n * k,
        enc_len=n * k,
        back_len=comb(k, 2) * section,
    )
    meta = ReductionMeta(
        variant=Variant.BINARY,
        n=n,
        m=graph.m,
        k=k,
        edge_order=graph.edges,
        layout=layout,
        template_count=1,
    )
    front = front_tag(n, k)
    strings = [
        choice_string(meta, pair, front, back_tag(meta.iprime(*pair), n, k))
        for pair in meta.pairs
    ]
    template = SymbolString.join(
        [front, np.ones(n * k, dtype=np.int64), np.zeros(layout.back_len, np.int64)],
    )
    instance = MotifInstance(
        metric=Metric.MAX,
        alphabet_size=2,
        strings=(*strings, template),
        length=layout.length,
        budget=n * k - k,
    )
    logger.debug(
        "binary reduction n=%d m=%d k=%d: K=%d L=%d d=%d",
        n,
        graph.m,
        k,
        instance.count,
        instance.length,
        instance.budget,
    )
    return instance, meta


def witness_center(
    meta: ReductionMeta,
    front: SymbolString,
    clique: VertexSet,
) -> SymbolString:
    """Return ``front | number(h_1) ... number(h_k) | 0^back``."""
    return SymbolString.join(
        [
            front,
            *(number_string(vertex, meta.n) for vertex in clique),
            np.zeros(meta.layout.back_len, dtype=np.int64),
        ],
    )


def witness_profile_binary(
    instance: MotifInstance,
    meta: ReductionMeta,
    solution: Solution,
) -> Tuple[RegionDistances, ...]:
    """
    Return the (front, encoding, back) distances of the witness to its matches.

    Raises WitnessProfileError unless every chosen block is at
    ``(0, k - 2, nk - 2k + 2)`` and the template at ``(0, nk - k, 0)``.
    """
    n, k = meta.n, meta.k
    table = region_distances(instance, solution, meta.layout)
    expected = [(0, k - 2, back_section_length(n, k))] * meta.choice_count
    expected.extend([(0, n * k - k, 0)] * meta.template_count)
    if list(table) != expected:
        msg = f"Witness distance table {table} differs from {tuple(expected)}"
        raise WitnessProfileError(msg)
    return table


def forward_witness_binary(
    meta: ReductionMeta,
    clique: VertexSet,
    instance: Optional[MotifInstance] = None,
) -> Solution:
    """
    Build the solution a k-clique induces and check its distance table.

    The instance is rebuilt from the metadata when it is not given.
    """
    offsets = meta.witness_offsets(clique)
    solution = Solution(
        center=witness_center(meta, front_tag(meta.n, meta.k), clique),
        offsets=offsets,
    )
    if instance is None:
        instance, _ = reduce_binary(meta.graph, meta.k)
    witness_profile_binary(instance, meta, solution)
    return solution


def decode_sections(meta: ReductionMeta, center: SymbolString) -> VertexSet:
    """
    Read the vertex of every encoding section of a center.

    Every section must hold exactly one ``1`` and the back tag region must be
    all zero.
    """
    layout = meta.layout
    if len(center) != layout.length:
        msg = f"Center has length {len(center)}, expected {layout.length}"
        raise DecodingError(msg)
    if center[layout.back].weight:
        msg = "Back tag region of the center is not all zero"
        raise DecodingError(msg)
    sections = center.symbols[layout.encoding].reshape(meta.k, meta.n)
    ones = np.count_nonzero(sections, axis=1)
    for index, count in enumerate(ones, 1):
        if count != 1:
            msg = f"Section {index} of the encoding part holds {count} ones"
            raise DecodingError(msg)
    try:
        return VertexSet(int(v) + 1 for v in np.argmax(sections, axis=1))
    except InvalidGraphError as exc:
        raise DecodingError(str(exc)) from exc


def extract_clique_binary(meta: ReductionMeta, center: SymbolString) -> VertexSet:
    """Decode a length-L center of a binary instance into k vertices."""
    return decode_sections(meta, center)


__all__ = [
    "back_section_length",
    "back_tag",
    "choice_string",
    "decode_sections",
    "encode_part",
    "extract_clique_binary",
    "forward_witness_binary",
    "front_tag",
    "number_string",
    "reduce_binary",
    "witness_center",
    "witness_profile_binary",
]
