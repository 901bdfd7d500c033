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
"""Select a reduction, its witness builder and its extractor by variant."""

from typing import Tuple
from typing import Union

from pymotif.graphs import Graph
from pymotif.graphs import VertexSet
from pymotif.instances import MotifInstance
from pymotif.instances import ReductionMeta
from pymotif.instances import Solution
from pymotif.instances import SymbolString
from pymotif.reduce_binary import extract_clique_binary
from pymotif.reduce_binary import forward_witness_binary
from pymotif.reduce_binary import reduce_binary
from pymotif.reduce_binary import witness_profile_binary
from pymotif.reduce_consensus import extract_clique_cp
from pymotif.reduce_consensus import forward_witness_cp
from pymotif.reduce_consensus import reduce_consensus
from pymotif.reduce_consensus import witness_profile_cp
from pymotif.reduce_unbounded import extract_clique_unbounded
from pymotif.reduce_unbounded import forward_witness_unbounded
from pymotif.reduce_unbounded import reduce_unbounded
from pymotif.reduce_unbounded import witness_profile_unbounded
from pymotif.types import RegionDistances
from pymotif.types import Variant

WitnessProfile = Union[int, Tuple[int, ...], Tuple[RegionDistances, ...]]

_REDUCTIONS = {
    Variant.UNBOUNDED: reduce_unbounded,
    Variant.BINARY: reduce_binary,
    Variant.CONSENSUS: reduce_consensus,
}

_EXTRACTORS = {
    Variant.UNBOUNDED: extract_clique_unbounded,
    Variant.BINARY: extract_clique_binary,
    Variant.CONSENSUS: extract_clique_cp,
}


def reduce(
    graph: Graph,
    k: int,
    variant: Variant,
) -> Tuple[MotifInstance, ReductionMeta]:
    """Reduce ``(graph, k)`` with the construction of the given variant."""
    return _REDUCTIONS[variant](graph, k)


def forward_witness(
    meta: ReductionMeta,
    clique: VertexSet,
    instance: MotifInstance,
) -> Solution:
    """Build the solution a k-clique induces in the instance of ``meta``."""
    if meta.variant is Variant.BINARY:
        return forward_witness_binary(meta, clique, instance)
    if meta.variant is Variant.CONSENSUS:
        return forward_witness_cp(meta, clique, instance)
    return forward_witness_unbounded(meta, clique, instance)


def witness_profile(
    instance: MotifInstance,
    meta: ReductionMeta,
    solution: Solution,
) -> WitnessProfile:
    """
    Return the exact distance profile of a forward witness.

    Per-string distances for the unbounded variant, the region table for the
    binary variant and the total for the consensus variant.
    """
    if meta.variant is Variant.BINARY:
        return witness_profile_binary(instance, meta, solution)
    if meta.variant is Variant.CONSENSUS:
        return witness_profile_cp(instance, meta, solution)
    return witness_profile_unbounded(instance, meta, solution)


def extract_clique(meta: ReductionMeta, center: SymbolString) -> VertexSet:
    """Decode a center of the instance of ``meta`` into a vertex set."""
    return _EXTRACTORS[meta.variant](meta, center)


__all__ = [
    "WitnessProfile",
    "extract_clique",
    "forward_witness",
    "reduce",
    "witness_profile",
]
