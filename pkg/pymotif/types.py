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
"""Types for graphs, motif instances and reports."""

import enum
from typing import Tuple

from typing_extensions import Literal
from typing_extensions import TypedDict

Edge = Tuple[int, int]
RegionDistances = Tuple[int, int, int]
SymbolKind = Literal["sigma", "phi", "hash"]
RoundTripVerdict = Literal["pass", "fail", "inconclusive"]
LeafStrategy = Literal["naive", "column_dp", "branch", "majority", "none"]


class Metric(enum.Enum):
    """Aggregate of the per-string distances that is compared against ``d``."""

    MAX = "max"
    SUM = "sum"


class Variant(enum.Enum):
    """The three constructions turning a Clique instance into a motif instance."""

    UNBOUNDED = "unbounded"
    BINARY = "binary"
    CONSENSUS = "consensus"


class Counters(TypedDict):
    """Search statistics of a solver run."""

    nodes_explored: int
    offsets_pruned: int


class ParameterProfile(TypedDict):
    """Size parameters of a reduced instance."""

    strings: int
    length: int
    distance: int
    alphabet: int


__all__ = [
    "Counters",
    "Edge",
    "LeafStrategy",
    "Metric",
    "ParameterProfile",
    "RegionDistances",
    "RoundTripVerdict",
    "SymbolKind",
    "Variant",
]
