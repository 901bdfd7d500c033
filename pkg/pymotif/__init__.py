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
"""pymotif reduces Clique to motif search problems and solves them exactly."""

from pymotif.about import __version__  # noqa: F401
from pymotif.factories import parse_graph
from pymotif.factories import parse_instance
from pymotif.factories import serialize_graph
from pymotif.factories import serialize_instance
from pymotif.graphs import Graph
from pymotif.graphs import VertexSet
from pymotif.graphs import find_clique
from pymotif.graphs import is_clique
from pymotif.harness import round_trip
from pymotif.harness import selftest
from pymotif.harness import sweep
from pymotif.instances import MotifInstance
from pymotif.instances import ReductionMeta
from pymotif.instances import Solution
from pymotif.instances import SymbolString
from pymotif.instances import evaluate
from pymotif.reductions import extract_clique
from pymotif.reductions import forward_witness
from pymotif.reductions import reduce
from pymotif.solvers import SolverConfig
from pymotif.solvers import SolverReport
from pymotif.solvers import solve
from pymotif.types import Metric
from pymotif.types import Variant

__all__ = [
    "Graph",
    "Metric",
    "MotifInstance",
    "ReductionMeta",
    "Solution",
    "SolverConfig",
    "SolverReport",
    "SymbolString",
    "Variant",
    "VertexSet",
    "evaluate",
    "extract_clique",
    "find_clique",
    "forward_witness",
    "is_clique",
    "parse_graph",
    "parse_instance",
    "reduce",
    "round_trip",
    "selftest",
    "serialize_graph",
    "serialize_instance",
    "solve",
    "sweep",
]
