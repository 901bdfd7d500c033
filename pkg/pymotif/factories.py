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
"""
Text formats.

* graphs in the DIMACS edge format (``p edge n m`` / ``e u v``),
* motif instances in the MSI v1 format,
* symbol legends of the unbounded-alphabet reduction.
"""

import re
from typing import Dict
from typing import List
from typing import Optional
from typing import Pattern
from typing import Set
from typing import Tuple

from pymotif.exceptions import GraphFormatError
from pymotif.exceptions import InstanceFormatError
from pymotif.exceptions import InvalidGraphError
from pymotif.exceptions import InvalidInstanceError
from pymotif.graphs import Graph
from pymotif.instances import Legend
from pymotif.instances import MotifInstance
from pymotif.instances import SymbolString
from pymotif.types import Edge
from pymotif.types import Metric

problem_regex: Pattern[str] = re.compile(r"^p\s+edge\s+(?P<n>\d+)\s+(?P<m>\d+)$")
edge_regex: Pattern[str] = re.compile(r"^e\s+(?P<u>\d+)\s+(?P<v>\d+)$")
header_regex: Pattern[str] = re.compile(
    r"^MSI\s+(?P<metric>max|sum)\s+(?P<alphabet>\d+)\s+(?P<count>\d+)"
    r"\s+(?P<length>\d+)\s+(?P<budget>\d+)$",
)
legend_regex: Pattern[str] = re.compile(
    r"^(?:(?P<kind>sigma|phi)\s+(?P<index>\d+)|hash)\s+(?P<id>\d+)$",
)


def parse_graph(text: str) -> Graph:
    """
    Create a graph from its DIMACS edge format.

    Lines starting with ``c`` are comments, exactly one ``p edge <n> <m>``
    line precedes the edges, followed by exactly m ``e <u> <v>`` lines.
    Edge endpoints are normalised, duplicates are rejected.

    >>> parse_graph("p edge 2 1\\ne 2 1\\n").edges
    ((1, 2),)
    """
    header: Optional[Tuple[int, int]] = None
    edges: List[Edge] = []
    seen: Set[Edge] = set()
    last = 0
    for number, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        last = number
        if not line or line.startswith("c"):
            continue
        if problem := problem_regex.match(line):
            if header is not None:
                msg = "Second problem line"
                raise GraphFormatError(msg, number)
            header = int(problem["n"]), int(problem["m"])
            continue
        edge = edge_regex.match(line)
        if edge is None:
            msg = f"Cannot parse {line!r}"
            raise GraphFormatError(msg, number)
        if header is None:
            msg = "Edge before the problem line"
            raise GraphFormatError(msg, number)
        u, v = int(edge["u"]), int(edge["v"])
        if u == v:
            msg = f"Self-loop at vertex {u}"
            raise GraphFormatError(msg, number)
        if not (1 <= u <= header[0] and 1 <= v <= header[0]):
            msg = f"Vertex out of range 1..{header[0]} in {line!r}"
            raise GraphFormatError(msg, number)
        normalised = (min(u, v), max(u, v))
        if normalised in seen:
            msg = f"Duplicate edge {normalised}"
            raise GraphFormatError(msg, number)
        seen.add(normalised)
        edges.append(normalised)
    if header is None:
        msg = "Missing problem line 'p edge <n> <m>'"
        raise GraphFormatError(msg, last)
    if len(edges) != header[1]:
        msg = f"Expected {header[1]} edges, found {len(edges)}"
        raise GraphFormatError(msg, last)
    try:
        return Graph(header[0], edges)
    except InvalidGraphError as exc:
        raise GraphFormatError(str(exc), last) from exc


def serialize_graph(graph: Graph) -> str:
    """Return the DIMACS edge format of a graph, edges in canonical order."""
    lines = [f"p edge {graph.n} {graph.m}"]
    lines.extend(f"e {u} {v}" for u, v in graph.edges)
    return "\n".join(lines) + "\n"


def _parse_symbols(line: str, number: int, alphabet: int) -> SymbolString:
    symbols = []
    for column, token in enumerate(line.split(), 1):
        if not token.isdigit():
            msg = f"Symbol {token!r} is not a decimal id"
            raise InstanceFormatError(msg, number, column)
        symbol = int(token)
        if symbol >= alphabet:
            msg = f"Symbol {symbol} is outside an alphabet of {alphabet}"
            raise InstanceFormatError(msg, number, column)
        symbols.append(symbol)
    return SymbolString(symbols)


def parse_instance(text: str) -> MotifInstance:
    """
    Create a motif instance from the MSI v1 format.

    The first line is ``MSI <max|sum> <A> <K> <L> <d>``; exactly K string
    lines follow, each with space separated symbol ids. The text must end
    with a newline.

    >>> parse_instance("MSI max 2 2 2 1\\n0 1 0\\n1 1 1\\n").count
    2
    """
    if not text.endswith("\n"):
        msg = "Missing trailing newline"
        raise InstanceFormatError(msg, text.count("\n") + 1)
    lines = text[:-1].split("\n")
    header = header_regex.match(lines[0].strip())
    if header is None:
        msg = f"Cannot parse header {lines[0]!r}"
        raise InstanceFormatError(msg, 1)
    alphabet = int(header["alphabet"])
    count = int(header["count"])
    if len(lines) - 1 != count:
        msg = f"Expected {count} strings, found {len(lines) - 1}"
        raise InstanceFormatError(msg, len(lines))
    strings = [
        _parse_symbols(line, number, alphabet)
        for number, line in enumerate(lines[1:], 2)
    ]
    try:
        return MotifInstance(
            metric=Metric(header["metric"]),
            alphabet_size=alphabet,
            strings=tuple(strings),
            length=int(header["length"]),
            budget=int(header["budget"]),
        )
    except InvalidInstanceError as exc:
        raise InstanceFormatError(str(exc), 1) from exc


def serialize_instance(instance: MotifInstance) -> str:
    """
    Return the MSI v1 text of an instance.

    >>> from pymotif.types import Metric
    >>> inst = MotifInstance(
    ...     Metric.MAX, 2, (SymbolString([0, 1, 0]), SymbolString([1, 1, 1])), 2, 1
    ... )
    >>> serialize_instance(inst)
    'MSI max 2 2 2 1\\n0 1 0\\n1 1 1\\n'
    """
    header = (
        f"MSI {instance.metric.value} {instance.alphabet_size} {instance.count}"
        f" {instance.length} {instance.budget}"
    )
    return "".join(
        [f"{header}\n", *(f"{string.to_text()}\n" for string in instance.strings)],
    )


def serialize_legend(legend: Legend) -> str:
    """
    Return the sidecar legend of the unbounded reduction.

    One line per symbol: ``sigma <i> <id>``, ``phi <i'> <id>`` and ``hash <id>``.
    """
    lines = [
        f"{kind} {symbol}" if kind == "hash" else f"{kind} {index} {symbol}"
        for kind, index, symbol in legend.entries()
    ]
    return "\n".join(lines) + "\n"


def parse_legend(text: str) -> Legend:
    """Create a legend from its sidecar file and check the id layout."""
    families: Dict[str, Dict[int, int]] = {"sigma": {}, "phi": {}, "hash": {}}
    for number, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        entry = legend_regex.match(line)
        if entry is None:
            msg = f"Cannot parse legend entry {line!r}"
            raise InstanceFormatError(msg, number)
        kind = entry["kind"] or "hash"
        index = int(entry["index"] or 0)
        families[kind][index] = int(entry["id"])
    legend = Legend(n=len(families["sigma"]), pair_count=len(families["phi"]))
    expected = {(kind, index): symbol for kind, index, symbol in legend.entries()}
    found = {
        (kind, index): symbol
        for kind, entries in families.items()
        for index, symbol in entries.items()
    }
    if expected != found:
        msg = "Legend ids do not follow the sigma, phi, hash layout"
        raise InstanceFormatError(msg, 1)
    return legend


__all__ = [
    "parse_graph",
    "parse_instance",
    "parse_legend",
    "serialize_graph",
    "serialize_instance",
    "serialize_legend",
]
