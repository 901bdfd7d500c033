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
"""Simple undirected graphs and an exact clique oracle."""

from itertools import combinations
from typing import Any
from typing import FrozenSet
from typing import Iterable
from typing import Iterator
from typing import List
from typing import NoReturn
from typing import Optional
from typing import Set
from typing import Tuple

import networkx as nx

from pymotif.exceptions import InvalidGraphError
from pymotif.types import Edge


class _Frozen:
    """Base class for immutable value objects."""

    __slots__ = ()

    def __setattr__(self, *args: Any) -> NoReturn:  # noqa: ANN401
        msg = f"Attributes of {self.__class__.__name__} cannot be changed"
        raise AttributeError(msg)

    def __delattr__(self, *args: Any) -> NoReturn:  # noqa: ANN401
        msg = f"Attributes of {self.__class__.__name__} cannot be deleted"
        raise AttributeError(msg)


class Graph(_Frozen):
    """
    A simple undirected graph on the vertices 1 to n.

    Edges are normalised to ``(u, v)`` with ``u < v`` and kept in
    lexicographic order; this is the edge order e_1 ... e_m every
    reduction encodes.

    Example:
    -------
      >>> g = Graph(4, [(1, 3), (1, 4), (2, 3), (4, 3)])
      >>> g.edges
      ((1, 3), (1, 4), (2, 3), (3, 4))
      >>> g.has_edge(3, 1)
      True

    """

    __slots__ = ("_adjacency", "_edges", "_n")

    _n: int
    _edges: Tuple[Edge, ...]
    _adjacency: Tuple[FrozenSet[int], ...]

    def __init__(self, n: int, edges: Iterable[Edge] = ()) -> None:
        """
        Initialize a Graph.

        Raises
        ------
        InvalidGraphError
            for a negative vertex count, self-loops, vertices out of range
            and duplicate edges.

        """
        if n < 0:
            msg = f"Vertex count must not be negative, got {n}"
            raise InvalidGraphError(msg)
        normalised = sorted(_normalise(edge, n) for edge in edges)
        for first, second in zip(normalised, normalised[1:]):
            if first == second:
                msg = f"Duplicate edge {first}"
                raise InvalidGraphError(msg)
        neighbours: List[Set[int]] = [set() for _ in range(n + 1)]
        for u, v in normalised:
            neighbours[u].add(v)
            neighbours[v].add(u)
        object.__setattr__(self, "_n", n)
        object.__setattr__(self, "_edges", tuple(normalised))
        object.__setattr__(
            self,
            "_adjacency",
            tuple(frozenset(vertices) for vertices in neighbours),
        )

    def __repr__(self) -> str:
        """Return the representation."""
        return f"{self.__class__.__name__}({self._n}, {list(self._edges)!r})"

    def __eq__(self, other: object) -> bool:
        """Graphs are equal when they have the same vertex count and edges."""
        if not isinstance(other, Graph):
            return NotImplemented
        return (self._n, self._edges) == (other._n, other._edges)

    def __hash__(self) -> int:
        """Return the hash of the vertex count and edge list."""
        return hash((self._n, self._edges))

    @property
    def n(self) -> int:
        """Return the number of vertices."""
        return self._n

    @property
    def m(self) -> int:
        """Return the number of edges."""
        return len(self._edges)

    @property
    def edges(self) -> Tuple[Edge, ...]:
        """Return the edges in canonical order."""
        return self._edges

    @property
    def vertices(self) -> range:
        """Return the vertex names 1 to n."""
        return range(1, self._n + 1)

    def has_edge(self, u: int, v: int) -> bool:
        """Return True if u and v are adjacent."""
        return 1 <= u <= self._n and v in self._adjacency[u]

    def neighbours(self, v: int) -> FrozenSet[int]:
        """Return the vertices adjacent to v."""
        return self._adjacency[v]

    def degree(self, v: int) -> int:
        """Return the number of edges at v."""
        return len(self._adjacency[v])

    def edge_index(self, edge: Edge) -> int:
        """Return the 0-based position of an edge in the canonical order."""
        u, v = sorted(edge)
        try:
            return self._edges.index((u, v))
        except ValueError as exc:
            msg = f"{(u, v)} is not an edge of {self!r}"
            raise InvalidGraphError(msg) from exc

    def without_edge(self, u: int, v: int) -> "Graph":
        """Return a copy of the graph with the edge between u and v removed."""
        edge = (min(u, v), max(u, v))
        if edge not in self._edges:
            msg = f"{edge} is not an edge of {self!r}"
            raise InvalidGraphError(msg)
        return Graph(self._n, (e for e in self._edges if e != edge))

    def to_networkx(self) -> nx.Graph:
        """Return the graph as a networkx graph on the nodes 1 to n."""
        graph = nx.Graph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from(self._edges)
        return graph

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> "Graph":
        """
        Construct a graph from a networkx graph.

        Nodes are renamed 1 to n in their sorted order; self-loops are rejected.
        """
        names = {node: index for index, node in enumerate(sorted(graph.nodes), 1)}
        return cls(len(names), ((names[u], names[v]) for u, v in graph.edges))


class VertexSet(_Frozen):
    """
    A set of vertex names, kept in increasing order.

    >>> VertexSet([4, 1, 3])
    VertexSet([1, 3, 4])
    """

    __slots__ = ("_vertices",)

    _vertices: Tuple[int, ...]

    def __init__(self, vertices: Iterable[int]) -> None:
        """Initialize the set; duplicates and names below 1 are rejected."""
        ordered = tuple(sorted(vertices))
        if any(v < 1 for v in ordered):
            msg = f"Vertex names start at 1, got {ordered}"
            raise InvalidGraphError(msg)
        if len(set(ordered)) != len(ordered):
            msg = f"Duplicate vertices in {ordered}"
            raise InvalidGraphError(msg)
        object.__setattr__(self, "_vertices", ordered)

    def __repr__(self) -> str:
        """Return the representation."""
        return f"{self.__class__.__name__}({list(self._vertices)!r})"

    def __str__(self) -> str:
        return "{" + ",".join(str(v) for v in self._vertices) + "}"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, VertexSet):
            return NotImplemented
        return self._vertices == other._vertices

    def __hash__(self) -> int:
        return hash(self._vertices)

    def __iter__(self) -> Iterator[int]:
        return iter(self._vertices)

    def __len__(self) -> int:
        return len(self._vertices)

    def __contains__(self, vertex: object) -> bool:
        return vertex in self._vertices

    def __getitem__(self, index: int) -> int:
        return self._vertices[index]

    @property
    def vertices(self) -> Tuple[int, ...]:
        """Return the vertices in increasing order."""
        return self._vertices


def _normalise(edge: Edge, n: int) -> Edge:
    u, v = edge
    if u == v:
        msg = f"Self-loop at vertex {u}"
        raise InvalidGraphError(msg)
    u, v = min(u, v), max(u, v)
    if u < 1 or v > n:
        msg = f"Edge {(u, v)} out of range 1..{n}"
        raise InvalidGraphError(msg)
    return u, v


def is_clique(graph: Graph, vertices: VertexSet) -> bool:
    """Return True if every pair of the given vertices is adjacent."""
    if any(v > graph.n for v in vertices):
        msg = f"{vertices!r} is out of range for {graph.n} vertices"
        raise InvalidGraphError(msg)
    return all(graph.has_edge(u, v) for u, v in combinations(vertices, 2))


def find_clique(graph: Graph, k: int) -> Optional[VertexSet]:
    """
    Return the lexicographically smallest clique of size k, or None.

    Depth-first extension over the vertices in increasing order; vertices
    with fewer than k - 1 neighbours can never be part of a k-clique and
    are skipped.
    """
    if k < 1:
        msg = f"Clique size must be positive, got {k}"
        raise ValueError(msg)
    eligible = [v for v in graph.vertices if graph.degree(v) >= k - 1]

    def extend(chosen: Tuple[int, ...], candidates: List[int]) -> Optional[VertexSet]:
        if len(chosen) == k:
            return VertexSet(chosen)
        for index, vertex in enumerate(candidates):
            if len(chosen) + len(candidates) - index < k:
                break
            adjacent = graph.neighbours(vertex)
            found = extend(
                (*chosen, vertex),
                [w for w in candidates[index + 1 :] if w in adjacent],
            )
            if found is not None:
                return found
        return None

    return extend((), eligible)


def all_graphs(n: int) -> Iterator[Graph]:
    """
    Yield every labelled graph on n vertices.

    Graph number ``i`` contains the t-th vertex pair (in canonical order)
    iff bit t of ``i`` is set, so the enumeration order is reproducible.
    """
    pairs = list(combinations(range(1, n + 1), 2))
    for index in range(1 << len(pairs)):
        yield Graph(n, (pair for t, pair in enumerate(pairs) if index >> t & 1))


def random_graphs(n: int, count: int, seed: int, p: float = 0.5) -> List[Graph]:
    """Return ``count`` G(n, p) random graphs; graph i is drawn with seed + i."""
    return [
        Graph.from_networkx(nx.gnp_random_graph(n, p, seed=seed + index))
        for index in range(count)
    ]


__all__ = [
    "Graph",
    "VertexSet",
    "all_graphs",
    "find_clique",
    "is_clique",
    "random_graphs",
]
