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
"""Strings, motif instances, solutions and their evaluation."""

from dataclasses import dataclass
from dataclasses import field
from itertools import combinations
from math import comb
from typing import Iterable
from typing import Iterator
from typing import List
from typing import Optional
from typing import Sequence
from typing import Tuple
from typing import Union
from typing import overload

import numpy as np
import numpy.typing as npt

from pymotif.exceptions import DecodingError
from pymotif.exceptions import InvalidInstanceError
from pymotif.exceptions import InvalidParameterError
from pymotif.exceptions import InvalidSolutionError
from pymotif.exceptions import LengthMismatchError
from pymotif.exceptions import NotACliqueError
from pymotif.functions import SymbolArray
from pymotif.functions import WordArray
from pymotif.functions import pack_bits
from pymotif.functions import packed_distance
from pymotif.functions import symbol_distance
from pymotif.functions import symbol_dtype
from pymotif.graphs import Graph
from pymotif.graphs import VertexSet
from pymotif.graphs import _Frozen
from pymotif.graphs import is_clique
from pymotif.types import Edge
from pymotif.types import Metric
from pymotif.types import ParameterProfile
from pymotif.types import RegionDistances
from pymotif.types import SymbolKind
from pymotif.types import Variant

MIN_CLIQUE_SIZE = 3


class SymbolString(_Frozen):
    """
    A finite sequence of symbol ids.

    The symbols live in a read-only numpy array.
    Strings over {0, 1} also carry a packed copy so that Hamming distances
    reduce to XOR and population count.

    Example:
    -------
      >>> s = SymbolString([0, 2, 3, 7])
      >>> len(s)
      4
      >>> s[1:3]
      SymbolString([2, 3])

    """

    __slots__ = ("_binary", "_packed", "_symbols")

    _symbols: SymbolArray
    _binary: bool
    _packed: Optional[WordArray]

    def __init__(self, symbols: Union[Iterable[int], npt.ArrayLike]) -> None:
        """Initialize from any sequence of non-negative integers."""
        if not isinstance(symbols, np.ndarray):
            symbols = list(symbols)  # type: ignore [arg-type]
        raw = np.asarray(symbols, dtype=np.int64).reshape(-1)
        if raw.size and raw.min() < 0:
            msg = "Symbol ids must not be negative"
            raise InvalidInstanceError(msg)
        top = int(raw.max()) if raw.size else 0
        array = raw.astype(symbol_dtype(top + 1))
        array.flags.writeable = False
        object.__setattr__(self, "_symbols", array)
        object.__setattr__(self, "_binary", top <= 1)
        object.__setattr__(self, "_packed", None)

    def __repr__(self) -> str:
        """Return the representation."""
        return f"{self.__class__.__name__}({self.to_list()!r})"

    def __str__(self) -> str:
        return self.to_text()

    def __len__(self) -> int:
        return int(self._symbols.shape[0])

    def __iter__(self) -> Iterator[int]:
        return iter(self.to_list())

    @overload
    def __getitem__(self, index: int) -> int: ...

    @overload
    def __getitem__(self, index: slice) -> "SymbolString": ...

    def __getitem__(self, index: Union[int, slice]) -> Union[int, "SymbolString"]:
        if isinstance(index, slice):
            return SymbolString(self._symbols[index])
        return int(self._symbols[index])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SymbolString):
            return NotImplemented
        return bool(np.array_equal(self._symbols, other._symbols))

    def __hash__(self) -> int:
        return hash(self._symbols.astype(np.int64).tobytes())

    def __add__(self, other: "SymbolString") -> "SymbolString":
        return SymbolString(
            np.concatenate([self._symbols.astype(np.int64), other.symbols]),
        )

    @property
    def symbols(self) -> SymbolArray:
        """Return the read-only symbol array."""
        return self._symbols

    @property
    def is_binary(self) -> bool:
        """Return True if every symbol is 0 or 1."""
        return self._binary

    @property
    def packed(self) -> WordArray:
        """
        Return the string packed into 64 bit words.

        Only meaningful for binary strings.
        """
        if self._packed is None:
            object.__setattr__(self, "_packed", pack_bits(self._symbols))
        return self._packed  # type: ignore [return-value]

    @property
    def weight(self) -> int:
        """Return the number of non-zero symbols."""
        return int(np.count_nonzero(self._symbols))

    @property
    def max_symbol(self) -> int:
        """Return the largest symbol id, -1 for the empty string."""
        return int(self._symbols.max()) if len(self) else -1

    def to_list(self) -> List[int]:
        """Return the symbols as a list of ints."""
        return [int(s) for s in self._symbols]

    def to_text(self) -> str:
        """Return the symbols as space separated decimal ids."""
        return " ".join(str(s) for s in self.to_list())

    @classmethod
    def from_text(cls, text: str) -> "SymbolString":
        """Parse whitespace separated decimal symbol ids."""
        return cls(int(token) for token in text.split())

    @classmethod
    def join(
        cls,
        parts: Iterable[Union["SymbolString", npt.ArrayLike]],
    ) -> "SymbolString":
        """Concatenate strings or symbol sequences."""
        arrays = [
            np.asarray(
                part.symbols if isinstance(part, SymbolString) else part,
                dtype=np.int64,
            ).reshape(-1)
            for part in parts
        ]
        return cls(np.concatenate(arrays) if arrays else np.zeros(0, np.int64))


@dataclass(frozen=True)
class BlockLayout:
    """Split of a block into front tag, encoding part and back tag."""

    front_len: int
    enc_len: int
    back_len: int = 0

    @property
    def length(self) -> int:
        """Return the block length."""
        return self.front_len + self.enc_len + self.back_len

    @property
    def front(self) -> slice:
        """Return the slice of the front tag."""
        return slice(0, self.front_len)

    @property
    def encoding(self) -> slice:
        """Return the slice of the encoding part."""
        return slice(self.front_len, self.front_len + self.enc_len)

    @property
    def back(self) -> slice:
        """Return the slice of the back tag."""
        return slice(self.front_len + self.enc_len, self.length)

    def regions(self) -> Tuple[slice, slice, slice]:
        """Return front, encoding and back slices."""
        return self.front, self.encoding, self.back


@dataclass(frozen=True)
class MotifInstance:
    """
    A Closest Substring (max metric) or Consensus Patterns (sum metric) instance.

    Attributes
    ----------
    metric : Metric
        MAX models Closest Substring, SUM models Consensus Patterns.
    alphabet_size : int
        Symbols are ids 0 to alphabet_size - 1.
    strings : tuple of SymbolString
        The K input strings.
    length : int
        The target substring length L.
    budget : int
        The distance budget d.

    """

    metric: Metric
    alphabet_size: int
    strings: Tuple[SymbolString, ...]
    length: int
    budget: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "strings", tuple(self.strings))
        if self.alphabet_size < 1:
            msg = f"Alphabet size must be positive, got {self.alphabet_size}"
            raise InvalidInstanceError(msg)
        if self.length < 1:
            msg = f"Substring length must be positive, got {self.length}"
            raise InvalidInstanceError(msg)
        if self.budget < 0:
            msg = f"Distance budget must not be negative, got {self.budget}"
            raise InvalidInstanceError(msg)
        for index, string in enumerate(self.strings):
            if string.max_symbol >= self.alphabet_size:
                msg = (
                    f"String {index} uses symbol {string.max_symbol}"
                    f" outside an alphabet of {self.alphabet_size}"
                )
                raise InvalidInstanceError(msg)

    @property
    def count(self) -> int:
        """Return the number K of input strings."""
        return len(self.strings)

    @property
    def is_binary(self) -> bool:
        """Return True for instances over the alphabet {0, 1}."""
        return self.alphabet_size <= 2  # noqa: PLR2004

    def substring(self, index: int, offset: int) -> SymbolString:
        """Return the length-L substring of string ``index`` at ``offset``."""
        return self.strings[index][offset : offset + self.length]

    def offsets(self, index: int) -> range:
        """Return every admissible offset of string ``index``."""
        return range(max(len(self.strings[index]) - self.length + 1, 0))


@dataclass(frozen=True)
class Solution:
    """A center string and one 0-based substring offset per input string."""

    center: SymbolString
    offsets: Tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "offsets", tuple(int(o) for o in self.offsets))
        if any(o < 0 for o in self.offsets):
            msg = f"Offsets must not be negative, got {self.offsets}"
            raise InvalidSolutionError(msg)

    def check(self, instance: MotifInstance) -> None:
        """Raise InvalidSolutionError unless the solution fits the instance."""
        if len(self.center) != instance.length:
            msg = (
                f"Center has length {len(self.center)},"
                f" the instance asks for {instance.length}"
            )
            raise InvalidSolutionError(msg)
        if len(self.offsets) != instance.count:
            msg = f"Expected {instance.count} offsets, got {len(self.offsets)}"
            raise InvalidSolutionError(msg)
        for index, offset in enumerate(self.offsets):
            if offset + instance.length > len(instance.strings[index]):
                msg = f"Offset {offset} does not fit string {index}"
                raise InvalidSolutionError(msg)
        if self.center.max_symbol >= instance.alphabet_size:
            msg = "Center uses a symbol outside the alphabet"
            raise InvalidSolutionError(msg)

    def matches(self, instance: MotifInstance) -> Tuple[SymbolString, ...]:
        """Return the selected substrings."""
        return tuple(
            instance.substring(index, offset)
            for index, offset in enumerate(self.offsets)
        )


@dataclass(frozen=True)
class Evaluation:
    """Per-string distances of a solution and their aggregate."""

    distances: Tuple[int, ...]
    aggregate: int
    feasible: bool


def hamming(first: SymbolString, second: SymbolString) -> int:
    """
    Return the number of positions where two equal-length strings differ.

    >>> hamming(SymbolString([0, 2, 3, 7]), SymbolString([0, 2, 4, 7]))
    1
    """
    if len(first) != len(second):
        msg = f"Cannot compare strings of length {len(first)} and {len(second)}"
        raise LengthMismatchError(msg)
    if first.is_binary and second.is_binary:
        return packed_distance(first.packed, second.packed)
    return symbol_distance(first.symbols, second.symbols)


def aggregate(metric: Metric, distances: Sequence[int]) -> int:
    """Combine per-string distances by the metric; empty lists aggregate to 0."""
    if not distances:
        return 0
    return max(distances) if metric is Metric.MAX else sum(distances)


def evaluate(instance: MotifInstance, solution: Solution) -> Evaluation:
    """Return the distances from the center to the selected substrings."""
    solution.check(instance)
    distances = tuple(
        hamming(solution.center, match) for match in solution.matches(instance)
    )
    total = aggregate(instance.metric, distances)
    return Evaluation(
        distances=distances,
        aggregate=total,
        feasible=total <= instance.budget,
    )


def region_distances(
    instance: MotifInstance,
    solution: Solution,
    layout: BlockLayout,
) -> Tuple[RegionDistances, ...]:
    """Return (front, encoding, back) distances of every selected substring."""
    solution.check(instance)
    center = solution.center
    return tuple(
        (
            hamming(center[layout.front], match[layout.front]),
            hamming(center[layout.encoding], match[layout.encoding]),
            hamming(center[layout.back], match[layout.back]),
        )
        for match in solution.matches(instance)
    )


def column_mismatches(
    instance: MotifInstance,
    solution: Solution,
) -> npt.NDArray[np.int64]:
    """Return, per center position, how many selected substrings disagree with it."""
    solution.check(instance)
    if not instance.count:
        return np.zeros(instance.length, dtype=np.int64)
    stack = np.stack([match.symbols for match in solution.matches(instance)])
    return np.count_nonzero(stack != solution.center.symbols, axis=0).astype(
        np.int64,
    )


@dataclass(frozen=True)
class Legend:
    """
    Map between the symbol families of the unbounded alphabet and symbol ids.

    sigma_i becomes i - 1, phi_i' becomes n + i' - 1 and the synchronizing
    symbol # becomes n + C(k, 2).
    """

    n: int
    pair_count: int

    @property
    def alphabet_size(self) -> int:
        """Return n + C(k, 2) + 1."""
        return self.n + self.pair_count + 1

    @property
    def hash_id(self) -> int:
        """Return the id of the synchronizing symbol."""
        return self.n + self.pair_count

    def sigma(self, vertex: int) -> int:
        """Return the id of the encoding symbol of a vertex."""
        if not 1 <= vertex <= self.n:
            msg = f"No encoding symbol for vertex {vertex}"
            raise InvalidParameterError(msg)
        return vertex - 1

    def phi(self, iprime: int) -> int:
        """Return the id of the identification symbol of choice string iprime."""
        if not 1 <= iprime <= self.pair_count:
            msg = f"No identification symbol for string {iprime}"
            raise InvalidParameterError(msg)
        return self.n + iprime - 1

    def decode(self, symbol: int) -> Tuple[SymbolKind, int]:
        """
        Return the symbol family and its index for an id.

        >>> Legend(4, 3).decode(7)
        ('hash', 0)
        """
        if 0 <= symbol < self.n:
            return "sigma", symbol + 1
        if self.n <= symbol < self.hash_id:
            return "phi", symbol - self.n + 1
        if symbol == self.hash_id:
            return "hash", 0
        msg = f"Symbol {symbol} is outside the legend"
        raise DecodingError(msg)

    def entries(self) -> Iterator[Tuple[SymbolKind, int, int]]:
        """Yield (family, index, id) for every symbol in id order."""
        for vertex in range(1, self.n + 1):
            yield "sigma", vertex, self.sigma(vertex)
        for iprime in range(1, self.pair_count + 1):
            yield "phi", iprime, self.phi(iprime)
        yield "hash", 0, self.hash_id


@dataclass(frozen=True)
class ReductionMeta:
    """
    Everything needed to map solver output back to the source graph.

    Choice strings come first in the order c_{1,2}, ..., c_{1,k}, c_{2,3}, ...,
    c_{k-1,k}, followed by ``template_count`` template strings.
    """

    variant: Variant
    n: int
    m: int
    k: int
    edge_order: Tuple[Edge, ...]
    layout: BlockLayout
    legend: Optional[Legend] = None
    template_count: int = 0
    pairs: Tuple[Tuple[int, int], ...] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        check_clique_size(self.k)
        object.__setattr__(self, "edge_order", tuple(self.edge_order))
        object.__setattr__(
            self,
            "pairs",
            tuple(combinations(range(1, self.k + 1), 2)),
        )

    @property
    def choice_count(self) -> int:
        """Return the number C(k, 2) of choice strings."""
        return comb(self.k, 2)

    @property
    def block_period(self) -> int:
        """Return the distance between the starts of consecutive blocks."""
        if self.variant is Variant.UNBOUNDED:
            return 2 * self.k + 1
        return self.layout.length

    @property
    def template_indices(self) -> range:
        """Return the instance indices of the template strings."""
        return range(self.choice_count, self.choice_count + self.template_count)

    def iprime(self, i: int, j: int) -> int:
        """Return the 1-based rank of choice string c_{i,j}."""
        try:
            return self.pairs.index((i, j)) + 1
        except ValueError as exc:
            msg = f"No choice string c_{i},{j} for k={self.k}"
            raise InvalidParameterError(msg) from exc

    def block_offset(self, block: int) -> int:
        """Return the 0-based start of block ``block`` (1-based) in a choice string."""
        return (block - 1) * self.block_period

    @property
    def graph(self) -> Graph:
        """Return the source graph."""
        return Graph(self.n, self.edge_order)

    def require_clique(self, clique: VertexSet) -> Graph:
        """Return the source graph, raise NotACliqueError unless given a k-clique."""
        graph = self.graph
        if len(clique) != self.k or not is_clique(graph, clique):
            msg = f"{clique} is not a {self.k}-clique of {graph!r}"
            raise NotACliqueError(msg)
        return graph

    def witness_offsets(self, clique: VertexSet) -> Tuple[int, ...]:
        """
        Return the offsets selecting, in every c_{i,j}, the block of edge (h_i, h_j).

        Templates get offset 0.
        """
        graph = self.require_clique(clique)
        offsets = [
            self.block_offset(graph.edge_index((clique[i - 1], clique[j - 1])) + 1)
            for i, j in self.pairs
        ]
        return (*offsets, *(0 for _ in self.template_indices))

    def parameters(self, instance: MotifInstance) -> ParameterProfile:
        """Return the size parameters of the reduced instance."""
        return {
            "strings": instance.count,
            "length": instance.length,
            "distance": instance.budget,
            "alphabet": instance.alphabet_size,
        }


def check_clique_size(k: int) -> None:
    """Raise InvalidParameterError for clique sizes the constructions do not cover."""
    if k < MIN_CLIQUE_SIZE:
        msg = f"The reductions need a clique size k >= 3, got {k}"
        raise InvalidParameterError(msg)


__all__ = [
    "BlockLayout",
    "Evaluation",
    "Legend",
    "MotifInstance",
    "ReductionMeta",
    "Solution",
    "SymbolString",
    "aggregate",
    "check_clique_size",
    "column_mismatches",
    "evaluate",
    "hamming",
    "region_distances",
]
