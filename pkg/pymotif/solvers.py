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
Exact solvers for Closest String, Closest Substring and Consensus Patterns.

The substring solvers search offset tuples depth first in lexicographic
order, one root branch per offset of the first string.
Root branches may run on a thread pool; the result is always the one of the
first root branch, in index order, that finds a solution or exceeds a cap,
so reports do not depend on the number of threads.
"""

import logging
import threading
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from dataclasses import field
from typing import Any
from typing import Generic
from typing import List
from typing import Optional
from typing import Sequence
from typing import Tuple
from typing import Type
from typing import TypeVar

import numpy as np
import numpy.typing as npt

from pymotif.exceptions import InvalidInstanceError
from pymotif.exceptions import InvalidParameterError
from pymotif.exceptions import InvalidSolutionError
from pymotif.exceptions import LengthMismatchError
from pymotif.exceptions import MetricError
from pymotif.exceptions import ResourceLimitError
from pymotif.functions import IntArray
from pymotif.functions import center_block
from pymotif.functions import distance_matrix
from pymotif.functions import window_distances
from pymotif.functions import windows
from pymotif.instances import MotifInstance
from pymotif.instances import Solution
from pymotif.instances import SymbolString
from pymotif.instances import evaluate
from pymotif.types import Counters
from pymotif.types import LeafStrategy
from pymotif.types import Metric

logger = logging.getLogger(__name__)

DEFAULT_NAIVE_CAP = 10**6
DEFAULT_DP_CAP = 10**6

# cells compared per vectorised chunk of center enumeration
_CHUNK_CELLS = 1 << 22
# column keys are packed into one int64
_MAX_DP_STRINGS = 62


BoolArray = npt.NDArray[np.bool_]
StateT = TypeVar("StateT")


@dataclass(frozen=True)
class SolverConfig:
    """
    Resource caps and parallelism of the exact solvers.

    Attributes
    ----------
    naive_cap : int
        Largest number ``A^L`` of centers enumerated by the naive leaf and oracle.
    dp_cap : int
        Largest state space ``(d + 2)^K`` of the column dynamic program.
    node_cap : int, optional
        Search nodes allowed per root branch; unbounded when None.
    threads : int
        Worker threads for the root branches.

    """

    naive_cap: int = DEFAULT_NAIVE_CAP
    dp_cap: int = DEFAULT_DP_CAP
    node_cap: Optional[int] = None
    threads: int = 1

    def __post_init__(self) -> None:
        if self.naive_cap < 1 or self.dp_cap < 1:
            msg = f"Caps must be positive, got {self.naive_cap}, {self.dp_cap}"
            raise InvalidParameterError(msg)
        if self.node_cap is not None and self.node_cap < 1:
            msg = f"Node cap must be positive, got {self.node_cap}"
            raise InvalidParameterError(msg)
        if self.threads < 1:
            msg = f"Thread count must be positive, got {self.threads}"
            raise InvalidParameterError(msg)


@dataclass(frozen=True)
class OffsetDomain:
    """Admissible offsets per input string after pruning."""

    offsets: Tuple[Tuple[int, ...], ...]
    pruned: int = 0

    def __len__(self) -> int:
        return len(self.offsets)

    def __getitem__(self, index: int) -> Tuple[int, ...]:
        return self.offsets[index]

    @property
    def is_empty(self) -> bool:
        """Return True if some string has no admissible offset left."""
        return any(not offsets for offsets in self.offsets)

    @property
    def sizes(self) -> Tuple[int, ...]:
        """Return the number of admissible offsets per string."""
        return tuple(len(offsets) for offsets in self.offsets)

    def aligned(self, period: int, indices: Optional[Sequence[int]] = None) -> bool:
        """Return True if every surviving offset is a multiple of ``period``."""
        chosen = range(len(self.offsets)) if indices is None else indices
        return all(
            offset % period == 0 for index in chosen for offset in self.offsets[index]
        )


@dataclass(frozen=True)
class SolverReport:
    """
    Outcome of an exact solver run.

    ``elapsed`` is informational and left out of the text form and of
    comparisons, so identical searches give identical reports.
    """

    solution: Optional[Solution]
    aggregate: Optional[int] = None
    nodes_explored: int = 0
    offsets_pruned: int = 0
    leaf_strategy: LeafStrategy = "none"
    elapsed: float = field(default=0.0, compare=False)

    @property
    def sat(self) -> bool:
        """Return True if a solution was found."""
        return self.solution is not None

    @property
    def verdict(self) -> str:
        """Return ``SAT`` or ``UNSAT``."""
        return "SAT" if self.sat else "UNSAT"

    @property
    def counters(self) -> Counters:
        """Return the search statistics."""
        return {
            "nodes_explored": self.nodes_explored,
            "offsets_pruned": self.offsets_pruned,
        }

    def to_text(self) -> str:
        """
        Return the plain text report.

        >>> print(SolverReport(None, leaf_strategy="naive").to_text(), end="")
        UNSAT
        # nodes_explored 0
        # offsets_pruned 0
        # leaf_strategy naive
        """
        lines = [self.verdict]
        if self.solution is not None:
            lines.append(f"center {self.solution.center.to_text()}".rstrip())
            lines.append(" ".join(["offsets", *map(str, self.solution.offsets)]))
            lines.append(f"# aggregate {self.aggregate}")
        lines.extend(
            [
                f"# nodes_explored {self.nodes_explored}",
                f"# offsets_pruned {self.offsets_pruned}",
                f"# leaf_strategy {self.leaf_strategy}",
            ],
        )
        return "\n".join(lines) + "\n"


def _stack(strings: Sequence[SymbolString]) -> IntArray:
    if not strings:
        msg = "At least one string is needed"
        raise InvalidInstanceError(msg)
    length = len(strings[0])
    for string in strings:
        if len(string) != length:
            msg = f"Cannot compare strings of length {length} and {len(string)}"
            raise LengthMismatchError(msg)
    return np.stack([string.symbols.astype(np.int64) for string in strings])


def closest_string_brute(
    strings: Sequence[SymbolString],
    d: int,
    alphabet: int,
    cap: int = DEFAULT_NAIVE_CAP,
) -> Optional[SymbolString]:
    """
    Return the lexicographically least center within ``d`` of every string.

    All ``alphabet^L`` centers are enumerated in lexicographic order.
    """
    stack = _stack(strings)
    count, length = stack.shape
    total = alphabet**length
    if total > cap:
        raise ResourceLimitError("naive_cap", cap, total)
    chunk = max(1, _CHUNK_CELLS // max(1, count * length))
    for start in range(0, total, chunk):
        centers = center_block(alphabet, length, start, min(start + chunk, total))
        mismatches = np.count_nonzero(centers[:, None, :] != stack[None, :, :], axis=2)
        feasible = np.flatnonzero(mismatches.max(axis=1) <= d)
        if feasible.size:
            return SymbolString(centers[feasible[0]])
    return None


def _smaller_symbols(column: IntArray, current: int) -> List[int]:
    """Symbols below ``current`` worth trying in a column, smallest first."""
    present = {int(symbol) for symbol in column}
    absent = next(symbol for symbol in range(len(present) + 1) if symbol not in present)
    return sorted(symbol for symbol in present | {absent} if symbol < current)


def closest_string_branch(
    strings: Sequence[SymbolString],
    d: int,
    node_cap: Optional[int] = None,
) -> Optional[SymbolString]:
    """
    Decide Closest String by bounded search tree.

    Start from the first string with a budget of ``d`` changes.
    A candidate farther than its radius plus the budget from some string is
    abandoned.
    Otherwise the first string beyond its radius is the target and the
    search branches on copying its symbol at each of the first ``radius + 1``
    positions where candidate and target differ.

    Once a center is found it is lowered position by position: each position
    takes the smallest symbol for which the remaining suffix still has a
    center, so the result is the lexicographically least center.
    ``node_cap`` bounds the nodes of all searches together.

    >>> closest_string_branch([SymbolString([0, 0, 0]), SymbolString([1, 1, 1])], 1)
    >>> closest_string_branch([SymbolString([0, 1]), SymbolString([1, 1])], 2)
    SymbolString([0, 0])
    """
    stack = _stack(strings)
    nodes = 0

    def search(
        block: IntArray,
        radii: IntArray,
        candidate: IntArray,
        budget: int,
    ) -> Optional[IntArray]:
        nonlocal nodes
        nodes += 1
        if node_cap is not None and nodes > node_cap:
            raise ResourceLimitError("node_cap", node_cap)
        distances = np.count_nonzero(block != candidate, axis=1)
        if (distances > radii + budget).any():
            return None
        violating = np.flatnonzero(distances > radii)
        if not violating.size:
            return candidate
        if budget == 0:
            return None
        target = block[violating[0]]
        for position in np.flatnonzero(candidate != target)[: radii[violating[0]] + 1]:
            child = candidate.copy()
            child[position] = target[position]
            found = search(block, radii, child, budget - 1)
            if found is not None:
                return found
        return None

    def decide(block: IntArray, radii: IntArray) -> Optional[IntArray]:
        if (radii < 0).any():
            return None
        return search(block, radii, block[0].copy(), int(radii[0]))

    radii = np.full(len(stack), d, dtype=np.int64)
    center = decide(stack, radii)
    if center is None:
        return None
    for position in range(stack.shape[1]):
        column = stack[:, position]
        for symbol in _smaller_symbols(column, int(center[position])):
            lowered = radii - (column != symbol)
            rest = decide(stack[:, position + 1 :], lowered)
            if rest is not None:
                center = np.concatenate([center[:position], [symbol], rest])
                break
        radii = radii - (column != center[position])
    return SymbolString(center)


def closest_string_column_dp(
    strings: Sequence[SymbolString],
    d: int,
    dp_cap: int = DEFAULT_DP_CAP,
) -> Optional[SymbolString]:
    """
    Decide binary Closest String by dynamic programming over column patterns.

    Columns with the same pattern across the strings are interchangeable,
    so for each pattern only the number of 1s the center puts there matters.
    The state is the vector of mismatch counts per string; counts above
    ``d`` are dropped.
    A feasible instance gets the lexicographically least center, built
    column by column against the states from which each suffix can still
    finish; this keeps one table of ``(d + 1)^K`` flags per column.

    >>> closest_string_column_dp([SymbolString([0, 1]), SymbolString([1, 1])], 2)
    SymbolString([0, 0])
    """
    stack = _stack(strings)
    count = stack.shape[0]
    if stack.size and stack.max() > 1:
        msg = "The column dynamic program needs binary strings"
        raise InvalidInstanceError(msg)
    states = (d + 2) ** count
    if states > dp_cap or count > _MAX_DP_STRINGS:
        raise ResourceLimitError("dp_cap", dp_cap, states)
    keys = (1 << np.arange(count, dtype=np.int64)) @ stack
    patterns, inverse = np.unique(keys, return_inverse=True)
    inverse = inverse.reshape(-1)
    size = d + 1
    reach = np.zeros((size,) * count, dtype=bool)
    reach[(0,) * count] = True
    for group, key in enumerate(patterns):
        bits = (int(key) >> np.arange(count)) & 1
        width = int(np.count_nonzero(inverse == group))
        # a string disagrees with the ones it lacks and the zeros it has
        lowest = max(0, width - d) if bits.any() else 0
        highest = min(width, d) if not bits.all() else width
        following = np.zeros_like(reach)
        for ones in range(lowest, highest + 1):
            shift = np.where(bits == 1, width - ones, ones)
            source = tuple(slice(0, size - s) for s in shift)
            target = tuple(slice(s, size) for s in shift)
            following[target] |= reach[source]
        reach = following
        if not reach.any():
            return None
    return SymbolString(_least_binary_center(stack, d))


def _finishing(ahead: BoolArray, shift: IntArray) -> BoolArray:
    """Flag the states that land on a flagged state of ``ahead`` after ``shift``."""
    size = ahead.shape[0]
    flags = np.zeros_like(ahead)
    source = tuple(slice(s, size) for s in shift)
    target = tuple(slice(0, size - s) for s in shift)
    flags[target] = ahead[source]
    return flags


def _least_binary_center(stack: IntArray, d: int) -> IntArray:
    """Return the least binary center of a feasible instance."""
    count, length = stack.shape
    tables = [np.ones((d + 1,) * count, dtype=bool)]
    for position in range(length - 1, -1, -1):
        column = stack[:, position]
        tables.append(
            _finishing(tables[-1], (column != 0).astype(np.int64))
            | _finishing(tables[-1], (column != 1).astype(np.int64)),
        )
    tables.reverse()
    state = np.zeros(count, dtype=np.int64)
    center = np.zeros(length, dtype=np.uint8)
    for position in range(length):
        column = stack[:, position]
        for symbol in (0, 1):
            following = state + (column != symbol)
            if following.max() <= d and tables[position + 1][tuple(following)]:
                center[position] = symbol
                state = following
                break
    return center


def choose_leaf(
    alphabet: int,
    length: int,
    count: int,
    d: int,
    config: SolverConfig,
) -> LeafStrategy:
    """
    Return the Closest String strategy for the given sizes.

    Naive enumeration while ``A^L`` is within ``naive_cap``, then the column
    dynamic program for binary alphabets while ``(d + 2)^K`` is within
    ``dp_cap``, branching otherwise.
    """
    if alphabet**length <= config.naive_cap:
        return "naive"
    if alphabet <= 2 and (d + 2) ** count <= config.dp_cap:  # noqa: PLR2004
        return "column_dp"
    return "branch"


def decide_closest_string(
    strings: Sequence[SymbolString],
    d: int,
    alphabet: int,
    config: Optional[SolverConfig] = None,
) -> Tuple[Optional[SymbolString], LeafStrategy]:
    """Decide Closest String with the strategy ``choose_leaf`` selects."""
    config = config or SolverConfig()
    length = len(strings[0]) if strings else 0
    strategy = choose_leaf(alphabet, length, len(strings), d, config)
    if strategy == "naive":
        return closest_string_brute(strings, d, alphabet, config.naive_cap), strategy
    if strategy == "column_dp":
        return closest_string_column_dp(strings, d, config.dp_cap), strategy
    return closest_string_branch(strings, d, config.node_cap), strategy


def prune_offsets(instance: MotifInstance) -> OffsetDomain:
    """
    Drop offsets that cannot take part in any solution.

    Strings of length exactly L are forced to offset 0.
    Under the max metric a center is within d of a forced string and of the
    match, so the two are within 2d; under the sum metric both distances
    share the budget, so they are within d.
    """
    length = instance.length
    bound = 2 * instance.budget if instance.metric is Metric.MAX else instance.budget
    anchors = {
        string.symbols.astype(np.int64).tobytes(): string.symbols
        for string in instance.strings
        if len(string) == length
    }
    offsets = []
    pruned = 0
    for index, string in enumerate(instance.strings):
        admissible = instance.offsets(index)
        if len(string) <= length:
            offsets.append(tuple(admissible))
            continue
        keep = np.ones(len(admissible), dtype=bool)
        for anchor in anchors.values():
            keep &= window_distances(string.symbols, anchor) <= bound
        survivors = tuple(int(offset) for offset in np.flatnonzero(keep))
        pruned += len(admissible) - len(survivors)
        offsets.append(survivors)
    return OffsetDomain(offsets=tuple(offsets), pruned=pruned)


def majority_center(substrings: Sequence[SymbolString]) -> SymbolString:
    """
    Return the column-wise plurality string, ties going to the smaller id.

    >>> majority_center([SymbolString([0, 1]), SymbolString([1, 0])])
    SymbolString([0, 0])
    """
    stack = _stack(substrings)
    alphabet = int(stack.max()) + 1 if stack.size else 1
    counts = np.stack([np.count_nonzero(stack == s, axis=0) for s in range(alphabet)])
    return SymbolString(np.argmax(counts, axis=0))


class _Aborted(Exception):
    """An earlier root branch already decided the search."""


class _Cutoff:
    """Lowest root branch index that ended the search so far."""

    def __init__(self) -> None:
        self._lock = threading.Lock()
        self._index: Optional[int] = None

    def settle(self, root: int) -> None:
        with self._lock:
            if self._index is None or root < self._index:
                self._index = root

    def passed(self, root: int) -> bool:
        index = self._index
        return index is not None and index < root


@dataclass(frozen=True)
class _Outcome:
    solution: Optional[Solution] = None
    nodes: int = 0
    limit: Optional[ResourceLimitError] = None
    aborted: bool = False


class _Search(Generic[StateT]):
    """Depth-first search over offset tuples below one root offset."""

    def __init__(
        self,
        instance: MotifInstance,
        domain: OffsetDomain,
        config: SolverConfig,
        cutoff: _Cutoff,
    ) -> None:
        self.instance = instance
        self.domain = domain
        self.config = config
        self.cutoff = cutoff
        self.matches = [
            windows(string.symbols, instance.length)[list(offsets)]
            for string, offsets in zip(instance.strings, domain.offsets)
        ]
        self.root = 0
        self.nodes = 0

    def run(self, root: int) -> _Outcome:
        self.root = root
        self.nodes = 0
        try:
            if self.cutoff.passed(root):
                raise _Aborted
            self._visit()
            state = self._extend(0, self._initial(), root)
            found = None if state is None else self._descend(1, state, (root,))
        except _Aborted:
            return _Outcome(nodes=self.nodes, aborted=True)
        except ResourceLimitError as exc:
            self.cutoff.settle(root)
            return _Outcome(nodes=self.nodes, limit=exc)
        if found is not None:
            self.cutoff.settle(root)
        return _Outcome(solution=found, nodes=self.nodes)

    def _visit(self) -> None:
        self.nodes += 1
        cap = self.config.node_cap
        if cap is not None and self.nodes > cap:
            raise ResourceLimitError("node_cap", cap)
        if self.cutoff.passed(self.root):
            raise _Aborted

    def _descend(
        self,
        level: int,
        state: StateT,
        chosen: Tuple[int, ...],
    ) -> Optional[Solution]:
        if level == self.instance.count:
            return self._leaf(state, chosen)
        for choice in self._choices(level, state):
            self._visit()
            child = self._extend(level, state, choice)
            if child is None:
                continue
            found = self._descend(level + 1, child, (*chosen, choice))
            if found is not None:
                return found
        return None

    def _solution(self, center: SymbolString, chosen: Tuple[int, ...]) -> Solution:
        return Solution(
            center=center,
            offsets=tuple(
                self.domain[index][choice] for index, choice in enumerate(chosen)
            ),
        )

    def _initial(self) -> StateT:
        raise NotImplementedError

    def _choices(self, level: int, state: StateT) -> Sequence[int]:
        raise NotImplementedError

    def _extend(self, level: int, state: StateT, choice: int) -> Optional[StateT]:
        raise NotImplementedError

    def _leaf(self, state: StateT, chosen: Tuple[int, ...]) -> Optional[Solution]:
        raise NotImplementedError


class _MaxSearch(_Search[Tuple[BoolArray, ...]]):
    """
    Closest Substring search.

    Every pair of chosen matches must be within 2d; the state holds, per
    later string, the matches still compatible with all choices so far.
    """

    def __init__(
        self,
        instance: MotifInstance,
        domain: OffsetDomain,
        config: SolverConfig,
        cutoff: _Cutoff,
    ) -> None:
        super().__init__(instance, domain, config, cutoff)
        binary = instance.is_binary
        limit = 2 * instance.budget
        count = instance.count
        self.compatible = {
            (first, second): distance_matrix(
                self.matches[first],
                self.matches[second],
                binary=binary,
            )
            <= limit
            for first in range(count)
            for second in range(first + 1, count)
        }

    def _initial(self) -> Tuple[BoolArray, ...]:
        return tuple(np.ones(len(matches), dtype=bool) for matches in self.matches)

    def _choices(self, level: int, state: Tuple[BoolArray, ...]) -> Sequence[int]:
        return [int(choice) for choice in np.flatnonzero(state[level])]

    def _extend(
        self,
        level: int,
        state: Tuple[BoolArray, ...],
        choice: int,
    ) -> Optional[Tuple[BoolArray, ...]]:
        narrowed = list(state)
        for later in range(level + 1, self.instance.count):
            narrowed[later] = state[later] & self.compatible[level, later][choice]
            if not narrowed[later].any():
                return None
        return tuple(narrowed)

    def _leaf(
        self,
        state: Tuple[BoolArray, ...],
        chosen: Tuple[int, ...],
    ) -> Optional[Solution]:
        substrings = [
            SymbolString(self.matches[index][choice])
            for index, choice in enumerate(chosen)
        ]
        center, _ = decide_closest_string(
            substrings,
            self.instance.budget,
            self.instance.alphabet_size,
            self.config,
        )
        return None if center is None else self._solution(center, chosen)


class _SumSearch(_Search[IntArray]):
    """
    Consensus Patterns search.

    The state holds the symbol counts per column of the chosen matches; the
    optimal consensus cost of a partial selection never decreases when a
    match is added, so selections above d are abandoned.
    """

    def _initial(self) -> IntArray:
        return np.zeros(
            (self.instance.alphabet_size, self.instance.length),
            dtype=np.int64,
        )

    def _choices(self, level: int, state: IntArray) -> Sequence[int]:
        return range(len(self.matches[level]))

    def _extend(self, level: int, state: IntArray, choice: int) -> Optional[IntArray]:
        counts = state.copy()
        counts[self.matches[level][choice], np.arange(self.instance.length)] += 1
        cost = (level + 1) * self.instance.length - int(counts.max(axis=0).sum())
        return None if cost > self.instance.budget else counts

    def _leaf(self, state: IntArray, chosen: Tuple[int, ...]) -> Optional[Solution]:
        return self._solution(SymbolString(np.argmax(state, axis=0)), chosen)


def _certify(instance: MotifInstance, solution: Solution) -> int:
    evaluation = evaluate(instance, solution)
    if not evaluation.feasible:
        msg = (
            f"Solver returned a solution with aggregate {evaluation.aggregate}"
            f" above d = {instance.budget}"
        )
        raise InvalidSolutionError(msg)
    return evaluation.aggregate


def _run_search(
    instance: MotifInstance,
    config: SolverConfig,
    search_type: Type[_Search[Any]],
    leaf: LeafStrategy,
) -> SolverReport:
    started = time.perf_counter()
    if not instance.count:
        solution = Solution(
            center=SymbolString(np.zeros(instance.length, dtype=np.int64)),
            offsets=(),
        )
        return SolverReport(
            solution=solution,
            aggregate=_certify(instance, solution),
            leaf_strategy=leaf,
            elapsed=time.perf_counter() - started,
        )
    domain = prune_offsets(instance)
    logger.debug(
        "offset domains %s after pruning %d offsets",
        domain.sizes,
        domain.pruned,
    )
    if domain.is_empty:
        return SolverReport(
            solution=None,
            offsets_pruned=domain.pruned,
            leaf_strategy=leaf,
            elapsed=time.perf_counter() - started,
        )
    cutoff = _Cutoff()
    roots = range(len(domain[0]))

    def branch(root: int) -> _Outcome:
        return search_type(instance, domain, config, cutoff).run(root)

    if config.threads == 1:
        outcomes: List[_Outcome] = []
        for root in roots:
            outcomes.append(branch(root))
            if outcomes[-1].solution is not None or outcomes[-1].limit is not None:
                break
    else:
        with ThreadPoolExecutor(max_workers=config.threads) as pool:
            outcomes = list(pool.map(branch, roots))
    nodes = 0
    solution = None
    for outcome in outcomes:
        nodes += outcome.nodes
        if outcome.limit is not None:
            logger.debug("resource cap hit after %d nodes", nodes)
            raise outcome.limit
        if outcome.solution is not None:
            solution = outcome.solution
            break
    report = SolverReport(
        solution=solution,
        aggregate=None if solution is None else _certify(instance, solution),
        nodes_explored=nodes,
        offsets_pruned=domain.pruned,
        leaf_strategy=leaf,
        elapsed=time.perf_counter() - started,
    )
    logger.debug(
        "%s after %d nodes in %.3fs",
        report.verdict,
        report.nodes_explored,
        report.elapsed,
    )
    return report


def closest_substring_exact(
    instance: MotifInstance,
    config: Optional[SolverConfig] = None,
) -> SolverReport:
    """
    Decide a Closest Substring instance exactly.

    Returns the solution with the lexicographically least offset tuple.

    Raises
    ------
    MetricError
        for sum-metric instances.
    ResourceLimitError
        when a configured cap is exceeded before a verdict.

    """
    if instance.metric is not Metric.MAX:
        msg = "Closest Substring needs a max-metric instance"
        raise MetricError(msg)
    config = config or SolverConfig()
    leaf = choose_leaf(
        instance.alphabet_size,
        instance.length,
        instance.count,
        instance.budget,
        config,
    )
    return _run_search(instance, config, _MaxSearch, leaf)


def consensus_exact(
    instance: MotifInstance,
    config: Optional[SolverConfig] = None,
) -> SolverReport:
    """
    Decide a Consensus Patterns instance exactly by branch and bound.

    At a full offset tuple the center is the column-wise plurality string.
    """
    if instance.metric is not Metric.SUM:
        msg = "Consensus Patterns needs a sum-metric instance"
        raise MetricError(msg)
    return _run_search(instance, config or SolverConfig(), _SumSearch, "majority")


def naive_center_oracle(
    instance: MotifInstance,
    cap: int = DEFAULT_NAIVE_CAP,
) -> SolverReport:
    """
    Decide an instance by enumerating every center.

    For each center in lexicographic order the best offset of every string is
    taken; the first center whose aggregate is within d wins.
    ``nodes_explored`` counts the centers tried.
    """
    started = time.perf_counter()
    alphabet, length = instance.alphabet_size, instance.length
    total = alphabet**length
    if total > cap:
        raise ResourceLimitError("naive_cap", cap, total)
    stacks = [windows(string.symbols, length) for string in instance.strings]
    if any(not len(stack) for stack in stacks):
        return SolverReport(
            solution=None,
            leaf_strategy="naive",
            elapsed=time.perf_counter() - started,
        )
    widest = max((len(stack) for stack in stacks), default=1)
    chunk = max(1, _CHUNK_CELLS // max(1, widest * length))
    for start in range(0, total, chunk):
        centers = center_block(alphabet, length, start, min(start + chunk, total))
        best = [
            np.count_nonzero(centers[:, None, :] != stack[None, :, :], axis=2)
            for stack in stacks
        ]
        distances = np.stack([b.min(axis=1) for b in best], axis=1) if best else None
        if distances is None:
            scores = np.zeros(len(centers), dtype=np.int64)
        elif instance.metric is Metric.MAX:
            scores = distances.max(axis=1)
        else:
            scores = distances.sum(axis=1)
        feasible = np.flatnonzero(scores <= instance.budget)
        if feasible.size:
            row = int(feasible[0])
            solution = Solution(
                center=SymbolString(centers[row]),
                offsets=tuple(int(np.argmin(b[row])) for b in best),
            )
            return SolverReport(
                solution=solution,
                aggregate=_certify(instance, solution),
                nodes_explored=start + row + 1,
                leaf_strategy="naive",
                elapsed=time.perf_counter() - started,
            )
    return SolverReport(
        solution=None,
        nodes_explored=total,
        leaf_strategy="naive",
        elapsed=time.perf_counter() - started,
    )


def solve(
    instance: MotifInstance,
    config: Optional[SolverConfig] = None,
) -> SolverReport:
    """Run the exact solver matching the metric of the instance."""
    if instance.metric is Metric.MAX:
        return closest_substring_exact(instance, config)
    return consensus_exact(instance, config)


__all__ = [
    "DEFAULT_DP_CAP",
    "DEFAULT_NAIVE_CAP",
    "OffsetDomain",
    "SolverConfig",
    "SolverReport",
    "choose_leaf",
    "closest_string_branch",
    "closest_string_brute",
    "closest_string_column_dp",
    "closest_substring_exact",
    "consensus_exact",
    "decide_closest_string",
    "majority_center",
    "naive_center_oracle",
    "prune_offsets",
    "solve",
]
