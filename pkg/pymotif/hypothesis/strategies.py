"""
Data-generating strategies for property-based testing.

Sizes are kept small so that brute force oracles stay fast.
"""

from itertools import combinations
from typing import List
from typing import Optional

import hypothesis.strategies as st

from pymotif.graphs import Graph
from pymotif.instances import MotifInstance
from pymotif.instances import SymbolString
from pymotif.types import Metric

__all__ = [
    "closest_string_sets",
    "graphs",
    "motif_instances",
    "symbol_strings",
]


@st.composite
def graphs(
    draw: st.DrawFn,
    *,
    min_vertices: int = 0,
    max_vertices: int = 6,
) -> Graph:
    """
    Generate a simple graph on 1..n.

    Args:
    ----
        draw: The draw function from the hypothesis library.
        min_vertices: The smallest vertex count.
        max_vertices: The largest vertex count.

    Returns:
    -------
        A graph with an arbitrary subset of the possible edges.

    """
    n = draw(st.integers(min_value=min_vertices, max_value=max_vertices))
    pairs = list(combinations(range(1, n + 1), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, (pair for pair, chosen in zip(pairs, mask) if chosen))


@st.composite
def symbol_strings(
    draw: st.DrawFn,
    *,
    alphabet_size: int = 2,
    min_length: int = 0,
    max_length: int = 8,
) -> SymbolString:
    """Generate a string over the symbols 0 to alphabet_size - 1."""
    return SymbolString(
        draw(
            st.lists(
                st.integers(min_value=0, max_value=alphabet_size - 1),
                min_size=min_length,
                max_size=max_length,
            ),
        ),
    )


@st.composite
def closest_string_sets(
    draw: st.DrawFn,
    *,
    alphabet_size: Optional[int] = None,
    max_strings: int = 4,
    max_length: int = 6,
) -> List[SymbolString]:
    """
    Generate one or more strings of a common length.

    Args:
    ----
        draw: The draw function from the hypothesis library.
        alphabet_size: Fixed alphabet size, drawn from 2 to 3 when None.
        max_strings: The largest number of strings.
        max_length: The largest common length.

    Returns:
    -------
        A non-empty list of equal length strings.

    """
    if alphabet_size is None:
        alphabet_size = draw(st.integers(min_value=2, max_value=3))
    length = draw(st.integers(min_value=1, max_value=max_length))
    return draw(
        st.lists(
            symbol_strings(
                alphabet_size=alphabet_size,
                min_length=length,
                max_length=length,
            ),
            min_size=1,
            max_size=max_strings,
        ),
    )


@st.composite
def motif_instances(  # noqa: PLR0913
    draw: st.DrawFn,
    *,
    metric: Optional[Metric] = None,
    alphabet_size: Optional[int] = 2,
    max_strings: int = 3,
    min_text_length: Optional[int] = None,
    max_text_length: int = 6,
    max_motif_length: int = 3,
) -> MotifInstance:
    """
    Generate a small motif instance.

    Args:
    ----
        draw: The draw function from the hypothesis library.
        metric: Fixed metric, drawn when None.
        alphabet_size: The alphabet size of the instance, drawn from 2 to 3
            when None.
        max_strings: The largest number K of strings.
        min_text_length: The shortest input string length, L when None.
        max_text_length: The largest input string length.
        max_motif_length: The largest substring length L.

    Returns:
    -------
        An instance whose strings are at least ``min_text_length`` long.

    """
    if metric is None:
        metric = draw(st.sampled_from(Metric))
    if alphabet_size is None:
        alphabet_size = draw(st.integers(min_value=2, max_value=3))
    length = draw(st.integers(min_value=1, max_value=max_motif_length))
    shortest = length if min_text_length is None else min_text_length
    strings = draw(
        st.lists(
            symbol_strings(
                alphabet_size=alphabet_size,
                min_length=shortest,
                max_length=max(shortest, max_text_length),
            ),
            min_size=1,
            max_size=max_strings,
        ),
    )
    limit = length if metric is Metric.MAX else length * len(strings)
    return MotifInstance(
        metric=metric,
        alphabet_size=alphabet_size,
        strings=tuple(strings),
        length=length,
        budget=draw(st.integers(min_value=0, max_value=limit)),
    )
