"""Mutmut configuration."""

from typing import Protocol

files_to_mutate = [
    "pymotif/graphs.py",
    "pymotif/instances.py",
    "pymotif/functions.py",
    "pymotif/factories.py",
    "pymotif/reduce_unbounded.py",
    "pymotif/reduce_binary.py",
    "pymotif/reduce_consensus.py",
    "pymotif/solvers.py",
]


class Context(Protocol):
    filename: str
    skip: bool


def pre_mutation(context: Context) -> None:
    """Skip mutants outside the construction and search code."""
    if context.filename not in files_to_mutate:
        context.skip = True


__all__ = ["pre_mutation"]
