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
"""Exceptions for pymotif."""

from typing import Optional


class _FormatError(ValueError):
    """Text input cannot be parsed, with the offending position."""

    def __init__(self, msg: str, line: int, column: Optional[int] = None) -> None:
        where = f"line {line}" if column is None else f"line {line}, column {column}"
        super().__init__(f"{where}: {msg}")
        self.line = line
        self.column = column


class GraphFormatError(_FormatError):
    """Graph file is not in the DIMACS edge format or describes an invalid graph."""


class InstanceFormatError(_FormatError):
    """Instance file is not a valid MSI v1 file."""


class InvalidGraphError(ValueError):
    """Graph has self-loops, duplicate edges or vertices out of range."""


class InvalidParameterError(ValueError):
    """Reduction parameter out of range, such as a clique size below 3."""


class InvalidInstanceError(ValueError):
    """Motif instance violates its alphabet, length or budget constraints."""


class InvalidSolutionError(ValueError):
    """Solution does not fit the instance it is evaluated against."""


class LengthMismatchError(ValueError):
    """Strings compared position by position must have equal length."""


class NotACliqueError(ValueError):
    """Vertex set handed to a witness builder is not a clique of the graph."""


class DecodingError(ValueError):
    """Center string does not decode to a vertex set."""


class MetricError(ValueError):
    """Solver called with an instance of the wrong distance metric."""


class WitnessProfileError(AssertionError):
    """Forward witness lacks the distance profile of its construction."""


class ResourceLimitError(RuntimeError):
    """A configured resource cap was exceeded before a verdict was reached."""

    def __init__(self, cap: str, limit: int, required: Optional[int] = None) -> None:
        needed = "" if required is None else f" (needs {required})"
        super().__init__(f"{cap} of {limit} exceeded{needed}")
        self.cap = cap
        self.limit = limit
        self.required = required


__all__ = [
    "DecodingError",
    "GraphFormatError",
    "InstanceFormatError",
    "InvalidGraphError",
    "InvalidInstanceError",
    "InvalidParameterError",
    "InvalidSolutionError",
    "LengthMismatchError",
    "MetricError",
    "NotACliqueError",
    "ResourceLimitError",
    "WitnessProfileError",
]
