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
Hamming distance kernels on symbol arrays.

Binary strings are packed into 64 bit words so that distances become
word-XOR plus population count.
Strings over larger alphabets are compared one symbol per cell.
"""

from typing import Any

import numpy as np
import numpy.typing as npt
from numpy.lib.stride_tricks import sliding_window_view

from pymotif.exceptions import LengthMismatchError

SymbolArray = npt.NDArray[np.unsignedinteger[Any]]
WordArray = npt.NDArray[np.uint64]
IntArray = npt.NDArray[np.int64]

_M1 = np.uint64(0x5555555555555555)
_M2 = np.uint64(0x3333333333333333)
_M4 = np.uint64(0x0F0F0F0F0F0F0F0F)
_H01 = np.uint64(0x0101010101010101)
_SHIFT1 = np.uint64(1)
_SHIFT2 = np.uint64(2)
_SHIFT4 = np.uint64(4)
_SHIFT56 = np.uint64(56)

_BYTE_ALPHABET = 256

# windows * length below which the sliding comparison beats the FFT
_DIRECT_LIMIT = 1 << 20


def symbol_dtype(alphabet: int) -> "np.dtype[np.unsignedinteger[Any]]":
    """Return the narrowest unsigned cell type holding symbol ids below alphabet."""
    return np.dtype(np.uint8 if alphabet <= _BYTE_ALPHABET else np.uint32)


def bit_count64(words: WordArray) -> WordArray:
    """
    Return the number of set bits of every 64 bit word.

    SWAR population count, elementwise over the array.
    """
    words = words - ((words >> _SHIFT1) & _M1)
    words = (words & _M2) + ((words >> _SHIFT2) & _M2)
    words = (words + (words >> _SHIFT4)) & _M4
    return (words * _H01) >> _SHIFT56  # type: ignore [no-any-return]


def pack_bits(bits: npt.ArrayLike) -> WordArray:
    """
    Pack 0/1 symbols along the last axis into 64 bit words.

    The last axis is zero padded to a multiple of 64 bits.

    >>> pack_bits([1, 0, 1]).shape
    (1,)
    """
    packed = np.packbits(np.asarray(bits, dtype=np.uint8), axis=-1)
    pad = (-packed.shape[-1]) % 8
    if pad:
        zeros = np.zeros((*packed.shape[:-1], pad), dtype=np.uint8)
        packed = np.concatenate([packed, zeros], axis=-1)
    return np.ascontiguousarray(packed).view(np.uint64)


def packed_distance(first: WordArray, second: WordArray) -> int:
    """Return the Hamming distance of two packed bit strings."""
    return int(bit_count64(np.bitwise_xor(first, second)).sum())


def symbol_distance(first: SymbolArray, second: SymbolArray) -> int:
    """Return the number of positions where two symbol arrays differ."""
    if first.shape != second.shape:
        msg = f"Cannot compare strings of length {first.size} and {second.size}"
        raise LengthMismatchError(msg)
    return int(np.count_nonzero(first != second))


def distance_matrix(
    rows: SymbolArray,
    columns: SymbolArray,
    *,
    binary: bool,
) -> IntArray:
    """
    Return all pairwise Hamming distances between two stacks of strings.

    ``rows`` has shape (a, L), ``columns`` has shape (b, L); the result is (a, b).
    """
    out = np.empty((rows.shape[0], columns.shape[0]), dtype=np.int64)
    if binary:
        packed_rows = pack_bits(rows)
        packed_columns = pack_bits(columns)
        for index, row in enumerate(packed_rows):
            out[index] = bit_count64(packed_columns ^ row).sum(axis=1)
        return out
    for index, row in enumerate(rows):
        out[index] = np.count_nonzero(columns != row, axis=1)
    return out


def windows(text: SymbolArray, length: int) -> SymbolArray:
    """Return a read-only (N - length + 1, length) view of all windows of text."""
    if text.shape[0] < length:
        return np.zeros((0, length), dtype=text.dtype)
    return sliding_window_view(text, length)


def window_distances(text: SymbolArray, pattern: SymbolArray) -> IntArray:
    """
    Return the Hamming distance of pattern to every window of text.

    Entry ``o`` is the distance between ``pattern`` and ``text[o:o + len(pattern)]``.
    Long texts are handled by FFT cross-correlation, one pass per symbol
    occurring in the pattern.
    """
    length = pattern.shape[0]
    count = text.shape[0] - length + 1
    if count <= 0:
        return np.zeros(0, dtype=np.int64)
    if length == 0:
        return np.zeros(count, dtype=np.int64)
    if count * length <= _DIRECT_LIMIT:
        return np.count_nonzero(windows(text, length) != pattern, axis=1).astype(
            np.int64,
        )
    size = 1 << (text.shape[0] - 1).bit_length()
    matches = np.zeros(count, dtype=np.int64)
    for symbol in np.unique(pattern):
        text_hits = np.fft.rfft((text == symbol).astype(np.float64), size)
        pattern_hits = np.fft.rfft((pattern == symbol).astype(np.float64), size)
        correlation = np.fft.irfft(text_hits * np.conj(pattern_hits), size)
        matches += np.rint(correlation[:count]).astype(np.int64)
    return length - matches


def center_block(alphabet: int, length: int, start: int, stop: int) -> SymbolArray:
    """
    Return the centers with lexicographic ranks ``start`` to ``stop - 1``.

    Centers of the given length over ``alphabet`` symbols are ranked as
    base-``alphabet`` numbers, so rank order is lexicographic order.
    """
    ranks = np.arange(start, stop, dtype=np.int64)
    powers = alphabet ** np.arange(length - 1, -1, -1, dtype=np.int64)
    digits = (ranks[:, None] // powers[None, :]) % alphabet
    return digits.astype(symbol_dtype(alphabet))


__all__ = [
    "IntArray",
    "SymbolArray",
    "WordArray",
    "bit_count64",
    "center_block",
    "distance_matrix",
    "pack_bits",
    "packed_distance",
    "symbol_distance",
    "symbol_dtype",
    "window_distances",
    "windows",
]
