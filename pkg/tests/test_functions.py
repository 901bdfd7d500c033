"""Test the Hamming distance kernels."""

import numpy as np
import pytest

from pymotif import functions
from pymotif.exceptions import LengthMismatchError


def test_symbol_dtype() -> None:
    assert functions.symbol_dtype(2) == np.uint8
    assert functions.symbol_dtype(256) == np.uint8
    assert functions.symbol_dtype(257) == np.uint32


def test_bit_count64() -> None:
    words = np.array([0, 1, 0xFF, 0xFFFFFFFFFFFFFFFF], dtype=np.uint64)

    assert functions.bit_count64(words).tolist() == [0, 1, 8, 64]


def test_pack_bits_pads_to_words() -> None:
    assert functions.pack_bits([1, 0, 1]).shape == (1,)
    assert functions.pack_bits(np.ones(65, dtype=np.uint8)).shape == (2,)


def test_pack_bits_rows() -> None:
    packed = functions.pack_bits(np.zeros((3, 70), dtype=np.uint8))

    assert packed.shape == (3, 2)


def test_packed_distance() -> None:
    first = functions.pack_bits([1, 0, 1, 1, 0] * 20)
    second = functions.pack_bits([0, 0, 1, 0, 0] * 20)

    assert functions.packed_distance(first, second) == 40


def test_symbol_distance() -> None:
    first = np.array([0, 2, 3, 7], dtype=np.uint8)
    second = np.array([0, 2, 4, 7], dtype=np.uint8)

    assert functions.symbol_distance(first, second) == 1


def test_symbol_distance_length_mismatch() -> None:
    with pytest.raises(LengthMismatchError):
        functions.symbol_distance(np.zeros(2, np.uint8), np.zeros(3, np.uint8))


@pytest.mark.parametrize("binary", [True, False])
def test_distance_matrix(binary: bool) -> None:
    rows = np.array([[0, 0, 1], [1, 1, 1]], dtype=np.uint8)
    columns = np.array([[0, 0, 0], [1, 0, 1], [1, 1, 1]], dtype=np.uint8)

    matrix = functions.distance_matrix(rows, columns, binary=binary)

    assert matrix.tolist() == [[1, 1, 2], [3, 1, 0]]


def test_windows() -> None:
    text = np.array([1, 2, 3, 4], dtype=np.uint8)

    assert functions.windows(text, 2).tolist() == [[1, 2], [2, 3], [3, 4]]


def test_windows_too_short() -> None:
    text = np.array([1, 2], dtype=np.uint8)

    assert functions.windows(text, 3).shape == (0, 3)


def test_window_distances() -> None:
    text = np.array([0, 1, 1, 0, 1], dtype=np.uint8)
    pattern = np.array([1, 1], dtype=np.uint8)

    assert functions.window_distances(text, pattern).tolist() == [1, 0, 1, 1]


def test_window_distances_pattern_too_long() -> None:
    text = np.array([0, 1], dtype=np.uint8)

    assert functions.window_distances(text, np.zeros(3, np.uint8)).size == 0


def test_window_distances_fft_matches_direct() -> None:
    rng = np.random.default_rng(7)
    text = rng.integers(0, 3, size=3000).astype(np.uint8)
    pattern = rng.integers(0, 3, size=700).astype(np.uint8)
    direct = np.count_nonzero(functions.windows(text, 700) != pattern, axis=1)

    fft = functions.window_distances(text, pattern)

    assert fft.tolist() == direct.tolist()


def test_center_block_is_lexicographic() -> None:
    block = functions.center_block(3, 2, 0, 9)

    assert block.tolist() == [[a, b] for a in range(3) for b in range(3)]


def test_center_block_slice() -> None:
    assert functions.center_block(2, 3, 5, 7).tolist() == [[1, 0, 1], [1, 1, 0]]
