"""Fixed-length binary words and the disparity primitives built on them.

Bits are numbered MSB-first: index 0 is the most significant ("first") bit,
so ``prefix_flip(w, k)`` complements the ``k`` most significant bits.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

MAX_DATA_BITS = 64
# codewords carry up to 64 data bits plus the parity prefix
MAX_WORD_BITS = 128


@dataclass(frozen=True, order=True)
class BitWord:
    """An immutable even-length word backed by a Python integer."""

    length: int
    value: int

    def __post_init__(self):
        if self.length % 2 or not 2 <= self.length <= MAX_WORD_BITS:
            raise ValueError(f"word length must be even and in [2, {MAX_WORD_BITS}], got {self.length}")
        if not 0 <= self.value < (1 << self.length):
            raise ValueError(f"value {self.value} does not fit in {self.length} bits")

    @classmethod
    def from_str(cls, text: str) -> BitWord:
        text = text.replace("_", "").replace(" ", "")
        if not text or set(text) - {"0", "1"}:
            raise ValueError(f"not a binary string: {text!r}")
        return cls(len(text), int(text, 2))

    @classmethod
    def from_bits(cls, bits) -> BitWord:
        value = 0
        for b in bits:
            if b not in (0, 1):
                raise ValueError(f"bit must be 0 or 1, got {b!r}")
            value = (value << 1) | int(b)
        return cls(len(bits), value)

    @classmethod
    def zeros(cls, length: int) -> BitWord:
        return cls(length, 0)

    @classmethod
    def ones(cls, length: int) -> BitWord:
        return cls(length, (1 << length) - 1)

    @property
    def bits(self) -> tuple[int, ...]:
        return tuple((self.value >> (self.length - 1 - i)) & 1 for i in range(self.length))

    def __getitem__(self, i: int) -> int:
        if not -self.length <= i < self.length:
            raise IndexError(i)
        i %= self.length
        return (self.value >> (self.length - 1 - i)) & 1

    def __len__(self) -> int:
        return self.length

    def __str__(self) -> str:
        return format(self.value, f"0{self.length}b")

    def concat(self, other: BitWord) -> BitWord:
        """``self`` followed by ``other`` (self lands in the high bits)."""
        return BitWord(self.length + other.length, (self.value << other.length) | other.value)

    def split(self, head: int) -> tuple[BitWord, BitWord]:
        """Split into the first ``head`` bits and the rest."""
        tail = self.length - head
        return BitWord(head, self.value >> tail), BitWord(tail, self.value & ((1 << tail) - 1))


@dataclass(frozen=True)
class DisparityBound:
    """Bound ``|v| <= 2d`` on codeword disparity; ``d = 0`` is perfectly balanced."""

    d: int

    def __post_init__(self):
        if self.d < 0:
            raise ValueError(f"d must be non-negative, got {self.d}")

    @property
    def bound(self) -> int:
        return 2 * self.d

    def admits(self, v: int) -> bool:
        return abs(v) <= 2 * self.d


def weight(w: BitWord) -> int:
    return w.value.bit_count()


def disparity(w: BitWord) -> int:
    """Number of ones minus number of zeros."""
    return 2 * w.value.bit_count() - w.length


def prefix_mask(length: int, k: int) -> int:
    """Integer mask selecting the ``k`` most significant of ``length`` bits."""
    return ((1 << k) - 1) << (length - k)


def prefix_flip(w: BitWord, k: int) -> BitWord:
    """Complement the first ``k`` bits of ``w``."""
    if not 0 <= k <= w.length:
        raise IndexError(f"k={k} outside [0, {w.length}]")
    return BitWord(w.length, w.value ^ prefix_mask(w.length, k))


def disparity_walk(w: BitWord) -> list[int]:
    """Disparities of ``w^(0) .. w^(n)``; consecutive entries differ by 2."""
    return [disparity(prefix_flip(w, k)) for k in range(w.length + 1)]


# -- array helpers ---------------------------------------------------------

def popcount(a: np.ndarray) -> np.ndarray:
    return np.bitwise_count(a.astype(np.uint64, copy=False)).astype(np.int64)


def prefix_masks(n: int) -> np.ndarray:
    """``masks[k]`` flips the first ``k`` of ``n`` bits, for ``k = 0 .. n``."""
    return np.array([prefix_mask(n, k) for k in range(n + 1)], dtype=np.uint64)


def pack_rows(bits: np.ndarray) -> np.ndarray:
    """Pack an ``(N, w)`` 0/1 matrix (w <= 64) into MSB-first uint64 values."""
    bits = np.asarray(bits, dtype=np.uint64)
    if bits.ndim != 2 or bits.shape[1] > 64:
        raise ValueError("expected an (N, w) bit matrix with w <= 64")
    width = bits.shape[1]
    shifts = np.arange(width - 1, -1, -1, dtype=np.uint64)
    return np.bitwise_or.reduce(bits << shifts, axis=1) if width else np.zeros(len(bits), np.uint64)


def unpack_rows(values: np.ndarray, width: int) -> np.ndarray:
    """Inverse of :func:`pack_rows`: uint64 values to an ``(N, width)`` uint8 matrix."""
    values = np.asarray(values, dtype=np.uint64)
    shifts = np.arange(width - 1, -1, -1, dtype=np.uint64)
    return ((values[:, None] >> shifts) & np.uint64(1)).astype(np.uint8)
