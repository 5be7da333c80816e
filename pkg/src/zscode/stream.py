"""ZSC1 container: a fixed header followed by bit-contiguous codewords.

Layout (little-endian integers)::

    magic "ZSC1" | version u8 | scheme u8 | n u16 | d u8 | p u16 | word_count u64

Codewords follow MSB-first with no per-word alignment; the final byte is
zero-padded.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass, field

import numpy as np

from .bits import pack_rows, popcount, unpack_rows
from .exceptions import FrameFormatError, PartialWordError, TruncatedStreamError
from .schemes import SCHEME_IDS, SCHEME_NAMES, build_codec

MAGIC = b"ZSC1"
VERSION = 1
_HEADER = struct.Struct("<4sBBHBHQ")
HEADER_SIZE = _HEADER.size


@dataclass(frozen=True)
class FrameHeader:
    scheme: str
    n: int
    d: int
    p: int
    word_count: int

    def pack(self) -> bytes:
        return _HEADER.pack(MAGIC, VERSION, SCHEME_IDS[self.scheme], self.n, self.d, self.p,
                            self.word_count)

    @classmethod
    def unpack(cls, blob: bytes) -> FrameHeader:
        if len(blob) < HEADER_SIZE:
            raise TruncatedStreamError(f"stream is {len(blob)} bytes, header needs {HEADER_SIZE}")
        magic, version, scheme, n, d, p, count = _HEADER.unpack_from(blob)
        if magic != MAGIC:
            raise FrameFormatError(f"bad magic {magic!r}")
        if version != VERSION:
            raise FrameFormatError(f"unsupported version {version}")
        if scheme not in SCHEME_NAMES:
            raise FrameFormatError(f"unknown scheme id {scheme}")
        if n % 2 or not 2 <= n <= 64:
            raise FrameFormatError(f"invalid data word length {n}")
        return cls(SCHEME_NAMES[scheme], n, d, p, count)

    def codec(self):
        codec = build_codec(self.scheme, self.n, self.d)
        if codec.p != self.p:
            raise FrameFormatError(
                f"header says p={self.p} but {self.scheme} n={self.n} d={self.d} uses p={codec.p}")
        return codec


def bytes_to_words(data: bytes, n: int) -> np.ndarray:
    bits = np.unpackbits(np.frombuffer(data, dtype=np.uint8))
    if len(bits) % n:
        raise PartialWordError(f"{len(bits)} input bits is not a multiple of n={n}")
    return pack_rows(bits.reshape(-1, n))


def words_to_bytes(words: np.ndarray, n: int) -> bytes:
    return np.packbits(unpack_rows(words, n).ravel()).tobytes()


def encode_stream(codec, data: bytes) -> bytes:
    words = bytes_to_words(data, codec.n)
    header = FrameHeader(codec.scheme, codec.n, codec.d, codec.p, len(words))
    parity, flipped = codec.encode_array(words)
    bits = np.hstack([unpack_rows(parity, codec.p), unpack_rows(flipped, codec.n)])
    return header.pack() + np.packbits(bits.ravel()).tobytes()


def _read_codewords(blob: bytes):
    header = FrameHeader.unpack(blob)
    codec = header.codec()
    payload = np.frombuffer(blob, dtype=np.uint8, offset=HEADER_SIZE)
    nbits = header.word_count * codec.m
    need = -(-nbits // 8)
    if len(payload) < need:
        raise TruncatedStreamError(f"payload is {len(payload)} bytes, expected {need}")
    if len(payload) > need:
        raise FrameFormatError(f"{len(payload) - need} trailing bytes after payload")
    bits = np.unpackbits(payload)
    if bits[nbits:].any():
        raise FrameFormatError("non-zero padding bits")
    rows = bits[:nbits].reshape(header.word_count, codec.m)
    return header, codec, pack_rows(rows[:, :codec.p]), pack_rows(rows[:, codec.p:])


def decode_stream(blob: bytes) -> bytes:
    """Recover the original bytes; codec errors carry the failing word index."""
    header, codec, parity, flipped = _read_codewords(blob)
    if (header.word_count * header.n) % 8:
        raise FrameFormatError("decoded payload would not be a whole number of bytes")
    words = codec.decode_array(parity, flipped)
    return words_to_bytes(words, codec.n)


@dataclass
class StreamStats:
    word_count: int
    d: int
    histogram: dict[int, int] = field(default_factory=dict)
    running_digital_sum_final: int = 0
    running_digital_sum_max_abs: int = 0

    def describe(self) -> str:
        lines = [f"words {self.word_count}", f"bound ±{2 * self.d}"]
        lines += [f"disparity {v:+d}: {c}" for v, c in sorted(self.histogram.items())]
        lines.append(f"rds final {self.running_digital_sum_final}")
        lines.append(f"rds max |.| {self.running_digital_sum_max_abs}")
        return "\n".join(lines) + "\n"


def stream_stats(blob: bytes) -> StreamStats:
    """Per-codeword disparity histogram and running digital sum extrema.

    Every codeword is also decoded, so a corrupt stream raises just as
    :func:`decode_stream` would.
    """
    header, codec, parity, flipped = _read_codewords(blob)
    codec.decode_array(parity, flipped)
    v = 2 * (popcount(parity) + popcount(flipped)) - codec.m
    hist = {b: 0 for b in range(-2 * codec.d, 2 * codec.d + 1, 2)}
    values, counts = np.unique(v, return_counts=True)
    for value, count in zip(values.tolist(), counts.tolist()):
        hist[value] = count
    rds = np.cumsum(v)
    return StreamStats(
        word_count=header.word_count,
        d=codec.d,
        histogram=hist,
        running_digital_sum_final=int(rds[-1]) if len(rds) else 0,
        running_digital_sum_max_abs=int(np.abs(rds).max()) if len(rds) else 0,
    )
