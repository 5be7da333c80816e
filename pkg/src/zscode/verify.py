"""Exhaustive and sampled verification of a codec against independent oracles.

The oracle rebuilds the disparity of every candidate from a cumulative sum
over the unpacked data bits, never touching the popcount path the codec
uses, and picks the first admissible candidate by linear scan.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .arch import serial_encode_array
from .bits import BitWord, popcount, unpack_rows
from .exceptions import CodeError
from .op import adversarial_words
from .sp import SpCodec

EXHAUSTIVE_LIMIT = 20
CHUNK = 1 << 16


@dataclass
class VerifyResult:
    checked: int = 0
    failures: list[tuple[BitWord, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def merge(self, other: VerifyResult) -> None:
        self.checked += other.checked
        self.failures.extend(other.failures)


def oracle_choice(codec, words: np.ndarray) -> np.ndarray:
    """Candidate index a minimal encoder must pick, via prefix sums of bits."""
    bits = unpack_rows(words, codec.n).astype(np.int16)
    signs = 2 * bits - 1
    v0 = signs.sum(axis=1)
    # v(w^(k)) = v(w) - 2 * sum of the first k signs
    walk = np.hstack([np.zeros((len(words), 1), np.int16), np.cumsum(signs, axis=1)])
    walk = v0[:, None] - 2 * walk
    ks = np.array([k for k, _ in codec.candidates])
    uv = np.array([2 * u.value.bit_count() - codec.p for _, u in codec.candidates])
    admissible = np.abs(walk[:, ks] + uv) <= 2 * codec.d
    first = np.argmax(admissible, axis=1)
    first[~admissible.any(axis=1)] = -1
    return first


def check_words(codec, words: np.ndarray, max_failures: int = 8) -> VerifyResult:
    """Roundtrip, disparity bound, minimal choice and (SP) serial equivalence."""
    words = np.asarray(words, dtype=np.uint64)
    result = VerifyResult(checked=len(words))
    bad = np.zeros(len(words), dtype=bool)
    reasons = {}

    def flag(mask, reason):
        for i in np.flatnonzero(mask & ~bad)[:max_failures]:
            reasons.setdefault(int(i), reason)
        bad[mask] = True

    chosen = codec.choose_array(words)
    flag(chosen != oracle_choice(codec, words), "not the minimal admissible candidate")
    parity, data = codec.encode_array(words)
    v = 2 * (popcount(parity) + popcount(data)) - codec.m
    flag(np.abs(v) > 2 * codec.d, "codeword disparity out of bound")
    try:
        decoded = codec.decode_array(parity, data)
        flag(decoded != words, "roundtrip mismatch")
    except CodeError as exc:
        mask = np.zeros(len(words), dtype=bool)
        mask[exc.index] = True
        flag(mask, f"decode failed: {exc}")
    if isinstance(codec, SpCodec):
        sp_par, sp_dat = serial_encode_array(codec, words)
        flag((sp_par != parity) | (sp_dat != data), "serial encoder disagrees")
    for i in sorted(reasons)[:max_failures]:
        result.failures.append((BitWord(codec.n, int(words[i])), reasons[i]))
    return result


def default_threads() -> int:
    env = os.environ.get("ZS_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def _chunks_exhaustive(n: int):
    total = 1 << n
    for start in range(0, total, CHUNK):
        yield np.arange(start, min(start + CHUNK, total), dtype=np.uint64)


def _chunks_sampled(n: int, samples: int, seed: int):
    yield adversarial_words(n)
    rng = np.random.default_rng(seed)
    for start in range(0, samples, CHUNK):
        size = min(CHUNK, samples - start)
        yield rng.integers(0, 1 << n, size=size, dtype=np.uint64) if n < 64 else \
            rng.integers(0, np.iinfo(np.uint64).max, size=size, dtype=np.uint64, endpoint=True)


def verify_codec(codec, exhaustive: bool = False, samples: int = 100_000, seed: int = 0,
                 threads: int | None = None) -> VerifyResult:
    """Run :func:`check_words` over all inputs or a seeded sample.

    Chunks may run on several threads; the merged result is independent of
    scheduling because failures are reported in chunk order.
    """
    if exhaustive:
        if codec.n > EXHAUSTIVE_LIMIT:
            raise ValueError(f"exhaustive verification is limited to n <= {EXHAUSTIVE_LIMIT} "
                             f"(2^{codec.n} inputs); use a sample count instead")
        chunks = _chunks_exhaustive(codec.n)
    else:
        chunks = _chunks_sampled(codec.n, samples, seed)
    threads = threads or default_threads()
    total = VerifyResult()
    if threads == 1:
        for chunk in chunks:
            total.merge(check_words(codec, chunk))
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            for part in pool.map(lambda c: check_words(codec, c), chunks):
                total.merge(part)
    return total
