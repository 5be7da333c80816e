"""Structural resource proxies for parallel and pipelined encoders.

These are counts, not timing claims.  The balance-calculator latency model
``ceil(log2 n) + 1`` is calibrated on one datum: six register stages at
``n = 32``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import ceil, log2

import numpy as np

from .bits import BitWord, disparity
from .schemes import build_codec
from .sp import SpCodec


@dataclass(frozen=True)
class ResourceEstimate:
    scheme: str
    architecture: str
    n: int
    d: int
    balance_calculators: int
    calc_latency_stages: int
    pipeline_stages: int
    parity_bits: int
    codeword_bits: int
    mux_inputs: int

    def describe(self) -> str:
        rows = [
            ("scheme", self.scheme.upper()),
            ("architecture", self.architecture),
            ("data bits", self.n),
            ("disparity", f"±{2 * self.d}"),
            ("balance calculators", self.balance_calculators),
            ("calculator latency stages", self.calc_latency_stages),
            ("pipeline stages", self.pipeline_stages),
            ("parity bits", self.parity_bits),
            ("codeword bits", self.codeword_bits),
            ("mux inputs", self.mux_inputs),
        ]
        width = max(len(r[0]) for r in rows)
        return "".join(f"{name.ljust(width)}  {value}\n" for name, value in rows)


def estimate_resources(n: int, scheme: str = "sp", architecture: str = "parallel",
                       d: int = 0) -> ResourceEstimate:
    if architecture not in ("parallel", "pipeline"):
        raise ValueError(f"architecture must be 'parallel' or 'pipeline', got {architecture!r}")
    codec = build_codec(scheme, n, d)
    if d == 0:
        # with every flip count present, the last one is balanced by elimination
        calculators = n - 1
    else:
        calculators = len({k for k, _ in codec.candidates})
    return ResourceEstimate(
        scheme=codec.scheme,
        architecture=architecture,
        n=n,
        d=d,
        balance_calculators=calculators,
        calc_latency_stages=ceil(log2(n)) + 1,
        pipeline_stages=calculators if architecture == "pipeline" else 0,
        parity_bits=codec.p,
        codeword_bits=codec.m,
        mux_inputs=len(codec.candidates) if architecture == "parallel" else 0,
    )


def serial_encode(codec: SpCodec, w: BitWord) -> BitWord:
    """Encode by flipping one bit per step while tracking the running disparity.

    Produces the same codeword as ``codec.encode`` without recounting ones
    for each candidate flip count.
    """
    if w.length != codec.n:
        raise ValueError(f"expected a {codec.n}-bit data word, got {w.length} bits")
    words = dict(codec.table.entries)
    v = disparity(w)
    x = w.value
    for k in range(codec.n):
        if k in words and abs(v) <= 2 * codec.d:
            return words[k].concat(BitWord(codec.n, x))
        bit = 1 << (codec.n - 1 - k)
        v += -2 if x & bit else 2
        x ^= bit
    raise AssertionError(f"no admissible flip count for {w}")


def serial_encode_array(codec: SpCodec, words: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Array form of :func:`serial_encode`; returns ``(parity, flipped_data)``."""
    words = np.asarray(words, dtype=np.uint64)
    n = codec.n
    table = dict(codec.table.entries)
    x = words.copy()
    v = 2 * np.bitwise_count(words).astype(np.int64) - n
    done = np.zeros(len(words), dtype=bool)
    parity = np.zeros(len(words), dtype=np.uint64)
    data = np.zeros(len(words), dtype=np.uint64)
    for k in range(n):
        if k in table:
            hit = ~done & (np.abs(v) <= 2 * codec.d)
            parity[hit] = table[k].value
            data[hit] = x[hit]
            done |= hit
        bit = np.uint64(1 << (n - 1 - k))
        was_one = (x & bit) != 0
        v += np.where(was_one, -2, 2)
        x ^= bit
    if not done.all():
        raise AssertionError("serial encoder found no admissible flip count")
    return parity, data
