"""Machinery shared by the Simple Parallel and Optimized Parallel codecs.

Both schemes reduce to an ordered candidate list of ``(k, u)`` pairs.  The
encoder emits ``u || w^(k)`` for the first candidate whose codeword disparity
is within the bound; the decoder maps ``u`` back to ``k`` and undoes the flip.
"""

from __future__ import annotations

import numpy as np

from .bits import BitWord, popcount, prefix_mask, prefix_masks
from .exceptions import BoundViolationError, UnknownParityWordError


class PrefixFlipCodec:
    """Mixin providing encode/decode given ``n``, ``d``, ``p`` and ``candidates``."""

    scheme: str
    n: int
    d: int
    p: int

    def _init_tables(self, candidates):
        cand = tuple(candidates)
        decode_map = {}
        for k, u in cand:
            if u.length != self.p:
                raise ValueError(f"parity word {u} is not {self.p} bits long")
            if u.value in decode_map:
                raise ValueError(f"parity word {u} assigned twice")
            decode_map[u.value] = k
        order = sorted(decode_map)
        cache = {
            "candidates": cand,
            "decode_map": decode_map,
            "cand_k": np.array([k for k, _ in cand], dtype=np.int64),
            "cand_u": np.array([u.value for _, u in cand], dtype=np.uint64),
            "cand_uv": np.array([2 * u.value.bit_count() - self.p for _, u in cand], dtype=np.int64),
            "sorted_u": np.array(order, dtype=np.uint64),
            "sorted_k": np.array([decode_map[v] for v in order], dtype=np.int64),
            "masks": prefix_masks(self.n),
        }
        for name, value in cache.items():
            object.__setattr__(self, "_" + name, value)

    @property
    def m(self) -> int:
        return self.n + self.p

    @property
    def bound(self) -> int:
        return 2 * self.d

    @property
    def candidates(self) -> tuple[tuple[int, BitWord], ...]:
        return self._candidates

    @property
    def decode_map(self) -> dict[int, int]:
        """Parity word value -> flip count."""
        return dict(self._decode_map)

    # -- scalar path -------------------------------------------------------

    def choose(self, w: BitWord) -> int:
        """Index into :attr:`candidates` of the first admissible step for ``w``."""
        if w.length != self.n:
            raise ValueError(f"expected a {self.n}-bit data word, got {w.length} bits")
        m, bound = self.m, 2 * self.d
        for idx, (k, u) in enumerate(self._candidates):
            x = w.value ^ prefix_mask(self.n, k)
            if abs(2 * (u.value.bit_count() + x.bit_count()) - m) <= bound:
                return idx
        raise AssertionError(f"no admissible step for {w}; the codec tables are broken")

    def encode(self, w: BitWord) -> BitWord:
        k, u = self._candidates[self.choose(w)]
        return BitWord(self.m, (u.value << self.n) | (w.value ^ prefix_mask(self.n, k)))

    def decode(self, c: BitWord) -> BitWord:
        if c.length != self.m:
            raise ValueError(f"expected a {self.m}-bit codeword, got {c.length} bits")
        v = 2 * c.value.bit_count() - self.m
        if abs(v) > 2 * self.d:
            raise BoundViolationError(f"codeword {c} has disparity {v}, bound is ±{2 * self.d}")
        u, x = c.split(self.p)
        try:
            k = self._decode_map[u.value]
        except KeyError:
            raise UnknownParityWordError(f"parity word {u} is not in the table") from None
        return BitWord(self.n, x.value ^ prefix_mask(self.n, k))

    # -- array path --------------------------------------------------------

    def choose_array(self, words: np.ndarray) -> np.ndarray:
        words = self._check_words(words)
        chosen = np.full(len(words), -1, dtype=np.int64)
        pending = np.arange(len(words))
        for idx, k in enumerate(self._cand_k):
            if not len(pending):
                break
            x = words[pending] ^ self._masks[k]
            ok = np.abs(2 * popcount(x) - self.n + self._cand_uv[idx]) <= 2 * self.d
            chosen[pending[ok]] = idx
            pending = pending[~ok]
        if len(pending):
            raise AssertionError(f"no admissible step for word {int(words[pending[0]])}")
        return chosen

    def encode_array(self, words: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """Encode uint64 data words; returns ``(parity, flipped_data)`` arrays."""
        words = self._check_words(words)
        chosen = self.choose_array(words)
        parity = self._cand_u[chosen]
        data = words ^ self._masks[self._cand_k[chosen]]
        return parity, data

    def decode_array(self, parity: np.ndarray, data: np.ndarray) -> np.ndarray:
        """Inverse of :meth:`encode_array`; errors carry the offending index."""
        parity = np.asarray(parity, dtype=np.uint64)
        data = np.asarray(data, dtype=np.uint64)
        if parity.shape != data.shape:
            raise ValueError("parity and data arrays differ in shape")
        v = 2 * (popcount(parity) + popcount(data)) - self.m
        bad = np.flatnonzero(np.abs(v) > 2 * self.d)
        pos = np.searchsorted(self._sorted_u, parity)
        pos_c = np.minimum(pos, len(self._sorted_u) - 1)
        unknown = np.flatnonzero(self._sorted_u[pos_c] != parity)
        # report whichever failure comes first in the stream
        first_bad = bad[0] if len(bad) else None
        first_unknown = unknown[0] if len(unknown) else None
        if first_bad is not None and (first_unknown is None or first_bad <= first_unknown):
            i = int(first_bad)
            raise BoundViolationError(f"codeword disparity {int(v[i])} exceeds ±{2 * self.d}", index=i)
        if first_unknown is not None:
            i = int(first_unknown)
            raise UnknownParityWordError(
                f"parity word {int(parity[i]):0{self.p}b} is not in the table", index=i)
        ks = self._sorted_k[pos_c]
        return data ^ self._masks[ks]

    def _check_words(self, words) -> np.ndarray:
        words = np.asarray(words)
        if words.ndim != 1:
            raise ValueError("expected a 1-D array of data words")
        words = words.astype(np.uint64, copy=False)
        if self.n < 64 and len(words) and int(words.max()) >> self.n:
            raise ValueError(f"data word does not fit in {self.n} bits")
        return words
