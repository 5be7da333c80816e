"""Constant-weight parity words and the parity word <-> flip count table."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import islice
from typing import Iterator

import numpy as np

from .bits import MAX_DATA_BITS, BitWord
from .exceptions import UnknownParityWordError


def iter_words_of_weight(p: int, weight: int) -> Iterator[BitWord]:
    """Yield every ``p``-bit word with ``weight`` ones in ascending numeric order.

    Uses Gosper's next-combination step, so taking a short prefix of a huge
    class (say 64 choose 32) is cheap.
    """
    if p % 2 or not 2 <= p <= MAX_DATA_BITS:
        raise ValueError(f"p must be even and in [2, {MAX_DATA_BITS}], got {p}")
    if not 0 <= weight <= p:
        raise ValueError(f"weight must be in [0, {p}], got {weight}")
    if weight == 0:
        yield BitWord(p, 0)
        return
    x = (1 << weight) - 1
    limit = 1 << p
    while x < limit:
        yield BitWord(p, x)
        low = x & -x
        ripple = x + low
        x = (((ripple ^ x) >> 2) // low) | ripple


def words_of_weight(p: int, weight: int) -> list[BitWord]:
    return list(iter_words_of_weight(p, weight))


def balanced_words(p: int) -> list[BitWord]:
    if p % 2:
        raise ValueError(f"balanced words need an even length, got {p}")
    return words_of_weight(p, p // 2)


@dataclass(frozen=True)
class ParityTable:
    """Bijective map between flip counts ``k`` and ``p``-bit parity words.

    Entries are kept sorted by ``k``.  Construction rejects duplicate
    ``k`` or ``u`` values since either would make decoding ambiguous.
    """

    p: int
    entries: tuple[tuple[int, BitWord], ...]
    _by_word: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        entries = tuple(sorted(self.entries, key=lambda e: e[0]))
        ks = [k for k, _ in entries]
        words = [u.value for _, u in entries]
        if len(set(ks)) != len(ks):
            raise ValueError("duplicate k in parity table")
        if len(set(words)) != len(words):
            raise ValueError("duplicate parity word in parity table")
        for _, u in entries:
            if u.length != self.p:
                raise ValueError(f"parity word {u} is not {self.p} bits long")
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "_by_word", {u.value: k for k, u in entries})

    @classmethod
    def canonical(cls, ks, p: int) -> ParityTable:
        """Pair the j-th ascending ``k`` with the j-th ascending balanced word."""
        ks = sorted(ks)
        words = list(islice(iter_words_of_weight(p, p // 2), len(ks)))
        if len(words) < len(ks):
            raise ValueError(f"only {len(words)} balanced {p}-bit words for {len(ks)} values of k")
        return cls(p, tuple(zip(ks, words)))

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def ks(self) -> tuple[int, ...]:
        return tuple(k for k, _ in self.entries)

    def word_for(self, k: int) -> BitWord:
        for kk, u in self.entries:
            if kk == k:
                return u
        raise KeyError(k)

    def lookup_k(self, u: BitWord) -> int:
        if u.length != self.p:
            raise ValueError(f"expected a {self.p}-bit parity word, got {u.length} bits")
        try:
            return self._by_word[u.value]
        except KeyError:
            raise UnknownParityWordError(f"parity word {u} is not in the table") from None

    def arrays(self) -> tuple[np.ndarray, np.ndarray]:
        """Parity values sorted ascending and their matching ``k`` values."""
        pairs = sorted((u.value, k) for k, u in self.entries)
        return (np.array([v for v, _ in pairs], dtype=np.uint64),
                np.array([k for _, k in pairs], dtype=np.int64))

    def dump(self) -> str:
        return "".join(f"{k} {u}\n" for k, u in self.entries)


def lookup_k(table: ParityTable, u: BitWord) -> int:
    return table.lookup_k(u)
