"""Knuth Simple Parallel codec with the finite-disparity extension.

Every retained flip count ``k`` is paired with a balanced parity word, so the
parity prefix contributes no disparity.  For ``d > 0`` only every
``(2d+1)``-th flip count is retained; the walk of ``v(w^(k))`` moves by 2 per
step and is zero somewhere in ``[0, n-1]``, so some retained ``k`` lies within
``d`` steps of that zero and yields ``|v| <= 2d``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import ceil, comb

from .bits import MAX_DATA_BITS, BitWord
from .codec import PrefixFlipCodec
from .parity import ParityTable


def check_params(n: int, d: int, limit: int | None = MAX_DATA_BITS) -> None:
    """Validate ``(n, d)``; ``limit=None`` lifts the word-size cap for sizing-only use."""
    if not isinstance(n, int) or n % 2 or n < 2 or (limit is not None and n > limit):
        raise ValueError(f"n must be even and in [2, {limit}], got {n!r}")
    if not isinstance(d, int) or d < 0:
        raise ValueError(f"d must be a non-negative integer, got {d!r}")


def num_flip_counts(n: int, d: int) -> int:
    """Number of retained flip counts, ``ceil(n / (2d + 1))``."""
    return ceil(n / (2 * d + 1))


def select_ks(n: int, d: int) -> list[int]:
    """Centres of consecutive ``2d+1`` blocks of ``[0, n-1]``, clipped to ``n-1``."""
    check_params(n, d)
    step = 2 * d + 1
    return [min(j * step + d, n - 1) for j in range(num_flip_counts(n, d))]


def sp_parity_bits(n: int, d: int) -> int:
    """Smallest even ``p >= 2`` with at least ``ceil(n/(2d+1))`` balanced words."""
    check_params(n, d, limit=None)
    need = num_flip_counts(n, d)
    p = 2
    while comb(p, p // 2) < need:
        p += 2
    return p


@dataclass(frozen=True, eq=False)
class SpCodec(PrefixFlipCodec):
    n: int
    d: int
    selected_ks: tuple[int, ...]
    table: ParityTable
    scheme = "sp"

    def __post_init__(self):
        check_params(self.n, self.d)
        if tuple(self.table.ks) != tuple(self.selected_ks):
            raise ValueError("parity table does not cover exactly the selected flip counts")
        self._init_tables(self.table.entries)

    @property
    def p(self) -> int:
        return self.table.p


def build_sp_codec(n: int, d: int) -> SpCodec:
    ks = select_ks(n, d)
    table = ParityTable.canonical(ks, sp_parity_bits(n, d))
    return SpCodec(n, d, tuple(ks), table)


def sp_encode(codec: SpCodec, w: BitWord) -> BitWord:
    return codec.encode(w)


def sp_decode(codec: SpCodec, c: BitWord) -> BitWord:
    return codec.decode(c)
