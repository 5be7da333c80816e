"""Coded-bit counts for every signalling scheme: the minimum-bits table."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .op import op_parity_bits
from .sp import check_params, num_flip_counts, sp_parity_bits

PAPER_N = (4, 6, 8, 10, 12, 14, 16, 20, 24, 28, 32, 40, 48, 64, 72)
DISPARITIES = (0, 1, 2)


def binomial(x: int, y: int) -> int:
    """Exact ``x choose y``; zero when ``y > x``."""
    if x < 0 or y < 0:
        raise ValueError(f"binomial({x}, {y}) needs non-negative arguments")
    return comb(x, y)


def count_bounded_disparity_words(m: int, d: int) -> int:
    """Number of ``m``-bit words with ``|v| <= 2d``."""
    if m % 2 or m < 0 or d < 0:
        raise ValueError(f"need even m >= 0 and d >= 0, got m={m}, d={d}")
    half = m // 2
    return sum(binomial(m, w) for w in range(max(0, half - d), min(m, half + d) + 1))


def ideal_zs_bits(n: int, d: int) -> int:
    """Smallest even ``m`` with at least ``2**n`` words of disparity ``<= 2d``."""
    check_params(n, d, limit=None)
    m = n
    while count_bounded_disparity_words(m, d) < (1 << n):
        m += 2
    return m


@dataclass(frozen=True)
class SizingRow:
    n: int
    se: int
    diff: int
    ideal: tuple[int, ...]
    sp: tuple[int, ...]
    op: tuple[int, ...]

    def cells(self) -> list[int]:
        return [self.n, self.se, self.diff, *self.ideal, *self.sp, *self.op]


COLUMNS = ("n", "SE", "Diff",
           "IdealZS±0", "IdealZS±2", "IdealZS±4",
           "SP±0", "SP±2", "SP±4",
           "OP±0", "OP±2", "OP±4")


def sizing_row(n: int, ds=DISPARITIES) -> SizingRow:
    return SizingRow(
        n=n,
        se=n,
        diff=2 * n,
        ideal=tuple(ideal_zs_bits(n, d) for d in ds),
        sp=tuple(n + sp_parity_bits(n, d) for d in ds),
        op=tuple(n + op_parity_bits(n, d)[0] for d in ds),
    )


def table1(n_list=PAPER_N) -> list[SizingRow]:
    return [sizing_row(n) for n in n_list]


def format_table(rows, fmt: str = "text") -> str:
    if fmt == "csv":
        lines = [",".join(COLUMNS)]
        lines += [",".join(str(c) for c in r.cells()) for r in rows]
        return "\n".join(lines) + "\n"
    if fmt != "text":
        raise ValueError(f"unknown format {fmt!r}")
    widths = [max(len(c), 4) for c in COLUMNS]
    lines = ["  ".join(c.rjust(w) for c, w in zip(COLUMNS, widths))]
    for r in rows:
        lines.append("  ".join(str(c).rjust(w) for c, w in zip(r.cells(), widths)))
    return "\n".join(lines) + "\n"


def parity_reduction_check(n: int, d: int) -> Fraction:
    """Shrink factor of the flip-count set when disparity ``2d`` is allowed."""
    return Fraction(num_flip_counts(n, 0), num_flip_counts(n, d))
