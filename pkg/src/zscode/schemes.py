"""Scheme registry: builds a codec from ``(scheme, n, d)``."""

from __future__ import annotations

from functools import lru_cache

from .op import build_op_codec
from .sp import build_sp_codec

SCHEME_IDS = {"sp": 0, "op": 1}
SCHEME_NAMES = {v: k for k, v in SCHEME_IDS.items()}


@lru_cache(maxsize=64)
def build_codec(scheme: str, n: int, d: int):
    scheme = scheme.lower()
    if scheme == "sp":
        return build_sp_codec(n, d)
    if scheme == "op":
        return build_op_codec(n, d)
    raise ValueError(f"unknown scheme {scheme!r}; expected 'sp' or 'op'")


def disparity_to_d(disparity: int) -> int:
    """Convert a ``±2d`` bound as written on the command line to ``d``."""
    if disparity < 0 or disparity % 2:
        raise ValueError(f"disparity bound must be a non-negative even integer, got {disparity}")
    return disparity // 2
