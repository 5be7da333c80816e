"""Knuth balanced and nearly-balanced block codes (Simple and Optimized Parallel)."""

__version__ = "0.1.0"

from .arch import ResourceEstimate, estimate_resources, serial_encode
from .bits import BitWord, DisparityBound, disparity, disparity_walk, prefix_flip, weight
from .estimator import BalancedCodeTransformer
from .exceptions import (
    BoundViolationError,
    CodeError,
    FrameFormatError,
    PartialWordError,
    ScheduleInfeasibleError,
    TruncatedStreamError,
    UnknownParityWordError,
)
from .op import (
    OpCodec,
    OpSchedule,
    build_op_codec,
    build_op_schedule,
    op_decode,
    op_encode,
    op_parity_bits,
    validate_op_schedule,
)
from .parity import ParityTable, balanced_words, lookup_k, words_of_weight
from .schemes import build_codec
from .sizing import (
    SizingRow,
    binomial,
    count_bounded_disparity_words,
    ideal_zs_bits,
    parity_reduction_check,
    table1,
)
from .sp import SpCodec, build_sp_codec, select_ks, sp_decode, sp_encode, sp_parity_bits
from .stream import FrameHeader, StreamStats, decode_stream, encode_stream, stream_stats
