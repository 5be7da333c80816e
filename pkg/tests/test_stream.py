import struct
from math import lcm
from pathlib import Path

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import str_disparity, str_flip
from zscode.exceptions import (
    BoundViolationError,
    FrameFormatError,
    PartialWordError,
    TruncatedStreamError,
    UnknownParityWordError,
)
from zscode.schemes import build_codec
from zscode.stream import HEADER_SIZE, FrameHeader, decode_stream, encode_stream, stream_stats

FIXTURES = Path(__file__).parent / "fixtures"
GOLDEN_INPUT = bytes(range(64))


def golden(scheme):
    return bytes.fromhex((FIXTURES / f"zsc1_{scheme}_8_0.hex").read_text())


def candidates_from_fixture(scheme):
    """(k, u) candidates parsed from the text dumps, in encoder order."""
    if scheme == "sp":
        lines = (FIXTURES / "sp_table_8_0.txt").read_text().split("\n")
        return [(int(k), u) for k, u in (ln.split() for ln in lines if ln)]
    lines = (FIXTURES / "op_schedule_8_0.txt").read_text().split("\n")
    rows = [ln.split() for ln in lines if ln]
    return [(int(k), u) for _, k, u, _, sel in rows if sel == "1"]


def oracle_codeword(cands, w):
    for k, u in cands:
        x = str_flip(w, k)
        if str_disparity(u) + str_disparity(x) == 0:
            return u + x
    raise AssertionError


def test_header_layout():
    h = FrameHeader("op", 8, 0, 4, 64).pack()
    assert len(h) == HEADER_SIZE == 19
    assert h[:4] == b"ZSC1" and h[4] == 1 and h[5] == 1
    assert struct.unpack("<H", h[6:8])[0] == 8 and h[8] == 0
    assert struct.unpack("<H", h[9:11])[0] == 4
    assert struct.unpack("<Q", h[11:19])[0] == 64
    assert FrameHeader.unpack(h) == FrameHeader("op", 8, 0, 4, 64)


def test_empty_stream():
    codec = build_codec("sp", 8, 0)
    blob = encode_stream(codec, b"")
    assert blob == FrameHeader("sp", 8, 0, 6, 0).pack()
    assert decode_stream(blob) == b""
    s = stream_stats(blob)
    assert s.word_count == 0 and s.running_digital_sum_max_abs == 0 and s.histogram == {0: 0}


def test_single_zero_byte():
    blob = encode_stream(build_codec("sp", 8, 0), b"\x00")
    payload = blob[HEADER_SIZE:]
    assert len(payload) == 2
    assert format(int.from_bytes(payload, "big"), "016b") == "010011" + "11110000" + "00"


@pytest.mark.parametrize("scheme", ["sp", "op"])
def test_golden_streams(scheme):
    blob = golden(scheme)
    assert encode_stream(build_codec(scheme, 8, 0), GOLDEN_INPUT) == blob
    assert decode_stream(blob) == GOLDEN_INPUT
    cands = candidates_from_fixture(scheme)
    m = 8 + len(cands[0][1])
    bits = "".join(format(b, "08b") for b in blob[HEADER_SIZE:])
    for i, byte in enumerate(GOLDEN_INPUT):
        assert bits[i * m:(i + 1) * m] == oracle_codeword(cands, format(byte, "08b"))


@pytest.mark.parametrize("scheme", ["sp", "op"])
def test_single_bit_corruption_detected_with_index(scheme):
    blob = bytearray(golden(scheme))
    m = build_codec(scheme, 8, 0).m
    for word in (0, 17, 63):
        for offset in (0, m - 1, m // 2):
            corrupt = bytearray(blob)
            pos = word * m + offset
            corrupt[HEADER_SIZE + pos // 8] ^= 0x80 >> (pos % 8)
            with pytest.raises((BoundViolationError, UnknownParityWordError)) as info:
                decode_stream(bytes(corrupt))
            assert info.value.index == word


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(["sp", "op"]), st.sampled_from([2, 4, 6, 8, 16, 24, 32, 64]),
       st.integers(0, 2), st.data())
def test_roundtrip(scheme, n, d, data):
    codec = build_codec(scheme, n, d)
    unit = lcm(n, 8) // 8
    payload = data.draw(st.binary(max_size=12).map(lambda b: b * unit))
    blob = encode_stream(codec, payload)
    assert decode_stream(blob) == payload
    assert encode_stream(codec, payload) == blob


def test_partial_word_rejected():
    with pytest.raises(PartialWordError):
        encode_stream(build_codec("sp", 16, 0), b"\x01\x02\x03")
    with pytest.raises(PartialWordError):
        encode_stream(build_codec("sp", 6, 0), b"\x01")
    assert decode_stream(encode_stream(build_codec("sp", 6, 0), b"abc")) == b"abc"


def test_format_errors():
    blob = golden("sp")
    with pytest.raises(FrameFormatError):
        decode_stream(b"ZSC2" + blob[4:])
    with pytest.raises(FrameFormatError):
        decode_stream(blob[:4] + b"\x02" + blob[5:])
    with pytest.raises(FrameFormatError):
        decode_stream(blob[:5] + b"\x07" + blob[6:])
    with pytest.raises(TruncatedStreamError):
        decode_stream(blob[:-1])
    with pytest.raises(TruncatedStreamError):
        decode_stream(blob[:10])
    with pytest.raises(FrameFormatError):
        decode_stream(blob + b"\x00")
    wrong_p = FrameHeader("sp", 8, 0, 4, 0).pack()
    with pytest.raises(FrameFormatError):
        decode_stream(wrong_p)


def test_stats_balanced_stream():
    blob = encode_stream(build_codec("op", 16, 0), bytes(range(256)) * 2)
    s = stream_stats(blob)
    assert s.word_count == 256
    assert s.histogram == {0: 256}
    assert s.running_digital_sum_final == 0 == s.running_digital_sum_max_abs


@pytest.mark.parametrize("scheme", ["sp", "op"])
def test_stats_d1_stream(scheme, rng):
    data = rng.integers(0, 256, size=4000, dtype=np.uint8).tobytes()
    blob = encode_stream(build_codec(scheme, 8, 1), data)
    s = stream_stats(blob)
    assert set(s.histogram) == {-2, 0, 2}
    assert sum(s.histogram.values()) == s.word_count == 4000
    assert -2 * 4000 <= s.running_digital_sum_final <= 2 * 4000
    # recompute the disparities from the raw payload bits
    m = build_codec(scheme, 8, 1).m
    bits = "".join(format(b, "08b") for b in blob[HEADER_SIZE:])
    v = [str_disparity(bits[i * m:(i + 1) * m]) for i in range(4000)]
    assert sum(v) == s.running_digital_sum_final
    assert max(abs(x) for x in np.cumsum(v)) == s.running_digital_sum_max_abs


def test_stats_reject_corrupt_stream():
    blob = bytearray(golden("sp"))
    blob[HEADER_SIZE] ^= 0x01
    with pytest.raises(BoundViolationError):
        stream_stats(bytes(blob))
