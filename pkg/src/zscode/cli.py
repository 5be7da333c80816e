"""Command-line interface: ``zscode <command> ...``.

Exit status is 0 on success, 1 on verification or decode failure and 2 on
usage errors.
"""

from __future__ import annotations

import argparse
import sys
import time

import numpy as np

from . import __version__
from .arch import estimate_resources
from .exceptions import CodeError
from .op import build_op_schedule
from .schemes import build_codec, disparity_to_d
from .sizing import PAPER_N, format_table, table1
from .sp import build_sp_codec
from .stream import FrameHeader, decode_stream, encode_stream, stream_stats
from .verify import EXHAUSTIVE_LIMIT, verify_codec


class UsageError(Exception):
    pass


def _even_int(text):
    value = int(text)
    if value < 0 or value % 2:
        raise argparse.ArgumentTypeError(f"expected a non-negative even integer, got {text}")
    return value


def _codec_args(p, scheme=True):
    if scheme:
        p.add_argument("--scheme", choices=("sp", "op"), default="sp")
    p.add_argument("--n", type=int, required=True, help="data bits per word (even, 2..64)")
    p.add_argument("--disparity", type=_even_int, default=0,
                   help="codeword disparity bound: 0, 2 or 4 (default 0)")


def build_parser():
    parser = argparse.ArgumentParser(prog="zscode", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tables", help="print the minimum coded-bits table")
    p.add_argument("--n", type=int, nargs="+", default=list(PAPER_N))
    p.add_argument("--format", choices=("text", "csv"), default="text")

    for name, help_text in (("encode", "encode bytes into a ZSC1 stream"),
                            ("decode", "decode a ZSC1 stream back to bytes")):
        p = sub.add_parser(name, help=help_text)
        if name == "encode":
            _codec_args(p)
        else:
            p.add_argument("--scheme", choices=("sp", "op"))
            p.add_argument("--n", type=int)
            p.add_argument("--disparity", type=_even_int)
        p.add_argument("--in", dest="input", default="-")
        p.add_argument("--out", dest="output", default="-")

    p = sub.add_parser("verify", help="check roundtrip, bound and minimality")
    _codec_args(p)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--exhaustive", action="store_true")
    mode.add_argument("--samples", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("dump-table", help="print the SP parity table as 'k u' lines")
    _codec_args(p, scheme=False)

    p = sub.add_parser("dump-schedule", help="print the OP walk as 'j k u weight selected' lines")
    _codec_args(p, scheme=False)

    p = sub.add_parser("resources", help="structural resource proxies for an encoder")
    _codec_args(p)
    p.add_argument("--arch", choices=("parallel", "pipeline"), default="parallel")

    p = sub.add_parser("analyze", help="disparity statistics of a ZSC1 stream")
    p.add_argument("--in", dest="input", default="-")

    p = sub.add_parser("bench", help="encode/decode throughput (informational)")
    _codec_args(p)
    p.add_argument("--words", type=int, default=1_000_000)
    p.add_argument("--seed", type=int, default=0)
    return parser


def _read(path):
    if path == "-":
        return sys.stdin.buffer.read()
    with open(path, "rb") as fh:
        return fh.read()


def _write(path, data):
    if path == "-":
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()
    else:
        with open(path, "wb") as fh:
            fh.write(data)


def _codec(args):
    try:
        return build_codec(args.scheme, args.n, disparity_to_d(args.disparity))
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_tables(args, out):
    for n in args.n:
        if n < 2 or n % 2:
            raise UsageError(f"n must be even and >= 2, got {n}")
    out.write(format_table(table1(args.n), args.format))
    return 0


def cmd_encode(args, out):
    _write(args.output, encode_stream(_codec(args), _read(args.input)))
    return 0


def cmd_decode(args, out):
    blob = _read(args.input)
    header = FrameHeader.unpack(blob)
    expected = {"scheme": args.scheme, "n": args.n,
                "d": None if args.disparity is None else disparity_to_d(args.disparity)}
    for key, value in expected.items():
        if value is not None and getattr(header, key) != value:
            raise CodeError(f"stream has {key}={getattr(header, key)}, command line says {value}")
    _write(args.output, decode_stream(blob))
    return 0


def cmd_verify(args, out):
    codec = _codec(args)
    if args.exhaustive and codec.n > EXHAUSTIVE_LIMIT:
        raise UsageError(f"--exhaustive is limited to n <= {EXHAUSTIVE_LIMIT} (2^{codec.n} inputs);"
                         f" use --samples N --seed S instead")
    result = verify_codec(codec, exhaustive=args.exhaustive, samples=args.samples, seed=args.seed)
    bad = len(result.failures)
    if result.ok:
        out.write(f"{result.checked}/{result.checked} ok\n")
        return 0
    out.write(f"FAILED: at least {bad} of {result.checked} inputs\n")
    for word, reason in result.failures:
        out.write(f"  {word}  {reason}\n")
    return 1


def cmd_dump_table(args, out):
    try:
        codec = build_sp_codec(args.n, disparity_to_d(args.disparity))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    out.write(codec.table.dump())
    return 0


def cmd_dump_schedule(args, out):
    try:
        schedule = build_op_schedule(args.n, disparity_to_d(args.disparity))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    out.write(schedule.dump())
    return 0


def cmd_resources(args, out):
    try:
        est = estimate_resources(args.n, args.scheme, args.arch, disparity_to_d(args.disparity))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    out.write(est.describe())
    return 0


def cmd_analyze(args, out):
    out.write(stream_stats(_read(args.input)).describe())
    return 0


def cmd_bench(args, out):
    codec = _codec(args)
    rng = np.random.default_rng(args.seed)
    hi = np.iinfo(np.uint64).max if codec.n == 64 else (1 << codec.n) - 1
    words = rng.integers(0, hi, size=args.words, dtype=np.uint64, endpoint=True)
    t0 = time.perf_counter()
    parity, data = codec.encode_array(words)
    t1 = time.perf_counter()
    codec.decode_array(parity, data)
    t2 = time.perf_counter()
    for label, dt in (("encode", t1 - t0), ("decode", t2 - t1)):
        rate = args.words / dt if dt else float("inf")
        out.write(f"{label}: {args.words} words in {dt:.3f} s "
                  f"({rate / 1e6:.2f} Mwords/s, {rate * codec.n / 1e6:.1f} Mbit/s)\n")
    return 0


COMMANDS = {
    "tables": cmd_tables,
    "encode": cmd_encode,
    "decode": cmd_decode,
    "verify": cmd_verify,
    "dump-table": cmd_dump_table,
    "dump-schedule": cmd_dump_schedule,
    "resources": cmd_resources,
    "analyze": cmd_analyze,
    "bench": cmd_bench,
}


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        print(f"zscode {args.command}: {exc}", file=sys.stderr)
        return 2
    except (CodeError, OSError) as exc:
        print(f"zscode {args.command}: {exc}", file=sys.stderr)
        return 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
