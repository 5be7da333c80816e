import io
import subprocess
import sys
from pathlib import Path

import pytest

from zscode.cli import run

FIXTURES = Path(__file__).parent / "fixtures"


def call(*argv):
    out = io.StringIO()
    status = run(list(argv), out=out)
    return status, out.getvalue()


@pytest.mark.parametrize("fmt,fixture", [("text", "tables_text.txt"), ("csv", "tables.csv")])
def test_tables_fixture(fmt, fixture):
    status, text = call("tables", "--format", fmt)
    assert status == 0
    assert text == (FIXTURES / fixture).read_text()


def test_tables_subset():
    status, text = call("tables", "--n", "8", "32", "--format", "csv")
    assert status == 0
    assert text.splitlines()[1:] == ["8,8,16,12,10,10,14,12,10,12,10,10",
                                     "32,32,64,36,34,34,40,38,38,38,36,36"]
    assert call("tables", "--n", "7")[0] == 2


def test_verify_exhaustive():
    assert call("verify", "--scheme", "sp", "--n", "8", "--disparity", "0", "--exhaustive") == \
        (0, "256/256 ok\n")
    assert call("verify", "--scheme", "op", "--n", "12", "--disparity", "4", "--exhaustive") == \
        (0, "4096/4096 ok\n")


def test_verify_sampled_is_deterministic():
    a = call("verify", "--scheme", "op", "--n", "64", "--disparity", "2", "--samples", "5000", "--seed", "9")
    b = call("verify", "--scheme", "op", "--n", "64", "--disparity", "2", "--samples", "5000", "--seed", "9")
    assert a == b == (0, "5004/5004 ok\n")


def test_verify_refuses_large_exhaustive(capsys):
    status, _ = call("verify", "--n", "24", "--exhaustive")
    assert status == 2
    assert "--samples" in capsys.readouterr().err


def test_verify_reports_counterexample(monkeypatch):
    from zscode import verify

    real = verify.check_words

    def broken(codec, words, max_failures=8):
        result = real(codec, words, max_failures)
        if len(words) > 5:
            from zscode.bits import BitWord
            result.failures.append((BitWord(codec.n, int(words[5])), "injected"))
        return result

    monkeypatch.setattr(verify, "check_words", broken)
    status, text = call("verify", "--n", "8", "--exhaustive")
    assert status == 1
    assert "00000101  injected" in text


def test_usage_errors():
    assert call("verify", "--n", "7")[0] == 2
    assert call("verify", "--n", "8", "--disparity", "3")[0] == 2
    assert call("nonsense")[0] == 2
    assert call("resources", "--n", "8", "--arch", "systolic")[0] == 2


def test_encode_decode_files(tmp_path):
    src = tmp_path / "in.bin"
    enc = tmp_path / "out.zsc"
    dec = tmp_path / "back.bin"
    src.write_bytes(bytes(range(256)) * 3)
    assert call("encode", "--scheme", "op", "--n", "16", "--disparity", "2",
                "--in", str(src), "--out", str(enc))[0] == 0
    assert call("decode", "--in", str(enc), "--out", str(dec))[0] == 0
    assert dec.read_bytes() == src.read_bytes()
    assert call("decode", "--scheme", "sp", "--in", str(enc), "--out", str(dec))[0] == 1
    status, text = call("analyze", "--in", str(enc))
    assert status == 0 and "words 384" in text


def test_decode_corrupt_file(tmp_path, capsys):
    enc = tmp_path / "bad.zsc"
    enc.write_bytes(b"NOPE" + bytes(30))
    assert call("decode", "--in", str(enc), "--out", str(tmp_path / "x"))[0] == 1
    assert "magic" in capsys.readouterr().err


def test_encode_partial_word(tmp_path):
    src = tmp_path / "in.bin"
    src.write_bytes(b"abc")
    assert call("encode", "--n", "16", "--in", str(src), "--out", str(tmp_path / "o"))[0] == 1


def test_dumps():
    status, text = call("dump-table", "--n", "8", "--disparity", "0")
    assert status == 0 and text == (FIXTURES / "sp_table_8_0.txt").read_text()
    status, text = call("dump-schedule", "--n", "8", "--disparity", "0")
    assert status == 0 and text == (FIXTURES / "op_schedule_8_0.txt").read_text()
    assert call("dump-table", "--n", "9")[0] == 2


def test_resources():
    status, text = call("resources", "--scheme", "sp", "--n", "32", "--disparity", "0", "--arch", "parallel")
    assert status == 0
    fields = dict(line.rsplit(None, 1) for line in text.splitlines())
    assert fields["balance calculators"] == "31"
    assert fields["calculator latency stages"] == "6"


def test_bench():
    status, text = call("bench", "--scheme", "sp", "--n", "64", "--disparity", "4", "--words", "2000")
    assert status == 0 and "encode: 2000 words" in text and "decode: 2000 words" in text


def test_pipes_through_module_entry_point():
    data = bytes(range(200))
    enc = subprocess.run([sys.executable, "-m", "zscode", "encode", "--n", "8", "--disparity", "2"],
                         input=data, capture_output=True, check=True).stdout
    assert enc[:4] == b"ZSC1"
    dec = subprocess.run([sys.executable, "-m", "zscode", "decode"],
                         input=enc, capture_output=True, check=True).stdout
    assert dec == data
