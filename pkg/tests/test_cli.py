import io
import json
import subprocess
import sys

import pytest

from isopieri.cli import run


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out=out)
    return code, out.getvalue()


def test_triple_prints_both_paths():
    code, text = call("triple", "--type", "C", "--m", "4", "--n", "5", "--P", "2,3,4,10", "--T", "1,2,4,6", "--r", "1")
    assert code == 0
    assert text == "per-type: 1\nunified: 1\n"


def test_triple_flags_printed_reading():
    code, text = call("triple", "--type", "B", "--m", "1", "--n", "2", "--P", "4", "--T", "2", "--r", "1")
    assert code == 0
    assert "literal unified predicates give 1" in text


def test_diagram_json():
    code, text = call("diagram", "--type", "D", "--m", "4", "--n", "4", "--P", "4,5,8,9", "--T", "1,3,4,6",
                      "--format", "json")
    data = json.loads(text)
    assert code == 0
    assert data["cuts"] == [0, 1, 2, 8, 9, 10]
    assert data["L"] == [2, 10]
    assert '"cuts":[0,1,2,8,9,10]' in text


def test_shrink():
    code, text = call("shrink", "--type", "D", "--m", "2", "--n", "2", "--P", "5,6", "--T", "1,3")
    assert (code, text) == (0, "[4,6]\n")


def test_unsorted_symbols_are_accepted():
    code, text = call("shrink", "--type", "D", "--m", "2", "--n", "2", "--P", "6,5", "--T", "3,1")
    assert text == "[4,6]\n"


def test_domain_errors_exit_1(capsys):
    code, _ = call("zdata", "--type", "D", "--m", "2", "--n", "2", "--P", "1,3", "--T", "1,4")
    assert code == 1
    assert "not below" in capsys.readouterr().err
    code, _ = call("zdata", "--type", "C", "--m", "2", "--n", "2", "--P", "1,4", "--T", "1,2")
    assert code == 1
    code, _ = call("symbols", "--type", "B", "--m", "3", "--n", "2")
    assert code == 1
    code, _ = call("pieri", "--type", "D", "--m", "2", "--n", "2", "--r", "9")
    assert code == 1


@pytest.mark.parametrize("argv", [
    ["zdata", "--type", "D", "--m", "2", "--n", "2", "--P", "1,3"],
    ["triple", "--type", "D", "--m", "2", "--n", "2", "--P", "5,6", "--T", "1,2"],
    ["symbols", "--m", "2", "--n", "2"],
    ["diagram", "--type", "D", "--m", "2", "--n", "2", "--P", "5,6", "--T", "1,2", "--format", "dot"],
    ["nonsense"],
])
def test_usage_errors_exit_2(argv):
    with pytest.raises(SystemExit) as exc:
        call(*argv)
    assert exc.value.code == 2


def test_symbols_and_order():
    code, text = call("symbols", "--type", "C", "--m", "2", "--n", "2")
    assert text == "[1,2]\t3\n[1,3]\t2\n[2,4]\t1\n[3,4]\t0\n"
    code, text = call("order", "--type", "D", "--m", "2", "--n", "2", "--P", "1,4", "--T", "1,3", "--format", "json")
    assert json.loads(text) == {"T": [1, 3], "P": [1, 4], "leq": True, "preceq": False}
    code, text = call("order", "--type", "D", "--m", "2", "--n", "2", "--format", "dot")
    assert text.count(" -- ") == 19


def test_pieri_forms():
    base = ["pieri", "--type", "C", "--m", "2", "--n", "2", "--r", "1"]
    assert call(*base, "--P", "2,4", "--Q", "1,3") == (0, "2\n")
    assert call(*base, "--P", "2,4") == (0, "[1,2]\t-1\n[1,3]\t2\n")
    code, text = call(*base, "--format", "csv")
    assert text.splitlines()[3] == '"[2,4]",-1,2,0,0'


def test_output_is_byte_stable():
    argv = ["pieri", "--type", "D", "--m", "2", "--n", "3", "--r", "2", "--tilde", "--format", "json"]
    assert call(*argv) == call(*argv)


def test_cache_roundtrip(tmp_path, caplog):
    argv = ["pieri", "--type", "D", "--m", "2", "--n", "2", "--r", "1", "--format", "json", "--cache-dir", str(tmp_path)]
    first = call(*argv)
    path = tmp_path / "poset-D-2-2.json"
    assert path.exists()
    stamp = path.stat().st_mtime_ns
    assert call(*argv) == first
    assert path.stat().st_mtime_ns == stamp
    assert call(*argv[:-2], "--no-cache") == first

    doc = json.loads(path.read_text())
    doc["covers"] = doc["covers"][:-1]
    path.write_text(json.dumps(doc))
    with caplog.at_level("WARNING"):
        assert call(*argv) == first
    assert "corrupt poset cache" in caplog.text


def test_cache_rejects_consistent_but_wrong_order(tmp_path):
    from isopieri.bruhat import build_poset
    from isopieri.cache import _checksum, cache_path, load, load_or_build
    from isopieri.grassmannian import make_spec

    spec = make_spec("D", 2, 2)
    payload = build_poset(spec).to_json()
    payload["covers"] = payload["covers"] + [[1, 2]]  # {1,3} under {1,4}: false in type D
    payload["checksum"] = _checksum({k: v for k, v in payload.items() if k != "checksum"})
    path = cache_path(tmp_path, spec)
    path.write_text(json.dumps(payload))
    with pytest.raises(ValueError):
        load(path, spec)
    poset, status = load_or_build(spec, tmp_path)
    assert status == "rebuilt"
    assert len(poset.covers) == 19


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "isopieri", "shrink", "--type", "D", "--m", "2", "--n", "2", "--P", "5,6", "--T", "1,3"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == "[4,6]\n"


def test_selfcheck_small_budget():
    code, text = call("selfcheck", "--budget", "12")
    assert code == 0
    assert "0 failed" in text
    assert "skipped" in text
