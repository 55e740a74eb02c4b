"""End-to-end CLI tests; exit codes 0 / 1 / 2 as documented in the CLI."""

import io
import json
import subprocess
import sys

import pytest

from mgsquiver.cli import main
from mgsquiver.documents import dump_quiver, load_quiver
from mgsquiver.generators import cycle_quiver, torus_quiver
from mgsquiver.quiver import IceQuiver, framed
from mgsquiver.sequences import alpha_chain, cycle_sequence, main_sequence


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


@pytest.fixture
def a2_file(tmp_path):
    path = tmp_path / "a2.json"
    path.write_text(dump_quiver(IceQuiver.from_labels(["1", "2"], [("1", "2")])))
    return str(path)


# -- generate --------------------------------------------------------------


def test_generate_cycle_json():
    code, out = run("generate", "--family", "cycle", "--m", "3", "--format", "json")
    assert code == 0
    assert load_quiver(out) == cycle_quiver(3)


def test_generate_torus():
    code, out = run("generate", "--family", "torus", "--n", "3", "--p", "7", "--format", "json")
    assert code == 0
    assert len(json.loads(out)["vertices"]) == 33


def test_generate_framed_dot():
    code, out = run("generate", "--family", "ladder", "--k", "2", "--framed", "--format", "dot")
    assert code == 0
    assert out.startswith("digraph") and out.endswith("}\n")
    assert '"g_0\'" [shape=box];' in out


def test_generate_bad_parameter(capsys):
    code, _ = run("generate", "--family", "torus", "--n", "1", "--p", "5")
    assert code == 2
    assert "n must be >= 2" in capsys.readouterr().err


def test_generate_missing_parameter(capsys):
    code, _ = run("generate", "--family", "cycle")
    assert code == 2
    assert "--m is required" in capsys.readouterr().err


def test_unknown_flag_is_usage_error():
    with pytest.raises(SystemExit) as err:
        run("generate", "--family", "blob")
    assert err.value.code == 2


# -- verify ----------------------------------------------------------------


def test_verify_torus_builtin_sequence():
    code, out = run("verify", "--family", "torus", "--n", "3", "--p", "5", "--paper-sequence")
    report = json.loads(out)
    assert code == 0 and report["accepted"]
    assert report["final_colors"] == {"green": 0, "red": 27, "mixed": 0}


def test_verify_cycle_builtin_sequence():
    code, out = run("verify", "--family", "cycle", "--m", "4", "--paper-sequence")
    assert code == 0 and json.loads(out)["sequence_length"] == 6


def test_verify_rejects_a2(tmp_path, a2_file):
    seq = tmp_path / "seq.txt"
    seq.write_text("2\n1\n")
    code, out = run("verify", "--quiver", a2_file, "--sequence", str(seq))
    report = json.loads(out)
    assert code == 1
    assert report["failure_kind"] == "NotAllRedAtEnd" and report["failure_step"] is None


def test_verify_writes_trace(tmp_path, a2_file):
    seq = tmp_path / "seq.txt"
    seq.write_text("# long one\n2 1 2\n")
    trace = tmp_path / "trace.json"
    code, _ = run("verify", "--quiver", a2_file, "--sequence", str(seq), "--trace", str(trace))
    assert code == 0
    doc = json.loads(trace.read_text())
    assert [e["label"] for e in doc["entries"]] == ["2", "1", "2"]
    assert doc["entries"][-1]["colors"] == {"1": "red", "2": "red"}


def test_verify_prefamed_input(tmp_path):
    path = tmp_path / "framed.json"
    path.write_text(dump_quiver(framed(cycle_quiver(3))))
    seq = tmp_path / "seq.txt"
    seq.write_text("\n".join(cycle_sequence(3)))
    assert run("verify", "--quiver", str(path), "--sequence", str(seq), "--framed")[0] == 0
    assert run("verify", "--quiver", str(path), "--sequence", str(seq))[0] == 0


def test_verify_not_green_exit_one(tmp_path, a2_file):
    seq = tmp_path / "seq.txt"
    seq.write_text("1 1")
    code, out = run("verify", "--quiver", a2_file, "--sequence", str(seq))
    assert code == 1
    assert json.loads(out)["failure_kind"] == "NotGreen"
    assert json.loads(out)["failure_step"] == 1


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "--paper-sequence"],
        ["verify", "--family", "cycle", "--m", "3"],
        ["verify", "--quiver", "/nonexistent.json", "--paper-sequence"],
        ["verify", "--family", "torus", "--n", "2", "--p", "3", "--paper-sequence"],
    ],
)
def test_verify_usage_errors(argv):
    assert run(*argv)[0] == 2


def test_verify_malformed_document(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text('{"version": 1, "vertices": [{"id": 0, "label": "a"}], "arrows": [{"src": 0, "dst": 3}]}')
    seq = tmp_path / "s.txt"
    seq.write_text("a")
    assert run("verify", "--quiver", str(path), "--sequence", str(seq))[0] == 2
    assert "$.arrows[0].dst" in capsys.readouterr().err


@pytest.mark.parametrize(
    "flags, expected",
    [
        (["--family", "cycle", "--m", "5"], cycle_sequence(5)),
        (["--family", "ladder", "--k", "3"], alpha_chain(3)),
        (["--family", "torus", "--n", "2", "--p", "6"], main_sequence(2, 6)),
    ],
)
def test_builtin_sequence_matches_builders(tmp_path, flags, expected):
    trace = tmp_path / "t.json"
    code, _ = run("verify", *flags, "--paper-sequence", "--trace", str(trace))
    assert code == 0
    labels = [e["label"] for e in json.loads(trace.read_text())["entries"]]
    assert labels == list(expected)


# -- search ----------------------------------------------------------------


def test_search_a2_all(a2_file):
    code, out = run("search", "--quiver", a2_file, "--max-len", "6", "--all")
    env = json.loads(out)
    assert code == 0
    assert env["found"] == [["1", "2"], ["2", "1", "2"]] and env["exhausted"]


def test_search_cycle_first_none():
    code, out = run("search", "--family", "cycle", "--m", "3", "--max-len", "3", "--first")
    env = json.loads(out)
    assert code == 1 and env["found"] == [] and env["exhausted"]


def test_search_text_envelope(a2_file):
    code, out = run("search", "--quiver", a2_file, "--max-len", "6", "--format", "text")
    assert code == 0
    assert out.splitlines()[0].startswith("# exhausted=true")
    assert "# sequence 2\n2\n1\n2\n" in out


def test_search_zero_bound(a2_file):
    assert run("search", "--quiver", a2_file, "--max-len", "0")[0] == 2


def test_search_resource_limit():
    code, out = run("search", "--family", "cycle", "--m", "5", "--max-len", "12", "--max-states", "50")
    env = json.loads(out)
    assert code == 1 and env["resource_limited"] and not env["exhausted"]


def test_search_rejects_framed_input(tmp_path):
    path = tmp_path / "f.json"
    path.write_text(dump_quiver(framed(torus_quiver(2, 4))))
    assert run("search", "--quiver", str(path), "--max-len", "3")[0] == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "mgsquiver", "verify", "--family", "cycle", "--m", "3", "--paper-sequence"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["accepted"]
