import json
import subprocess
import sys

import pytest

from distpareto.cli import main

from conftest import DATA


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_spectrum_complete(capsys):
    code, out, _ = run(capsys, "spectrum", "--family", "K", "4")
    assert code == 0
    assert "0 1 2 3" in out.splitlines()


def test_spectrum_k_selection(capsys):
    code, out, _ = run(capsys, "spectrum", "--family", "S", "4", "--k", "mu4")
    assert code == 0
    assert "mu4 2.73205080757 {0,1,2}" in out


def test_spectrum_bad_family_is_usage_error(capsys):
    code, _, err = run(capsys, "spectrum", "--family", "C", "2")
    assert code == 2
    assert "n >= 3" in err


def test_spectrum_bad_k(capsys):
    assert run(capsys, "spectrum", "--family", "K", "3", "--k", "nu2")[0] == 2


def test_spectrum_k_out_of_range_fails(capsys):
    code, out, _ = run(capsys, "spectrum", "--family", "K", "3", "--k", "mu5")
    assert code == 1 and "out of range" in out


def test_spectrum_jsonl(capsys):
    code, out, _ = run(capsys, "spectrum", "--family", "P", "3", "--format", "jsonl")
    rec = json.loads(out)
    assert rec["graph6"] == "Bg" and rec["n"] == 3
    assert rec["values"] == [0, 1, 2, 2.73205080757]


def test_spectrum_budget(capsys):
    code, out, _ = run(capsys, "spectrum", "--family", "P", "8", "--max-n", "6")
    assert code == 1


def test_spectrum_malformed_input(capsys, tmp_path):
    f = tmp_path / "bad.g6"
    f.write_text("Bw\nA?\n")
    code, _, err = run(capsys, "spectrum", str(f))
    assert code == 2 and "line 2" in err


def test_missing_file(capsys, tmp_path):
    assert run(capsys, "spectrum", str(tmp_path / "nope.g6"))[0] == 2


def test_classify_cycle5(capsys):
    code, out, _ = run(capsys, "classify", "--family", "C", "5")
    assert code == 0
    assert "mu5 = 3.37228132327 (1+√33)/2" in out
    assert "mu6 = 4.54138126515 (3+√37)/2" in out


def test_classify_star6(capsys):
    _, out, _ = run(capsys, "classify", "--family", "S", "6")
    assert "mu5 = 4 4" in out
    assert "mu6 = 4.64575131106 2+√7" in out


def test_classify_coalesce(capsys):
    _, out, _ = run(capsys, "classify", "--family", "coalesce", "C", "3", "C", "3", "--cross-check")
    assert "mu6 = 4.09964772968 γ" in out
    assert "MISMATCH" not in out


def test_classify_cross_check_corpus(capsys):
    code, out, _ = run(capsys, "classify", str(DATA / "connected_n6.g6"), "--cross-check")
    assert code == 0 and "MISMATCH" not in out


def test_verify_ratk_equality_on_complete_only(capsys):
    code, out, _ = run(capsys, "verify", str(DATA / "connected_n6.g6"), "--suite", "ratk", "--format", "jsonl")
    assert code == 0
    recs = [json.loads(line) for line in out.splitlines()]
    assert len(recs) == 112
    assert [r["graph6"] for r in recs if r["equality"]] == ["E~~w"]


def test_verify_transmission_wheel_prints_pyramidal(capsys):
    code, out, _ = run(capsys, "verify", "--family", "W", "6", "--suite", "transmission")
    assert code == 0 and "pyramidal=[0]" in out


def test_verify_unknown_suite(capsys):
    assert run(capsys, "verify", "--family", "K", "3", "--suite", "nope")[0] == 2


def test_verify_csv(capsys):
    _, out, _ = run(capsys, "verify", "--family", "K", "4", "--suite", "ratk", "--csv")
    assert out.splitlines()[0] == "kind,name,n,graph6,value,slack,equality"
    assert out.splitlines()[1].startswith("bound,ratk,4,C~,")


def test_scan_exit_codes(capsys):
    code, out, _ = run(capsys, "scan", str(DATA / "connected_n5.g6"), "--conjecture", "3")
    assert code == 0 and "S5 = 0.605551275464" in out
    code, out, _ = run(capsys, "scan", str(DATA / "connected_n5.g6"), "--conjecture", "4", "--k", "1")
    assert code == 3


def test_scan_rejects_family(capsys):
    assert run(capsys, "scan", "--family", "K", "3")[0] == 2


def test_scan_unknown_conjecture(capsys):
    assert run(capsys, "scan", str(DATA / "connected_n4.g6"), "--conjecture", "7")[0] == 2


def test_family_command(capsys):
    code, out, _ = run(capsys, "family", "K", "3")
    assert code == 0 and out.strip() == "Bw"


def test_selftest(capsys):
    code, out, _ = run(capsys, "selftest")
    assert code == 0 and "FAIL" not in out


def test_no_command_is_usage_error(capsys):
    assert run(capsys)[0] == 2


@pytest.mark.parametrize("cmd", [["spectrum"], ["verify", "--suite", "diff-rownorm"], ["classify"]])
def test_output_identical_across_workers(capsys, cmd):
    path = str(DATA / "connected_n6.g6")
    _, one, _ = run(capsys, *cmd, path, "--workers", "1", "--format", "jsonl")
    _, two, _ = run(capsys, *cmd, path, "--workers", "3", "--format", "jsonl")
    assert one == two


def test_stdin_and_console_entry():
    proc = subprocess.run([sys.executable, "-m", "distpareto.cli", "spectrum", "-"],
                          input="Bw\n", capture_output=True, text=True)
    assert proc.returncode == 0
    assert "0 1 2" in proc.stdout
