import json
import subprocess
import sys

import pytest

from growth_forge import reports
from growth_forge.cli import main


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_word_len_tower(capsys):
    code, out, _ = run(["word", "len", "--k", "3", "--spec", "tower"], capsys)
    assert code == 0 and out.strip() == "2^^(1;65536)+131076"


def test_group_mul(capsys):
    code, out, _ = run(["group", "mul", "s(1)", "t(0)"], capsys)
    assert code == 0 and out.strip() == "z(1) t(0) s(1)"


def test_growth_csv(tmp_path, capsys):
    path = tmp_path / "growth.csv"
    code, out, _ = run(["growth", "--spec", "geo:2", "--nmax", "100", "--out", str(path)], capsys)
    assert code == 0
    rows = reports.read_growth(path.read_text())
    assert len(rows) == 101 and rows[2] == (2, 6)
    assert path.read_text().count("\n") == 102
    assert out.startswith("verdict: quadratic")


def test_growth_json(tmp_path, capsys):
    path = tmp_path / "growth.json"
    assert run(["growth", "--nmax", "20", "--out", str(path)], capsys)[0] == 0
    doc = json.loads(path.read_text())
    assert doc["schema"] == "growth-forge/v1" and len(doc["series"]) == 21


def test_same_seed_same_bytes(tmp_path, capsys):
    outs = []
    for i in range(2):
        path = tmp_path / f"r{i}.json"
        assert run(["growth", "--nmax", "40", "--seed", "7", "--out", str(path)], capsys)[0] == 0
        outs.append(path.read_bytes())
    assert outs[0] == outs[1]
    a = run(["witness", "--n", "2", "--seed", "3"], capsys)[1]
    b = run(["witness", "--n", "2", "--seed", "3"], capsys)[1]
    assert a == b and json.loads(a)["group part"] == "z(2)"


def test_exit_codes(capsys):
    assert run(["bgrowth", "--nmax", "60"], capsys)[0] == 1
    assert run(["nosuch"], capsys)[0] == 2
    assert run(["group", "mul", "s(1"], capsys)[0] == 2
    assert run(["word", "len", "--spec", "geo:1"], capsys)[0] == 2
    assert run(["growth", "--nmax", "30", "--mode", "free", "--span-limit", "100"], capsys)[0] == 1


def test_config_file_and_flag_precedence(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"spec": "tower"}))
    assert run(["word", "len", "--k", "2", "--config", str(cfg)], capsys)[1].strip() == "65538"
    out = run(["word", "len", "--k", "2", "--config", str(cfg), "--spec", "geo:2"], capsys)[1]
    assert out.strip() == "4"


@pytest.mark.parametrize("argv", [
    ["word", "prefix", "--k", "3"],
    ["word", "factor", "x y^2 x y^4 x"],
    ["word", "complexity", "--ell", "10"],
    ["word", "maxx", "--ell", "300"],
    ["word", "stable", "--ell", "10"],
    ["word", "bridge", "x", "x", "--bound", "10"],
    ["lemma1", "--z", "x", "--m", "1", "--nmax", "2"],
    ["lemmaC", "--z", "x", "--n", "3", "--bound", "4"],
    ["gk1", "--u", "y", "--nmax", "6"],
    ["group", "inv", "s(0) t(0)"],
    ["group", "comm", "s(1)", "t(0)"],
    ["group", "conj", "t(-1) s(2)", "--k", "1"],
    ["group", "central", "z(5)"],
    ["bgrowth", "--nmax", "8"],
    ["witness", "--indices", "0", "1", "2", "--degree", "2"],
    ["prime", "x", "x"],
    ["prime", "--ring", "(x : s(0))", "(x : s(0)^-1)"],
    ["nilp", "--u", "x", "--d", "1"],
    ["nilp", "--ring", "--d", "1"],
    ["selftest"],
])
def test_subcommands_run(argv, capsys):
    code, out, err = run(argv, capsys)
    assert code == 0, err
    assert out.strip()


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "growth_forge.cli", "group", "central", "u"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "false" in proc.stdout.lower()
