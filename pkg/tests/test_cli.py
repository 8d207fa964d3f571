import json
import subprocess
import sys

import pytest

from quartprimes.cli import main, parse_config, run
from quartprimes.config import CALIBRATION, RunConfig


def call(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_constant_json(capsys):
    code, out, _ = call(["constant", "--c", "5"], capsys)
    assert code == 0
    doc = json.loads(out)
    assert doc["result"]["G"] == "32/125"
    assert doc["params"] == {"c": 5}
    assert set(doc["calibration"]) == set(CALIBRATION)
    assert "numpy" in doc["versions"] and "quartprimes" in doc["versions"]


def test_constant_table(capsys):
    code, out, _ = call(["--format", "table", "constant", "--c", "5"], capsys)
    assert code == 0 and '"32/125"' in out
    code2, out2, _ = call(["constant", "--c", "5", "--format", "table"], capsys)
    assert out2 == out


def test_primes(capsys):
    code, out, _ = call(["primes", "--c", "1", "--x", "10"], capsys)
    assert code == 0 and out.split() == ["2", "5"]


def test_ogg(capsys):
    code, out, _ = call(["congruence", "ogg", "--p", "11", "--q", "13"], capsys)
    assert code == 0 and json.loads(out)["result"]["record"]["numerator"] == 35


@pytest.mark.parametrize(
    "argv, key, value",
    [
        (["congruence", "chen", "--ell", "3"], "p", 19),
        (["congruence", "frey", "--p", "19", "--q", "109", "--ell", "3"], "conductor", 4142),
        (["congruence", "trace", "--a2", "0", "--a4", "-1", "--a6", "0", "--p", "7"], "a_p", 0),
        (["congruence", "degree", "--ell", "1009", "--q", "5"], "degree_lower_bound", 3),
        (["congruence", "qcurve", "--A", "3", "--B", "2", "--ell", "1", "--p", "17"], "a4", {"re": 18, "im": 4}),
    ],
)
def test_congruence_subcommands(argv, key, value, capsys):
    code, out, _ = call(argv, capsys)
    assert code == 0
    assert json.loads(out)["result"]["record"][key] == value


def test_quartic_subcommand(capsys):
    code, out, _ = call(["congruence", "quartic", "--ell", "1", "--bound", "100"], capsys)
    assert {"A": 3, "B": 2, "p": 17} in json.loads(out)["result"]["record"]["solutions"]


def test_tally_csv(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("QUARTPRIMES_OUT_DIR", str(tmp_path))
    code, out, _ = call(["tally", "--c", "1", "--x", "10", "--out", "t.csv"], capsys)
    assert code == 0
    rows = (tmp_path / "t.csv").read_text().splitlines()
    assert rows[0] == "n,a_n"
    assert rows[1:] == [f"{n},{v}" for n, v in enumerate([4, 4, 0, 2, 4, 0, 0, 0, 2, 4], start=1)]
    assert json.loads(out)["result"]["A"] == 20


def test_audit(capsys):
    code, out, _ = call(["audit", "--c", "1", "--x", "2000", "--N", "20"], capsys)
    doc = json.loads(out)
    assert code == 0 and doc["result"]["params"]["N"] == 20
    assert doc["result"]["entries"]["g_prime_order"]["status"] == "pass"


def test_unknown_subcommand_exit_1(capsys):
    code, _, err = call(["frobnicate"], capsys)
    assert code == 1 and "invalid choice" in err
    assert run(RunConfig("frobnicate"))[0] == 1


def test_precondition_exit_2(capsys):
    code, _, err = call(["--budget", "100", "tally", "--c", "1", "--x", "1000"], capsys)
    assert code == 2 and "c*x <= 100" in err
    code, _, err = call(["congruence", "chen", "--ell", "41"], capsys)
    assert code == 2 and "ell <= 40" in err
    code, _, err = call(["constant", "--c", "0"], capsys)
    assert code == 2 and "c >= 1" in err
    code, _, err = call(["congruence", "quartic", "--ell", "30", "--bound", "10"], capsys)
    assert code == 2 and "2^63" in err


def test_verify_rho(capsys):
    code, out, _ = call(["verify", "rho"], capsys)
    assert code == 0 and out.startswith("PASS")


def test_verify_unknown_suite(capsys):
    code, _, _ = call(["verify", "nothing"], capsys)
    assert code == 1


def test_reports_byte_identical_across_threads(capsys):
    outs = set()
    for threads in ("1", "3", "8"):
        code, out, _ = call(["--threads", threads, "primes", "--c", "2", "--x", "50000"], capsys)
        outs.add(out)
    assert len(outs) == 1


def test_parse_config_defaults():
    cfg = parse_config(["constant", "--c", "2"])
    assert cfg == RunConfig("constant", {"c": 2}, "json", 1, cfg.budget)
    assert parse_config(["verify", "g"]).fmt == "table"


def test_module_entry_point_identical_runs():
    cmd = [sys.executable, "-m", "quartprimes", "constant", "--c", "65"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and b'"G"' in a
