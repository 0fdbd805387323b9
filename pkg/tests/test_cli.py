import json
import subprocess
import sys

import pytest

from logzono import cli
from logzono.casestudies import INTERSECTION_SOURCE, LfsrSpec
from logzono.reach import ContainmentReport


@pytest.fixture()
def system_file(tmp_path):
    p = tmp_path / "crossing.lbn"
    p.write_text(INTERSECTION_SOURCE)
    return str(p)


@pytest.fixture()
def zono_files(tmp_path):
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    a.write_text(json.dumps(
        {"dim": 2, "center": "11", "generators": ["01", "10"]}))
    b.write_text(json.dumps(
        {"dim": 2, "center": "00", "generators": ["11"]}))
    return str(a), str(b)


def run(args):
    return cli.main(args)


def test_reach_text_uses_file_horizon(system_file, capsys):
    assert run(["reach", system_file]) == 0
    out = capsys.readouterr().out
    assert "k=10" in out and "k=11" not in out


def test_reach_both_reports_containment(system_file, capsys):
    assert run(["reach", system_file, "--backend", "both"]) == 0
    assert "containment: ok" in capsys.readouterr().out


def test_reach_json_shape(system_file, capsys):
    assert run(["reach", system_file, "--backend", "both",
                "--horizon", "3", "--out", "json"]) == 0
    d = json.loads(capsys.readouterr().out)
    assert set(d) == {"zonotope", "explicit", "containment"}
    assert d["containment"]["ok"] is True
    assert [s["size"] for s in d["explicit"]["steps"]] == [12, 13, 14, 14]


def test_reach_csv_rows(system_file, capsys):
    assert run(["reach", system_file, "--horizon", "2",
                "--backend", "both", "--out", "csv"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0] == "k,backend,time_s,size,joint_count"
    assert len(lines) == 1 + 3 * 2


def test_reach_horizon_zero(system_file, capsys):
    assert run(["reach", system_file, "--horizon", "0",
                "--out", "json"]) == 0
    d = json.loads(capsys.readouterr().out)
    assert len(d["zonotope"]["steps"]) == 1


def test_reach_parse_error_has_location(tmp_path, capsys):
    bad = tmp_path / "bad.lbn"
    bad.write_text("state x;\nx^ = 1;\n")
    assert run(["reach", str(bad)]) == 1
    err = capsys.readouterr().err
    assert "line 2, col 2" in err


def test_reach_missing_file(capsys):
    assert run(["reach", "/nonexistent/x.lbn"]) == 1
    assert "error:" in capsys.readouterr().err


def test_reach_soundness_exit_code(system_file, monkeypatch, capsys):
    # force the violation branch; a real one would be a library bug
    monkeypatch.setattr(
        cli, "check_containment",
        lambda a, b: ContainmentReport(False, [(0, "0000", "p1")], [1]))
    assert run(["reach", system_file, "--horizon", "1",
                "--backend", "both"]) == 2
    assert "VIOLATED" in capsys.readouterr().out


def test_lfsr_verified_key(capsys):
    assert run(["lfsr", "--length", "8", "--seed", "1"]) == 0
    out = capsys.readouterr().out
    assert "verified true" in out


def test_lfsr_deterministic_given_seed(capsys):
    run(["lfsr", "--length", "8", "--seed", "5", "--out", "json"])
    first = json.loads(capsys.readouterr().out)["key"]
    run(["lfsr", "--length", "8", "--seed", "5", "--out", "json"])
    assert json.loads(capsys.readouterr().out)["key"] == first


def test_lfsr_search_failure_exit_code(tmp_path, capsys):
    inst = tmp_path / "impossible.json"
    inst.write_text(json.dumps({
        "spec": LfsrSpec(4, (4, 3), (4,)).to_json_dict(),
        "message": [0] * 16, "cipher": [1] * 16}))
    assert run(["lfsr", "--instance", str(inst)]) == 3


def test_lfsr_underdetermined_warning(capsys):
    assert run(["lfsr", "--length", "8", "--message-len", "4",
                "--seed", "2"]) in (0, 3)
    assert "under-determined" in capsys.readouterr().err


def test_lfsr_sweep_csv(capsys):
    assert run(["lfsr", "--sweep", "4,8", "--out", "csv"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0] == "length,time_s,verified"
    assert [l.split(",")[0] for l in lines[1:]] == ["4", "8"]
    assert all(l.endswith("true") for l in lines[1:])


def test_set_xor_evaluate(zono_files, capsys):
    a, b = zono_files
    assert run(["set", "xor", a, b, "--evaluate"]) == 0
    d = json.loads(capsys.readouterr().out)
    assert d["generators"] == ["01", "10", "11"]
    assert sorted(d["points"]) == ["00", "01", "10", "11"]


def test_set_not_single_operand(zono_files, capsys):
    a, b = zono_files
    assert run(["set", "not", b]) == 0
    assert json.loads(capsys.readouterr().out)["center"] == "11"
    assert run(["set", "not", a, b]) == 1
    assert run(["set", "and", a]) == 1


def test_set_dimension_mismatch(zono_files, tmp_path, capsys):
    a, _ = zono_files
    c = tmp_path / "c.json"
    c.write_text(json.dumps({"dim": 3, "center": "000", "generators": []}))
    assert run(["set", "and", a, str(c)]) == 1


def test_reduce_drops_duplicate(tmp_path, capsys):
    z = tmp_path / "z.json"
    z.write_text(json.dumps(
        {"dim": 2, "center": "00", "generators": ["10", "10", "01"]}))
    assert run(["reduce", str(z), "--evaluate"]) == 0
    d = json.loads(capsys.readouterr().out)
    assert (d["gamma_before"], d["gamma_after"]) == (3, 2)
    assert sorted(d["points"]) == ["00", "01", "10", "11"]


def test_contains_true_false(zono_files, capsys):
    a, b = zono_files
    assert run(["contains", a, "00"]) == 0
    assert capsys.readouterr().out.strip() == "true"
    assert run(["contains", b, "01"]) == 0
    assert capsys.readouterr().out.strip() == "false"


def test_contains_bad_point(zono_files, capsys):
    a, _ = zono_files
    assert run(["contains", a, "0x"]) == 1


def test_golden_writes_canonical_json(system_file, tmp_path, capsys):
    golden = tmp_path / "golden.json"
    assert run(["reach", system_file, "--horizon", "1",
                "--golden", str(golden)]) == 0
    d = json.loads(golden.read_text())
    assert [s["size"] for s in d["zonotope"]["steps"]] == [12, 13]
    # canonical form: keys sorted, trailing newline
    text = golden.read_text()
    assert text.endswith("\n")
    assert text == json.dumps(d, sort_keys=True, indent=2) + "\n"


def test_gamma_cap_validation(system_file, capsys):
    assert run(["reach", system_file, "--gamma-cap", "-1"]) == 1


def test_bench_intersection_csv(capsys):
    assert run(["bench", "intersection", "--horizons", "2,3",
                "--backend", "exact"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0] == "N,backend,time_s,size,joint_count"
    assert lines[1].startswith("2,explicit,") and lines[1].endswith(",14,36")


def test_console_script_and_env_cap(tmp_path):
    z = tmp_path / "wide.json"
    gens = ["0001", "0010", "0100", "1000"]
    z.write_text(json.dumps({"dim": 4, "center": "0000",
                             "generators": gens}))
    proc = subprocess.run(
        [sys.executable, "-m", "logzono.cli", "set", "not", str(z),
         "--evaluate"],
        capture_output=True, text=True,
        env={"PATH": "/usr/bin:/bin", "LOGZONO_GAMMA_CAP": "2"})
    assert proc.returncode == 1
    assert "cap 2" in proc.stderr

    help_proc = subprocess.run(["logzono", "--help"],
                               capture_output=True, text=True)
    assert help_proc.returncode == 0
    assert "reach" in help_proc.stdout
