"""End-to-end tests of the command line tool (exit codes, formats)."""

import json
import os
import subprocess

import pytest

CLI = os.environ.get("KINSTAB_CLI")

pytestmark = pytest.mark.skipif(not CLI, reason="KINSTAB_CLI not set")


def run(*args, **kwargs):
    return subprocess.run([CLI, *args], capture_output=True, text=True, **kwargs)


def test_report_text_and_json():
    text = run("report", "--preset", "s9")
    assert text.returncode == 0
    assert "beta = -1/18" in text.stdout
    assert "VERDICT NotKSemistable" in text.stdout

    as_json = run("report", "--preset", "s9", "--json")
    assert as_json.returncode == 0
    report = json.loads(as_json.stdout)
    assert report["beta"]["beta"] == "-1/18"
    assert report["verdict"] == "NotKSemistable"


def test_assert_unstable_exit_codes():
    unstable = run("report", "--preset", "s27", "--assert-unstable")
    assert unstable.returncode == 0

    boundary = run("report", "--preset", "fam-6n9", "--n", "0", "--assert-unstable")
    assert boundary.returncode == 3


def test_schema_errors_exit_2(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{\n  "surface": oops\n}')
    result = run("report", str(bad))
    assert result.returncode == 2
    assert "bad.json:2" in result.stderr

    missing = run("report", str(tmp_path / "absent.json"))
    assert missing.returncode == 2


def test_inconsistent_gram_exit_2(tmp_path):
    exported = run("export-preset", "--preset", "s9")
    assert exported.returncode == 0
    scenario = json.loads(exported.stdout)
    scenario["curves"]["gram"][0][0] = "7/12"  # perturb L1^2 by 1
    path = tmp_path / "perturbed.json"
    path.write_text(json.dumps(scenario))
    result = run("report", str(path))
    assert result.returncode == 2
    assert "(sum c_i C_i)^2" in result.stderr


def test_export_then_rerun_is_byte_identical(tmp_path):
    path = tmp_path / "s9.json"
    exported = run("export-preset", "--preset", "s9", "-o", str(path))
    assert exported.returncode == 0

    direct = run("report", "--preset", "s9", "--json")
    from_file = run("report", str(path), "--json")
    assert from_file.returncode == 0
    assert from_file.stdout == direct.stdout

    again = run("report", str(path), "--json")
    assert again.stdout == from_file.stdout


def test_sweep_csv_and_json():
    csv = run("sweep", "--family", "fam-11nm", "--n", "0:10", "--m", "0:10")
    assert csv.returncode == 0
    lines = csv.stdout.strip().splitlines()
    assert lines[0] == "family,n,m,beta,verdict"
    assert len(lines) == 56  # header + 55 rows
    assert all(line.endswith("NotKSemistable") for line in lines[1:])

    boundary = run("sweep", "--family", "fam-11nm", "--n", "0:10", "--m", "0:10",
                   "--allow-boundary")
    rows = boundary.stdout.strip().splitlines()[1:]
    zero_rows = [r for r in rows if r.split(",")[4] == "Inconclusive"]
    assert len(zero_rows) == 11
    assert all(r.split(",")[3] == "0" for r in zero_rows)

    as_json = run("sweep", "--family", "fam-3n4", "--n", "0:10", "--json")
    rows = json.loads(as_json.stdout)
    assert len(rows) == 11
    assert rows[0]["beta"] == "-7/1350"


def test_bad_parameters_exit_2():
    assert run("report", "--preset", "fam-11nm", "--n", "4", "--m", "1").returncode == 2
    assert run("report", "--preset", "nope").returncode == 2
    assert run("sweep", "--family", "nope").returncode == 2
