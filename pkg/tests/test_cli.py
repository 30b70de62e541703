import csv
import io
import json
import subprocess
import sys

import pytest

from hurmono import build_sheet_graph, components, make_spec
from hurmono.cli import report_from_json_obj


def run_cli(*args, env_extra=None, check=False):
    import os

    env = dict(os.environ)
    env.pop("HURMONO_THREADS", None)
    if env_extra:
        env.update(env_extra)
    proc = subprocess.run(
        [sys.executable, "-m", "hurmono", *args],
        capture_output=True,
        text=True,
        env=env,
    )
    if check and proc.returncode != 0:
        raise AssertionError(f"cli failed: {proc.returncode}\n{proc.stderr}")
    return proc


# ---------------------------------------------------------------------------
# sheets


def test_sheets_counts_four():
    proc = run_cli(
        "sheets", "--degrees", "3", "--genera", "0", "--profiles", "2,1;2,1;2,1;2,1"
    )
    assert proc.returncode == 0
    assert proc.stdout.strip().splitlines()[-1] == "total 4 sheets"
    assert len(proc.stdout.strip().splitlines()) == 5


def test_sheets_empty_is_success():
    proc = run_cli(
        "sheets", "--degrees", "2", "--genera", "0", "--profiles", "2;1,1;1,1;1,1"
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "total 0 sheets"


def test_sheets_disconnected_trivial_covers():
    proc = run_cli(
        "sheets", "--degrees", "1,1", "--genera", "0,0", "--profiles", "1,1;1,1;1,1;1,1"
    )
    assert proc.returncode == 0
    assert proc.stdout.strip().splitlines()[-1] == "total 8 sheets"


def test_sheets_json():
    proc = run_cli(
        "sheets",
        "--degrees", "2", "--genera", "1", "--profiles", "2^4",
        "--format", "json",
    )
    payload = json.loads(proc.stdout)
    assert payload["schema_version"] == 1
    assert payload["count"] == 1
    assert payload["spec"] == {
        "degrees": [2],
        "genera": [1],
        "profiles": [[2], [2], [2], [2]],
    }
    assert payload["sheets"][0][0] == [{"cycle": [1, 2], "label": 1}]


def test_sheets_csv():
    proc = run_cli(
        "sheets",
        "--degrees", "2", "--genera", "1", "--profiles", "2^4",
        "--format", "csv",
    )
    rows = list(csv.reader(io.StringIO(proc.stdout)))
    assert rows[0] == ["sheet", "fiber", "marking"]
    assert len(rows) == 5
    assert rows[1] == ["1", "1", "(1 2)^1"]


# ---------------------------------------------------------------------------
# report


def test_report_single_component_degree6():
    proc = run_cli(
        "report", "--degrees", "3", "--genera", "0", "--profiles", "3;2,1;2,1;1,1,1"
    )
    assert proc.returncode == 0
    lines = proc.stdout.splitlines()
    assert lines[0] == "component 1: degree 6, genus 0"
    assert lines[-1] == "total 6 sheets in 1 components"


def test_report_positive_genus_row():
    proc = run_cli(
        "report", "--degrees", "4", "--genera", "0", "--profiles", "2,2;3,1;2,1,1;2,1,1"
    )
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[0] == "component 1: degree 24, genus 1"


def test_report_empty():
    proc = run_cli(
        "report", "--degrees", "2", "--genera", "0", "--profiles", "2;1,1;1,1;1,1"
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "total 0 sheets in 0 components"


def test_report_verbose_lists_sheet_permutations():
    proc = run_cli(
        "report", "--degrees", "2", "--genera", "1", "--profiles", "2^4", "-v"
    )
    assert "  sheets: 1" in proc.stdout
    assert "  s zero=() one=() infty=()" in proc.stdout
    assert "s_zero*s_one*s_infty is identity: yes" in proc.stdout


def test_report_json_round_trips():
    spec_args = ("--degrees", "4", "--genera", "2", "--profiles", "4;4;3,1;3,1")
    proc = run_cli("report", *spec_args, "--format", "json")
    payload = json.loads(proc.stdout)
    assert payload["schema_version"] == 1
    spec = make_spec("4", "2", "4;4;3,1;3,1")
    expected = components(build_sheet_graph(spec))
    assert report_from_json_obj(payload) == expected
    assert payload["sheet_count"] == 8


def test_report_csv():
    proc = run_cli(
        "report",
        "--degrees", "4", "--genera", "2", "--profiles", "4;4;3,1;3,1",
        "--format", "csv",
    )
    rows = list(csv.reader(io.StringIO(proc.stdout)))
    assert rows[0][:3] == ["component", "degree", "genus"]
    assert len(rows) == 3
    degrees = sorted(int(r[1]) for r in rows[1:])
    assert degrees == [2, 6]


def test_report_rejects_three_fibers():
    proc = run_cli("report", "--degrees", "2", "--genera", "0", "--profiles", "2;2;1,1")
    assert proc.returncode == 2
    assert "monodromy requires exactly 4 marked fibers" in proc.stderr


# ---------------------------------------------------------------------------
# verify


def test_verify_degree2():
    proc = run_cli("verify", "--degree", "2")
    assert proc.returncode == 0
    assert proc.stdout.strip().splitlines()[-1] == "3/3 pass"


def test_verify_degree3_json():
    proc = run_cli("verify", "--degree", "3", "--format", "json")
    assert proc.returncode == 0
    payload = json.loads(proc.stdout)
    assert payload["schema_version"] == 1
    assert payload["pass"] == 9
    assert payload["fail"] == 0
    assert all(r["passed"] for r in payload["rows"])


def test_verify_full_reports_known_misses():
    proc = run_cli("verify")
    assert proc.returncode == 1
    lines = proc.stdout.strip().splitlines()
    assert lines[-1] == "50/52 pass"
    fails = [line for line in lines if line.endswith(": FAIL")]
    assert len(fails) == 2


def test_verify_goldens_override(tmp_path):
    path = tmp_path / "mini.txt"
    path.write_text(
        "# one row\ndegrees=2 genera=1 profiles=2;2;2;2 expect=1:0:1\n"
    )
    proc = run_cli("verify", "--goldens", str(path))
    assert proc.returncode == 0
    assert proc.stdout.strip().splitlines()[-1] == "1/1 pass"


def test_verify_goldens_parse_error_location(tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("# c\ndegrees=2 genera=1 profiles=2;2;2;2 expect=1:0:1\nwat\n")
    proc = run_cli("verify", "--goldens", str(path))
    assert proc.returncode == 2
    assert f"{path}:3:" in proc.stderr


def test_verify_missing_goldens_file():
    proc = run_cli("verify", "--goldens", "/no/such/file.txt")
    assert proc.returncode == 2


def test_verify_csv():
    proc = run_cli("verify", "--degree", "2", "--format", "csv")
    rows = list(csv.reader(io.StringIO(proc.stdout)))
    assert rows[0] == ["line", "spec", "expected", "computed", "status"]
    assert [r[4] for r in rows[1:]] == ["pass", "pass", "pass"]


# ---------------------------------------------------------------------------
# flags, errors, determinism


@pytest.mark.parametrize(
    "flag, args",
    [
        ("--degrees", ["--degrees", "x", "--genera", "0", "--profiles", "2^4"]),
        ("--genera", ["--degrees", "2", "--genera", "y", "--profiles", "2^4"]),
        ("--profiles", ["--degrees", "2", "--genera", "0", "--profiles", "2,?"]),
    ],
)
def test_malformed_flag_named(flag, args):
    proc = run_cli("sheets", *args)
    assert proc.returncode == 2
    assert flag in proc.stderr


def test_guard_exit_code():
    profile = ",".join(["1"] * 10)
    proc = run_cli(
        "sheets", "--degrees", "10", "--genera", "0", "--profiles", ";".join([profile] * 4)
    )
    assert proc.returncode == 3
    assert "instance too large" in proc.stderr


def test_no_arguments_is_usage_error():
    proc = run_cli()
    assert proc.returncode == 2


def test_unknown_subcommand_is_usage_error():
    proc = run_cli("frobnicate")
    assert proc.returncode == 2


def test_threads_env_fallback():
    proc = run_cli("verify", "--degree", "2", env_extra={"HURMONO_THREADS": "2"})
    assert proc.returncode == 0
    bad = run_cli("verify", "--degree", "2", env_extra={"HURMONO_THREADS": "many"})
    assert bad.returncode == 2
    assert "HURMONO_THREADS" in bad.stderr
    flag_wins = run_cli(
        "verify", "--degree", "2", "--threads", "1",
        env_extra={"HURMONO_THREADS": "many"},
    )
    assert flag_wins.returncode == 0


def test_threads_flag_validation():
    proc = run_cli("verify", "--degree", "2", "--threads", "0")
    assert proc.returncode == 2
    assert "--threads" in proc.stderr


@pytest.mark.parametrize("fmt", ["text", "json", "csv"])
def test_byte_identical_reruns(fmt):
    args = (
        "report",
        "--degrees", "3", "--genera", "0", "--profiles", "2,1^4",
        "--format", fmt,
    )
    first = run_cli(*args, check=True)
    second = run_cli(*args, check=True)
    assert first.stdout == second.stdout


def test_verify_output_independent_of_threads():
    one = run_cli("verify", "--degree", "3", "--threads", "1", check=True)
    four = run_cli("verify", "--degree", "3", "--threads", "4", check=True)
    assert one.stdout == four.stdout
