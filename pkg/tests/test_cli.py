"""Command-line behavior: output shape, determinism, round-trips, exit codes."""

import json
import subprocess
import sys

import pytest

from pinforms.cli import OutputRecord, main, parse_surface, parse_values


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_parse_surface():
    assert parse_surface("S:2").label == "S:2"
    assert parse_surface("N:14").label == "N:14"
    for bad in ("S2", "X:1", "N:-1", "N:", "S:one"):
        with pytest.raises(ValueError):
            parse_surface(bad)


def test_parse_values():
    assert parse_values("1,3,1") == (1, 3, 1)
    assert parse_values("") == ()
    with pytest.raises(ValueError):
        parse_values("1,a")


def test_census_spin_torus(capsys):
    code, out, _ = run_cli(capsys, "census", "-s", "S:1", "-t", "spin")
    assert code == 0
    assert "surface: S:1" in out
    assert "structures: 4" in out
    lines = [ln.split() for ln in out.splitlines() if ln and ln[0].isdigit()]
    assert lines == [["0", "3"], ["1", "1"]]


def test_census_pin_minus_klein_bottle_compare(capsys):
    code, out, _ = run_cli(
        capsys, "census", "-s", "N:2", "-t", "pin-", "--compare", "--format", "json"
    )
    assert code == 0
    record = OutputRecord.from_json(out)
    assert record.command == "census"
    assert dict(record.meta)["structures"] == 4
    by_invariant = {row[0]: row for row in record.rows}
    # invariant 0: enumerated 2, printed closed form 1 (disputed), corrected 2
    assert by_invariant[0][1:] == (2, 1, "DISPUTED", 2, 2, "CONJECTURED-CONFIRMED")
    assert by_invariant[2][1:] == (1, 1, "CONFIRMED", 1, None, None)
    assert by_invariant[6][1:] == (1, 1, "CONFIRMED", 1, None, None)


def test_census_spin_compare_confirmed(capsys):
    code, out, _ = run_cli(
        capsys, "census", "-s", "S:2", "-t", "spin", "--compare", "--format", "json"
    )
    assert code == 0
    record = OutputRecord.from_json(out)
    assert record.rows == ((0, 10, 10, "CONFIRMED"), (1, 6, 6, "CONFIRMED"))


def test_invariant_enhancement(capsys):
    code, out, _ = run_cli(capsys, "invariant", "-s", "N:2", "-e", "1,3")
    assert code == 0
    lines = dict(
        tuple(ln.split(None, 1)) for ln in out.splitlines() if ln.startswith(("beta", "histogram"))
    )
    assert lines["beta"] == "0"
    assert lines["histogram"] == "2,1,0,1"


def test_invariant_refinement(capsys):
    code, out, _ = run_cli(capsys, "invariant", "-s", "S:1", "-q", "1,1")
    assert code == 0
    assert any(ln.split() == ["arf", "1"] for ln in out.splitlines())


def test_invariant_theory_cross_check(capsys):
    code, _, err = run_cli(capsys, "invariant", "-s", "S:1", "-q", "1,1", "-t", "pin-")
    assert code == 2
    assert "does not match" in err


def test_orbits_three_crosscaps(capsys):
    code, out, _ = run_cli(capsys, "orbits", "-s", "N:3", "-t", "pin-", "--format", "json")
    assert code == 0
    record = OutputRecord.from_json(out)
    assert dict(record.meta)["group"] == "brute (order 6)"
    assert record.rows == ((1, 1, 3), (2, 3, 1), (3, 3, 7), (4, 1, 5))
    assert dict(record.summary)["level-sets"] == "PASS"


def test_orbits_genus_two_spin(capsys):
    code, out, _ = run_cli(capsys, "orbits", "-s", "S:2", "-t", "spin", "--format", "json")
    assert code == 0
    record = OutputRecord.from_json(out)
    assert dict(record.meta)["group"] == "brute (order 720)"
    assert record.rows == ((1, 10, 0), (2, 6, 1))


def test_orbits_generated_path(capsys):
    code, out, _ = run_cli(capsys, "orbits", "-s", "N:6", "-t", "pin-", "--format", "json")
    assert code == 0
    record = OutputRecord.from_json(out)
    assert dict(record.meta)["group"].startswith("generated")
    assert dict(record.summary)["level-sets"] == "PASS"
    assert sorted(row[1] for row in record.rows) == [12, 16, 16, 20]


def test_verify_single_suite(capsys):
    code, out, _ = run_cli(capsys, "verify", "forms-core")
    assert code == 0
    assert "PASS" in out
    assert "failed: 0" in out


def test_exit_codes_bad_input(capsys):
    assert run_cli(capsys, "census", "-s", "X:9", "-t", "pin-")[0] == 2
    assert run_cli(capsys, "census", "-s", "N:2", "-t", "spin")[0] == 2
    assert run_cli(capsys, "invariant", "-s", "N:2", "-e", "2,1")[0] == 2
    assert run_cli(capsys, "invariant", "-s", "N:2", "-e", "1")[0] == 2


def test_exit_codes_size_limits(capsys):
    assert run_cli(capsys, "census", "-s", "N:22", "-t", "pin-")[0] == 3
    assert run_cli(capsys, "census", "-s", "N:8", "-t", "pin-", "--enum-limit", "4")[0] == 3
    assert run_cli(capsys, "orbits", "-s", "N:12", "-t", "pin-")[0] == 3


def test_argparse_rejects_unknown_theory(capsys):
    with pytest.raises(SystemExit) as excinfo:
        main(["census", "-s", "N:2", "-t", "pin+"])
    assert excinfo.value.code == 2


@pytest.mark.parametrize("fmt", ["table", "csv", "json"])
def test_output_deterministic(capsys, fmt):
    argv = ("census", "-s", "N:4", "-t", "pin-", "--compare", "--format", fmt)
    _, first, _ = run_cli(capsys, *argv)
    _, second, _ = run_cli(capsys, *argv)
    assert first == second


def test_console_script_deterministic():
    argv = [
        sys.executable, "-m", "pinforms.cli",
        "orbits", "-s", "N:3", "-t", "pin-", "--format", "csv",
    ]
    first = subprocess.run(argv, capture_output=True, text=True)
    second = subprocess.run(argv, capture_output=True, text=True)
    assert first.returncode == second.returncode == 0
    assert first.stdout == second.stdout
    assert first.stdout.startswith("# command: orbits\n")


def test_json_round_trip(capsys):
    _, out, _ = run_cli(
        capsys, "census", "-s", "N:4", "-t", "pin-", "--compare", "--format", "json"
    )
    record = OutputRecord.from_json(out)
    assert record.to_json() == out
    # decoded payload keeps row order and null cells
    payload = json.loads(out)
    assert payload["columns"][0] == "invariant"


def test_out_file_matches_stdout(tmp_path, capsys):
    target = tmp_path / "census.json"
    code, out, _ = run_cli(
        capsys,
        "census", "-s", "S:1", "-t", "spin", "--format", "json", "--out", str(target),
    )
    assert code == 0
    assert target.read_text(encoding="utf-8") == out


def test_csv_format_shape(capsys):
    _, out, _ = run_cli(capsys, "census", "-s", "N:1", "-t", "pin-", "--format", "csv")
    lines = out.splitlines()
    assert lines[0] == "# command: census"
    assert "invariant,count" in lines
    assert "1,1" in lines
    assert "7,1" in lines
