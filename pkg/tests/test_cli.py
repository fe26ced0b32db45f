import json

import pytest

from tricomi.cli import EXIT_IO, EXIT_OK, EXIT_SINGULAR, EXIT_USAGE, UsageError, main, parse_point
from tricomi.schemas.fundsol import SpacetimePoint
from tricomi.services import fundsol

GRID_ARGS = ["grid", "--n", "1", "--quantity", "f_plus", "--x-axis", "0", "1.3333333333333333", "3",
             "--y-axis", "-1", "1", "2"]


def test_eval_prints_fifteen_significant_digits(capsys):
    assert main(["eval", "--n", "1", "--x", "0", "--y", "-1", "--quantity", "f_minus"]) == EXIT_OK
    expected = fundsol.f_minus(1, SpacetimePoint(x=(0.0,), y=-1.0))
    assert capsys.readouterr().out.strip() == format(expected, ".15g")


def test_eval_region_label(capsys):
    assert main(["eval", "--n", "2", "--x", "0,0", "--y", "1", "--quantity", "region"]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "DPlus"


def test_eval_radius_shorthand_matches_full_vector(capsys):
    main(["eval", "--n", "2", "--x", "0.3", "--y", "-1"])
    short = capsys.readouterr().out
    main(["eval", "--n", "2", "--x", "0.3,0", "--y", "-1"])
    assert capsys.readouterr().out == short


def test_eval_on_cone_is_singular(capsys):
    code = main(["eval", "--n", "1", "--x", "0.6666666666666666", "--y", "-1", "--quantity", "f_plus"])
    assert code == EXIT_SINGULAR
    assert "singular locus" in capsys.readouterr().err


@pytest.mark.parametrize("argv", [
    ["eval", "--n", "1", "--x", "0", "--y", "-1", "--quantity", "f_star"],
    ["eval", "--n", "2", "--x", "0,0,0", "--y", "-1"],
    ["eval", "--n", "1", "--x", "zero", "--y", "-1"],
    ["eval", "--n", "0", "--x", "0", "--y", "-1"],
    ["grid", "--n", "1", "--x-axis", "0", "1", "1", "--y-axis", "-1", "1", "2"],
    ["verify", "no-such-suite"],
    ["frobnicate"],
])
def test_usage_errors_exit_64(argv, capsys):
    assert main(argv) == EXIT_USAGE


def test_parse_point():
    assert parse_point(3, "2", 0.5) == SpacetimePoint(x=(2.0, 0.0, 0.0), y=0.5)
    with pytest.raises(UsageError):
        parse_point(2, "1,2,3", 0.0)


def test_grid_to_stdout(capsys):
    assert main(GRID_ARGS) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "x,y,discriminant,region,value"
    assert len(lines) == 7
    assert lines[2].endswith(",Cone,")


def test_grid_to_file_is_byte_stable(tmp_path):
    first, second = tmp_path / "a.csv", tmp_path / "b.csv"
    assert main(GRID_ARGS + ["--out", str(first)]) == EXIT_OK
    assert main(GRID_ARGS + ["--out", str(second)]) == EXIT_OK
    assert first.read_bytes() == second.read_bytes()


def test_grid_unwritable_path_exits_73(tmp_path, capsys):
    assert main(GRID_ARGS + ["--out", str(tmp_path / "missing" / "grid.csv")]) == EXIT_IO
    assert "cannot write" in capsys.readouterr().err


def test_verify_writes_reports(tmp_path, capsys):
    out = tmp_path / "reports.jsonl"
    assert main(["verify", "wronskian", "--out", str(out)]) == EXIT_OK
    records = [json.loads(line) for line in out.read_text().splitlines()]
    assert [r["name"] for r in records] == ["wronskian"]
    assert "1/1 checks passed" in capsys.readouterr().out


def test_verify_json_to_stdout_and_table_to_stderr(capsys):
    assert main(["verify", "wronskian", "--out", "-"]) == EXIT_OK
    captured = capsys.readouterr()
    assert json.loads(captured.out.strip())["passed"] is True
    assert "checks passed" in captured.err


def test_verify_failure_exit_code(monkeypatch, capsys):
    from tricomi.schemas.verify import VerificationReport
    from tricomi.services import verify

    monkeypatch.setitem(verify.SUITES, "wronskian",
                        lambda: [VerificationReport.from_values("wronskian", 1.0, 2.0, 1e-3)])
    assert main(["verify", "wronskian"]) == 1
    assert "FAIL" in capsys.readouterr().out


def test_verify_help_explains_pairing_dimensions(capsys):
    assert main(["verify", "--help"]) == EXIT_OK
    help_text = " ".join(capsys.readouterr().out.split())
    assert "n = 1 and n = 2 only" in help_text
    assert "not locally integrable" in help_text
