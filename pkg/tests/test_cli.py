import json

import pytest

from pertcheb import cli


def run_cli(args, capsys):
    code = cli.main(args)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestTableCommand:
    def test_text_layout_matches_published_rows(self, capsys):
        code, out, _ = run_cli(
            ["table", "--kind", "translation", "--r", "3", "--n-max", "11",
             "--format", "text"], capsys)
        assert code == 0
        rows = out.strip().splitlines()
        assert rows[8].split() == \
            ["7", "-mu/64", "0", "-mu/16", "0", "-mu/4", "0", "-mu", "1"]

    def test_dilatation_csv(self, capsys):
        code, out, _ = run_cli(
            ["table", "--kind", "dilatation", "--r", "3", "--n-max", "10",
             "--format", "csv"], capsys)
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[5].split(",")[1:] == \
            ["0", "0", "(1-lambda)/4", "0", "1"]

    def test_co_recursive_table(self, capsys):
        code, out, _ = run_cli(
            ["table", "--kind", "translation", "--r", "0", "--n-max", "4",
             "--format", "csv"], capsys)
        assert code == 0
        lines = out.strip().splitlines()
        for n in range(1, 5):
            row = lines[n + 1].split(",")[1:]
            assert row[n - 1] == "-mu" and row[n] == "1"
            assert all(c == "0" for c in row[: n - 1])

    def test_json_round_trip(self, capsys):
        code, out, _ = run_cli(
            ["table", "--kind", "dilatation", "--r", "2", "--n-max", "6",
             "--format", "json"], capsys)
        assert code == 0
        from pertcheb import CCTable, cc_closed_dilatation

        again = CCTable.from_json(json.loads(out))
        want = cc_closed_dilatation(2, 6)
        for n in range(7):
            for m in range(n + 1):
                assert again.entry(n, m) == want.entry(n, m)

    def test_recurrence_method_agrees(self, capsys):
        code1, out1, _ = run_cli(
            ["table", "--kind", "translation", "--r", "2", "--n-max", "8",
             "--format", "csv"], capsys)
        code2, out2, _ = run_cli(
            ["table", "--kind", "translation", "--r", "2", "--n-max", "8",
             "--format", "csv", "--method", "recurrence"], capsys)
        assert code1 == code2 == 0
        assert out1 == out2


class TestZerosCommand:
    def test_complex_case_reports_counts_and_note(self, capsys):
        code, out, _ = run_cli(
            ["zeros", "--kind", "dilatation", "--r", "6", "--param", "-1",
             "--n", "18"], capsys)
        assert code == 0
        data = json.loads(out)
        assert len(data["zeros"]["real"]) == 6
        assert len(data["zeros"]["complex"]) == 6
        assert data["gershgorin"] is None
        assert "note" in data

    def test_base_family(self, capsys):
        code, out, _ = run_cli(
            ["zeros", "--base", "second", "--n", "5"], capsys)
        assert code == 0
        data = json.loads(out)
        assert len(data["zeros"]["real"]) == 5
        assert data["origin"]["origin_is_zero"] is True
        assert data["gershgorin"] is not None

    def test_viete_sum_example(self, capsys):
        code, out, _ = run_cli(
            ["zeros", "--kind", "translation", "--r", "2", "--param", "1",
             "--n", "4"], capsys)
        assert code == 0
        assert json.loads(out)["origin"]["sum_of_zeros"] == "1/1"

    def test_zero_report_round_trip(self, capsys):
        from pertcheb import ZeroReport

        code, out, _ = run_cli(
            ["zeros", "--kind", "translation", "--r", "1", "--param", "5/2",
             "--n", "7"], capsys)
        assert code == 0
        report = ZeroReport.from_json(json.loads(out)["zeros"])
        assert report.n_real == 7


class TestIntersectGershgorin:
    def test_intersect_json(self, capsys):
        code, out, _ = run_cli(
            ["intersect", "--kind", "dilatation", "--r", "6", "--n", "18"],
            capsys)
        assert code == 0
        data = json.loads(out)
        assert len(data["points"]) == 11
        assert sum(p["double"] for p in data["points"]) == 5
        assert not any(p["common"] for p in data["points"])

    def test_gershgorin_numeric_failure_exit(self, capsys):
        code, _, err = run_cli(
            ["gershgorin", "--kind", "dilatation", "--r", "2", "--param", "-1",
             "--n", "5"], capsys)
        assert code == 3
        assert "numeric failure" in err

    def test_gershgorin_round_trip(self, capsys):
        from pertcheb import GershgorinRegion

        code, out, _ = run_cli(
            ["gershgorin", "--kind", "dilatation", "--r", "1", "--param", "2",
             "--n", "5"], capsys)
        assert code == 0
        region = GershgorinRegion.from_json(json.loads(out))
        assert len(region.intervals) == 1


class TestPlotCommand:
    def test_csv_columns_and_determinism(self, capsys):
        args = ["plot", "--kind", "translation", "--r", "5", "--params",
                "-5..-1,1..5", "--n", "17", "--samples", "41"]
        code1, out1, _ = run_cli(args, capsys)
        code2, out2, _ = run_cli(args, capsys)
        assert code1 == code2 == 0
        assert out1 == out2
        header = out1.splitlines()[0].split(",")
        assert header[0] == "x" and header[-1] == "base"
        assert header[1:6] == ["mu=-5", "mu=-4", "mu=-3", "mu=-2", "mu=-1"]
        assert len(out1.splitlines()) == 42

    def test_constant_base_column(self, capsys):
        code, out, _ = run_cli(
            ["plot", "--base", "second", "--n", "0", "--samples", "5"], capsys)
        assert code == 0
        for line in out.splitlines()[1:]:
            assert line.split(",")[1] == "1"

    def test_svg_deterministic(self, capsys):
        args = ["plot", "--kind", "dilatation", "--r", "1", "--params", "3..7",
                "--n", "6", "--format", "svg", "--samples", "101"]
        code1, svg1, _ = run_cli(args, capsys)
        code2, svg2, _ = run_cli(args, capsys)
        assert code1 == code2 == 0
        assert svg1 == svg2
        assert svg1.startswith("<svg ")
        assert svg1.count("<polyline") == 6

    def test_png_companion(self, tmp_path, capsys):
        out_file = tmp_path / "curves.csv"
        code, _, _ = run_cli(
            ["plot", "--kind", "translation", "--r", "1", "--params", "1,2",
             "--n", "6", "--samples", "25", "--out", str(out_file)], capsys)
        assert code == 0
        assert out_file.exists()
        png = out_file.with_suffix(".png")
        assert png.exists() and png.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"

    def test_no_figure_flag(self, tmp_path, capsys):
        out_file = tmp_path / "plain.csv"
        code, _, _ = run_cli(
            ["plot", "--base", "second", "--n", "4", "--samples", "9",
             "--out", str(out_file), "--no-figure"], capsys)
        assert code == 0
        assert out_file.exists()
        assert not out_file.with_suffix(".png").exists()

    def test_bad_range_exit(self, capsys):
        code, _, err = run_cli(
            ["plot", "--base", "second", "--n", "3", "--xmin", "2",
             "--xmax", "-2"], capsys)
        assert code == 2
        assert "error" in err


class TestVerifyCommand:
    def test_single_suite(self, capsys):
        code, out, _ = run_cli(
            ["verify", "--suite", "linearization", "--r-max", "4",
             "--n-max", "10"], capsys)
        assert code == 0
        assert "linearization" in out
        assert out.strip().endswith("ALL PASS")

    def test_deterministic_output(self, capsys):
        args = ["verify", "--suite", "tables"]
        code1, out1, _ = run_cli(args, capsys)
        code2, out2, _ = run_cli(args, capsys)
        assert code1 == code2 == 0 and out1 == out2


class TestUsageErrors:
    def test_unknown_flag(self, capsys):
        with pytest.raises(SystemExit) as info:
            cli.main(["table", "--kind", "translation", "--r", "1",
                      "--n-max", "3", "--bogus"])
        assert info.value.code == 2
        assert "usage" in capsys.readouterr().err

    def test_unknown_command(self, capsys):
        with pytest.raises(SystemExit) as info:
            cli.main(["frobnicate"])
        assert info.value.code == 2

    def test_missing_family_flags(self, capsys):
        code, _, err = run_cli(["zeros", "--n", "4"], capsys)
        assert code == 2 and "error" in err


class TestParamParsing:
    def test_ranges_and_rationals(self):
        from fractions import Fraction as F

        assert cli.parse_param_list("-5..-1,1..5") == [
            F(v) for v in (-5, -4, -3, -2, -1, 1, 2, 3, 4, 5)
        ]
        assert cli.parse_param_list("1/2,-3/4,2") == [F(1, 2), F(-3, 4), F(2)]

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            cli.parse_param_list(" , ")
