import pytest

from fastbin.cli import main


@pytest.fixture
def worked_files(tmp_path):
    boundaries = tmp_path / "boundaries.txt"
    boundaries.write_text("2 11 19 20 21 27 29 30\n")
    values = tmp_path / "values.txt"
    values.write_text("25 13 10.5 19.5\n")
    return boundaries, values


class TestBin:
    def test_worked_example(self, worked_files, capsys):
        boundaries, values = worked_files
        assert main(["bin", str(boundaries), str(values)]) == 0
        assert capsys.readouterr().out == "5\n2\n1\n3\n"

    def test_methods_agree_byte_for_byte(self, worked_files, capsys):
        boundaries, values = worked_files
        outputs = set()
        for method in ("proposed", "binary", "linear"):
            assert main(["bin", str(boundaries), str(values), "--method", method]) == 0
            outputs.add(capsys.readouterr().out)
        assert len(outputs) == 1

    def test_extra_cells_same_output(self, worked_files, capsys):
        boundaries, values = worked_files
        assert main(["bin", str(boundaries), str(values), "--extra-cells", "8"]) == 0
        assert capsys.readouterr().out == "5\n2\n1\n3\n"

    def test_out_file(self, worked_files, tmp_path):
        boundaries, values = worked_files
        out = tmp_path / "out.txt"
        assert main(["bin", str(boundaries), str(values), "--out", str(out)]) == 0
        assert out.read_text() == "5\n2\n1\n3\n"

    def test_empty_values(self, tmp_path, capsys):
        boundaries = tmp_path / "b.txt"
        boundaries.write_text("0 1\n")
        values = tmp_path / "v.txt"
        values.write_text("")
        assert main(["bin", str(boundaries), str(values)]) == 0
        assert capsys.readouterr().out == ""

    def test_comments_and_layout_tolerated(self, tmp_path, capsys):
        boundaries = tmp_path / "b.txt"
        boundaries.write_text("# header\n2 11 19\n20 21  # inline\n27\n29 30\n")
        values = tmp_path / "v.txt"
        values.write_text("25\n13\n")
        assert main(["bin", str(boundaries), str(values)]) == 0
        assert capsys.readouterr().out == "5\n2\n"

    def test_invalid_boundaries_exit_1(self, tmp_path, capsys):
        boundaries = tmp_path / "b.txt"
        boundaries.write_text("1 1 2\n")
        values = tmp_path / "v.txt"
        values.write_text("1.5\n")
        assert main(["bin", str(boundaries), str(values)]) == 1
        assert "strictly increasing" in capsys.readouterr().err

    def test_parse_error_reports_line(self, tmp_path, capsys):
        boundaries = tmp_path / "b.txt"
        boundaries.write_text("0 1\n")
        values = tmp_path / "v.txt"
        values.write_text("1.0\nabc\n")
        assert main(["bin", str(boundaries), str(values)]) == 1
        assert ":2:" in capsys.readouterr().err

    def test_non_finite_value_exit_1(self, tmp_path, capsys):
        boundaries = tmp_path / "b.txt"
        boundaries.write_text("0 1\n")
        values = tmp_path / "v.txt"
        values.write_text("nan\n")
        assert main(["bin", str(boundaries), str(values)]) == 1

    def test_missing_file_exit_1(self, tmp_path):
        values = tmp_path / "v.txt"
        values.write_text("1\n")
        assert main(["bin", str(tmp_path / "nope.txt"), str(values)]) == 1


class TestBench:
    def test_bench1_smoke(self, capsys):
        code = main(["bench1", "--m", "4,8", "--n", "10000", "--runs", "3", "--seed", "1"])
        assert code == 0
        out = capsys.readouterr().out
        lines = [l for l in out.strip().split("\n")]
        assert lines[0].startswith("m,k,n,distribution,method,")
        assert len(lines) == 1 + 4  # two methods per m
        assert {l.split(",")[4] for l in lines[1:]} == {"proposed", "binary"}

    def test_bench1_runs_guard(self, capsys):
        assert main(["bench1", "--m", "4", "--n", "10000", "--runs", "1"]) == 1

    def test_bench2_k_range(self, capsys, tmp_path):
        out = tmp_path / "r.csv"
        code = main(["bench2", "--m", "10", "--k", "0..3", "--n", "10000",
                     "--runs", "3", "--out", str(out)])
        assert code == 0
        lines = out.read_text().strip().split("\n")
        ks = [l.split(",")[1] for l in lines[1:] if l.split(",")[4] == "proposed"]
        assert ks == ["0", "1", "2", "3"]

    def test_unknown_flag_rejected(self):
        with pytest.raises(SystemExit) as exc:
            main(["bench1", "--frobnicate"])
        assert exc.value.code == 1


class TestAnalyze:
    def test_small_grid(self, capsys):
        assert main(["analyze", "--m1", "3", "--m2", "3"]) == 0
        out = capsys.readouterr().out
        assert "C=10" in out
        assert "P_0=0.4" in out
        assert "P_1=0.3" in out
        assert "P_2=0.2" in out
        assert "P=0.1" in out
        assert "mu_gt2=3" in out

    def test_doubled_grid(self, capsys):
        assert main(["analyze", "--m1", "512", "--m2", "1024"]) == 0
        out = dict(line.split("=", 1) for line in capsys.readouterr().out.strip().split("\n"))
        assert 3.4 < float(out["mu_gt2"]) < 3.6
        assert float(out["speedup"]) > 5.0

    def test_degenerate_exit_1(self, capsys):
        assert main(["analyze", "--m1", "3", "--m2", "1"]) == 1

    def test_csv_table(self, tmp_path):
        table = tmp_path / "p.csv"
        assert main(["analyze", "--m1", "5", "--m2", "5", "--csv", str(table)]) == 0
        lines = table.read_text().strip().split("\n")
        assert lines[0] == "j,p_j"
        assert len(lines) == 7

    def test_huge_model_prints_approximate_count(self, capsys):
        assert main(["analyze", "--m1", "1000", "--m2", "1000"]) == 0
        out = capsys.readouterr().out
        assert "C=" in out and "e+" in out


class TestSelftest:
    def test_passes(self, capsys):
        assert main(["selftest"]) == 0
        out = capsys.readouterr().out
        assert "all checks passed" in out
        assert "FAIL" not in out
