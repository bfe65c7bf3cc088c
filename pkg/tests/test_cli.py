import json

import pytest

from sqenergy.cli import main

C3_EDGELIST = "0 1\n1 2\n2 0\n"
PAW_EDGELIST = "n 4\n0 1\n1 2\n2 0\n2 3\n"
# C4 in graph6: n=4, edges 01,12,23,30
C4_GRAPH6 = "Cl"
TREE_EDGELIST = "0 1\n1 2\n2 3\n"


@pytest.fixture
def c3_file(tmp_path):
    p = tmp_path / "c3.txt"
    p.write_text(C3_EDGELIST)
    return str(p)


class TestAnalyze:
    def test_table_output(self, c3_file, capsys):
        assert main(["analyze", "--in", c3_file]) == 0
        out = capsys.readouterr().out
        assert "n=3  k=3" in out
        assert "s+   = 4.000000" in out
        assert "verdict: CASE_3MOD4_OK" in out

    def test_json_output(self, c3_file, capsys):
        assert main(["analyze", "--in", c3_file, "--output", "json"]) == 0
        d = json.loads(capsys.readouterr().out)
        assert d["verdict"] == "CASE_3MOD4_OK"
        assert d["s_minus"] == pytest.approx(2.0, abs=1e-9)

    def test_csv_output(self, c3_file, capsys):
        assert main(["analyze", "--in", c3_file, "--output", "csv"]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert len(lines) == 2 and lines[0].startswith("graph_id,")

    def test_stdin(self, capsys, monkeypatch):
        import io
        import sys
        monkeypatch.setattr(sys, "stdin", io.StringIO(PAW_EDGELIST))
        assert main(["analyze", "--in", "-", "--output", "json"]) == 0
        assert json.loads(capsys.readouterr().out)["n"] == 4

    def test_graph6_input(self, tmp_path, capsys):
        p = tmp_path / "c4.g6"
        p.write_text(C4_GRAPH6 + "\n")
        assert main(["analyze", "--in", str(p), "--format", "graph6",
                     "--output", "json"]) == 0
        d = json.loads(capsys.readouterr().out)
        assert d["n"] == 4 and d["k"] == 4
        assert d["verdict"] == "CASE_EVEN_OK"

    def test_out_file(self, c3_file, tmp_path, capsys):
        dest = tmp_path / "report.json"
        assert main(["analyze", "--in", c3_file, "--output", "json",
                     "--out", str(dest)]) == 0
        assert capsys.readouterr().out == ""
        assert json.loads(dest.read_text())["k"] == 3

    def test_tree_input_exit_2(self, tmp_path, capsys):
        p = tmp_path / "tree.txt"
        p.write_text(TREE_EDGELIST)
        assert main(["analyze", "--in", str(p)]) == 2
        assert "WrongEdgeCount" in capsys.readouterr().err

    def test_garbage_input_exit_2(self, tmp_path, capsys):
        p = tmp_path / "bad.txt"
        p.write_text("0 1\none two\n")
        assert main(["analyze", "--in", str(p)]) == 2
        assert "MalformedLine" in capsys.readouterr().err

    def test_missing_file_exit_2(self, tmp_path, capsys):
        assert main(["analyze", "--in", str(tmp_path / "nope.txt")]) == 2


class TestCampaignCommands:
    def test_cycles_table(self, capsys):
        assert main(["cycles", "--k-max", "9"]) == 0
        out = capsys.readouterr().out
        assert "graphs tested      : 7" in out
        assert "violations         : 0" in out

    def test_cycles_json_stream(self, capsys):
        assert main(["cycles", "--k-max", "5", "--output", "json"]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        # three reports then the summary
        assert len(lines) == 4
        assert json.loads(lines[0])["k"] == 3
        assert json.loads(lines[-1])["graphs_tested"] == 3

    def test_exhaustive_csv(self, capsys):
        assert main(["exhaustive", "--n-max", "4", "--output", "csv",
                     "--workers", "1"]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert len(lines) == 1 + 16

    def test_random_fixed_k(self, capsys):
        assert main(["random", "--n-min", "6", "--n-max", "10", "--k", "3",
                     "--trials", "5", "--seed", "1", "--workers", "1",
                     "--output", "json"]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert all(json.loads(x)["k"] == 3 for x in lines[:-1])

    def test_random_bad_policy_exit_2(self, capsys):
        assert main(["random", "--k", "sideways", "--trials", "1",
                     "--workers", "1"]) == 2

    def test_exhaustive_too_large_exit_2(self, capsys):
        assert main(["exhaustive", "--n-max", "40"]) == 2


class TestUsageErrors:
    def test_no_command(self):
        with pytest.raises(SystemExit) as exc:
            main([])
        assert exc.value.code == 2

    def test_bad_flag(self):
        with pytest.raises(SystemExit) as exc:
            main(["analyze", "--nope"])
        assert exc.value.code == 2


class TestSelftest:
    def test_passes(self, capsys):
        assert main(["selftest"]) == 0
        out = capsys.readouterr().out
        assert "FAIL" not in out
        assert out.count("PASS") >= 5
