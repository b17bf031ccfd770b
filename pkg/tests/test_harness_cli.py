from __future__ import annotations

import csv
import io
import json

import pytest

from zagreb_dom import harness
from zagreb_dom.cli import main
from zagreb_dom.errors import CapExceeded, IoError, ParseError
from zagreb_dom.harness import CSV_COLUMNS, RunConfig, compute, extremal_table, render_report, verify
from zagreb_dom.tree import canonical_code, is_isomorphic, parse_edge_list, path_tree


@pytest.fixture
def p4_file(tmp_path):
    path = tmp_path / "p4.txt"
    path.write_text("4\n0 1\n1 2\n2 3\n")
    return path


@pytest.fixture
def star_file(tmp_path):
    path = tmp_path / "k14.txt"
    path.write_text("5\n0 1\n0 2\n0 3\n0 4\n")
    return path


class TestCompute:
    def test_path(self, p4_file):
        assert compute(p4_file) == {"n": 4, "gamma": 2, "m1": "10", "m2": "8", "pi1": "16", "pi2": "16"}

    def test_star(self, star_file):
        assert compute(star_file) == {"n": 5, "gamma": 1, "m1": "20", "m2": "16", "pi1": "16", "pi2": "256"}

    def test_malformed(self, tmp_path):
        bad = tmp_path / "bad.txt"
        bad.write_text("4\n0 1\n2 3\n")
        with pytest.raises(ParseError, match="EdgeCountMismatch"):
            compute(bad)

    def test_missing_file(self, tmp_path):
        with pytest.raises(IoError):
            compute(tmp_path / "nope.txt")


class TestExtremalTable:
    def test_n2(self):
        rows = extremal_table(2)
        assert len(rows) == 1
        assert rows[0]["gamma"] == 1 and rows[0]["max_pi1"] == "1"

    def test_n4(self):
        rows = extremal_table(4)
        assert [(r["gamma"], r["min_pi1"], r["max_pi2"]) for r in rows] == [(1, "9", "27"), (2, "16", "16")]

    def test_n9(self):
        rows = extremal_table(9)
        assert [r["gamma"] for r in rows] == [1, 2, 3, 4]
        assert sum(r["tree_count"] for r in rows) == 47

    def test_csv(self):
        text = extremal_table(5, "csv")
        rows = list(csv.DictReader(io.StringIO(text)))
        assert [r["gamma"] for r in rows] == ["1", "2"]


class TestVerify:
    def test_cells(self):
        report = verify(RunConfig(n_min=6, n_max=9))
        cells = {(c["n"], c["gamma"]): c for c in report["cells"]}
        assert report["summary"]["violations"] == 0
        assert cells[6, 3]["max_pi1"] == "144" and cells[6, 3]["min_pi2"] == "432"
        assert cells[9, 3]["attainers_max_pi1"] == [canonical_code(path_tree(9))]
        assert cells[9, 3]["membership"]["upper_family"] == "D"
        assert cells[6, 3]["membership"]["upper_family"] == "L"
        assert "pi2_lower_variants" in cells[9, 2]

    def test_gamma_filter(self):
        report = verify(RunConfig(n_min=8, n_max=10, gamma=3))
        assert {c["gamma"] for c in report["cells"]} == {3}

    def test_printed_policy_is_weaker_not_violated(self):
        # (7, 2): the printed exponent undershoots the true minimum of pi2
        report = verify(RunConfig(n_min=7, n_max=7, gamma=2, thm43_exponent="printed"))
        (cell,) = report["cells"]
        assert report["summary"]["violations"] == 0
        assert not cell["attained"]["PI2_LOWER"]
        assert int(cell["bounds"]["PI2_LOWER"]) < int(cell["min_pi2"])

    def test_both_policy_flags_printed_variant(self):
        report = verify(RunConfig(n_min=7, n_max=7, gamma=2))
        (cell,) = report["cells"]
        assert cell["pi2_lower_variants"]["consistent"]["equals_min_pi2"]
        assert not cell["pi2_lower_variants"]["printed"]["equals_min_pi2"]
        assert cell["attained"]["PI2_LOWER"] and not cell["attained"]["PI2_LOWER_PRINTED"]

    def test_violations_are_reported(self, monkeypatch):
        monkeypatch.setattr(harness, "_bound_checks", lambda n, g, policy: [("PI1_LOWER", ">=", 10**9)])
        report = verify(RunConfig(n_min=5, n_max=5))
        assert report["summary"]["violations"] == 3
        v = report["cells"][0]["violations"][0]
        assert v["theorem_tag"] == "PI1_LOWER" and v["tree"].startswith("5:")

    @pytest.mark.parametrize(
        "cfg, error",
        [
            (RunConfig(n_min=1, n_max=4), ValueError),
            (RunConfig(n_min=5, n_max=4), ValueError),
            (RunConfig(n_max=40), CapExceeded),
            (RunConfig(n_max=4, jobs=0), ValueError),
        ],
    )
    def test_config_errors(self, cfg, error):
        with pytest.raises(error):
            verify(cfg)

    def test_csv_shape(self):
        report = verify(RunConfig(n_min=4, n_max=6, thm43_exponent="consistent"))
        rows = list(csv.reader(io.StringIO(render_report(report, "csv"))))
        assert rows[0] == CSV_COLUMNS
        assert len(rows) == 1 + report["summary"]["cells"]

    def test_unwritable_out(self, tmp_path):
        with pytest.raises(IoError):
            verify(RunConfig(n_min=4, n_max=4, out=str(tmp_path / "missing" / "r.json")))


class TestCli:
    def test_compute(self, p4_file, capsys):
        assert main(["compute", str(p4_file), "--json"]) == 0
        assert json.loads(capsys.readouterr().out)["pi2"] == "16"

    def test_compute_text(self, star_file, capsys):
        assert main(["compute", str(star_file)]) == 0
        assert "pi2: 256" in capsys.readouterr().out

    def test_parse_error_exit_code(self, tmp_path, capsys):
        bad = tmp_path / "bad.txt"
        bad.write_text("4\n0 1\n2 3\n")
        assert main(["compute", str(bad)]) == 2
        assert "EdgeCountMismatch" in capsys.readouterr().err

    def test_gamma(self, p4_file, capsys):
        assert main(["gamma", str(p4_file)]) == 0
        assert capsys.readouterr().out == "gamma: 2\nwitness: 0 2\n"

    def test_construct(self, capsys):
        assert main(["construct", "D", "9", "3"]) == 0
        t = parse_edge_list(capsys.readouterr().out)
        assert is_isomorphic(t, path_tree(9))

    def test_construct_all(self, capsys):
        assert main(["construct", "D", "18", "5", "--all"]) == 0
        blocks = capsys.readouterr().out.count("18\n")
        assert blocks >= 2

    def test_construct_infeasible(self, capsys):
        assert main(["construct", "L", "9", "3"]) == 2

    def test_enumerate(self, capsys):
        assert main(["enumerate", "7"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert len(lines) == 11 and all(line.startswith("7:") for line in lines)

    def test_enumerate_gamma(self, capsys):
        assert main(["enumerate", "7", "--gamma", "1"]) == 0
        assert capsys.readouterr().out == "7:0,0,0,0,0,0\n"

    def test_verify_ok(self, capsys):
        assert main(["verify", "--n-max", "8", "--format", "csv"]) == 0
        captured = capsys.readouterr()
        assert captured.out.startswith('"n","gamma"')
        assert "0 violations" in captured.err

    def test_verify_violations_exit_code(self, monkeypatch, capsys):
        monkeypatch.setattr(harness, "_bound_checks", lambda n, g, policy: [("PI2_UPPER", "<=", 0)])
        assert main(["verify", "--n-min", "5", "--n-max", "5"]) == 1

    def test_verify_cap(self, capsys):
        assert main(["verify", "--n-max", "99"]) == 2

    def test_verify_out(self, tmp_path, capsys):
        out = tmp_path / "r.json"
        assert main(["verify", "--n-max", "6", "--out", str(out)]) == 0
        assert json.loads(out.read_text())["summary"]["violations"] == 0
        assert capsys.readouterr().out == ""

    def test_extremal(self, capsys):
        assert main(["extremal", "4", "--format", "json"]) == 0
        rows = json.loads(capsys.readouterr().out)
        assert [r["gamma"] for r in rows] == [1, 2]
