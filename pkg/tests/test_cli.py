"""Tests for the command line interface."""

import csv
import io
import json

import pytest

import ltlfuc.cli as cli
from ltlfuc.activation import SAT, UNSAT, UcResult


@pytest.fixture
def suite_dir(tmp_path):
    (tmp_path / "easy_sat.ltlf").write_text("(F a) & (G (a -> N a))\n")
    (tmp_path / "easy_unsat.ltlf").write_text("(G a) & (F (! a))\n")
    (tmp_path / "families.tsv").write_text(
        "easy_sat\tdemo\neasy_unsat\tdemo\n")
    return tmp_path


def test_check_exit_codes(suite_dir):
    assert cli.main(["check", str(suite_dir / "easy_sat.ltlf")]) == 0
    assert cli.main(["check", str(suite_dir / "easy_unsat.ltlf")]) == 10
    for algo in ("bdd", "bmc", "native", "trp"):
        code = cli.main(["check", str(suite_dir / "easy_unsat.ltlf"),
                         "--algo", algo])
        assert code == 10, algo


def test_check_unknown_exit_code(suite_dir):
    code = cli.main(["check", str(suite_dir / "easy_unsat.ltlf"),
                     "--algo", "bmc", "--k-max", "0"])
    assert code == 20


def test_check_prints_core(suite_dir, capsys):
    cli.main(["check", str(suite_dir / "easy_unsat.ltlf")])
    out = capsys.readouterr().out
    assert "UNSAT" in out
    assert "core: c1 c2" in out


def test_check_json_format(suite_dir, capsys):
    cli.main(["check", str(suite_dir / "easy_unsat.ltlf"),
              "--format", "json"])
    data = json.loads(capsys.readouterr().out)
    assert data["status"] == "UNSAT"
    assert data["core"] == ["c1", "c2"]
    assert data["problem"] == "easy_unsat"


def test_check_parse_error_exit_code(tmp_path, capsys):
    bad = tmp_path / "bad.ltlf"
    bad.write_text("a &&& b\n")
    assert cli.main(["check", str(bad)]) == 2
    assert cli.main(["check", str(tmp_path / "missing.ltlf")]) == 2


def test_oracle_command(suite_dir, capsys):
    assert cli.main(["oracle", str(suite_dir / "easy_sat.ltlf")]) == 0
    assert "SAT" in capsys.readouterr().out
    assert cli.main(["oracle", str(suite_dir / "easy_unsat.ltlf"),
                     "--cores"]) == 10
    assert "minimal core: c1 c2" in capsys.readouterr().out


def test_bench_csv_schema(suite_dir, capsys):
    out_path = suite_dir / "results.csv"
    code = cli.main(["bench", "--dir", str(suite_dir),
                     "--algos", "bdd,bmc,native", "--out", str(out_path)])
    assert code == 0
    with open(out_path, newline="") as fh:
        rows = list(csv.DictReader(fh))
    assert rows, "no rows written"
    assert list(rows[0].keys()) == cli.CSV_COLUMNS
    by_problem = {}
    for row in rows:
        assert row["status"] in ("SAT", "UNSAT", "UNKNOWN",
                                 "REDUCED_TO_FALSE")
        float(row["elapsed"])  # parses as a number
        by_problem.setdefault(row["problem"], []).append(row)
    for problem, prows in by_problem.items():
        algos = [r["algorithm"] for r in prows]
        assert algos.count("virtual_best") == 1
        vb = next(r for r in prows if r["algorithm"] == "virtual_best")
        others = [r for r in prows if r["algorithm"] != "virtual_best"]
        decided = [r for r in others if r["status"] != "UNKNOWN"]
        assert float(vb["elapsed"]) <= min(float(r["elapsed"])
                                           for r in decided)
        assert vb["status"] in {r["status"] for r in decided}
        # unsat rows carry a core size
        for r in others:
            if r["status"] == "UNSAT":
                assert int(r["core_size"]) >= 1


def test_bench_without_out_writes_stdout(suite_dir, capsys):
    assert cli.main(["bench", "--dir", str(suite_dir),
                     "--algos", "native"]) == 0
    out = capsys.readouterr().out
    assert ",".join(cli.CSV_COLUMNS) in out


def test_bench_rejects_unknown_algorithm(suite_dir):
    assert cli.main(["bench", "--dir", str(suite_dir),
                     "--algos", "quantum"]) == 2


def test_bundled_suite_is_loadable():
    problems = list(cli._suite_problems(
        type("Args", (), {"dir": None})()))
    assert len(problems) == 30
    names = [n for n, _, _ in problems]
    assert len(set(names)) == 30
    families = {fam for _, _, fam in problems}
    assert len(families) >= 3


def test_crosscheck_clean(suite_dir, capsys):
    code = cli.main(["crosscheck", "--dir", str(suite_dir),
                     "--algos", "bdd,native"])
    assert code == 0
    assert "0 mismatches" in capsys.readouterr().out


def test_crosscheck_catches_wrong_status(suite_dir, capsys, monkeypatch):
    def lying(spec, algo, args):
        return UcResult(SAT, algo, elapsed=0.0)

    monkeypatch.setattr(cli, "run_algorithm", lying)
    code = cli.main(["crosscheck", "--dir", str(suite_dir),
                     "--algos", "bdd"])
    assert code == 1
    assert "MISMATCH" in capsys.readouterr().out


def test_crosscheck_catches_bogus_core(suite_dir, capsys, monkeypatch):
    def bad_core(spec, algo, args):
        if spec.name == "easy_unsat":
            # correct verdict, but the blamed subset is satisfiable
            return UcResult(UNSAT, algo, core=["c2"], elapsed=0.0)
        return UcResult(SAT, algo, elapsed=0.0)

    monkeypatch.setattr(cli, "run_algorithm", bad_core)
    code = cli.main(["crosscheck", "--dir", str(suite_dir),
                     "--algos", "bdd"])
    assert code == 1
