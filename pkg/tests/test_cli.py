import json
import math

import pandas as pd
import pytest

from api.cli import main
from analysis.trees.tree_families import TreeFamilies
from data.edge_list_adapter import EdgeListAdapter
from utils.data_printer import format_float


@pytest.fixture
def k3_file(tmp_path):
    path = tmp_path / "k3.txt"
    path.write_text("3 3\n0 1\n1 2\n0 2\n")
    return path


def run_failing(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2
    return capsys.readouterr().err




def test_rho_of_edge_list(k3_file, capsys):
    assert main(["rho", str(k3_file)]) == 0
    out = capsys.readouterr().out
    assert "4.00000000000" in out
    assert "power" in out


def test_rho_of_family_with_oracle(capsys):
    assert main(["rho", "--family", "Path:n=4", "--oracle"]) == 0
    out = capsys.readouterr().out
    assert format_float(7 + math.sqrt(13)) in out
    assert "spectrum" in out


def test_family(capsys):
    assert main(["family", "T:n=6,t1=2,t2=2"]) == 0
    out = capsys.readouterr().out
    assert "T:n=6,t1=2,t2=2" in out
    assert "non_starlike" in out
    assert out.endswith("6 5\n0 1\n0 2\n0 3\n1 4\n1 5\n")


def test_enumerate_non_caterpillar(tmp_path, capsys):
    assert main(["enumerate", "--order", "7", "--filter", "non-caterpillar"]) == 0
    out = capsys.readouterr().out
    assert "1 trees of order 7 in T(n)" in out

    fixture = tmp_path / "trees.tsv"
    assert main(["enumerate", "--order", "6", "--out", str(fixture)]) == 0
    assert len(list(EdgeListAdapter.read_fixture(fixture))) == 6


def test_enumerate_prufer_check(capsys):
    assert main(["enumerate", "--order", "6", "--filter", "non-starlike", "--prufer-check"]) == 0
    out = capsys.readouterr().out
    assert "1 trees of order 6 in R(n)" in out
    assert "Prüfer oracle: 6 trees of order 6, enumerated 6" in out




def test_verify_then_report(tmp_path, capsys):
    report_path = tmp_path / "report.json"
    csv_path = tmp_path / "summary.csv"
    code = main(["verify", "--claim", "2.5", "--n-min", "7", "--n-max", "8",
                 "--json", str(report_path), "--csv", str(csv_path)])
    assert code == 0
    out = capsys.readouterr().out
    assert "overall: verified" in out

    payload = json.loads(report_path.read_text())
    assert payload["claim"] == "2.5"
    assert payload["status"] == "verified"
    assert [o["n"] for o in payload["outcomes"]] == [7, 8]

    summary = pd.read_csv(csv_path)
    assert list(summary["n"]) == [7, 8]
    assert set(summary["status"]) == {"verified"}

    assert main(["report", str(report_path)]) == 0
    assert "claim 2.5, n=7..8: verified" in capsys.readouterr().out


def test_verify_all_clipped(tmp_path, capsys):
    report_path = tmp_path / "all.json"
    assert main(["verify", "--claim", "all", "--n-min", "4", "--n-max", "5",
                 "--json", str(report_path)]) == 0
    payload = json.loads(report_path.read_text())
    assert payload["claim"] == "all"
    assert {r["claim"] for r in payload["reports"]} == {"2.1", "2.3", "3.1", "3.2"}

    assert main(["report", str(report_path)]) == 0
    assert "overall: verified" in capsys.readouterr().out




def test_counterexample_exits_one_and_replays(tmp_path, capsys, monkeypatch):
    # name the maximiser as the expected minimiser
    monkeypatch.setattr(TreeFamilies, "make_B",
                        staticmethod(lambda n, n0, parts: TreeFamilies.make_S(n, [2, 2, n - 5])))
    report_path = tmp_path / "report.json"
    code = main(["verify", "--claim", "2.5", "--n-min", "8", "--n-max", "8", "--json", str(report_path)])
    assert code == 1
    out = capsys.readouterr().out
    assert "counterexample at n=8:" in out
    assert "overall: counterexample" in out

    outcome = json.loads(report_path.read_text())["outcomes"][0]
    witness = tmp_path / "witness.txt"
    witness.write_text(outcome["details"]["edge_list"])
    assert main(["rho", str(witness)]) == 0
    assert format_float(outcome["rho_extremal"]) in capsys.readouterr().out

    assert main(["report", str(report_path)]) == 1


def test_tie_exits_three(tmp_path, capsys):
    config = tmp_path / "loose.json"
    config.write_text(json.dumps({"tie_tolerance": 1.0}))
    assert main(["verify", "--claim", "2.5", "--n-min", "8", "--n-max", "8", "--config", str(config)]) == 3
    assert "overall: tied" in capsys.readouterr().out




@pytest.mark.parametrize("argv, kind", [
    (["rho"], "ConfigError"),
    (["verify", "--claim", "2.5", "--n-min", "5"], "VerificationRangeError"),
    (["family", "B:n=9,n0=0,parts=1,1,1"], "FamilyConstraintError"),
    (["enumerate", "--order", "20"], "EnumerationCapError"),
    (["enumerate", "--order", "5", "--filter", "caterpillar"], "ConfigError"),
    (["frobnicate"], "UsageError"),
    (["verify", "--claim", "4.2"], "UsageError"),
])
def test_errors_exit_with_usage_code(argv, kind, capsys):
    err = run_failing(argv, capsys)
    assert err.startswith(f"spectra-graft: error[{kind}]:")


def test_bad_edge_list_reports_line(tmp_path, capsys):
    path = tmp_path / "bad.txt"
    path.write_text("3 2\n0 1\n1 1\n")
    err = run_failing(["rho", str(path)], capsys)
    assert "error[GraphFormatError]" in err
    assert "line 3" in err


def test_report_rejects_other_json(tmp_path, capsys):
    path = tmp_path / "other.json"
    path.write_text(json.dumps({"hello": "world"}))
    err = run_failing(["report", str(path)], capsys)
    assert "error[ConfigError]" in err


def test_undecodable_edge_list(tmp_path, capsys):
    path = tmp_path / "binary.txt"
    path.write_bytes(b"2 1\n0 \xff1\n")
    err = run_failing(["rho", str(path)], capsys)
    assert err.startswith("spectra-graft: error[GraphFormatError]:")
    assert "Traceback" not in err


def test_undecodable_report_and_config(tmp_path, capsys):
    path = tmp_path / "binary.json"
    path.write_bytes(b'{"claim": "\xff"}')
    assert "error[ConfigError]" in run_failing(["report", str(path)], capsys)
    assert "error[ConfigError]" in run_failing(["rho", "--family", "Path:n=4", "--config", str(path)], capsys)
