"""Command-line behaviour: schemas, formats, exit codes, round-tripping."""

import json

import pytest

from cosetforge import cli


def run_cli(capsys, *argv):
    rc = cli.main(list(argv))
    out = capsys.readouterr()
    return rc, out.out, out.err


def test_cosets_top(capsys):
    rc, out, _ = run_cli(capsys, "cosets", "--q", "2", "--n", "21", "--top", "3")
    assert rc == 0
    assert json.loads(out)["top"] == [9, 7, 5]


def test_cosets_single_coset_and_elision(capsys):
    rc, out, _ = run_cli(capsys, "cosets", "--q", "2", "--n", "21", "--coset", "5")
    doc = json.loads(out)
    assert rc == 0 and doc["leader"] == 5 and doc["elements"] == [5, 10, 13, 17, 19, 20]
    rc, out, _ = run_cli(capsys, "cosets", "--q", "2", "--n", "21", "--coset", "5", "--max-elements", "3")
    assert "elements" not in json.loads(out)


def test_cosets_family_length(capsys):
    rc, out, _ = run_cli(capsys, "cosets", "--q", "3", "--m", "4", "--family", "minus", "--top", "1")
    assert json.loads(out) == {"n": 40, "q": 3, "top": [25]}


def test_code_report(capsys):
    rc, out, _ = run_cli(capsys, "code", "--q", "3", "--m", "4", "--family", "plus", "--delta", "11", "--true-distance")
    doc = json.loads(out)
    assert rc == 0
    assert doc["n"] == 20 and doc["dim"] == 5
    assert doc["distance"]["d"] == 11 and doc["distance"]["d"] >= doc["distance"]["bounds"]["designed"]


def test_dual_report(capsys):
    rc, out, _ = run_cli(capsys, "dual", "--q", "3", "--m", "4", "--family", "plus", "--delta", "2", "--true-distance")
    doc = json.loads(out)
    assert doc["bounds"]["closed_form"] == 11
    assert doc["bounds"]["bch_run"] == 12
    assert doc["distance"]["d"] == 12
    assert doc["dual"]["dim"] == 4


def test_dually_bch_sweep(capsys):
    rc, out, _ = run_cli(capsys, "dually-bch", "--q", "3", "--m", "4", "--family", "plus", "--sweep")
    doc = json.loads(out)
    assert doc["true_intervals"] == [[2, 2], [11, 20]]
    verdicts = {e["delta"]: e["verdict"] for e in doc["sweep"]}
    assert verdicts[2] and not verdicts[3] and verdicts[11]


def test_dually_bch_single(capsys):
    rc, out, _ = run_cli(capsys, "dually-bch", "--q", "2", "--m", "6", "--family", "plus", "--delta", "10")
    doc = json.loads(out)
    assert doc["verdict"] is True and doc["witness"] == {"b": 0, "delta": 2}


def test_verify_single_claim(capsys):
    rc, out, _ = run_cli(capsys, "verify", "--claim", "CLM-D1P", "--grid", "q=2|3,m=4|6")
    assert rc == 0
    doc = json.loads(out)
    assert doc["summary"]["fail"] == 0 and doc["summary"]["pass"] == 4


def test_verify_json_round_trip(capsys):
    rc, out, _ = run_cli(capsys, "verify", "--claim", "CLM-SZP", "--grid", "q=3,m=4")
    assert json.dumps(json.loads(out), indent=2, sort_keys=True) + "\n" == out


def test_claims_listing(capsys):
    rc, out, _ = run_cli(capsys, "claims")
    doc = json.loads(out)
    assert rc == 0 and len(doc["claims"]) == 17
    assert {c["id"] for c in doc["claims"]} >= {"CLM-D1P", "CLM-T5", "CLM-QM1"}


def test_formats_carry_same_numbers(capsys):
    rc, js, _ = run_cli(capsys, "cosets", "--q", "2", "--n", "21", "--top", "3")
    rc, csv_text, _ = run_cli(capsys, "cosets", "--q", "2", "--n", "21", "--top", "3", "--format", "csv")
    rc, table, _ = run_cli(capsys, "cosets", "--q", "2", "--n", "21", "--top", "3", "--format", "table")
    assert json.loads(js)["top"] == [9, 7, 5]
    assert "[9,7,5]" in csv_text.replace('"', "")
    assert "[9,7,5]" in table


def test_domain_error_exit_code(capsys):
    rc, out, err = run_cli(capsys, "code", "--q", "6", "--m", "4", "--family", "plus", "--delta", "3")
    assert rc == 1 and "prime power" in err and not out


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["cosets", "--q", "2", "--n", "21", "--top", "notanint"])
    assert exc.value.code == 2


def test_failing_points_exit_code(capsys, monkeypatch):
    # force a failing point to check the exit-code mapping
    from cosetforge import verify as v

    real = v.verify_claim

    def rigged(claim_id, grid=None, budget=None):
        rep = real(claim_id, grid=grid, budget=budget)
        rep.points[0]["status"] = "fail"
        rep.summary["fail"] += 1
        rep.summary["pass"] -= 1
        return rep

    monkeypatch.setattr(cli.verify, "verify_claim", rigged)
    rc, out, _ = run_cli(capsys, "verify", "--claim", "CLM-D1P", "--grid", "q=3,m=4")
    assert rc == 3


def test_out_file(tmp_path, capsys):
    path = tmp_path / "report.json"
    rc, out, _ = run_cli(capsys, "cosets", "--q", "2", "--n", "21", "--top", "1", "--out", str(path))
    assert rc == 0 and out == ""
    assert json.loads(path.read_text())["top"] == [9]


def test_verify_all_small_grid(capsys):
    rc, out, _ = run_cli(capsys, "verify", "--all", "--grid", "q=3,m=4", "--threads", "2")
    doc = json.loads(out)
    assert rc == 0 and doc["ok"] is True
    assert len(doc["claims"]) == 17
