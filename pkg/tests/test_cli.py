import csv
import io
import json
import subprocess
import sys

import pytest

from sigma_lab.cli import run


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), stdout=out)
    return code, out.getvalue()


def call_json(*argv):
    code, text = call(*argv, "--format", "json")
    return code, json.loads(text)


def test_bindet_json():
    code, rep = call_json("bindet", "--d", "3", "--i", "1")
    assert code == 0
    assert rep["command"] == "bindet" and rep["pass"] is True
    assert rep["det"] == rep["closed_form"] == "16"
    assert rep["normalized"] == "4"
    assert rep["recurrence_match"] is True
    assert set(rep["verdicts"][0]) >= {"claim", "params", "holds", "instances_checked",
                                        "counterexample", "elapsed"}


def test_bindet_index_out_of_range_is_usage_error():
    code, _ = call("bindet", "--d", "3", "--i", "5")
    assert code == 2


def test_subsums_set_and_multiset():
    code, rep = call_json("subsums", "--p", "7", "--set", "1,2")
    assert code == 0
    assert rep["sigma"] == [0, 1, 2, 3] and rep["card_sigma_star"] == 3
    assert rep["asymmetric"] and rep["bound_sigma"] == 4
    code, rep = call_json("subsums", "--p", "7", "--mset", "1^3,6^1")
    assert code == 0
    assert rep["common_multiplicities"] == [4]
    assert not rep["zero_sum_free"]


def test_subsums_symmetric_set_not_applicable():
    code, rep = call_json("subsums", "--p", "7", "--set", "1,6")
    assert code == 0
    assert rep["verdicts"][0]["applicable"] is False


def test_usage_errors():
    assert call("subsums", "--p", "9", "--set", "1")[0] == 2
    assert call("subsums", "--p", "7")[0] == 2
    assert call("subsums", "--p", "7", "--set", "a,b")[0] == 2
    assert call("nonsense")[0] == 2
    assert call("selfridge", "--max-p", "7", "--jobs", "0")[0] == 2


def test_selfridge_csv_and_plot(tmp_path):
    code, text = call("selfridge", "--max-p", "13", "--format", "csv", "--plot-dir", str(tmp_path))
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(text)))
    assert [r["p"] for r in rows] == ["2", "3", "5", "7", "11", "13"]
    assert [r["k_search"] for r in rows] == ["1", "1", "2", "3", "4", "4"]
    assert all(r["match"] == "True" for r in rows)
    assert (tmp_path / "selfridge.png").stat().st_size > 0


def test_acr_text_and_refusal(tmp_path):
    code, text = call("acr", "--max-p", "13", "--plot-dir", str(tmp_path))
    assert code == 0
    assert "PASS acr" in text and text.rstrip().endswith("pass")
    assert (tmp_path / "acr.png").exists()
    code, rep = call_json("acr", "--max-p", "41")
    assert code == 3
    assert rep["refused"]["budget"] < rep["refused"]["required"]


def test_budget_from_environment(monkeypatch):
    monkeypatch.setenv("SIGMA_LAB_BUDGET", "100")
    assert call("acr", "--max-p", "13")[0] == 3
    assert call("acr", "--max-p", "13", "--budget", "1000")[0] == 0


def test_expand_check():
    code, rep = call_json("expand-check", "--d", "2", "--t", "1", "--p", "5")
    assert code == 0 and rep["terms"] == 4


def test_anr_inline_and_file(tmp_path):
    code, rep = call_json("anr", "--p", "7", "--sets", "0,1;0,2,4")
    assert code == 0 and rep["rows"][0]["witness_card"] == 6
    inst = {"instances": [
        {"p": 11, "sets": [[0, 1, 2], [0, 1, 2, 3]], "R": "vandermonde"},
        {"p": 7, "sets": [[1, 2], [3, 4]], "R": {"terms": [[[1, 0], 1], [[0, 1], 6]]}},
    ]}
    path = tmp_path / "anr.json"
    path.write_text(json.dumps(inst))
    code, rep = call_json("anr", "--file", str(path))
    assert code == 0 and len(rep["rows"]) == 2
    assert rep["rows"][0]["coeff"] == 2


def test_liusun_inline_and_file(tmp_path):
    code, rep = call_json("liusun", "--p", "11", "--sets", "1,2,3,10;1,2,3,10,9;1,2,3,10,9,8",
                          "--polys", "0,0,1;0,0,1;0,0,1")
    assert code == 0 and rep["rows"][0]["K"] == 6
    path = tmp_path / "ls.json"
    path.write_text(json.dumps([{"p": 7, "sets": [[1, 2]], "polys": [[0, 2]]}]))
    code, rep = call_json("liusun", "--file", str(path))
    assert code == 0 and rep["rows"][0]["applicable"] is False


def test_verify_all_small(tmp_path):
    code, rep = call_json("verify-all", "--max-p", "11", "--max-d", "4", "--n-random", "20",
                          "--devlp-max-d", "2", "--devlp-max-t", "2", "--seq-max-p", "7",
                          "--max-len", "4", "--struct-max-p", "7", "--trials", "30",
                          "--plot-dir", str(tmp_path))
    assert code == 0 and rep["pass"]
    claims = {v["claim"] for v in rep["verdicts"]}
    assert claims >= {"det_identities", "devlp", "main_theorem", "sequence_theorem",
                      "structural_multiplicity", "selfridge", "acr", "cauchy_davenport",
                      "restricted_sumset", "genesum", "liu_sun"}
    names = sorted(p.name for p in tmp_path.iterdir())
    assert names == ["acr.png", "main_theorem_p11.png", "selfridge.png"]


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "sigma_lab", "bindet", "--d", "2", "--i", "0",
                          "--format", "json"], capture_output=True, text=True)
    assert res.returncode == 0
    assert json.loads(res.stdout)["det"] == "2"
