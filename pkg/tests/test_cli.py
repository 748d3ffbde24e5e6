import json
import subprocess
import sys

import pytest

from flagvgit.cli import EXIT_CAP, EXIT_OK, EXIT_VALIDATION, load_embedding, run


def js(argv):
    code, out = run(argv + ["--format", "json"])
    assert code == EXIT_OK, out
    return json.loads(out)


def test_ample_json():
    d = js(["ample", "--embedding", "diag:A1:4", "--lambda", "1,1,1,1"])
    assert d["ample"] is True and d["codim_unstable"] == 2
    assert d["oracle"]["member"] is True


def test_ample_text():
    code, out = run(["ample", "--embedding", "diag:A1:2", "--lambda", "2,1"])
    assert code == EXIT_OK and out.startswith("ample: false")


def test_cones_verdict():
    d = js(["cones", "--embedding", "diag:A1:4", "--k", "2", "--seed", "0"])
    assert d["cones"]["2"]["dim"] == 1 and d["movable_chambers"] is False
    d = js(["cones", "--embedding", "principal:A2", "--seed", "0"])
    assert d["C2_zero"] is True


def test_chambers_and_t_chambers():
    d = js(["chambers", "--embedding", "diag:A1:3", "--seed", "0"])
    assert len(d["chambers"]) == 4 and d["no_jump"]["ok"]
    d = js(["t-chambers", "--embedding", "diag:A1:3"])
    assert sorted(c["t_codim"] for c in d["chambers"]) == [1, 1, 1, 2]


def test_strata_and_fit_pairs():
    d = js(["strata", "--embedding", "principal:A2", "--lambda", "1,1", "--seed", "3"])
    assert d["codim_unstable"] == 1 and d["seed"] == 3
    assert sorted(r["w"] for r in d["strata"] if r["component"]) == [[0], [1]]
    d = js(["fit-pairs", "--embedding", "diag:A1:3", "--seed", "0"])
    # fit exactly when the expected dimension does not exceed dim X = 3
    assert [p["fit"] for p in d["pairs"]] == [p["expected_dim"] <= 3 for p in d["pairs"]]


def test_oracle_command():
    d = js(["oracle", "--embedding", "diag:A1:3", "--lambda", "1,1,1", "--jmax", "3"])
    assert d["invariant_dims"] == {"1": 0, "2": 1, "3": 0}


def test_inline_json_embedding():
    spec = json.dumps({"kind": "principal", "g": {"series": "A", "rank": 2}})
    d = js(["ample", "--embedding", spec, "--lambda", "1,1"])
    assert d["embedding"]["kind"] == "principal"


def test_file_embedding(tmp_path):
    p = tmp_path / "e.json"
    p.write_text(json.dumps({"kind": "diagonal", "factor": {"series": "A", "rank": 1}, "copies": 2}))
    assert load_embedding(str(p)).g.rank == 2


def test_output_is_deterministic():
    argv = ["strata", "--embedding", "diag:A1:3", "--lambda", "2,1,1", "--seed", "0", "--format", "json"]
    assert run(argv) == run(argv)


@pytest.mark.parametrize("argv", [
    ["cones", "--embedding", "diag:A1:3"],  # missing seed
    ["ample", "--embedding", "diag:A1:3", "--lambda", "0,1,1"],
    ["ample", "--embedding", "diag:A1:3", "--lambda", "1,1"],
    ["ample", "--embedding", "nonsense", "--lambda", "1"],
    ["ample", "--embedding", "{bad json", "--lambda", "1"],
    ["ample", "--embedding", "diag:A1:2", "--lambda", "1,1", "--trials", "2"],
])
def test_validation_errors(argv):
    assert run(argv)[0] == EXIT_VALIDATION


def test_caps():
    assert run(["chambers", "--embedding", "diag:A1:4", "--seed", "0", "--cap-hyperplanes", "2"])[0] == EXIT_CAP
    assert run(["ample", "--embedding", "diag:A2:3", "--lambda", "1,1,1,1,1,1", "--cap-weyl", "100"])[0] == EXIT_CAP


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "flagvgit", "ample", "--embedding", "diag:A1:2", "--lambda", "1,1"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "ample: true" in proc.stdout


def test_reproduce_table():
    code, out = run(["reproduce", "--quick", "--format", "json"])
    d = json.loads(out)
    assert code == EXIT_OK
    keys = [r["key"] for r in d["results"]]
    assert keys[:3] == ["1", "2", "3"] and "8" in keys and len(keys) == 15
    assert sum(d["summary"].values()) == 15
