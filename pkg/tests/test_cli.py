import json

import pytest

from taylorpade.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_dim_json(capsys):
    code, out, _ = run(capsys, "dim", "--n", "3", "--d", "2", "--e", "2", "--m", "3",
                       "--seed", "5")
    assert code == 0
    payload = json.loads(out)
    assert payload["dim"] == 17
    assert payload["defect"] == 1
    assert payload["config"]["seed"] == 5
    assert payload["config"]["prime"] == 2147483647


def test_scan_csv_matches_small_block(capsys):
    code, out, _ = run(capsys, "scan", "--n", "3", "--m-max", "3", "--seed", "5",
                       "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["n,d,e,m,dim,params,ambient", "3,2,2,3,17,18,19"]


def test_scan_empty_for_two_variables(capsys):
    code, out, _ = run(capsys, "scan", "--n", "2", "--m-max", "4", "--seed", "5",
                       "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["n,d,e,m,dim,params,ambient"]


def test_scan_json_and_resume(capsys):
    code, out, _ = run(capsys, "scan", "--n", "3", "--m-max", "5", "--seed", "5",
                       "--format", "json", "--resume-from", "3,4,5")
    assert code == 0
    rows = json.loads(out)["rows"]
    assert [(r["d"], r["e"], r["m"]) for r in rows] == [(3, 4, 5), (4, 3, 5)]


def test_matrix_text(capsys):
    code, out, _ = run(capsys, "matrix", "--n", "1", "--d", "2", "--e", "2", "--m", "5")
    assert code == 0
    lines = out.splitlines()
    assert lines[1:] == ["c_5 c_4 c_3", "c_4 c_3 c_2", "c_3 c_2 c_1"]


def test_matrix_json(capsys):
    code, out, _ = run(capsys, "matrix", "--n", "2", "--d", "1", "--e", "1", "--m", "2",
                       "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["row_labels"] == [[2, 0], [1, 1], [0, 2]]
    assert payload["col_labels"] == [[0, 0], [0, 1], [1, 0]]
    assert payload["entries"][0] == [[2, 0], None, [1, 0]]


def test_approx_round_trip(capsys):
    code, out, _ = run(capsys, "approx", "--n", "1", "--d", "1", "--e", "2", "--m", "5",
                       "--series", "1 + -1*x1^2 + x1^3 + -1*x1^5")
    assert code == 0
    payload = json.loads(out)
    assert payload["found"] is True
    assert payload["P"] == "1 + x1"
    assert payload["Q"] == "1 + x1 + x1^2"
    assert payload["fiber_dim"] == 0


def test_froberg_report_and_census(capsys):
    code, out, _ = run(capsys, "froberg", "--n", "3", "--d", "2", "--e", "2")
    assert code == 0
    payload = json.loads(out)
    assert (payload["alpha"], payload["beta"], payload["w"]) == (2, 1, 1)
    code, out, _ = run(capsys, "froberg", "--n", "2", "--census")
    assert code == 0
    payload = json.loads(out)
    assert payload["d0"] == 6 and payload["count"] == 0


def test_hessian_cli(capsys):
    code, out, _ = run(capsys, "hessian", "--n", "2", "--d", "1", "--e", "1", "--m", "2",
                       "--seed", "3")
    assert code == 0
    payload = json.loads(out)
    assert (payload["vars"], payload["rank"], payload["corank"]) == (5, 4, 1)


def test_determinism_same_seed_same_bytes(capsys):
    args = ("dim", "--n", "2", "--d", "1", "--e", "2", "--m", "4", "--seed", "9")
    _, out1, _ = run(capsys, *args)
    _, out2, _ = run(capsys, *args)
    assert out1 == out2


def test_entropy_seed_echoed(capsys):
    code, out, _ = run(capsys, "froberg", "--n", "2", "--d", "1", "--e", "1")
    assert code == 0
    assert json.loads(out)["config"]["seed"] != 0


def test_usage_errors_exit_1(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["scan", "--n", "3"])  # missing --m-max
    assert exc.value.code == 1
    with pytest.raises(SystemExit) as exc:
        main(["nonsense"])
    assert exc.value.code == 1
    # invalid prime is a usage problem
    code, _, err = run(capsys, "dim", "--n", "2", "--d", "1", "--e", "1", "--m", "2",
                       "--prime", "91")
    assert code == 1 and "prime" in err


def test_computation_error_exit_2(capsys):
    # determinant identically zero: no invertible sample exists
    code, _, err = run(capsys, "hessian", "--n", "3", "--d", "2", "--e", "2", "--m", "3",
                       "--seed", "3")
    assert code == 2
    assert "computation failed" in err


def test_env_prime_and_flag_priority(capsys, monkeypatch):
    monkeypatch.setenv("TAYLORPADE_PRIME", "10007")
    _, out, _ = run(capsys, "froberg", "--n", "2", "--d", "1", "--e", "1", "--seed", "1")
    assert json.loads(out)["config"]["prime"] == 10007
    _, out, _ = run(capsys, "froberg", "--n", "2", "--d", "1", "--e", "1", "--seed", "1",
                    "--prime", "101")
    assert json.loads(out)["config"]["prime"] == 101


def test_env_seed(capsys, monkeypatch):
    monkeypatch.setenv("TAYLORPADE_SEED", "42")
    _, out, _ = run(capsys, "froberg", "--n", "2", "--d", "1", "--e", "1")
    assert json.loads(out)["config"]["seed"] == 42
