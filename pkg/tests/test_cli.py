import io
import json

import pytest

from findet.cli import run

DIAG = json.dumps({"m": 2, "n": 2, "s": 2, "field": {"Fp": 101},
                   "entries": [[[[1, [1, 0]]], []], [[], [[1, [0, 1]]]]]})
ZERO = json.dumps({"m": 2, "n": 2, "s": 2, "field": "Q", "entries": [[[], []], [[], []]]})


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out)
    return code, out.getvalue()


def test_check_diag():
    code, text = call("check", DIAG)
    assert code == 0
    data = json.loads(text)
    assert data["report"]["d_e"]["codim"] == 2
    assert data["report"]["bounds"]["ii"] == 5
    prov = data["provenance"]
    assert prov == {"tool": "findet", "version": prov["version"], "field": {"Fp": 101}, "s": 2,
                    "max_degree": 30, "seed": 42}


def test_check_text_format():
    code, text = call("check", DIAG, "--format", "text")
    assert code == 0 and "verdict: FinitelyDetermined" in text


def test_check_zero_matrix(capsys):
    code, _ = call("check", ZERO)
    assert code == 1
    assert "ord undefined for zero matrix" in capsys.readouterr().err


def test_malformed_json(capsys):
    code, _ = call("check", '{"m": 2,\n "n": }')
    assert code == 1
    assert "line 2" in capsys.readouterr().err


@pytest.mark.parametrize("argv", [
    ["random-b", "--field", "Fp:6"],
    ["random-b", "--field", "Fp:5", "--exponent", "5"],
    ["check", DIAG, "--max-degree", "1"],
    ["check", "/nonexistent/matrix.json"],
])
def test_input_errors(argv):
    assert call(*argv)[0] == 1


def test_matrix_from_file_and_stdin(tmp_path, monkeypatch):
    path = tmp_path / "a.json"
    path.write_text(DIAG)
    assert json.loads(call("check", str(path))[1])["report"]["d_e"]["codim"] == 2
    monkeypatch.setattr("sys.stdin", io.StringIO(DIAG))
    assert call("check", "-")[0] == 0


def test_theta_and_minors():
    code, text = call("theta", DIAG)
    assert code == 0 and json.loads(text)["theta"]["n"] == 10
    code, text = call("minors", DIAG)
    data = json.loads(text)
    assert code == 0 and data["size"] == 4
    assert all(1 <= c <= 10 for item in data["minors"] for c in item["cols"])


def test_random_b_and_scan():
    code, text = call("random-b", "--s", "2", "--exponent", "3", "--seed", "1")
    assert code == 0
    B = json.dumps(json.loads(text)["matrix"])
    code, text = call("scan", DIAG, "--b", B, "--t", "1..3")
    scan = json.loads(text)["scan"]
    assert code == 0 and len(scan["d_e_values"]) == 3


def test_json_is_deterministic():
    assert call("check", DIAG)[1] == call("check", DIAG)[1]
    assert call("random-b", "--seed", "9")[1] == call("random-b", "--seed", "9")[1]


def test_inconclusive_exits_zero():
    deg = json.dumps({"m": 2, "n": 2, "s": 2, "field": "Q", "entries": [[[[1, [1, 0]]], []], [[], []]]})
    code, text = call("check", deg, "--max-degree", "8")
    assert code == 0
    assert json.loads(text)["report"]["verdict"] == "NotDeterminedUpToCap"
