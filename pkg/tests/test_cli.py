import io
import json

import pytest

from affspringer.cli import main, solve_payload


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("t, nu, order, top", [("A1", 1, 2, 1), ("A2", 3, 6, 2), ("G2", 6, 12, 5)])
def test_info(capsys, t, nu, order, top):
    code, out, _ = run(capsys, "info", t)
    assert code == 0
    d = json.loads(out)
    assert (d["nu"], d["weyl_order"], d["max_height"]) == (nu, order, top)


def test_info_large_type_omits_enumeration(capsys):
    code, out, _ = run(capsys, "info", "E8")
    d = json.loads(out)
    assert "weyl_order" not in d
    assert d["weyl_order_formula"] == 696729600


def test_info_bad_type(capsys):
    code, _, err = run(capsys, "info", "Q7")
    assert code == 2 and "Q7" in err


def test_solve_a1(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO(json.dumps({"type": "A1", "h": [2], "E": {"e": {"0": "3/2"}}})))
    code, out, _ = run(capsys, "solve")
    assert code == 0
    d = json.loads(out)
    assert d["E_seq"] == [{"e": {"0": "3/2"}, "h": {}}]
    assert d["omega_check"] is True
    assert d["leading_term"] == {"e": {"0": "-3"}, "h": {}}


def test_solve_a2_file(capsys, tmp_path):
    p = tmp_path / "in.json"
    # root index 0 is beta = (0,1), 1 is alpha = (1,0), 2 is alpha+beta
    p.write_text(json.dumps({"type": "A2", "h": ["1", "3"], "E": {"e": {"0": "1", "1": "1"}}}))
    code, out, _ = run(capsys, "solve", "A2", "--in", str(p))
    assert code == 0
    d = json.loads(out)
    # N_{alpha,beta} = -1 in this indexing, so E_2 = -(N/4) e_{alpha+beta}
    assert d["E_seq"][1] == {"e": {"2": "1/4"}, "h": {}}
    assert d["phi_inverse"]["-2"] == d["E_seq"][1]
    assert d["omega_check"] is True


def test_solve_payload_direct():
    out = solve_payload({"h": [1, 3], "E": {"e": {"1": "1"}}}, "A2")
    assert out["leading_term"] == {"e": {"1": "-1"}, "h": {}}


@pytest.mark.parametrize(
    "payload, msg",
    [
        ({"type": "A2", "h": [1, -1], "E": {"e": {"0": "1"}}}, "a1+a2"),
        ({"type": "A2", "h": [1], "E": {}}, "entries"),
        ({"type": "A2", "h": [1, 3], "E": {"e": {"4": "1"}}}, "outside n"),
        ({"type": "A2", "h": [1.5, 3], "E": {}}, "exact"),
        ({"type": "A9x", "h": [1], "E": {}}, "A9x"),
        ({"type": "A2", "E": {}}, "h"),
    ],
)
def test_solve_invalid(capsys, monkeypatch, payload, msg):
    monkeypatch.setattr("sys.stdin", io.StringIO(json.dumps(payload)))
    code, out, err = run(capsys, "solve")
    assert code == 2
    assert msg in err


def test_solve_not_json(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("{nope"))
    code, _, _ = run(capsys, "solve", "A2")
    assert code == 2


def test_solve_type_mismatch(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO(json.dumps({"type": "A2", "h": [1, 3], "E": {}})))
    code, _, _ = run(capsys, "solve", "B2")
    assert code == 2


def test_verify_default_a2(capsys):
    code, out, _ = run(capsys, "verify", "A2")
    assert code == 0
    d = json.loads(out)
    assert d["ok"] is True and d["checks"]["omega"] == 50


def test_verify_corrupted_table(capsys):
    code, out, _ = run(capsys, "verify", "A2", "--corrupt-table")
    assert code == 1
    d = json.loads(out)
    assert d["ok"] is False
    assert d["failure"]["check"] == "jacobi"


def test_verify_deterministic(capsys):
    _, first, _ = run(capsys, "verify", "G2", "--trials", "10", "--seed", "123")
    _, second, _ = run(capsys, "verify", "G2", "--trials", "10", "--seed", "123")
    assert first == second


def test_verify_bad_trials(capsys):
    code, _, _ = run(capsys, "verify", "A2", "--trials", "0")
    assert code == 2


def test_census(capsys):
    code, out, _ = run(capsys, "census", "A2")
    rows = json.loads(out)
    assert len(rows) == 6
    assert rows[0] == {"w": [], "length": 0, "fibre_dim": 3}
    assert all(r["length"] + r["fibre_dim"] == 3 for r in rows)
    code, out, _ = run(capsys, "census", "A2", "--format", "text")
    assert "s1s2s1" in out and "total cells: 6" in out


def test_census_cap(capsys):
    code, _, err = run(capsys, "census", "E6")
    assert code == 2 and "cap" in err


def test_components(capsys):
    code, out, _ = run(capsys, "components", "A2", "--box", "1")
    d = json.loads(out)
    assert (d["labels"], d["orbits"], d["free"]) == (54, 6, True)


def test_usage_error(capsys):
    assert main(["components", "A2"]) == 2
    assert main([]) == 2
