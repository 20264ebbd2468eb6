import json
from pathlib import Path

import pytest

from packetmult.cli import main
from packetmult.engine import PacketReport

ROOT = Path(__file__).resolve().parents[1]


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_field_command(capsys):
    code, out, _ = run(capsys, "field", "--p", "2", "--e", "1", "--f", "1", "--a", "1", "--n", "2", "--json")
    data = json.loads(out)
    assert code == 0 and data["coset"] == 8 and data["bound"] == 2
    _, out, _ = run(capsys, "field", "--p", "5", "--n", "1", "--json")
    assert json.loads(out)["coset"] == 1 and json.loads(out)["bound"] == 1
    _, out, _ = run(capsys, "field", "--p", "3", "--e", "1", "--f", "2", "--a", "0", "--n", "4", "--json")
    assert json.loads(out)["coset"] == 16


def test_field_parse_error(capsys):
    code, _, err = run(capsys, "field", "--field", "p=5,q=2", "--n", "2")
    assert code == 2 and "position" in err


def test_group_command(capsys):
    code, out, _ = run(capsys, "group", "Q8", "--central-char", "sign", "--json")
    assert code == 0 and json.loads(out)["degrees"] == [2]
    _, out, _ = run(capsys, "group", "heisenberg(3)", "--json")
    assert json.loads(out)["degrees"] == [1] * 9 + [3, 3]
    _, out, _ = run(capsys, "group", "C6")
    assert "degrees [1, 1, 1, 1, 1, 1]" in out


def test_extensions_command(capsys):
    code, out, _ = run(capsys, "extensions", "C2xC2", "--n", "2", "--json")
    data = json.loads(out)
    assert code == 0 and data["h2_order"] == 8 and len(data["extensions"]) == 4
    assert [e["label"] for e in data["extensions"] if e["sl2"] and not e["abelian"]] == ["Q8"]


def test_analyze_command(capsys):
    path = ROOT / "scenarios" / "worked_cases.json"
    code, out, _ = run(capsys, "analyze", str(path), "--json")
    data = json.loads(out)
    assert code == 0 and not data["errors"]
    reps = {r["label"]: PacketReport.from_dict(r) for r in data["reports"]}
    assert reps["SL(1,D2) quaternion"].multiplicity == 2
    h = reps["SL(1,D3) heisenberg"]
    assert h.multiplicity == 3 and h.divisibility.all_pass
    assert reps["SL(1,D3) abelian"].multiplicity == 1
    code, text, _ = run(capsys, "analyze", str(path))
    assert code == 0 and "<sigma,pi>_G" in text


def test_analyze_deterministic(capsys):
    path = str(ROOT / "scenarios" / "worked_cases.json")
    _, a, _ = run(capsys, "analyze", path, "--json")
    _, b, _ = run(capsys, "analyze", path, "--json")
    assert a == b


def test_analyze_errors_and_keep_going(tmp_path, capsys):
    doc = {"schema": 1, "scenarios": [
        {"label": "bad", "m": 1, "d": 3, "group": "C2xD3", "central_subgroup": "center",
         "zeta_exponent": 1},
        {"label": "good", "m": 1, "d": 2, "group": "Q8", "zeta_exponent": 1},
    ]}
    p = tmp_path / "s.json"
    p.write_text(json.dumps(doc))
    code, out, _ = run(capsys, "analyze", str(p), "--json")
    data = json.loads(out)
    assert code == 1 and len(data["reports"]) == 0 and len(data["errors"]) == 1
    code, out, _ = run(capsys, "analyze", str(p), "--json", "--keep-going")
    data = json.loads(out)
    assert code == 1 and len(data["reports"]) == 1 and data["reports"][0]["label"] == "good"


def test_analyze_rejects_duplicate_labels(tmp_path, capsys):
    doc = {"schema": 1, "scenarios": [{"label": "x", "m": 1, "d": 1, "group": "C1"}] * 2}
    p = tmp_path / "s.json"
    p.write_text(json.dumps(doc))
    code, _, err = run(capsys, "analyze", str(p))
    assert code == 2 and "duplicate" in err


def test_cases_command(capsys):
    code, out, _ = run(capsys, "cases", "sl4", "--coset", "16", "--json")
    assert json.loads(out)["triples"] == [[1, 1, 1], [2, 2, 1], [4, 1, 2], [4, 4, 1], [8, 2, 2],
                                          [8, 8, 1], [16, 1, 4], [16, 4, 2], [16, 16, 1]]
    _, out, _ = run(capsys, "cases", "sl2", "--r", "1", "--json")
    assert json.loads(out)["multiplicity"] == 2
    _, out, _ = run(capsys, "cases", "slprime", "--l", "3", "--q", "7", "--json")
    mults = sorted(r["multiplicity"] for r in json.loads(out)["reports"])
    assert mults == [1, 3]
    _, out, _ = run(capsys, "cases", "slprime", "--l", "3", "--q", "5", "--json")
    data = json.loads(out)
    assert [r["multiplicity"] for r in data["reports"]] == [1]
    assert any("excluded" in n for n in data["notes"])
    with pytest.raises(SystemExit):
        main(["cases", "sl9"])
