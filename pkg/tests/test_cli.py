from __future__ import annotations

import io
import json
from pathlib import Path

from semibounds.cli import run
from naive import KNOWN_COUNTS

DATA = Path(__file__).resolve().parent.parent / "data"

def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out=out)
    return code, out.getvalue()

def test_info_json_fields():
    code, text = call("info", "7", "9", "11", "19", "--json")
    assert code == 0
    doc = json.loads(text)
    assert doc["schema_version"] == 1 and doc["command"][0] == "info"
    inv = doc["semigroups"][0]["invariants"]
    assert (inv["e"], inv["nu"], inv["frobenius"], inv["conductor"], inv["n"], inv["genus"]) == (7, 4, 24, 25, 12, 13)
    assert inv["pseudo_frobenius"] == [12, 24] and inv["type_t"] == 2
    assert inv["almost_symmetric"] and inv["positioned"] and not inv["symmetric"]
    assert inv["wilf_generator_value"] == 9
    book = doc["semigroups"][0]["bookkeeping"]
    assert (book["len_m_xc"], book["len_xRbar_m"], book["e_c"]) == (18, 7, 25)

def test_info_full_monoid():
    code, text = call("info", "1", "--json")
    inv = json.loads(text)["semigroups"][0]["invariants"]
    assert code == 0
    assert (inv["frobenius"], inv["conductor"], inv["genus"], inv["e"]) == (-1, 0, 0, 1)

def test_info_csv_and_text():
    code, text = call("info", "3", "5", "--csv")
    rows = text.strip().splitlines()
    assert code == 0 and rows[0] == "check_id,gens,lhs,rhs,holds,equality"
    assert len(rows) == 9
    code, text = call("info", "3", "5")
    assert code == 0 and "frobenius" in text.lower()

def test_input_errors(capsys):
    assert call("info", "4", "6")[0] == 2
    assert "gcd 2" in capsys.readouterr().err
    assert call("info", "3", "x")[0] == 2
    assert call("info", "0", "3")[0] == 2
    assert call("verify")[0] == 2
    assert call("gs2", "info", "--file", "missing.json", "--nu", "2")[0] == 2
    assert call("ideal", "3", "5", "--expr", "omega -")[0] == 2

def test_ideal_expression():
    code, text = call("ideal", "3", "5", "--expr", "omega - (M - M)", "--json")
    ideal = json.loads(text)["ideal"]
    assert code == 0
    assert ideal["min_element"] == 3 and ideal["elements_below_threshold"] == [3, 5, 6]

def test_enumerate_counts():
    code, text = call("enumerate", "--max-genus", "8", "--count")
    assert code == 0
    rows = [line.split(",") for line in text.strip().splitlines()[1:]]
    assert [int(c) for _, c in rows] == KNOWN_COUNTS[:9]

def test_verify_is_deterministic():
    a = call("verify", "--max-genus", "10", "--json")
    b = call("verify", "--max-genus", "10", "--json")
    assert a == b and a[0] == 0
    census = json.loads(a[1])["census"]
    assert sum(census["counts"]["total"]) == sum(KNOWN_COUNTS[:11])
    assert all(v["count"] == 0 for v in census["violations"].values())
    assert all(v["count"] == 0 for v in census["inconsistencies"].values())

def test_verify_backends_agree():
    k = json.loads(call("verify", "--max-genus", "9", "--json")[1])["census"]
    p = json.loads(call("verify", "--max-genus", "9", "--json", "--backend", "python")[1])["census"]
    assert k == p

def test_verify_csv_rows():
    code, text = call("verify", "--max-genus", "3", "--check", "wilf,lech", "--csv")
    rows = text.strip().splitlines()
    assert code == 0
    assert len(rows) == 1 + 2 * sum(KNOWN_COUNTS[:4])

def test_oracle_matches_enumerate():
    code, text = call("oracle", "--max-genus", "10", "--json")
    doc = json.loads(text)
    assert code == 0 and doc["agree"]
    assert doc["tree"] == doc["brute_force"] == KNOWN_COUNTS[:11]

def test_gs2_info():
    code, text = call("gs2", "info", "--file", str(DATA / "two_cusps.json"), "--nu", "4", "--json")
    inv = json.loads(text)["good_semigroup"]["invariants"]
    assert code == 0
    assert (inv["e"], inv["e_c"], inv["length_R_c"], inv["len_xRbar_m_dual"]) == (6, 12, 5, 2)
    assert all(v["holds"] for v in inv["verdicts"].values())

def test_gs2_from_param():
    code, text = call("gs2", "from-param", "--file", str(DATA / "param_t_u2.json"), "--nu", "3", "--json")
    doc = json.loads(text)["good_semigroup"]
    assert code == 0
    assert doc["invariants"]["e_c"] == 5 and doc["invariants"]["length_R_c"] == 2
    code, text = call("gs2", "from-param", "--file", str(DATA / "param_two_cusps.json"), "--truncation", "8")
    assert code == 2
