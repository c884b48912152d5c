"""CLI behavior, canonical formats, determinism, and round-trips."""

import json

import pytest

from mbsheaf.cli import main
from mbsheaf.coxeter import build_coxeter
from mbsheaf.f1 import build_e1, build_e1v, rep_catalog
from mbsheaf.io import ParseError, dumps, loads, mbs_from_json, mbs_to_json, xi_dump
from mbsheaf.sheaf import check_mbs
from mbsheaf.xi import enumerate_xi


@pytest.fixture(scope="module")
def xi_a1():
    return enumerate_xi(build_coxeter("A", 1))


# -- formats -------------------------------------------------------------------

def test_xi_dump_a1_shape(xi_a1):
    doc = xi_dump(xi_a1)
    assert doc["element_count"] == 5
    assert doc["relation_count"] == 8
    assert sum(1 for r in doc["relations"] if r["anodyne"]) == 4
    kinds = sorted(r["kind"] for r in doc["relations"])
    assert kinds == ["mixed", "mixed", "prime", "prime", "prime",
                     "second", "second", "second"]


def test_xi_dump_deterministic(xi_a1):
    a = dumps(xi_dump(xi_a1))
    b = dumps(xi_dump(enumerate_xi(build_coxeter("A", 1))))
    assert a == b


def test_mbs_round_trip_bytes(xi_a1):
    e1 = build_e1(xi_a1)
    text = dumps(mbs_to_json(e1))
    parsed = mbs_from_json(loads(text))
    assert dumps(mbs_to_json(parsed)) == text
    assert parsed.dims == e1.dims
    assert parsed.dprime == e1.dprime
    assert parsed.dsecond == e1.dsecond


def test_mbs_round_trip_rational_entries():
    xi = enumerate_xi(build_coxeter("A", 1))
    sheaf = build_e1v(xi, rep_catalog(xi.datum, "sign"))
    text = dumps(mbs_to_json(sheaf))
    parsed = mbs_from_json(loads(text))
    assert dumps(mbs_to_json(parsed)) == text
    assert check_mbs(parsed).ok


def test_parse_errors_carry_paths(xi_a1):
    with pytest.raises(ParseError, match=r"\$\.datum"):
        mbs_from_json({"dims": {}})
    doc = mbs_to_json(build_e1(xi_a1))
    doc["dims"]["bogus:0|:0"] = 1
    with pytest.raises(ParseError, match=r"\$\.dims"):
        mbs_from_json(doc)
    doc2 = mbs_to_json(build_e1(xi_a1))
    doc2["dprime"][0]["matrix"] = [["1/1"]]
    with pytest.raises(ParseError, match=r"\$\.dprime\[0\]"):
        mbs_from_json(doc2)


# -- CLI ------------------------------------------------------------------------

def test_cli_xi_deterministic(tmp_path, capsys):
    out1 = tmp_path / "a.json"
    out2 = tmp_path / "b.json"
    assert main(["xi", "--type", "A", "--rank", "1", "-o", str(out1)]) == 0
    assert main(["xi", "--type", "A", "--rank", "1", "-o", str(out2)]) == 0
    assert out1.read_bytes() == out2.read_bytes()
    doc = json.loads(out1.read_text())
    assert doc["element_count"] == 5 and doc["relation_count"] == 8


def test_cli_invalid_rank(capsys):
    assert main(["xi", "--type", "A", "--rank", "9"]) == 2


def test_cli_example_and_check(tmp_path, capsys):
    path = tmp_path / "e1_g2.json"
    assert main(["example", "e1", "--type", "G", "--rank", "2",
                 "-o", str(path)]) == 0
    assert main(["check", str(path)]) == 0
    assert capsys.readouterr().out.strip().endswith("PASS")


def test_cli_example_eq_dims(tmp_path):
    path = tmp_path / "eq_2_3.json"
    assert main(["example", "eq", "2", "3", "-o", str(path)]) == 0
    doc = json.loads(path.read_text())
    assert sorted(doc["dims"].values()) == [1, 4, 4, 4, 4]
    assert main(["check", str(path)]) == 0


def test_cli_example_e1v_sign(tmp_path):
    path = tmp_path / "e1v.json"
    assert main(["example", "e1v", "sign", "--type", "A", "--rank", "1",
                 "-o", str(path)]) == 0
    doc = json.loads(path.read_text())
    assert sorted(doc["dims"].values()) == [0, 1, 1, 1, 1]


def test_cli_example_colon_form(tmp_path):
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    assert main(["example", "eq:2:2", "-o", str(a)]) == 0
    assert main(["example", "eq", "2", "2", "-o", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_cli_check_detects_corruption(tmp_path, capsys):
    path = tmp_path / "e1_a1.json"
    assert main(["example", "e1", "--type", "A", "--rank", "1",
                 "-o", str(path)]) == 0
    doc = json.loads(path.read_text())
    # zero out an anodyne matrix: exactly the MBS3 counterexample
    for entry in doc["dprime"]:
        if entry["matrix"] == [["1/1", "0/1"], ["0/1", "1/1"]]:
            entry["matrix"] = [["0/1", "0/1"], ["0/1", "0/1"]]
            break
    path.write_text(json.dumps(doc))
    report = tmp_path / "report.json"
    assert main(["check", str(path), "--json", "-o", str(report)]) == 1
    assert "FAIL" in capsys.readouterr().out
    detail = json.loads(report.read_text())
    assert len(detail["axioms"]["mbs3"]) == 1


def test_cli_check_parse_error(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    assert main(["check", str(path)]) == 2
    assert "error" in capsys.readouterr().err


def test_cli_poly_hecke_orbits(capsys):
    assert main(["poly", "--type", "B", "--rank", "2"]) == 0
    assert main(["hecke", "3", "2"]) == 0
    assert main(["orbits", "2", "2"]) == 0
    out = capsys.readouterr().out
    assert out.count("PASS") == 3


def test_cli_usage_error_exit_2():
    with pytest.raises(SystemExit) as exc:
        main(["xi", "--type", "Z", "--rank", "1"])
    assert exc.value.code == 2


def test_cli_round_trip_emit_parse_emit(tmp_path):
    src = tmp_path / "src.json"
    assert main(["example", "eq-binv", "2", "2", "-o", str(src)]) == 0
    text = src.read_text()
    parsed = mbs_from_json(loads(text))
    assert dumps(mbs_to_json(parsed)) == text
