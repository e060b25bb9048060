import io
import json

import pytest

from logconvex import cli
from logconvex.cli import emit_csv, run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_seq_csv():
    code, out, _ = call("seq", "motzkin", "--n", "5", "--format", "csv")
    assert code == 0
    assert out == "n,value\n0,1\n1,1\n2,2\n3,4\n4,9\n5,21\n"


def test_seq_json_and_rows():
    code, out, _ = call("seq", "legendre", "--t", "1/2", "--n", "2")
    doc = json.loads(out)
    assert code == 0 and doc["values"] == ["1", "1/2", "-1/8"]
    code, out, _ = call("seq", "stirling1", "--n", "4", "--format", "csv")
    assert out.splitlines()[1:] == ["1,6", "2,11", "3,6", "4,1"]


def test_header_only_csv_for_empty_table():
    assert emit_csv(["n", "value"], []) == "n,value\n"


def test_output_is_byte_identical():
    a = call("certify", "motzkin-patchwork", "--to", "12")[1]
    b = call("certify", "motzkin-patchwork", "--to", "12")[1]
    assert a == b and a.endswith("\n")


def test_usage_errors_exit_2():
    assert call("seq", "secondary")[0] == 2
    assert call("seq", "nonsense")[0] == 2
    assert call("seq", "legendre", "--t", "0.5")[0] == 2
    assert call("oracle", "motzkin", "--n", "99")[0] == 2
    assert call("alpha", "--tol", "0")[0] == 2
    assert call("certify")[0] == 2


def test_violated_property_exits_1():
    assert call("check", "binomial", "--n", "8", "--expect", "log-concave")[0] == 0
    code, out, _ = call("check", "motzkin", "--n", "40", "--expect", "log-concave")
    assert code == 1 and json.loads(out)["holds"] is False
    assert call("certify", "motzkin-patchwork", "--to", "10", "--lo", "2", "--hi", "5/2")[0] == 1
    assert call("certify", "rank1-literal-patchwork", "--to", "12")[0] == 1


def test_oracle_mismatch_exits_3(monkeypatch):
    real = cli.enum_motzkin
    monkeypatch.setattr(cli, "enum_motzkin", lambda m: real(m) + (m == 4))
    code, _, err = call("oracle", "motzkin", "--n", "5")
    assert code == 3 and "n=4" in err


def test_oracle_rows():
    code, out, _ = call("oracle", "secondary", "--rank", "-1", "--n", "6", "--format", "csv")
    assert code == 0 and out.splitlines()[-1] == "6,429,429,true"
    code, out, _ = call("oracle", "dyck", "--n", "3")
    assert json.loads(out)["rows"][3]["enumeration"] == [5, 1, 3, 1]


def test_certificate_roundtrip(tmp_path):
    path = tmp_path / "cert.json"
    code, out, _ = call("certify", "rank1-patchwork", "--to", "15", "--from", "5",
                        "--k", "2", "-o", str(path))
    assert code == 0 and out == ""
    doc = json.loads(path.read_text())
    assert {r["numerator_check"]["k"] for r in doc["intervals"]} == {2}
    code, out, _ = call("certify", "--verify", str(path))
    assert code == 0 and json.loads(out)["verified"] is True
    doc["intervals"][0]["numerator_check"]["poly"][0] = "12345"
    path.write_text(json.dumps(doc))
    assert call("certify", "--verify", str(path))[0] == 3


def test_certify_csv_lists_every_interval():
    code, out, _ = call("certify", "legendre-patchwork", "--t", "3", "--to", "8", "--format", "csv")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "n,lo,hi,check,method,k,verdict"
    assert [l.split(",")[0] for l in lines[1:]] == [str(n) for n in range(0, 9)]


def test_alpha_output():
    code, out, _ = call("alpha", "--rank", "1")
    doc = json.loads(out)
    assert code == 0 and doc["contains_closed_form"] is True
    assert doc["lo_decimal"].startswith("2.618033988")
    code, out, _ = call("alpha", "--rank", "5", "--format", "csv")
    assert code == 0 and out.startswith("rank,tol,lo,hi")


@pytest.mark.parametrize("argv", [
    ("report", "interlace", "motzkin", "--n", "200"),
    ("report", "limit", "delannoy", "--tol", "1/100"),
    ("report", "asymptotic", "motzkin", "--n", "500", "--tol", "1/100"),
    ("report", "series", "delannoy", "--n", "30"),
])
def test_reports_hold(argv):
    code, out, _ = call(*argv)
    assert code == 0, out
    json.loads(out)


def test_report_failures():
    assert call("report", "limit", "motzkin", "--n", "30", "--tol", "1/100")[0] == 1
    assert call("report", "interlace", "delannoy")[0] == 2
