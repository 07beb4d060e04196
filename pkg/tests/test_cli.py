import csv
import io
import json
from importlib import resources

import jsonschema
import pytest

from dihedral_cayley.cli import UsageError, main, parse_int_list


def schema(name):
    return json.loads(resources.files("dihedral_cayley").joinpath(f"schemas/{name}.schema.json").read_text())


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_parse_int_list():
    assert parse_int_list("3..6") == [3, 4, 5, 6]
    assert parse_int_list("1,4,9") == [1, 4, 9]
    assert parse_int_list("5..4", allow_empty=True) == []
    with pytest.raises(UsageError):
        parse_int_list("5..4")


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", "-n", "7", "-S", "r,r^6,s,s*r^3")
    assert code == 0 and out.startswith("CaseIII")
    code, out, _ = run(capsys, "classify", "-n", "7", "-S", "r,r^6,s,s*r^3", "--format", "json")
    assert json.loads(out)["derived"]["case"] == "III"


def test_usage_errors_exit_1(capsys):
    code, _, err = run(capsys, "classify", "-n", "7", "-S", "r,r^2,s,s*r")
    assert code == 1 and "NotInverseClosed" in err
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 1
    assert run(capsys, "verify", "thm3.7", "--p", "7")[0] == 1
    assert run(capsys, "verify", "lemma4.6", "--n", "6", "-A", "0,3")[0] == 1


def test_analyze_json_matches_schema(capsys, tmp_path):
    dot = tmp_path / "g.dot"
    code, out, _ = run(capsys, "analyze", "-n", "12", "-S", "r^2,r^10,r^4,r^8", "--format", "json",
                       "--dot", str(dot))
    data = json.loads(out)
    jsonschema.validate(data, schema("structure_report"))
    assert code == 0 and data["components"] == 4
    assert dot.read_text().startswith("graph")


def test_analyze_text(capsys):
    code, out, _ = run(capsys, "analyze", "-n", "5", "-S", "s,s*r,s*r^2,s*r^3")
    assert code == 0 and "crown(5)" in out and "verified: True" in out


def test_aut_and_cap(capsys):
    code, out, _ = run(capsys, "aut", "-n", "7", "-S", "r,r^6,r^2,r^5", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["aut_order"] == "392" and data["normal"] is False
    assert data["cross_check_agrees"]
    code, _, err = run(capsys, "--cap", "10", "aut", "-n", "7", "-S", "r,r^6,r^2,r^5")
    assert code == 2 and "cap" in err


def test_verify_exit_codes_and_schema(capsys):
    code, out, _ = run(capsys, "verify", "thm3.7", "--p", "7,11,13", "--t", "2", "--format", "json")
    assert code == 0
    reports = json.loads(out)
    for r in reports:
        jsonschema.validate(r, schema("theorem_report"))
    assert [r["verdict"] for r in reports] == ["verified"] * 3

    code, out, err = run(capsys, "verify", "thm5.2", "--n", "3", "--format", "json")
    assert code == 3 and "unexpected refutations" in err
    for r in json.loads(out):
        jsonschema.validate(r, schema("theorem_report"))
        assert r["verdict"] == "refuted" and isinstance(r["witness"], dict)

    assert run(capsys, "verify", "thm5.2", "--n", "3", "--expect-discrepancies")[0] == 0
    assert run(capsys, "verify", "thm5.2", "--n", "3", "--expect-discrepancies", "3:1")[0] == 3
    assert run(capsys, "verify", "thm5.2", "--n", "3", "--expect-discrepancies", "3:1,3:2")[0] == 0


def test_tables(capsys):
    code, out, _ = run(capsys, "tables", "2", "--json")
    data = json.loads(out)
    assert code == 0 and data["all_match"]
    assert [r["aut_order"] for r in data["rows"]] == ["392", "968", "1352", "9248"]
    code, out, _ = run(capsys, "tables", "1")
    assert code == 0 and "DIFF" not in out


def test_sweep_rows_match_schema_and_are_worker_independent(capsys):
    code, one, _ = run(capsys, "sweep", "crown", "--n", "3..6", "--format", "json")
    assert code == 0
    rows = json.loads(one)
    for row in rows:
        jsonschema.validate(row, schema("sweep_row"))
    assert [r["aut_order"] for r in rows] == [r["oracle_order"] for r in rows]
    code, two, _ = run(capsys, "sweep", "crown", "--n", "3..6", "--format", "json", "--workers", "2")
    assert json.loads(two) == rows


def test_sweep_csv_empty_and_skips(capsys):
    code, out, _ = run(capsys, "sweep", "case3", "--n", "6..5")
    assert code == 0 and out.count("\n") == 1 and out.startswith("template,n,k")
    code, out, _ = run(capsys, "sweep", "case4", "--n", "5..6", "--k", "0")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0
    assert rows[0]["skipped"] == "True" and "n even" in rows[0]["reason"]
    assert rows[1]["skipped"] == "False" and rows[1]["cross_check"] == "True"


def test_sweep_flags_refutations(capsys):
    assert run(capsys, "sweep", "case3", "--n", "3")[0] == 3
    assert run(capsys, "sweep", "case3", "--n", "3", "--expect-discrepancies")[0] == 0
