"""Command-line front end: exit codes and output shape."""

import json

import pytest

from operad_forge.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_criterion_single(capsys):
    code, out = run(capsys, "criterion", "Zin")
    assert code == 0
    assert "Zin: admits=true" in out


def test_criterion_all_json(capsys):
    code, out = run(capsys, "criterion", "all", "--json")
    assert code == 0
    reports = json.loads(out)
    verdicts = {r["name"]: r["admits"] for r in reports}
    assert verdicts["Bicom"] is True
    assert verdicts["PreLie"] is False


def test_manin_json(capsys):
    code, out = run(capsys, "manin", "Bicom", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["operad"] == "Bicom"
    assert len(payload["white_product_relations"]) == 12
    from operad_forge.arity3 import SINGLE, parse_element, s3_closure
    sym = [parse_element(t, SINGLE) for t in payload["symmetrized_relations"]]
    assert s3_closure(sym, SINGLE).dim == 6


def test_dims_csv(capsys):
    code, out = run(capsys, "dims", "Zin", "--max-n", "6", "--oracle-max", "4",
                    "--csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "n,grammar_count,formula,oracle_dim"
    assert lines[3] == "3,5,5,5"
    assert lines[6].startswith("6,132,132")


def test_normal_forms(capsys):
    code, out = run(capsys, "normal-forms", "Flex", "3")
    assert code == 0
    assert len(out.strip().splitlines()) == 7


def test_bijection_dump(capsys):
    code, out = run(capsys, "bijection", "Bicom", "3")
    assert code == 0
    rows = [line.split("\t") for line in out.strip().splitlines()]
    assert len(rows) == 6
    assert ["x(x(1,1),1)", "EENN"] in rows


def test_confluence(capsys):
    code, out = run(capsys, "confluence", "Zin", "--max-arity", "6")
    assert code == 0
    assert "4 overlaps" in out and "all joinable" in out


def test_certify(capsys):
    code, out = run(capsys, "certify", "--max-n", "5", "--oracle-max", "4")
    assert code == 0
    assert "certify: PASS" in out


def test_usage_error():
    with pytest.raises(SystemExit) as exc:
        main(["criterion", "NotAnOperad"])
    assert exc.value.code == 2
