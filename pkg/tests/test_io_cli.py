import json

import pytest

from ybtruss import catalog, io
from ybtruss.cli import main
from ybtruss.errors import InputError
from ybtruss.matched import MatchedSystemST

from golden_cases import CASES, DATA, GOLDEN, argv


def run(capsys, args):
    code = main(args)
    return code, capsys.readouterr().out


@pytest.mark.parametrize("name", sorted(CASES))
def test_golden(name, capsys):
    code, args = CASES[name]
    got, out = run(capsys, argv(args))
    assert got == code
    assert out == (GOLDEN / f"{name}.json").read_text()


@pytest.mark.parametrize("path", sorted(DATA.glob("*.json")), ids=lambda p: p.stem)
def test_round_trip_bit_exact(path):
    text = path.read_text().strip()
    assert io.dumps(io.load(path)) == text


def test_round_trip_objects():
    for obj in (catalog.candc(True), catalog.circnotgroup(), catalog.s3_conjugation_brace()):
        assert io.parse_any(json.loads(io.dumps(obj))) == obj


def test_unknown_and_missing_fields():
    d = catalog.flip(2).to_json()
    with pytest.raises(InputError, match="extra"):
        io.parse_any(dict(d, extra=1))
    d.pop("rho")
    with pytest.raises(InputError):
        io.parse_any(d)


def write(tmp_path, obj, name="x.json"):
    p = tmp_path / name
    p.write_text(obj if isinstance(obj, str) else json.dumps(obj))
    return str(p)


def test_corrupted_entry_exit_2(tmp_path, capsys):
    d = catalog.flip(3).to_json()
    d["lambda"][1][2] = 3
    code, out = run(capsys, ["verify-solution", write(tmp_path, d)])
    assert code == 2 and "lambda[1][2] = 3" in json.loads(out)["message"]


def test_malformed_json_exit_2(tmp_path, capsys):
    code, _ = run(capsys, ["verify-solution", write(tmp_path, "{not json")])
    assert code == 2


def test_non_bijective_lambda_for_derive(tmp_path, capsys):
    d = {"n": 2, "lambda": [[0, 0], [0, 1]], "rho": [[0, 1], [0, 1]]}
    code, out = run(capsys, ["derive", write(tmp_path, d)])
    assert code == 2 and "non-degenerate" in json.loads(out)["message"]


def test_inconsistent_unit_exit_2(tmp_path, capsys):
    d = catalog.two_element_monoid().to_json()
    d["unit"] = 0
    code, out = run(capsys, ["verify-semitruss", write(tmp_path, d)])
    assert code == 2 and "unit" in json.loads(out)["message"]


def test_failed_axioms_exit_1(tmp_path, capsys):
    d = catalog.circnotgroup().to_json()
    d["sigma"][1] = [0, 1, 2, 3]
    code, out = run(capsys, ["verify-semitruss", write(tmp_path, d)])
    rep = json.loads(out)
    assert code == 1 and not rep["valid"]


def test_verify_broken_solution_exit_1(tmp_path, capsys):
    d = {"n": 2, "lambda": [[1, 0], [0, 1]], "rho": [[0, 1], [0, 1]]}
    code, out = run(capsys, ["verify-solution", write(tmp_path, d)])
    assert code == 1 and json.loads(out)["violations"]


def test_audit_theorem_b_n3(capsys):
    code, out = run(capsys, ["audit", "theorem-b", "--n", "3"])
    rep = json.loads(out)
    assert code == 0 and rep["counterexamples"] == 0 and rep["checked"] == 354


def test_resource_and_precondition_codes(capsys):
    assert run(capsys, ["enumerate", "--n", "5"])[0] == 2
    assert run(capsys, ["enumerate", "--n", "4", "--rnd"])[0] == 3
    assert run(capsys, ["grow", str(DATA / "flip3.json"), "--degree", "12", "--budget", "1000"])[0] == 3


def test_csv(capsys):
    code, out = run(capsys, ["dims", str(DATA / "flip2.json"), "--degree", "3", "--csv"])
    assert code == 0
    assert out.splitlines() == ["degree,dimM,dimA", "0,1,1", "1,2,2", "2,3,3", "3,4,4"]
    code, out = run(capsys, ["diagonal", str(DATA / "candc.json"), "--csv"])
    assert out.splitlines()[0] == "key,value"


def test_enumerate_out_jsonl(tmp_path, capsys):
    dest = tmp_path / "n2.jsonl"
    code, out = run(capsys, ["enumerate", "--n", "2", "--out", str(dest)])
    lines = dest.read_text().splitlines()
    assert code == 0 and len(lines) == 14 and "solutions" not in json.loads(out)
    assert all(io.parse_any(json.loads(l)).lnd for l in lines)


def test_parallel_output_byte_identical(capsys):
    _, a = run(capsys, ["enumerate", "--n", "3", "--dedup"])
    _, b = run(capsys, ["enumerate", "--n", "3", "--dedup", "--jobs", "2"])
    assert a == b


def test_system_parse():
    assert isinstance(io.load(DATA / "morethenone3.json"), MatchedSystemST)
