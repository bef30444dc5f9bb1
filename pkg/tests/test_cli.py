import json
import subprocess
import sys

import pytest

from superpattern.cli import main

CHAIN3 = {"elements": ["1", "2", "3"], "relations": [["1", "2"], ["2", "3"]]}


@pytest.fixture
def chain3_file(tmp_path):
    path = tmp_path / "chain3.json"
    path.write_text(json.dumps(CHAIN3))
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_enumerate_count(capsys, chain3_file):
    code, out, _ = run(capsys, "enumerate", "--poset", chain3_file, "--count-only")
    assert code == 0 and out.strip() == "5"


def test_enumerate_listing(capsys):
    code, out, _ = run(capsys, "enumerate", "--chain", "4")
    assert code == 0
    assert len(json.loads(out)["partitions"]) == 14


def test_antipode_spot_value(capsys, chain3_file):
    code, out, _ = run(capsys, "antipode", "--poset", chain3_file, "--basis", "chi",
                       "--label", "[[1,3]]", "--method", "closed-form")
    assert code == 0
    assert "(q-1)*(q-2)" in out
    terms = json.loads(out)["terms"]
    empty = [t for t in terms if t["label"] == [] and len(t["ambient"]["relations"]) == 2
             and ["1", "2"] in t["ambient"]["relations"] and ["2", "3"] in t["ambient"]["relations"]]
    assert [t["coeff"] for t in empty] == ["-q*(q-1)*(q-2)"]


def test_antipode_methods_agree(capsys):
    _, closed, _ = run(capsys, "antipode", "--chain", "3", "--basis", "chi", "--label", "[[1,2]]")
    _, brute, _ = run(capsys, "antipode", "--chain", "3", "--basis", "chi", "--label", "[[1,2]]",
                      "--method", "takeuchi")
    assert json.loads(closed) == json.loads(brute)


def test_table_and_restrict(capsys):
    code, out, _ = run(capsys, "table", "--chain", "2")
    data = json.loads(out)
    assert code == 0 and data["rows"][1] == ["q-1", "-1"]
    code, out, _ = run(capsys, "table", "--chain", "2", "--format", "csv", "--q", "3")
    assert code == 0 and "2" in out.splitlines()[2]
    code, out, _ = run(capsys, "restrict", "--chain", "3", "--sub", '{"elements":[1,2,3],"relations":[[1,2]]}',
                       "--label", "[[1,3]]")
    assert code == 0 and "q*(q-1)" in out


def test_product_coproduct(capsys):
    code, out, _ = run(capsys, "product", "--chain", "2", "--label", "[[1,2]]",
                       "--with-poset", '{"elements":["3"]}', "--with-label", "[]", "--basis", "delta")
    assert code == 0 and len(json.loads(out)["terms"]) == 2
    code, out, _ = run(capsys, "coproduct", "--chain", "3", "--label", "[[1,3]]", "--left", "1,2",
                       "--basis", "delta")
    assert code == 0 and json.loads(out)["terms"] == []


def test_primitives_and_lattice(capsys):
    code, out, _ = run(capsys, "primitives", "--poset", '{"elements":[1,2],"relations":[[2,1]]}',
                       "--sub", '{"elements":[1,2]}', "--atom", "1")
    assert code == 0
    code, out, _ = run(capsys, "lattice", "--chain", "3")
    assert code == 0


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "axioms", "--max-atoms", "3", "--primes", "2,3")
    assert code == 0
    assert all(line.startswith(("PASS", "#")) for line in out.strip().splitlines())


def test_errors_are_json(capsys):
    code, _, err = run(capsys, "enumerate", "--poset", '{"elements":[1,2],"relations":[[1,2],[2,1]]}')
    assert code == 2
    assert json.loads(err)["error"] == "CycleError"
    code, _, err = run(capsys, "antipode", "--chain", "2", "--label", "[[2,1]]")
    assert code == 2


def test_out_file(capsys, tmp_path):
    target = tmp_path / "out.json"
    code, out, _ = run(capsys, "--out", str(target), "enumerate", "--chain", "3", "--count-only")
    assert code == 0 and target.read_text().strip() == "5"


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "superpattern", "enumerate", "--chain", "5", "--count-only"],
                         capture_output=True, text=True, check=True)
    assert res.stdout.strip() == "42"
