import io
import json
import subprocess
import sys

import pytest

from fraclocdim.cli import main


def run(capsys, *argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_gen_and_read_back(capsys, monkeypatch):
    code, out, _ = run(capsys, "gen", "cycle(5)")
    assert code == 0
    assert out.splitlines()[:2] == ["# cycle(5)", "5 5"]
    code, out2, _ = run(capsys, "ldimf", "-", stdin=out, monkeypatch=monkeypatch)
    assert (code, out2) == (0, "5/4\n")


def test_gen_json(capsys):
    code, out, _ = run(capsys, "gen", "petersen", "--format", "json")
    data = json.loads(out)
    assert data["n"] == 10 and len(data["edges"]) == 15


def test_graph_file_argument(capsys, tmp_path):
    f = tmp_path / "tri.txt"
    f.write_text("3 3\n0 1\n1 2\n0 2\n")
    code, out, _ = run(capsys, "dimf", str(f))
    assert (code, out) == (0, "3/2\n")


def test_values(capsys):
    assert run(capsys, "ldimf", "petersen")[1] == "5/3\n"
    assert run(capsys, "dimf", "cycle(6)")[1] == "3/2\n"
    assert run(capsys, "ldim", "petersen")[1] == "3\n"
    code, out, _ = run(capsys, "ldimf", "complete(4)", "--weights")
    assert json.loads(out) == {"graph": "complete(4)", "value": "2", "weights": ["1/2"] * 4}


def test_resolve_and_orbits(capsys):
    code, out, _ = run(capsys, "resolve", "cycle(6)", "--sets")
    data = json.loads(out)
    assert (data["l"], data["r"]) == (6, 4)
    assert len(data["L"]) == 6
    assert run(capsys, "orbits", "star(3)")[1] == "0\n1 2 3\n"


def test_product(capsys):
    code, out, _ = run(capsys, "product", "cartesian", "complete(2)", "cycle(5)")
    assert out.splitlines()[1] == "10 15"


def test_table_rows(capsys):
    code, out, _ = run(capsys, "table", "petersen", "complete(4)", "cycle(6)")
    assert out.splitlines() == [
        "graph,n,m,l,r,ldim,ldim_f,dim_f",
        "petersen,10,15,6,6,3,5/3,5/3",
        "complete(4),4,6,2,2,3,2,2",
        "cycle(6),6,6,6,4,1,1,3/2",
    ]


def test_table_decimal_column_is_advisory(capsys):
    out = run(capsys, "table", "cycle(5)", "--decimal")[1]
    assert out.splitlines()[1] == "cycle(5),5,5,4,4,2,5/4,5/4,1.250000,1.250000"


def test_table_marks_ldim_over_ceiling(capsys):
    out = run(capsys, "table", "cycle(25)")[1]
    assert out.splitlines()[1].split(",")[5] == "-"


def test_verify_exit_codes(capsys, tmp_path):
    corpus = tmp_path / "corpus.txt"
    corpus.write_text("# small\ncycle(5)\npetersen\n")
    code, out, err = run(capsys, "verify", "--claims", "r-le-l,bipartite-iff-one", "--corpus", str(corpus),
                         "--format", "csv")
    assert code == 0
    assert out.splitlines()[0] == "claim,graphs,status,values,witness"
    assert len(out.splitlines()) == 5
    assert "pass=4" in err
    corpus.write_text("fan(3)\n")
    code, out, _ = run(capsys, "verify", "--claims", "fan-value", "--corpus", str(corpus), "--format", "json")
    assert code == 1
    assert json.loads(out)[0]["status"] == "fail"


def test_usage_errors_exit_2(capsys, tmp_path):
    assert run(capsys, "ldimf", "cycle(")[0] == 2
    assert run(capsys, "verify", "--claims", "bogus")[0] == 2
    assert run(capsys, "verify", "--corpus", str(tmp_path / "missing.txt"))[0] == 2
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "ldimf", "petersen", "--format", "xml")[0] == 2


def test_claims_listing(capsys):
    out = run(capsys, "claims")[1]
    assert out.startswith("basic-chain\t")


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "fraclocdim.cli", "ldimf", "cycle(7)"],
                         capture_output=True, text=True, check=True)
    assert res.stdout == "7/6\n"


@pytest.mark.parametrize("fmt", ["json", "csv", "table"])
def test_verify_output_is_stable(capsys, fmt):
    a = run(capsys, "verify", "--claims", "twin-neighbourhood", "--format", fmt)[1]
    b = run(capsys, "verify", "--claims", "twin-neighbourhood", "--format", fmt)[1]
    assert a == b
