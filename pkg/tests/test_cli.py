import io
import json

import pytest

from galedeg import generators as gen
from galedeg.checks import Oracles
from galedeg.cli import main
from galedeg.fileio import format_config

SQUARE = "points 2 4\n0 0\n1 0\n1 1\n0 1\n"
TET_MID = "points 3 7\n0 0 0\n1 0 0\n0 1 0\n0 0 1\n1/2 0 0\n0 1/2 0\n0 0 1/2\n"
CROSS = "points 2 4\n1 0\n-1 0\n0 1\n0 -1\n"


def run(argv, **kw):
    out, err = io.StringIO(), io.StringIO()
    rc = main(argv, out=out, err=err, **kw)
    return rc, out.getvalue(), err.getvalue()


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, C in [("pent", gen.pentagon()), ("a7", gen.lifted(2)), ("simplex", gen.edge_simplex(3, 0)),
                    ("law", gen.lawrence(2, 4))]:
        p = tmp_path / f"{name}.txt"
        p.write_text(format_config(C))
        paths[name] = str(p)
    for name, text in [("sq", SQUARE), ("tet", TET_MID), ("cross", CROSS)]:
        p = tmp_path / f"{name}.txt"
        p.write_text(text)
        paths[name] = str(p)
    return paths


def field(text, key):
    for line in text.splitlines():
        if line.startswith(key + ":"):
            return line.split(":", 1)[1].strip()
    raise KeyError(key)


def test_analyze(files):
    for name, degree in [("pent", "1"), ("simplex", "0"), ("a7", "2")]:
        rc, out, _ = run(["analyze", files[name]])
        assert rc == 0 and field(out, "degree") == degree


def test_gale_square(files):
    rc, out, _ = run(["gale", files["sq"]])
    assert rc == 0
    assert out == "vectors 1 4\n1\n-1\n1\n-1\n"


def test_cayley_a7(files):
    rc, out, _ = run(["cayley", files["a7"]])
    assert rc == 0
    assert field(out, "weak Cayley length") == "2"
    # see the decisions ledger: A7 does split into two faces
    assert field(out, "combinatorial Cayley length") == "2"


def test_classify_tetrahedron(files):
    rc, out, _ = run(["classify", files["tet"]])
    assert rc == 0 and "SIMPLEX_EDGE_POINTS_AT_VERTEX" in out


def test_depth_and_tverberg(files):
    rc, out, _ = run(["depth", files["pent"], "--point", "100/31 60/31", "--json"])
    assert rc == 0 and json.loads(out)["result"]["depth"] == 2
    rc, out, _ = run(["tverberg", files["pent"], "--point", "100/31 60/31", "--json"])
    res = json.loads(out)["result"]
    assert res["order"] == 2 and res["partition"] == [[0, 2], [1, 3]]
    for cmd, key in [("depth", "depth"), ("tverberg", "order")]:
        rc, out, _ = run([cmd, files["cross"], "--point", "0 0", "--json"])
        assert json.loads(out)["result"][key] == 2
        rc, out, _ = run([cmd, files["pent"], "--point", "9 9", "--json"])
        assert json.loads(out)["result"][key] == 0


def test_gen():
    rc, out, _ = run(["gen", "lifted", "2"])
    assert out == "points 3 7\n0 0 0\n2 0 0\n0 2 0\n1 0 1\n1 0 -1\n0 1 1\n0 1 -1\n"
    rc, out, _ = run(["gen", "lawrence", "2", "4"])
    assert out == "vectors 2 4\n1 0\n-1 0\n0 1\n0 -1\n"
    rc, out, _ = run(["gen", "pentagon-join", "2"])
    assert out.startswith("points 5 10\n")
    assert run(["gen", "random", "8", "3", "--seed", "3"]) == run(["gen", "random", "8", "3", "--seed", "3"])


@pytest.mark.parametrize("cmd", ["analyze", "gale", "circuits", "cayley", "classify"])
def test_certificates_verify(files, tmp_path, cmd):
    for name in ("pent", "a7", "tet", "sq"):
        rc, out, _ = run([cmd, files[name], "--json"])
        assert rc == 0
        cert = tmp_path / "cert.json"
        cert.write_text(out)
        assert run(["--verify", str(cert)])[:2] == (0, "certificate ok\n")


def test_point_certificates_verify(files, tmp_path):
    for cmd in ("depth", "tverberg"):
        rc, out, _ = run([cmd, files["pent"], "--point", "100/31 60/31", "--json"])
        cert = tmp_path / "c.json"
        cert.write_text(out)
        assert run(["--verify", str(cert)])[0] == 0


def test_tampered_certificates_fail(files, tmp_path):
    cert = tmp_path / "c.json"
    _, out, _ = run(["depth", files["pent"], "--point", "100/31 60/31", "--json"])
    obj = json.loads(out)
    obj["result"]["depth"] = 3
    cert.write_text(json.dumps(obj))
    assert run(["--verify", str(cert)])[0] == 1
    _, out, _ = run(["analyze", files["pent"], "--json"])
    obj = json.loads(out)
    obj["input"] = obj["input"].replace("5 3", "5 4")
    cert.write_text(json.dumps(obj))
    assert run(["--verify", str(cert)])[0] == 1


def test_certificate_roundtrips_losslessly(files):
    _, out, _ = run(["analyze", files["tet"], "--json"])
    assert json.dumps(json.loads(out), indent=2, sort_keys=True) + "\n" == out


@pytest.mark.parametrize("text", [
    "points 2 3\n0 0\n1 0\n",
    "points 2 3\n0 0\n1 0 3\n1 1\n",
    "points 2 3\n0 0\n1 0\n2 0\n",
    "points 2 3\n0 0\n1.5 0\n2 1\n",
])
def test_input_errors_exit_2(tmp_path, text):
    p = tmp_path / "bad.txt"
    p.write_text(text)
    rc, _, err = run(["analyze", str(p)])
    assert rc == 2 and err.startswith("error:")


def test_other_exit_2_cases(files):
    assert run(["analyze", "/nonexistent/file"])[0] == 2
    assert run(["depth", files["pent"], "--point", "1 2 3"])[0] == 2
    assert run(["gen", "lawrence", "2", "3"])[0] == 2
    assert run(["gen", "nope"])[0] == 2
    assert run(["gale", files["law"]])[0] == 2
    assert run(["check", "deg1", "--sizes", "oops"])[0] == 2
    assert run([])[0] == 2


def test_internal_error_exit_3():
    def boom(*a, **k):
        raise AssertionError("boom")

    rc, _, err = run(["check", "primal-dual", "--trials", "1"], oracles=Oracles(dual_degree=boom))
    assert rc == 3 and "internal error" in err


def test_corrupted_oracle_exit_1():
    from galedeg.degree import dual_degree

    def broken(V):
        r = dual_degree(V)
        return type(r)(r.degree + 1, r.codegree - 1, r.witness_interior_face)

    rc, out, _ = run(["check", "primal-dual", "--trials", "3"], oracles=Oracles(dual_degree=broken))
    assert rc == 1
    assert "FAILED" in out and "points" in out  # offending instance serialized


def test_check_output_is_byte_identical():
    argv = ["check", "all", "--trials", "4", "--seed", "7"]
    a, b = run(argv), run(argv)
    assert a == b and a[0] == 0
    j1, j2 = run(argv + ["--json"]), run(argv + ["--json"])
    assert j1 == j2 and json.loads(j1[1])["ok"]


def test_stdin(monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO(SQUARE))
    rc, out, _ = run(["analyze", "-"])
    assert rc == 0 and field(out, "degree") == "1"
