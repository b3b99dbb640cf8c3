import json

import pytest

from skewdomino.cli import run
from skewdomino.growth import GrowthDiagram
from skewdomino.polynomials import LaurentPoly
from skewdomino.schensted import PPM
from skewdomino.tableaux import ChainTableau


def out_of(capsys, argv, status=0):
    assert run(argv) == status
    return capsys.readouterr()


def test_imbalance(capsys):
    assert out_of(capsys, ["imbalance", "2,2/1,1"]).out == "-1\n"


def test_fpoly(capsys):
    assert out_of(capsys, ["fpoly", "--alpha", "2,2", "--n", "2"]).out == "2*x + 2*y\n"


def test_verify_eq2(capsys):
    d = json.loads(out_of(capsys, ["verify", "eq2", "--n", "6", "--format", "json"]).out)
    assert d["equal"] is True and d["lhs"] == "0"


def test_global_flag_before_verb(capsys):
    d = json.loads(out_of(capsys, ["--format", "json", "imbalance", "2,2/2"]).out)
    assert d == {"shape": "2,2/2", "imbalance": 1}


def test_text_verbs(capsys):
    assert out_of(capsys, ["core", "7,5,5,2"]).out == "1\n"
    assert out_of(capsys, ["stats", "4,3,1/2,1"]).out == "size=5 v=2 h=2 d=1 tileable=False\n"
    assert out_of(capsys, ["spin-poly", "2,2"]).out == "q + 1\n"
    assert out_of(capsys, ["wpoly", "--n", "1"]).out == "x + y*q^1/2\n"
    lines = out_of(capsys, ["tableaux", "2,2", "--kind", "sdt"]).out.splitlines()
    assert lines == ["[1,2][3,4]", "[1,3][2,4]", "# 2 SDTs of 2,2/0"]


def test_json_round_trips_through_parsers(capsys, tmp_path):
    polys = json.loads(out_of(capsys, ["--format", "json", "wpoly", "--alpha", "2,2", "--n", "2"]).out)
    assert str(LaurentPoly.parse(polys["W"])) == polys["W"]
    path = tmp_path / "g.json"
    pq = json.loads(out_of(capsys, ["phi", "--matrix", "0 1; -1 0", "--format", "json",
                                    "--dump-diagram", str(path)]).out)
    P = ChainTableau.from_dict(pq["P"])
    G = GrowthDiagram.from_dict(json.loads(path.read_text()))
    assert G.bottom == P.chain
    back = json.loads(out_of(capsys, ["inverse", "--p", json.dumps(pq["P"]), "--q", json.dumps(pq["Q"]),
                                      "--format", "json"]).out)
    assert PPM.parse(back["M"]) == PPM.parse("0 1; -1 0")


def test_phi_sym_and_inverse(capsys):
    assert out_of(capsys, ["phi-sym", "--matrix", "0 1; 1 0"]).out == "D = [1,2][3,4] on 2,2/0\n"
    assert out_of(capsys, ["inverse", "--d", "0:2:2,2"]).out == "U = [] on 0/0\nM = 0 1; 1 0\n"


def test_rs_phi_perm_and_inverse(capsys):
    out = out_of(capsys, ["rs-phi", "--perm", "3 1 2"]).out
    assert out == "P = [1,2][3] on 2,1/0\nQ = [1,3][2] on 2,1/0\n"
    out = out_of(capsys, ["inverse", "--ruleset", "rs", "--p", "0:1:2:2,1", "--q", "0:1:1,1:2,1"]).out
    assert out.splitlines()[-1] == "M = 0 0 1; 1 0 0; 0 1 0"


def test_phi_on_nonempty_core(capsys):
    out = out_of(capsys, ["phi", "--matrix", "-1", "--core", "2,1"]).out
    assert out.splitlines()[0] == "P = [][][1][2] on 2,1,1,1/2,1"


@pytest.mark.parametrize("argv", [
    ["bogus"],
    ["imbalance", "2,1/3"],
    ["imbalance", "1,2"],
    ["fpoly", "--alpha", "2,2"],
    ["verify", "nope"],
    ["verify", "eq1", "--n", "99"],
    ["phi", "--matrix", "1 1"],
    ["rs-phi"],
    ["inverse", "--p", "0:2"],
])
def test_usage_errors_exit_2(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        code = run(argv)
        raise SystemExit(code)
    assert exc.value.code == 2
    assert "usage:" in capsys.readouterr().err


def test_identity_failure_exits_1(capsys, monkeypatch):
    from skewdomino import verify

    entry = verify.REGISTRY["eq1"]
    broken = verify.Identity(entry.name, lambda n: (1, 2), entry.summary, entry.limits, entry.sweep)
    monkeypatch.setitem(verify.REGISTRY, "eq1", broken)
    out = out_of(capsys, ["verify", "eq1", "--n", "3"], status=1).out
    assert out.startswith("FAIL eq1 n=3")
    assert "FAIL eq1" in out_of(capsys, ["verify-all", "eq1"], status=1).out


def test_verify_all_subset(capsys):
    assert out_of(capsys, ["verify-all", "eq1", "eq2"]).out == "# all identities hold\n"
    out = out_of(capsys, ["verify-all", "eq1", "--bound-scale", "0.3", "--verbose"]).out
    assert out.count("ok eq1") == 5


def test_verify_order_flag(capsys):
    out = out_of(capsys, ["verify", "cor_gf", "--alpha", "2,2", "--order", "3"]).out
    assert out.startswith("ok cor_gf alpha=2,2 order=3")
