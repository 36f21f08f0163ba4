import json
import subprocess
import sys

import pytest

from rigidlie.cli import main
from rigidlie.liealg import SCHEMA_VERSION, LieAlgebra


def run(capsys, *argv):
    status = main(list(argv))
    out = capsys.readouterr()
    return status, out.out, out.err


def test_solvability_example(capsys):
    status, out, _ = run(capsys, "solvability", "g1hat_r8_22_2")
    assert out.splitlines()[0] == "completely solvable: NO; witness X8; min poly of ad(X8): T^3+T"
    assert status == 1
    status, out, _ = run(capsys, "solvability", "g2hat_r8_22_normal")
    assert (status, out.strip()) == (0, "completely solvable: YES")


def test_cohomology_example(capsys):
    status, out, _ = run(capsys, "cohomology", "g2hat_r8_22_normal")
    assert out.splitlines()[0] == "h0=0 h1=0 h2=0; certificate: algebraically rigid"
    assert status == 0


def test_roots_example(capsys):
    status, out, _ = run(capsys, "roots", "g2hat_r8_22_normal", "--json")
    data = json.loads(out)
    assert status == 0
    assert [e for e in data["equations"] if max(e) <= 6] == [[1, 2, 3], [1, 3, 4], [1, 5, 6], [2, 3, 5], [2, 4, 6]]
    assert data["rank"] == 5 and data["rank_test"]["verdict"] == "PASS"


def test_roots_refusal_and_over_c(capsys):
    status, out, _ = run(capsys, "roots", "g1hat_r8_22_2")
    assert status == 1 and "--over-C" in out and "T^3+T" in out
    status, out, _ = run(capsys, "roots", "g1hat_r8_22_2", "--over-C")
    assert status == 0 and "PASS" in out


ALL = [
    ["validate", "N6_6"], ["series", "N6_6"], ["ad", "g1hat_r8_22_2", "X8"], ["derivations", "N6_6"],
    ["torus", "N6_7"], ["cohomology", "N6_6"], ["roots", "g2hat_r8_22_normal"],
    ["solvability", "g2hat_r8_22_normal"], ["nilradical", "r8_29_2"], ["complexify", "N6_6"],
    ["compare", "N6_6", "N6_14"], ["catalog", "list"], ["catalog", "show", "N6_7"],
    ["catalog", "export", "N6_7"],
]


@pytest.mark.parametrize("argv", ALL, ids=lambda a: "-".join(a))
def test_json_everywhere(capsys, argv):
    status, out, _ = run(capsys, *argv, "--json")
    data = json.loads(out)
    assert data["schema_version"] == SCHEMA_VERSION and data["command"] == argv[0]
    assert data["exit_status"] == status


def test_ad_text(capsys):
    status, out, _ = run(capsys, "ad", "g1hat_r8_22_2", "X8")
    assert "minpoly:  T^3+T" in out and "C_diagonalizable_only" in out
    status, out, _ = run(capsys, "ad", "N6_6", "1,0,0,0,0,1/2")
    assert status == 0


def test_catalog_export_roundtrip(capsys, tmp_path):
    _, out, _ = run(capsys, "catalog", "export", "g2hat_r8_22_normal")
    path = tmp_path / "g.json"
    path.write_text(out)
    assert LieAlgebra.loads(out).dumps() + "\n" == out
    status, out2, _ = run(capsys, "validate", str(path))
    assert status == 0 and "0 defects" in out2


def test_unparseable_json(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"dim": 3,\n "brackets": [[1, 2, [["1", 3]]]')
    status, _, err = run(capsys, "validate", str(path))
    assert status == 2 and "line 2 column" in err


def test_jacobi_failure_exit(capsys, tmp_path):
    path = tmp_path / "bad.json"
    g = LieAlgebra.from_brackets(3, [(1, 2, {3: 1}), (1, 3, {2: 1}), (2, 3, {2: 1})])
    path.write_text(g.dumps())
    status, out, _ = run(capsys, "validate", str(path))
    assert status == 1 and "(1,2,3)" in out


def test_field_mismatch(capsys, tmp_path):
    path = tmp_path / "c.json"
    _, out, _ = run(capsys, "complexify", "g1hat_r8_22_2")
    path.write_text(out)
    status, _, err = run(capsys, "solvability", str(path))
    assert status == 2 and "real" in err
    status, _, err = run(capsys, "torus", "N6_6", "--field", "Q(i)")
    assert status == 2


def test_unknown_input(capsys):
    status, _, err = run(capsys, "series", "nosuch")
    assert status == 2 and "catalog key" in err
    status, _, err = run(capsys, "ad", "N6_6", "X9")
    assert status == 2


def test_compare(capsys, tmp_path):
    P = tmp_path / "P.json"
    P.write_text(json.dumps([[("1" if r == c and r in (0, 5) else "i" if r == c else "0") for c in range(6)]
                             for r in range(6)]))
    status, out, _ = run(capsys, "compare", "N6_7", "N6_6", "--via", str(P))
    assert status == 0 and "certificate verified" in out
    ident = tmp_path / "I.json"
    ident.write_text(json.dumps([["1" if r == c else "0" for c in range(6)] for r in range(6)]))
    status, out, _ = run(capsys, "compare", "N6_6", "N6_7", "--via", str(ident))
    assert status == 1 and "FAILS" in out
    status, out, _ = run(capsys, "compare", "N6_6", "N6_12")
    assert status == 1 and "NOT isomorphic" in out
    status, out, _ = run(capsys, "compare", "N6_6", "N6_7")
    assert status == 0 and "1 vs 2" in out


def test_torus_height_env(capsys, monkeypatch):
    monkeypatch.setenv("RIGIDLIE_HEIGHT", "1")
    _, out, _ = run(capsys, "torus", "N6_6", "--json")
    assert json.loads(out)["height"] == 1
    _, out, _ = run(capsys, "torus", "N6_6", "--json", "--height", "2")
    assert json.loads(out)["height"] == 2
    monkeypatch.setenv("RIGIDLIE_HEIGHT", "x")
    status, _, _ = run(capsys, "torus", "N6_6")
    assert status == 2


def test_report_exit_matches_claims(capsys):
    status, out, _ = run(capsys, "report", "paper", "--quick", "--json")
    data = json.loads(out)
    assert status == (0 if all(c["passed"] for c in data["claims"]) else 1)
    assert len(data["claims"]) == 13 and "classification" in data["limitation"]


def test_console_entry_point():
    res = subprocess.run([sys.executable, "-m", "rigidlie", "catalog", "list"], capture_output=True, text=True)
    assert res.returncode == 0 and "g2hat_r8_22_normal" in res.stdout
