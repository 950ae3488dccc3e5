import json
import subprocess
import sys

from braidalg.builtin import builtin_sl
from braidalg.cli import main
from braidalg.fixtures import (matrix_entries, representation_fixture,
                               write_fixture)
from braidalg.linalg import SymMatrix, flip_matrix
from braidalg.scalar import ONE
from braidalg.uqg import Gen, Representation


def run_cli(args):
    proc = subprocess.run([sys.executable, "-m", "braidalg", *args],
                          capture_output=True, text=True)
    return proc


def test_validate_r_builtin_ok(tmp_path):
    out = tmp_path / "v.json"
    proc = run_cli(["validate-r", "--builtin", "sl:2", "--show-minimal-poly",
                    "--json-out", str(out)])
    assert proc.returncode == 0
    assert "braid equation: holds" in proc.stdout
    assert "minimal polynomial" in proc.stdout
    doc = json.loads(out.read_text())
    assert doc["status"] == "pass"
    assert doc["braid_equation"] is True
    assert doc["minimal_poly"] == ["-1", "-q + q^-1", "1"]


def test_validate_r_flip_fixture(tmp_path):
    fixture = tmp_path / "flip.json"
    write_fixture({"kind": "rmatrix", "dim": 2, "form": "braiding",
                   "name": "flip", "entries": matrix_entries(flip_matrix(2))},
                  fixture)
    proc = run_cli(["validate-r", "--input", str(fixture),
                    "--show-minimal-poly"])
    assert proc.returncode == 0
    assert "minimal polynomial: x^2 - 1" in proc.stdout


def test_validate_r_non_braid_exits_1(tmp_path):
    bad = SymMatrix.from_diagonal([ONE, ONE, ONE, ONE]) + \
        SymMatrix.unit(4, 1, 2)
    fixture = tmp_path / "bad.json"
    write_fixture({"kind": "rmatrix", "dim": 2, "form": "braiding",
                   "entries": matrix_entries(bad)}, fixture)
    proc = run_cli(["validate-r", "--input", str(fixture)])
    assert proc.returncode == 1
    assert "FAILS" in proc.stdout


def test_validate_r_malformed_fixture_exits_2(tmp_path):
    fixture = tmp_path / "trunc.json"
    fixture.write_text('{"kind": "rmatrix", "dim": 2, "entries": [["q"]]}')
    proc = run_cli(["validate-r", "--input", str(fixture)])
    assert proc.returncode == 2
    assert "error" in proc.stderr


def test_validate_r_unreadable_json_exits_2(tmp_path):
    fixture = tmp_path / "broken.json"
    fixture.write_text('{"kind": ')
    proc = run_cli(["validate-r", "--input", str(fixture)])
    assert proc.returncode == 2


def test_chi_relations_output():
    proc = run_cli(["chi", "--builtin", "sl:3", "--poly", "x - q",
                    "--show-relations"])
    assert proc.returncode == 0
    for line in ("x1 x2 = q*x2 x1", "x1 x3 = q*x3 x1", "x2 x3 = q*x3 x2"):
        assert line in proc.stdout


def test_chi_hilbert_output():
    proc = run_cli(["chi", "--builtin", "sl:2", "--poly", "x + q^-1",
                    "--hilbert", "--max-degree", "4"])
    assert proc.returncode == 0
    assert "hilbert: 1, 2, 1, 0, 0" in proc.stdout


def test_chi_invertible_poly_warns():
    proc = run_cli(["chi", "--builtin", "sl:2", "--poly", "x - q^5"])
    assert proc.returncode == 0
    assert "warning" in proc.stdout
    assert "rank: 4" in proc.stdout


def test_chi_bad_poly_exits_2():
    proc = run_cli(["chi", "--builtin", "sl:2", "--poly", "x + *"])
    assert proc.returncode == 2


def test_chi_relations_fixture(tmp_path):
    fixture = tmp_path / "rels.json"
    write_fixture({
        "kind": "relations", "alphabet": 2, "name": "quantum plane",
        "relations": [[{"coeff": "1", "word": [1, 2]},
                       {"coeff": "-q", "word": [2, 1]}]],
    }, fixture)
    proc = run_cli(["chi", "--input", str(fixture), "--hilbert",
                    "--max-degree", "3"])
    assert proc.returncode == 0
    assert "hilbert: 1, 2, 3, 4" in proc.stdout


def test_check_builtin_all_subchecks():
    proc = run_cli(["check", "--rep", "sl:2", "relations", "admissible",
                    "ideal", "--poly", "x - q"])
    assert proc.returncode == 0
    assert "PASS" in proc.stdout


def test_check_measuring_cli():
    proc = run_cli(["check", "--rep", "sl:2", "measuring", "--poly", "x - q",
                    "--max-degree", "3", "--samples", "100", "--seed", "1"])
    assert proc.returncode == 0


def test_check_independence_cli():
    proc = run_cli(["check", "--rep", "sl:2", "independence"])
    assert proc.returncode == 0
    assert "necessary" in proc.stdout


def test_validate_r_reports_convention():
    proc = run_cli(["validate-r", "--builtin", "sl:3"])
    assert proc.returncode == 0
    assert "convention" in proc.stdout


def test_check_mutated_representation_fails(tmp_path):
    rep, space = builtin_sl(2)
    assign = dict(rep.assign)
    entries = [list(row) for row in assign[Gen("E", 0)].entries]
    entries[0][0] = ONE
    assign[Gen("E", 0)] = SymMatrix(entries)
    mutated = Representation(rep.presentation, assign, name="mutated")
    fixture = tmp_path / "mutated.json"
    write_fixture(representation_fixture(mutated, space), fixture)
    proc = run_cli(["check", "--rep", str(fixture), "admissible"])
    assert proc.returncode == 1
    assert "FAIL" in proc.stdout


def test_check_rep_fixture_roundtrip(tmp_path):
    rep, space = builtin_sl(2)
    fixture = tmp_path / "sl2.json"
    write_fixture(representation_fixture(rep, space), fixture)
    proc = run_cli(["check", "--rep", str(fixture), "relations", "admissible"])
    assert proc.returncode == 0


def test_check_missing_space_exits_2(tmp_path):
    rep, _ = builtin_sl(2)
    fixture = tmp_path / "nospace.json"
    write_fixture(representation_fixture(rep), fixture)
    proc = run_cli(["check", "--rep", str(fixture), "admissible"])
    assert proc.returncode == 2


def test_check_rmatrix_override(tmp_path):
    rep, _ = builtin_sl(2)
    fixture = tmp_path / "nospace.json"
    write_fixture(representation_fixture(rep), fixture)
    proc = run_cli(["check", "--rep", str(fixture), "--rmatrix", "sl:2",
                    "admissible"])
    assert proc.returncode == 0


def test_frt_command(tmp_path):
    out = tmp_path / "frt.json"
    proc = run_cli(["frt", "--builtin", "sl:2", "--max-degree", "3",
                    "--json-out", str(out)])
    assert proc.returncode == 0
    doc = json.loads(out.read_text())
    assert doc["relation_count"] == 6
    assert doc["degree2_dimension"] == 10
    assert doc["hilbert"] == [1, 4, 10, 20]
    assert doc["coideal"]["passed"] is True


def test_frt_pair_with():
    proc = run_cli(["frt", "--builtin", "sl:2", "--pair-with", "sl:2"])
    assert proc.returncode == 0
    assert "annihilation" in proc.stdout
    assert "orientation: direct" in proc.stdout


def test_frt_n1_fixture(tmp_path):
    fixture = tmp_path / "n1.json"
    write_fixture({"kind": "rmatrix", "dim": 1, "form": "braiding",
                   "entries": [["q"]]}, fixture)
    proc = run_cli(["frt", "--input", str(fixture)])
    assert proc.returncode == 0
    assert "empty relation set" in proc.stdout


def test_usage_error_exits_2():
    proc = run_cli(["validate-r"])
    assert proc.returncode == 2
    proc = run_cli(["chi", "--builtin", "sl:2"])  # missing --poly
    assert proc.returncode == 2


def test_main_inprocess_returns_codes(capsys):
    assert main(["validate-r", "--builtin", "sl:2"]) == 0
    capsys.readouterr()


def test_reports_byte_identical(tmp_path):
    args = ["frt", "--builtin", "sl:2", "--max-degree", "2"]
    first = run_cli(args + ["--json-out", str(tmp_path / "a.json")])
    second = run_cli(args + ["--json-out", str(tmp_path / "b.json")])
    assert first.stdout == second.stdout
    assert (tmp_path / "a.json").read_bytes() == \
        (tmp_path / "b.json").read_bytes()
