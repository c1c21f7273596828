import csv
import io
import json
import math
import subprocess
import sys
from importlib import resources

import jsonschema
import pytest

from braidberry.cli import COLUMNS, main, parse_grid, UsageError
from braidberry.verify import SUITES, run_suites


@pytest.fixture(scope="module")
def schema():
    return json.loads(resources.files("braidberry").joinpath("data/output.schema.json").read_text())


def run(capsys, *args):
    code = main(list(args))
    out = capsys.readouterr()
    return code, out.out, out.err


def rows(text):
    return list(csv.DictReader(io.StringIO(text)))


# --- verify ----------------------------------------------------------------


def test_verify_default_passes(capsys):
    code, out, _ = run(capsys, "verify")
    assert code == 0
    table = rows(out)
    assert [r["check"] for r in table] == list(SUITES)
    assert all(float(r["max_residual"]) <= 1e-9 for r in table)


def test_verify_is_deterministic(capsys):
    first = run(capsys, "verify", "--samples", "1", "--seed", "7")[1]
    second = run(capsys, "verify", "--samples", "1", "--seed", "7")[1]
    assert first == second
    other = run(capsys, "verify", "--samples", "1", "--seed", "8")[1]
    assert other != first


@pytest.mark.parametrize("suite", sorted(SUITES))
def test_verify_injected_fault_names_check(capsys, suite):
    code, out, err = run(capsys, "verify", "--samples", "2", "--inject-fault", suite)
    assert code == 1
    assert f"FAIL {suite}" in err
    failed = [r["check"] for r in rows(out) if r["passed"] == "false"]
    assert failed == [suite]


def test_run_suites_independent_streams():
    all_res = {r.name: r.max_residual for r in run_suites(seed=3, samples=3)}
    one = run_suites(seed=3, samples=3, names=["ybe"])
    assert one[0].max_residual == all_res["ybe"]
    with pytest.raises(ValueError):
        run_suites(names=["nope"])


# --- entangle --------------------------------------------------------------


def test_entangle_default_grid(capsys):
    code, out, _ = run(capsys, "entangle", "--theta-grid", f"0:{math.pi / 2}:4")
    assert code == 0
    table = rows(out)
    assert list(table[0]) == COLUMNS["entangle"]
    assert float(table[0]["negativity_numeric"]) == 0
    vals = [float(r["negativity_numeric"]) for r in table]
    assert vals[2] == pytest.approx(1, abs=1e-10)  # theta = pi/3
    assert vals[3] == pytest.approx(8 / 9, abs=1e-10)
    assert max(float(r["abs_diff"]) for r in table) <= 1e-9


def test_entangle_all_basis_and_degrees(capsys):
    code, out, _ = run(capsys, "entangle", "--theta", "60", "--degrees", "--all-basis",
                       "--phi1", "0.3", "--phi2", "-1.2")
    assert code == 0
    table = rows(out)
    assert [int(r["basis_index"]) for r in table] == list(range(9))
    assert all(float(r["negativity_numeric"]) == pytest.approx(1, abs=1e-10) for r in table)


def test_entangle_json_validates(capsys, schema):
    code, out, _ = run(capsys, "entangle", "--theta-grid", "0:3:7", "--format", "json")
    doc = json.loads(out)
    jsonschema.validate(doc, schema)
    assert doc["status"] == "PASS" and len(doc["rows"]) == 7


def test_csv_floats_round_trip(capsys):
    out = run(capsys, "entangle", "--theta-grid", "0.1:2.9:5")[1]
    js = json.loads(run(capsys, "entangle", "--theta-grid", "0.1:2.9:5", "--format", "json")[1])
    for r, j in zip(rows(out), js["rows"]):
        assert float(r["negativity_numeric"]) == j["negativity_numeric"]


def test_workers_keep_input_order(capsys):
    a = run(capsys, "entangle", "--theta-grid", "0:3:9")[1]
    b = run(capsys, "entangle", "--theta-grid", "0:3:9", "--workers", "4")[1]
    assert a == b


# --- berry -----------------------------------------------------------------


def test_berry_example1(capsys):
    code, out, _ = run(capsys, "berry", "--example", "1", "--theta", "1.5707963")
    assert code == 0
    table = {(r["k"], r["band"]): r for r in rows(out)}
    assert float(table["1", "+"]["gamma_numeric"]) == pytest.approx(-0.1797, abs=1e-4)
    assert abs(float(table["1", "0"]["gamma_numeric"])) <= 1e-6
    assert max(float(r["wrap_distance"]) for r in table.values()) <= 1e-5


def test_berry_example4(capsys):
    code, out, _ = run(capsys, "berry", "--example", "4", "--theta", "0.5")
    assert code == 0
    table = {(r["k"], r["band"]): r for r in rows(out)}
    assert float(table["1", "0"]["gamma_closed"]) == pytest.approx(-2 * math.pi / 7)
    assert float(table["1", "0"]["gamma_numeric"]) == pytest.approx(-0.8976, abs=1e-4)


def test_berry_json_and_general_pair(capsys, schema):
    code, out, _ = run(capsys, "berry", "--n1", "3", "--n2", "2", "--theta", "0.9",
                       "--steps", "4096", "--format", "json")
    doc = json.loads(out)
    jsonschema.validate(doc, schema)
    assert code == 0 and len(doc["rows"]) == 9


def test_berry_reduces_pair(capsys):
    code, _, err = run(capsys, "berry", "--n1", "4", "--n2", "2", "--theta", "0.9", "--steps", "256",
                       "--tol", "1e-2")
    assert code == 0
    assert "reduced to (2, 1)" in err


def test_berry_rejects_degenerate_theta(capsys):
    code, _, err = run(capsys, "berry", "--theta", "0")
    assert code == 2 and "degenerate" in err


def test_berry_fails_on_tight_tolerance(capsys):
    code, out, _ = run(capsys, "berry", "--theta", "0.7", "--steps", "128")
    assert code == 1
    assert max(float(r["wrap_distance"]) for r in rows(out)) > 1e-5


def test_tolerance_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("BRAIDBERRY_TOL", "1e-1")
    code, _, _ = run(capsys, "berry", "--theta", "0.7", "--steps", "128")
    assert code == 0
    code, _, _ = run(capsys, "berry", "--theta", "0.7", "--steps", "128", "--tol", "1e-12")
    assert code == 1


# --- spectrum / decompose --------------------------------------------------


def test_spectrum(capsys, schema):
    code, out, _ = run(capsys, "spectrum", "--theta", str(math.pi / 3), "--t", "0.8")
    assert code == 0
    table = rows(out)
    assert float(table[0]["energy_numeric"]) == pytest.approx(1.633, abs=1e-3)
    doc = json.loads(run(capsys, "spectrum", "--n1", "-2", "--format", "json")[1])
    jsonschema.validate(doc, schema)


def test_decompose(capsys, schema):
    code, out, _ = run(capsys, "decompose", "--theta", "0.9", "--t", "1.7")
    assert code == 0
    table = rows(out)
    assert [int(r["size"]) for r in table] == [2, 1, 1, 2, 1, 2]
    assert all(float(r["leakage"]) <= 1e-10 for r in table)
    assert [float(r["casimir"]) for r in table] == pytest.approx([0.75, 0, 0, 0.75, 0, 0.75])
    doc = json.loads(run(capsys, "decompose", "--format", "json")[1])
    jsonschema.validate(doc, schema)


def test_decompose_needs_equal_drives(capsys):
    code, _, err = run(capsys, "decompose", "--n1", "2")
    assert code == 2 and "phi1 = phi2" in err


# --- plumbing --------------------------------------------------------------


def test_parse_grid():
    assert parse_grid("0:1:3") == [0.0, 0.5, 1.0]
    for bad in ("0:1", "a:b:c", "0:1:0"):
        with pytest.raises(UsageError):
            parse_grid(bad)


def test_theta_and_grid_exclusive(capsys):
    assert run(capsys, "entangle", "--theta", "1", "--theta-grid", "0:1:2")[0] == 2


def test_steps_lower_bound(capsys):
    assert run(capsys, "berry", "--steps", "10")[0] == 2


def test_out_file(tmp_path, capsys):
    path = tmp_path / "n.csv"
    assert main(["entangle", "--out", str(path)]) == 0
    assert path.read_text().splitlines()[0] == ",".join(COLUMNS["entangle"])


def test_unwritable_out(tmp_path, capsys):
    assert main(["entangle", "--out", str(tmp_path / "missing" / "x.csv")]) == 3


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "braidberry", "spectrum"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.startswith("theta,t,k,band")
