import json
import os
import subprocess
import sys
from pathlib import Path

import jsonschema
import numpy as np
import pytest

from hgamma.cli import main

GOLDEN = Path(__file__).parent / "golden"
REGEN = os.environ.get("GOLDEN_REGEN") == "1"

CURVE_TRIG = {
    "family": {"kind": "trig"},
    "n": 3,
    "h": 0.2,
    "interval": [0.1, 1.3],
    "controls": [[0.0, 0.0], [0.4, 1.0], [0.9, -0.2], [1.2, 0.6]],
}
CURVE_POLY = {
    "family": {"kind": "polynomial"},
    "n": 2,
    "h": 0.25,
    "interval": [0.0, 1.0],
    "controls": [[0.0, 0.0], [0.5, 1.0], [1.0, 0.0]],
}


def run_cli(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out


def check_golden(name, text):
    path = GOLDEN / name
    if REGEN:
        path.parent.mkdir(exist_ok=True)
        path.write_text(text)
    assert path.read_text() == text


@pytest.fixture(scope="module")
def curve_files(tmp_path_factory):
    d = tmp_path_factory.mktemp("curves")
    trig = d / "trig.json"
    trig.write_text(json.dumps(CURVE_TRIG))
    poly = d / "poly.json"
    poly.write_text(json.dumps(CURVE_POLY))
    return {"trig": str(trig), "poly": str(poly)}


# --- validate ----------------------------------------------------------------------

def test_validate_dependent_golden(capsys):
    code, out = run_cli(capsys, ["validate", "--family", "trig", "--n", "2",
                                 "--h", "1.5707963"])
    assert code == 1
    check_golden("validate_trig_dependent.json", out)
    payload = json.loads(out)
    assert payload["verdict"] == "dependent"


def test_validate_independent_golden(capsys):
    code, out = run_cli(capsys, ["validate", "--family", "polynomial", "--n", "5",
                                 "--h", "0.3"])
    assert code == 0
    check_golden("validate_poly.json", out)
    assert json.loads(out)["verdict"] == "independent"


def test_validate_trig_n4_dependent(capsys):
    code, out = run_cli(capsys, ["validate", "--family", "trig", "--n", "4",
                                 "--h", "0.7853982"])
    assert code == 1
    assert json.loads(out)["verdict"] == "dependent"


def test_validate_with_interval_guards(capsys):
    code, out = run_cli(capsys, ["validate", "--family", "trig", "--n", "2",
                                 "--h", "0.1", "--a", "0", "--b", "3.14159265358979"])
    assert code == 1
    payload = json.loads(out)
    assert payload["verdict"] == "independent"
    assert any(g["kind"] == "guard" for g in payload["guards"])


def test_validate_family_flag_variants(capsys):
    code, out = run_cli(capsys, ["validate", "--family", "exp_weighted",
                                 "--inner", "trig_discrete", "--inner-d", "0.5",
                                 "--n", "2", "--h", "0.3"])
    assert code == 0 and json.loads(out)["verdict"] == "independent"
    code, out = run_cli(capsys, [
        "validate", "--family",
        '{"kind":"exp_weighted","d":0.3,"inner":{"kind":"hyperbolic"}}',
        "--n", "3", "--h", "0.4"])
    assert code == 0 and json.loads(out)["verdict"] == "independent"
    code, _ = run_cli(capsys, ["validate", "--family", "trig_discrete",
                               "--d", "0", "--n", "2", "--h", "0.3"])
    assert code == 2  # d = 0 rejected at construction


def test_validate_report_schema(capsys):
    schema = {
        "type": "object",
        "required": ["verdict", "q", "qbinomials", "det", "eigenvalues",
                     "diagonalizable", "guards", "valid"],
        "properties": {
            "verdict": {"enum": ["independent", "dependent", "borderline"]},
            "qbinomials": {"type": "array",
                           "items": {"type": "object",
                                     "required": ["re", "im"]}},
            "det": {"type": "number"},
            "guards": {"type": "array"},
            "valid": {"type": "boolean"},
        },
    }
    _, out = run_cli(capsys, ["validate", "--family", "trig", "--n", "3", "--h", "0.4"])
    jsonschema.validate(json.loads(out), schema)


# --- basis -------------------------------------------------------------------------

def test_basis_csv_trivial_rows_golden(capsys):
    code, out = run_cli(capsys, ["basis", "--family", "polynomial", "--n", "2",
                                 "--h", "0", "--a", "0", "--b", "1",
                                 "--samples", "3", "--format", "csv"])
    assert code == 0
    check_golden("basis_poly_n2.csv", out)
    lines = out.strip().splitlines()
    assert lines[0] == "x,B0,B1,B2"
    rows = [list(map(float, line.split(","))) for line in lines[1:]]
    assert rows[0][1:] == [1.0, 0.0, 0.0]
    assert rows[1][1:] == [0.25, 0.5, 0.25]
    assert rows[2][1:] == [0.0, 0.0, 1.0]


def test_basis_csv_round_trip_bit_for_bit(capsys):
    code, out = run_cli(capsys, ["basis", "--family", "trig", "--n", "3",
                                 "--h", "0.2", "--a", "0.1", "--b", "1.3",
                                 "--samples", "7", "--format", "csv"])
    assert code == 0
    from hgamma.service import basis_table
    from hgamma import FamilySpec

    table = basis_table(FamilySpec("trig"), 3, 0.2, 0.1, 1.3, 7)
    lines = out.strip().splitlines()[1:]
    for i, line in enumerate(lines):
        values = [float(tok) for tok in line.split(",")]
        assert values[0] == table["x"][i]
        assert values[1:] == table["B"][i]


def test_basis_unity_column(capsys):
    code, out = run_cli(capsys, ["basis", "--family", "trig", "--n", "2",
                                 "--h", "0.3", "--a", "0.1", "--b", "1.2",
                                 "--samples", "9", "--format", "csv", "--unity"])
    assert code == 0
    check_golden("basis_trig_unity.csv", out)
    lines = out.strip().splitlines()
    assert lines[0].endswith(",unity_sum")
    plain_gap = 0.0
    for line in lines[1:]:
        cols = [float(t) for t in line.split(",")]
        assert abs(cols[-1] - 1.0) <= 1e-9
        plain_gap = max(plain_gap, abs(sum(cols[1:-1]) - 1.0))
    assert plain_gap > 1e-3  # the unweighted sum is not a partition of unity


def test_basis_json_golden(capsys):
    code, out = run_cli(capsys, ["basis", "--family", "trig", "--n", "2",
                                 "--h", "0.3", "--a", "0.1", "--b", "1.2",
                                 "--samples", "5", "--format", "json"])
    assert code == 0
    check_golden("basis_trig.json", out)
    payload = json.loads(out)
    jsonschema.validate(payload, {
        "type": "object",
        "required": ["x", "B"],
        "properties": {
            "x": {"type": "array", "items": {"type": "number"}},
            "B": {"type": "array",
                  "items": {"type": "array", "items": {"type": "number"}}},
        },
    })
    assert len(payload["x"]) == 5 and len(payload["B"]) == 5


def test_basis_svg_golden(capsys):
    code, out = run_cli(capsys, ["basis", "--family", "trig", "--n", "2",
                                 "--h", "0.3", "--a", "0.1", "--b", "1.2",
                                 "--samples", "33", "--format", "svg"])
    assert code == 0
    check_golden("basis_trig.svg", out)
    assert out.startswith("<svg ")
    assert out.count("<polyline") == 3


def test_basis_invalid_params_exit_one(capsys):
    code, out = run_cli(capsys, ["basis", "--family", "trig", "--n", "2",
                                 "--h", "1.5707963267948966", "--a", "0", "--b", "1"])
    assert code == 1
    payload = json.loads(out)
    assert payload["error"] == "DependentBasis"
    assert payload["guards"]


# --- curve -------------------------------------------------------------------------

def test_curve_eval_endpoint_golden(capsys, curve_files):
    code, out = run_cli(capsys, ["curve", "--input", curve_files["trig"],
                                 "--eval", "0.1"])
    assert code == 0
    check_golden("curve_eval.json", out)
    payload = json.loads(out)
    np.testing.assert_allclose(payload["point"], CURVE_TRIG["controls"][0], atol=1e-11)


def test_curve_sample_csv_golden(capsys, curve_files):
    code, out = run_cli(capsys, ["curve", "--input", curve_files["trig"],
                                 "--sample", "5", "--format", "csv"])
    assert code == 0
    check_golden("curve_sample.csv", out)
    assert out.splitlines()[0] == "x,p0,p1"


def test_curve_sample_svg_golden(capsys, curve_files):
    code, out = run_cli(capsys, ["curve", "--input", curve_files["trig"],
                                 "--sample", "5", "--format", "svg"])
    assert code == 0
    check_golden("curve_sample.svg", out)


def test_curve_subdivide_svg_golden(capsys, curve_files):
    code, out = run_cli(capsys, ["curve", "--input", curve_files["trig"],
                                 "--subdivide", "0.7", "--format", "svg"])
    assert code == 0
    check_golden("curve_subdivide.svg", out)
    # curve polyline + control polygon + two sub-polygons
    assert out.count("<polyline") == 4


def test_curve_subdivide_golden(capsys, curve_files):
    code, out = run_cli(capsys, ["curve", "--input", curve_files["trig"],
                                 "--subdivide", "0.7"])
    assert code == 0
    check_golden("curve_subdivide.json", out)
    payload = json.loads(out)
    assert payload["left"]["interval"] == [0.1, 0.7]
    assert payload["right"]["interval"] == [0.7, 1.3]


def test_curve_midpoint_golden(capsys, curve_files):
    code, out = run_cli(capsys, ["curve", "--input", curve_files["trig"],
                                 "--midpoint", "3"])
    assert code == 0
    check_golden("curve_midpoint.json", out)
    payload = json.loads(out)
    assert len(payload["segments"]) == 8
    assert payload["deviation"] > 0
    schema = {
        "type": "object",
        "required": ["depth", "segments"],
        "properties": {
            "depth": {"type": "integer"},
            "segments": {"type": "array", "items": {
                "type": "object",
                "required": ["family", "n", "h", "interval", "controls"],
            }},
        },
    }
    jsonschema.validate(payload, schema)


def test_curve_elevate_polynomial_golden(capsys, curve_files):
    code, out = run_cli(capsys, ["curve", "--input", curve_files["poly"],
                                 "--elevate"])
    assert code == 0
    check_golden("curve_elevate_poly.json", out)
    payload = json.loads(out)
    assert payload["curve"]["n"] == 3


def test_curve_elevate_trig_nonzero_h_fails(capsys, curve_files):
    code, out = run_cli(capsys, ["curve", "--input", curve_files["trig"],
                                 "--elevate"])
    assert code == 1
    assert json.loads(out)["error"] == "UnsupportedElevation"


def test_curve_interpolate_golden(capsys, curve_files):
    code, out = run_cli(capsys, ["curve", "--input", curve_files["trig"],
                                 "--interpolate"])
    assert code == 0
    check_golden("curve_interpolate.json", out)
    payload = json.loads(out)
    assert payload["curve"]["interval"] == [0.1, 0.1 - 3 * 0.2]


def test_curve_requires_exactly_one_action(capsys, curve_files):
    code, _ = run_cli(capsys, ["curve", "--input", curve_files["trig"]])
    assert code == 2
    code, _ = run_cli(capsys, ["curve", "--input", curve_files["trig"],
                               "--eval", "0.5", "--elevate"])
    assert code == 2


def test_curve_missing_file_usage_error(capsys):
    code, _ = run_cli(capsys, ["curve", "--input", "/nonexistent.json",
                               "--eval", "0.5"])
    assert code == 2


# --- verify ------------------------------------------------------------------------

def test_verify_permutation_golden(capsys):
    code, out = run_cli(capsys, ["verify", "--suite", "permutation", "--seed", "42"])
    assert code == 0
    check_golden("verify_permutation.txt", out)
    assert "PASS" in out


def test_verify_marsden_seed7(capsys):
    code, out = run_cli(capsys, ["verify", "--suite", "marsden", "--seed", "7"])
    assert code == 0
    assert "PASS" in out


def test_verify_independence_grid_trig_golden(capsys):
    import math

    code, out = run_cli(capsys, ["verify", "--suite", "independence-grid",
                                 "--family", "trig", "--n", "2"])
    assert code == 0
    check_golden("verify_grid_trig2.txt", out)
    # dependent points only near pi/2 + k pi
    deps = out.splitlines()[-1].split(":")[1].strip()
    if deps != "none":
        for tok in deps.split(","):
            h = float(tok)
            dist = min(abs(h - target) for target in
                       (-math.pi / 2, math.pi / 2, -3 * math.pi / 2, 3 * math.pi / 2))
            assert dist < 1e-3


def test_verify_all_suites_pass_seed42(capsys):
    for suite in ("marsden", "unity", "shift", "permutation", "blossom-axioms"):
        code, out = run_cli(capsys, ["verify", "--suite", suite, "--seed", "42"])
        assert code == 0, (suite, out)
        assert "FAIL" not in out


# --- exit codes / entry point --------------------------------------------------------

def test_unknown_subcommand_usage_exit(capsys):
    assert main(["frobnicate"]) == 2


def test_bad_flag_usage_exit(capsys):
    assert main(["validate", "--family", "trig", "--n", "two", "--h", "0.1"]) == 2


def test_installed_entry_point_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "hgamma.cli", "validate", "--family", "polynomial",
         "--n", "2", "--h", "0.1"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["verdict"] == "independent"
