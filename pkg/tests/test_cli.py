import json
import subprocess
import sys

import pytest

from trisect import fixtures as fx
from trisect.cli import EXIT_ERROR, EXIT_FAIL, EXIT_OK, main

INTRO = {"f": ["-1", "0", "0", "0", "4/3"], "g": [str(c) for c in fx.intro_surface(0).g.coeffs]}


def run(capsys, tmp_path, command, payload=None, *extra):
    argv = [command, *extra]
    if payload is not None:
        path = tmp_path / "in.json"
        path.write_text(json.dumps(payload))
        argv += ["-i", str(path)]
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_fibres_type_two(capsys, tmp_path):
    code, out, _ = run(capsys, tmp_path, "fibres", {"f": [], "g": ["0", "1"]})
    body = json.loads(out)
    assert code == EXIT_OK
    kinds = {r["location"]: r["type"] for r in body["fibres"]}
    assert kinds == {"0": "II", "inf": "II*"}
    assert body["dp1_blowup"] == "no"


def test_fibres_intro_yes(capsys, tmp_path):
    code, out, _ = run(capsys, tmp_path, "fibres", {"surface": INTRO})
    body = json.loads(out)
    assert body["dp1_blowup"] == "yes" and body["complete"]


def test_fibres_degenerate_surface(capsys, tmp_path):
    surface = {"f": [str(c) for c in fx.DEGENERATE_F.coeffs], "g": [str(c) for c in fx.DEGENERATE_G.coeffs]}
    _, out, _ = run(capsys, tmp_path, "fibres", surface)
    body = json.loads(out)
    at_one = next(r for r in body["fibres"] if r["location"] == "1")
    assert not at_one["irreducible"] and at_one["valuations"]["disc"] == 3
    assert body["dp1_blowup"] == "no"


def test_build_intro(capsys, tmp_path):
    code, out, _ = run(capsys, tmp_path, "build", {**INTRO, "a": 1, "b": 0, "t0": 1, "gamma": 0})
    body = json.loads(out)
    assert code == EXIT_OK
    assert (body["trisection"]["c"], body["trisection"]["d"], body["trisection"]["e"]) == ("-454/9", "926/9", "-472/9")
    assert body["multiplicity_at_Q"] == 3


def test_build_generic_method_agrees(capsys, tmp_path):
    payload = {**INTRO, "a": 1, "b": 0, "t0": 1, "gamma": "5/2"}
    _, closed, _ = run(capsys, tmp_path, "build", payload)
    _, generic, _ = run(capsys, tmp_path, "build", {**payload, "method": "generic"})
    assert closed == generic


def test_build_rejects_zero_base(capsys, tmp_path):
    code, out, err = run(capsys, tmp_path, "build", {**INTRO, "a": 1, "b": 0, "t0": 0, "gamma": 0})
    assert code == EXIT_ERROR and out == ""
    assert json.loads(err)["message"] == "t0(at0+b) = 0"


def test_build_model_four_from_R(capsys, tmp_path):
    fam = fx.find_by_name("model-04")
    s = fam.surface(0)
    payload = {**s.to_json(), "a": 1, "b": 0, "t0": 2, "R": [1, 2, 1]}
    code, out, _ = run(capsys, tmp_path, "build", payload)
    body = json.loads(out)
    assert code == EXIT_OK
    assert body["multiplicity_at_Q"] == 3
    assert body["Q"] == {"x": "4/3", "y": "8/3", "t": "2"}


def test_admissible_reason(capsys, tmp_path):
    code, out, _ = run(capsys, tmp_path, "admissible", {**INTRO, "a": 1, "b": 0, "t0": 2})
    assert code == EXIT_FAIL
    assert json.loads(out)["admissible"] is False


def test_gamma_for_intro(capsys, tmp_path):
    code, out, _ = run(capsys, tmp_path, "gamma-for", {**INTRO, "a": 1, "b": 0, "t0": 1, "R": {"x": 1, "y": 1, "t": 2}})
    assert code == EXIT_OK
    assert json.loads(out)["gamma"] == "-863/9"


def test_multiplicity_and_genus(capsys, tmp_path):
    T = dict(zip("abcdeh", ["1", "0", "-454/9", "926/9", "-472/9", "0"]))
    code, out, _ = run(capsys, tmp_path, "multiplicity", {**INTRO, "trisection": T, "point": ["1/3", "1"]})
    assert json.loads(out) == {"multiplicity": 3}
    code, out, _ = run(capsys, tmp_path, "genus", {**INTRO, "trisection": T})
    body = json.loads(out)
    assert body["genus"] == 1 and body["complete"]


def test_intersect_residuals(capsys, tmp_path):
    surface = {"f": [str(c) for c in fx.DEGENERATE_F.coeffs], "g": [str(c) for c in fx.DEGENERATE_G.coeffs]}
    T = dict(zip("abcdeh", [str(c) for c in fx.degenerate_member(0)]))
    _, out, _ = run(capsys, tmp_path, "intersect", {**surface, "trisection": T, "t1": 2, "x": 1})
    body = json.loads(out)
    assert body["residual_sum"] == "8" and body["residual_product"] == "7"


def test_fam1_and_fam2(capsys, tmp_path):
    code, out, _ = run(capsys, tmp_path, "fam1", {k: str(v) for k, v in fx.GENUS_ZERO_INPUTS.items()})
    assert code == EXIT_OK
    assert json.loads(out)["trisection"]["h"] == "-1461/272"
    code, out, _ = run(capsys, tmp_path, "fam2", {**fx.DEGENERATE_INPUTS, "samples": [0, 2, 3]})
    body = json.loads(out)
    assert code == EXIT_OK
    assert set(body["pencil"]) == {"0", "2", "3"}


def test_famk_check(capsys, tmp_path):
    code, out, _ = run(capsys, tmp_path, "famk-check", {**INTRO, "a": 1, "t0": 1})
    assert code == EXIT_OK and json.loads(out) == {"member": True}
    code, _, _ = run(capsys, tmp_path, "famk-check", {**INTRO, "a": 1, "t0": 2})
    assert code == EXIT_FAIL


@pytest.mark.parametrize(
    "payload, error",
    [
        ({"f": ["-3"], "g": ["2"]}, "DegenerateSurfaceError"),
        ({"f": ["1"]}, "InputError"),
        ({"f": ["x"], "g": ["1"]}, "ValueError"),
    ],
)
def test_error_exit_codes(capsys, tmp_path, payload, error):
    code, _, err = run(capsys, tmp_path, "fibres", payload)
    assert code == EXIT_ERROR
    assert json.loads(err)["error"] == error


def test_invalid_json(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    assert main(["fibres", "-i", str(path)]) == EXIT_ERROR


def test_table_output_and_out_file(capsys, tmp_path):
    target = tmp_path / "out.txt"
    code, out, _ = run(capsys, tmp_path, "fibres", {"f": [], "g": ["0", "1"]}, "--output", "table", "-o", str(target))
    assert code == EXIT_OK and out == ""
    text = target.read_text()
    assert "dp1_blowup" in text and "II*" in text


def test_verify_examples_pass_and_negative_control(capsys, tmp_path):
    code, out, _ = run(capsys, tmp_path, "verify-paper-examples", None, "--output", "table")
    assert code == EXIT_OK
    assert out.strip().endswith("checks passed")
    assert "FAIL" not in out
    control = {"overrides": {"model-03[alpha=0]": {"expected_genus": 2}}}
    code, out, _ = run(capsys, tmp_path, "verify-paper-examples", control)
    body = json.loads(out)
    assert code == EXIT_FAIL and body["failed"] == 1
    (bad,) = [r for r in body["rows"] if not r["ok"]]
    assert bad["fixture"] == "model-03[alpha=0]" and bad["check"] == "genus of T_R"


def test_deterministic_bytes_via_module():
    payload = json.dumps({**INTRO, "a": 1, "b": 0, "t0": 1, "gamma": "1/7"})
    runs = [
        subprocess.run([sys.executable, "-m", "trisect", "build"], input=payload, capture_output=True, text=True)
        for _ in range(2)
    ]
    assert runs[0].returncode == 0
    assert runs[0].stdout == runs[1].stdout
