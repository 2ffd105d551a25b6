import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from trigonal.cli import run

DATA = Path(__file__).parent / "data"
JOB = DATA / "reduce_c34.job.json"
GOLDEN = DATA / "reduce_c34.golden.json"
C34 = json.loads(JOB.read_text())["curve"]


def call(argv, payload=None):
    out = io.StringIO()
    text = payload if isinstance(payload, str) else json.dumps(payload)
    code = run(argv, stdin=io.StringIO(text or ""), stdout=out)
    return code, json.loads(out.getvalue())


def test_reduce_matches_golden():
    out = io.StringIO()
    assert run(["reduce", "--trace", str(JOB)], stdout=out) == 0
    assert out.getvalue() == GOLDEN.read_text()


def test_verify_accepts_reduce_output():
    code, res = call(["verify", "-"], GOLDEN.read_text())
    assert code == 0 and res["equivalent"] is True and res["confirmed"] is True


def test_verify_rejects_tampered_output():
    doc = json.loads(GOLDEN.read_text())
    doc["points"] = doc["points"][:3] + [doc["points"][0]]
    code, res = call(["verify", "-"], doc)
    assert code == 0 and res["equivalent"] is False


def test_two_processes_identical():
    cmd = [sys.executable, "-m", "trigonal", "reduce", "--trace", str(JOB)]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b == GOLDEN.read_bytes()


def test_singular_curve_exit_1():
    job = {"curve": {"family": "C1", "m": 1, "lambda": {}, "field": {"kind": "prime", "p": 7}}}
    code, res = call(["curve-check", "-"], job)
    assert code == 1 and res["error"]["code"] == "SingularCurve"


def test_curve_check_output():
    code, res = call(["curve-check", "-"], {"curve": C34})
    assert code == 0
    assert res["genus"] == 3 and res["gap_sequence"] == [1, 2, 5]
    assert [(m["i"], m["j"]) for m in res["monomials"]] == [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1)]


@pytest.mark.parametrize("argv,payload", [
    (["reduce", "-"], "{not json"),
    (["reduce", "-"], {"curve": C34, "points": [["1", "2"]], "extra": 1}),
    (["nonsense", "-"], {}),
    (["reduce", "/nonexistent/job.json"], None),
    (["reduce", "-"], {"curve": {**C34, "field": {"kind": "prime", "p": "x"}}, "points": []}),
])
def test_usage_errors_exit_2(argv, payload):
    code, res = call(argv, payload)
    assert code == 2 and res["error"]["code"] == "UsageError"
    assert set(res["error"]) == {"code", "message", "context"}


def test_off_curve_point_exit_1():
    code, res = call(["reduce", "-"], {"curve": C34, "points": [["1", "1"]] * 4})
    assert code == 1 and res["error"]["code"] == "OffCurvePoint"


def test_rep_and_invert_round_trip():
    pts = json.loads(JOB.read_text())["points"][:3]
    code, rep = call(["rep", "-"], {"curve": C34, "points": pts})
    assert code == 0
    code, neg = call(["invert", "-"], {"curve": C34, "H": rep["H"], "I": rep["I"]})
    assert code == 0
    code, back = call(["invert", "-"], {"curve": C34, "H": neg["H"], "I": neg["I"]})
    assert (back["H"], back["I"]) == (rep["H"], rep["I"])


def test_add_with_points():
    pts = json.loads(JOB.read_text())["points"]
    job = {"curve": C34, "a": {"points": pts[:3]}, "b": {"points": pts[1:]}}
    code, res = call(["add", "--points", "-"], job)
    assert code == 0 and set(res) >= {"H", "I", "reduced_points"}
    code2, res2 = call(["add", "--points", "-"], {"curve": C34, "a": job["b"], "b": job["a"]})
    assert res2 == res


def test_random_degree_uses_seed():
    job = {"curve": C34, "random_degree": 5}
    _, a = call(["reduce", "--seed", "3", "-"], job)
    _, b = call(["reduce", "--seed", "3", "-"], job)
    _, c = call(["reduce", "--seed", "4", "-"], job)
    assert a == b and a["points"] != c["points"]


def test_pretty_format():
    out = io.StringIO()
    run(["curve-check", "--format", "pretty", "-"], stdin=io.StringIO(json.dumps({"curve": C34})), stdout=out)
    assert out.getvalue().startswith("{\n  ")


def test_census_command():
    job = {"curve": {"family": "C1", "m": 1, "lambda": {"2": "3", "4": "2", "12": "6"},
                     "field": {"kind": "prime", "p": 7}}}
    code, res = call(["census", "-"], job)
    assert code == 0 and res["failed"] == [] and res["total"] == res["expected_total"]
