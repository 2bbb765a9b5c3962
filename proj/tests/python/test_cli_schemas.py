import json
import os
import pathlib
import subprocess

import jsonschema
import pytest

REPO = pathlib.Path(__file__).resolve().parents[2]
SCHEMAS = REPO / "docs" / "schemas"

CLI = os.environ.get("POLYREC_CLI", str(REPO / "build" / "polyrec"))
if not os.path.exists(CLI):
    pytest.skip("polyrec CLI binary not built", allow_module_level=True)


def run(*args):
    out = subprocess.run([CLI, *args], capture_output=True, text=True, timeout=300)
    return out.returncode, out.stdout


def schema(name):
    with open(SCHEMAS / f"{name}.schema.json") as f:
        return json.load(f)


def check(name, payload):
    jsonschema.validate(payload, schema(name))


def test_classify_schema():
    for params in ["1,0,1,2", "1,0,1,1", "1,2,-2,-1", "1,-1,2,-3"]:
        code, out = run("classify", "--params", params)
        assert code == 0
        check("classification", json.loads(out))


def test_roots_schema_and_exit():
    code, out = run("roots", "--params", "1,-1,2,-3", "--n", "12")
    assert code == 0
    payload = json.loads(out)
    check("roots", payload)
    assert len(payload["roots"]) == 12


def test_verify_report_schema():
    for suite, args in [
        ("interlace", ["--params", "1,-1,2,-3", "--N", "10"]),
        ("signs", ["--params", "1,-1,2,-3", "--N", "10"]),
        ("lollipop", ["--params", "1,2,-2,-1"]),
        ("normalized", ["--params", "1,-1,1,-1", "--N", "20"]),
    ]:
        code, out = run("verify", suite, *args)
        assert code == 0, (suite, out)
        check("verification_report", json.loads(out))


def test_real_rooted_schema():
    code, out = run("verify", "real-rooted", "--params", "1,-1,2,-3")
    assert code == 0
    payload = json.loads(out)
    check("real_rooted", payload)
    assert payload["criterion"] is True


def test_scan_schema():
    code, out = run("verify", "scan", "--n", "12")
    assert code == 0
    check("scan_summary", json.loads(out))


def test_input_error_exit_code():
    code, _ = run("roots", "--params", "0,1,1,1", "--n", "5")
    assert code == 2
    code, _ = run("classify", "--params", "1,2,3")
    assert code == 2
