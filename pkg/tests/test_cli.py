import json
import subprocess
import sys

import jsonschema
import pytest

from loopext.cli import RunConfig, main

from conftest import ROOT

CASES = json.loads((ROOT / "corpus" / "v1" / "cases.json").read_text())["cases"]
SCHEMA = json.loads((ROOT / "docs" / "report_schema.json").read_text())


@pytest.fixture(autouse=True)
def at_root(monkeypatch):
    monkeypatch.chdir(ROOT)


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("case", CASES, ids=[c["name"] for c in CASES])
def test_golden(case, capsys):
    code, out, _ = run(case["argv"], capsys)
    assert code == case["exit"]
    golden = (ROOT / "corpus" / "v1" / "reports" / f"{case['name']}.json").read_text()
    assert out == golden
    jsonschema.validate(json.loads(out), SCHEMA)


def test_schema_rejects_incomplete_report():
    report = json.loads((ROOT / "corpus" / "v1" / "reports" / "descend-a2-swap.json").read_text())
    del report["result"]["kernel_central"]
    with pytest.raises(jsonschema.ValidationError):
        jsonschema.validate(report, SCHEMA)


def test_report_is_deterministic(capsys):
    argv = ["descend", "--shipped", "a1-klein", "--window", "1", "--seed", "7"]
    first = run(argv, capsys)
    second = run(argv, capsys)
    assert first == second and first[0] == 0
    report = json.loads(first[1])
    assert report["seed"] == 7 and report["config"]["seed"] == 7
    assert report["result"]["averaging"]["status"] == "pass"


def test_verify_algebra_text(capsys):
    code, out, _ = run(["verify-algebra", "--type", "A1", "--format", "text"], capsys)
    assert code == 0
    assert "status: pass" in out and "checks_run: 27" in out


def test_output_file(tmp_path, capsys):
    target = tmp_path / "r.json"
    code, out, _ = run(["gl2z", "--zeta", "i", "--output", str(target)], capsys)
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["result"]["count"] == 4


@pytest.mark.parametrize("argv,needle", [
    (["verify-algebra", "--type", "H3"], "unsupported"),
    (["gl2z", "--zeta", "0.5"], "cannot parse"),
    (["lift", "--theta", "bogus"], "malformed"),
    (["descend", "--datum", "no/such/file.json"], "No such file"),
    (["descend", "--shipped", "nothing"], "unknown shipped datum"),
    (["cocycle", "--kind", "tabulated"], "--file"),
    (["cocycle", "--type", "A1", "--window", "0"], "window"),
])
def test_input_errors(argv, needle, capsys):
    code, _, err = run(argv, capsys)
    assert code == 2 and needle in err


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["gl2z"])
    assert exc.value.code == 2


def test_run_config_validation():
    with pytest.raises(ValueError):
        RunConfig(command="gl2z", format="xml")


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "loopext", "verify-algebra", "--type", "A1"],
                          capture_output=True, text=True, cwd=ROOT)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["result"]["jacobi"]["checks_run"] == 27
