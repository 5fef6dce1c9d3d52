import json

import pytest

from promislow.cli import main
from promislow.units import counterexample


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, "--format", "json", *argv)
    return code, json.loads(out)


def test_counterexample_report(capsys):
    code, out, _ = run(capsys, "counterexample")
    assert code == 0
    assert "support_size: 21" in out
    assert "inverse_support_size: 21" in out
    assert "verified: both sides" in out


def test_counterexample_json(capsys):
    code, report = run_json(capsys, "counterexample")
    assert code == 0
    assert report["element"] == str(counterexample().alpha)
    assert report["support_size"] == 21 and report["is_unit"] is True
    assert all(c["passed"] for c in report["checks"])


@pytest.mark.parametrize(
    "argv,code",
    [
        (["verify", "1+x"], 1),
        (["verify", "x*a"], 0),
        (["verify", "0"], 2),
        (["verify", "1 +"], 2),
        (["verify", "v*a"], 2),
        (["--modulus", "4", "verify", "1"], 2),
        (["family", "--k", "2"], 0),
        (["family", "--k", "-1"], 2),
        (["project", "a"], 0),
        (["length", "1 + a"], 0),
        (["length", "0"], 2),
        (["unique-products", "--A", "/nonexistent", "--B", "/nonexistent"], 2),
        (["search", "--spec", "/nonexistent"], 2),
        (["bogus"], 2),
        ([], 2),
    ],
)
def test_exit_codes(capsys, argv, code):
    assert run(capsys, *argv)[0] == code


def test_verify_non_unit_json(capsys):
    code, report = run_json(capsys, "verify", "1+x")
    assert code == 1
    assert report["is_unit"] is False and report["inverse"] is None
    assert report["determinant"] == "x^-2 + x^2"


def test_verify_unit_with_matrix(capsys):
    code, report = run_json(capsys, "verify", "--matrix", "x")
    assert code == 0
    assert report["matrix"][2][2] == "x^-1"


def test_family_project(capsys):
    code, report = run_json(capsys, "family", "--k", "3", "--project")
    assert code == 0
    assert report["checks"][-1] == {"name": "pi(a^-1 alpha_3 b) == e_{14,0}", "passed": True}
    assert report["projection"] == "t^-14 + 1 + t^14 + (t^-14 + t^14)*b"


def test_project(capsys):
    code, report = run_json(capsys, "project", "a + x*b")
    assert report["projection"] == "t + (t^2)*b"


def test_length(capsys):
    alpha = str(counterexample().alpha)
    code, report = run_json(capsys, "length", f"a^-1*({alpha})*a")
    assert code == 0 and report["length_L"] == 4


def test_unique_products_files(tmp_path, capsys):
    f = tmp_path / "A.txt"
    f.write_text("# two elements\n1\na\n\n")
    code, report = run_json(capsys, "unique-products", "--A", str(f), "--B", str(f))
    assert code == 0
    assert report["unique_elements"] == ["1", "x"]
    assert report["multiplicities"] == {"1": 1, "x": 1, "a": 2}


def test_unique_products_bad_line(tmp_path, capsys):
    f = tmp_path / "A.txt"
    f.write_text("1\nq\n")
    code, _, err = run(capsys, "unique-products", "--A", str(f), "--B", str(f))
    assert code == 2 and ":2:" in err


def test_search_spec_file(tmp_path, capsys):
    spec = tmp_path / "spec.txt"
    spec.write_text("max_support = 2\nbox = 1\nmodulus = 2\n")
    code, report = run_json(capsys, "search", "--spec", str(spec))
    assert code == 0
    assert report["cardinality"] == 108 and report["nontrivial_units"] == 0
    spec.write_text("mode = coefficients-on-fixed-support\nsupport = counterexample\nweight = 21\n")
    code, report = run_json(capsys, "search", "--spec", str(spec), "--workers", "2")
    assert report["nontrivial_units"] == 1
    assert report["units"][0]["element"] == str(counterexample().alpha)


def test_search_budget_exceeded(tmp_path, capsys):
    spec = tmp_path / "spec.txt"
    spec.write_text("max_support = 3\nbox = 1\n")
    code, _, err = run(capsys, "search", "--spec", str(spec), "--budget", "10")
    assert code == 2 and "budget" in err


def test_reports_are_deterministic(capsys):
    first = run(capsys, "--format", "json", "verify", "1 + x + a")[1]
    second = run(capsys, "--format", "json", "verify", "1 + x + a")[1]
    assert first == second


def test_selftest(capsys):
    code, out, _ = run(capsys, "selftest")
    assert code == 0
    assert out.count("[PASS]") == 14
