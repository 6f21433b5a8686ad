import csv
import io
import json
import math

import pytest

from emzeta.cli import fmt, fmt_complex, parse_complex, run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def rows(text):
    lines = [ln for ln in text.splitlines() if not ln.startswith("#")]
    return list(csv.DictReader(lines))


def test_coeffs_order_two():
    code, out, _ = call("coeffs", "--order", "2")
    assert code == 0
    assert out.startswith("# ")
    got = [(int(r["numerator"]), int(r["denominator"])) for r in rows(out)]
    assert got == [(1, 24), (-7, 5760), (31, 967680)]


def test_eval_pole_is_numeric_failure():
    code, out, err = call("eval", "--s", "1.0+0.0i")
    assert code == 2 and out == ""
    assert json.loads(err)["error"] == "pole"


def test_eval_zeta_two():
    code, out, _ = call("eval", "--s", "2", "--no-header")
    assert code == 0
    (r,) = rows(out)
    assert abs(float(r["value_re"]) - 1.6449340668482264) < 1e-9
    assert float(r["value_im"]) == 0.0


def test_eval_explicit_params():
    code, out, _ = call("eval", "--s", "0.5+14.134725i", "--n", "10", "--k", "6", "--no-header")
    assert code == 0
    (r,) = rows(out)
    assert (r["N"], r["K"]) == ("10", "6")
    assert float(r["abs"]) < 1e-5


def test_compare_agrees():
    code, out, _ = call("compare", "--s", "0.3+7i", "--no-header")
    assert code == 0
    (r,) = rows(out)
    assert float(r["abs_diff"]) < 1e-9


T_ETA = 2 * math.pi / math.log(2)  # 1 - 2**(1-s) vanishes at 1 + i T_ETA


def test_compare_conditioning_on_line_one():
    code, _, err = call("compare", "--s", f"1.0+{T_ETA!r}i")
    assert code == 2 and json.loads(err)["error"] == "conditioning"


def test_compare_falls_back_right_of_line_one():
    code, out, _ = call("compare", "--s", f"1.00000000001+{T_ETA!r}i", "--no-header")
    assert code == 0
    (r,) = rows(out)
    # the partial-sum bound is honest, if loose, this close to Re s = 1
    assert float(r["abs_diff"]) <= float(r["oracle_bound"])


def test_zeros_range():
    code, out, _ = call("zeros", "--t-min", "10", "--t-max", "30", "--no-header")
    assert code == 0
    got = [float(r["ordinate"]) for r in rows(out)]
    assert got == pytest.approx([14.134725141734693, 21.022039638771555, 25.010857580145688], abs=1e-8)


def test_scan_grid_and_zero_cell():
    code, out, _ = call("scan", "--re-min", "0.5", "--re-max", "0.7", "--im-min",
                        "14.134725141734693", "--im-max", "15", "--steps", "2", "--no-header")
    assert code == 0
    rs = rows(out)
    assert len(rs) == 4
    assert [(float(r["re"]), float(r["im"])) for r in rs][:2] == [(0.5, 14.134725141734693), (0.5, 15.0)]
    assert float(rs[0]["abs_Z"]) < 1e-6


def test_scan_pole_cell():
    code, out, _ = call("scan", "--re-min", "0", "--re-max", "1", "--im-min", "0",
                        "--im-max", "1", "--steps", "2", "--no-header")
    assert code == 0
    vals = [r["abs_Z"] for r in rows(out)]
    assert vals.count("inf") == 1


def test_audit_json():
    code, out, _ = call("audit", "--xi", "0.1", "--t", "14.134725")
    assert code == 0
    doc = json.loads(out)
    assert doc["meta"]["subcommand"] == "audit"
    assert doc["verdict"] == "off-line-asymmetric"
    code, out, _ = call("audit", "--xi", "0", "--t", "14.134725", "--no-header")
    doc = json.loads(out)
    assert "meta" not in doc and doc["verdict"] == "on-line-consistent"


def test_json_records():
    code, out, _ = call("coeffs", "--order", "1", "--format", "json", "--no-header")
    assert json.loads(out)[1]["numerator"] == -7


@pytest.mark.parametrize("argv", [
    ["coeffs", "--order", "-1"],
    ["eval", "--s", "0.5 + 2i"],
    ["eval", "--s", "0.5+2j"],
    ["eval", "--s", "2", "--n", "10"],
    ["zeros", "--t-min", "30", "--t-max", "10"],
    ["zeros", "--t-min", "0", "--t-max", "10", "--step", "0.5"],
    ["zeros", "--t-min", "0", "--t-max", "500"],
    ["scan", "--re-min", "0", "--re-max", "1", "--im-min", "0", "--im-max", "1", "--steps", "1"],
    ["audit", "--xi", "0.5", "--t", "14"],
    ["audit", "--xi", "0.1", "--t", "14", "--format", "csv"],
    ["bogus"],
    [],
])
def test_usage_errors(argv):
    code, out, err = call(*argv)
    assert code == 1 and out == "" and err


def test_capability_error_exit_code():
    code, _, err = call("eval", "--s", "0.5+150i")
    assert code == 2 and json.loads(err)["error"] == "capability"


def test_output_file(tmp_path):
    path = tmp_path / "c.csv"
    code, out, _ = call("coeffs", "--order", "3", "--output", str(path))
    assert code == 0 and out == ""
    assert len(rows(path.read_text())) == 4


@pytest.mark.parametrize("x", [0.1, 1 / 3, -2.5e-17, 1e300, 14.134725141734693])
def test_fmt_round_trip(x):
    assert float(fmt(x)) == x


def test_complex_round_trip():
    for z in (0.5 + 14.134725j, -3j, 2 + 0j, 0.1 - 1e-20j):
        assert parse_complex(fmt_complex(z)) == z
    assert fmt(float("inf")) == "inf" and fmt(float("nan")) == "nan" and fmt(None) == ""
