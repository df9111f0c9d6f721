# coding=utf-8
"""
Tests for CheckReport serialization, verdicts and the summary table.
"""
import io
import json
from fractions import Fraction

import numpy as np

from g2_geometry.convergence import ConvergenceResult
from g2_geometry.gallery import NEGATIVE
from g2_report.reports import FAIL, PASS, WARN, CheckReport, ReportJSONEncoder, judge, summary_table, write_jsonl

SECOND_ORDER = ConvergenceResult((2e-2, 1e-2, 5e-3), (4e-4, 1e-4, 2.5e-5), 2.0)
FLAT_ORDER = ConvergenceResult((2e-2, 1e-2, 5e-3), (0.1, 0.1, 0.1), 0.0)
FIRST_ORDER = ConvergenceResult((2e-2, 1e-2, 5e-3), (0.4, 0.2, 0.1), 1.0)
SLOW_ORDER = ConvergenceResult((2e-2, 1e-2, 5e-3), (0.12, 0.11, 0.1), 0.15)
EXACT = ConvergenceResult((2e-2, 1e-2, 5e-3), (0.0, 0.0, 0.0), None, exact=True)


def report(check_id="algebra.lift", status=PASS, residuals=None, **kwargs):
    return CheckReport(check_id=check_id, params={}, status=status, residuals=residuals or {"a": 0}, **kwargs)


class TestEncoder:
    def encode(self, value):
        return json.loads(json.dumps(value, cls=ReportJSONEncoder))

    def test_fraction(self):
        assert self.encode(Fraction(-3, 2)) == {"num": "-3", "den": "2"}
        assert self.encode(Fraction(4)) == {"num": "4", "den": "1"}

    def test_numpy_values(self):
        assert self.encode(np.float64(0.5)) == 0.5
        assert self.encode(np.int64(7)) == 7
        assert self.encode(np.bool_(True)) is True
        assert self.encode(np.arange(3)) == [0, 1, 2]

    def test_convergence_result(self):
        assert self.encode(EXACT)["order"] == "exact"
        assert self.encode(SECOND_ORDER)["residuals"] == [4e-4, 1e-4, 2.5e-5]

    def test_unknown_objects_become_strings(self):
        assert self.encode(object()).startswith("<object")


class TestCheckReport:
    def test_json_is_sorted_and_flat(self):
        line = report(order_estimate="exact").to_json()
        assert "\n" not in line
        assert line.startswith('{"check_id": "algebra.lift"')
        data = json.loads(line)
        assert data["order_estimate"] == "exact"
        assert data["runtime_ms"] == 0
        assert data["seed"] == 42

    def test_exact_params(self):
        item = CheckReport("algebra.lift", {"scale": Fraction(2)}, PASS, {"scale_mismatch": 0})
        assert json.loads(item.to_json())["params"]["scale"] == {"num": "2", "den": "1"}

    def test_identical_reports_serialize_identically(self):
        assert report().to_json() == report().to_json()

    def test_passed(self):
        assert report(status=PASS).passed
        assert not report(status=WARN).passed
        assert not report(status=FAIL).passed

    def test_warnings_do_not_count_as_passed(self):
        table = summary_table([report(), report(check_id="gh.flat.riemann", status=WARN)])
        assert table.splitlines()[-1] == "1 of 2 checks passed"


class TestPositiveVerdict:
    def test_within_tolerance(self):
        assert judge({"dphi": 1e-4, "dpsi": np.float64(2e-4)}, 1e-3).status == PASS

    def test_exceeds_tolerance(self):
        verdict = judge({"dphi": 1e-2}, 1e-3)
        assert verdict.status == FAIL
        assert "dphi" in verdict.reasons[0]

    def test_exact_values(self):
        assert judge({"failures": 0, "defect": Fraction(0)}, 0).status == PASS
        assert judge({"failures": 1}, 0).status == FAIL

    def test_bounds(self):
        assert judge({"ricci": 0.0}, 1e-3, bounds={"riemann_norm": (0.2, 0.01)}).status == PASS
        assert judge({"ricci": 0.0}, 1e-3, bounds={"riemann_norm": (1e-4, 0.01)}).status == FAIL

    def test_order_band(self):
        assert judge({}, 1e-3, convergence={"ricci": SECOND_ORDER}).status == PASS
        assert judge({}, 1e-3, convergence={"ricci": EXACT}).status == PASS
        assert judge({}, 1e-3, convergence={"ricci": FLAT_ORDER}).status == FAIL

    def test_missing_order_warns(self):
        unknown = ConvergenceResult((1.0, 0.5, 0.25), (1.0, 1.0, 1.0), None)
        verdict = judge({"ricci": 0.0}, 1e-3, convergence={"ricci": unknown})
        assert verdict.status == WARN


class TestNegativeVerdict:
    def test_fails_as_expected(self):
        verdict = judge({"dphi": 0.2}, 0.0, expected=NEGATIVE, convergence={"dphi": FLAT_ORDER})
        assert verdict.status == PASS
        assert verdict.reasons == ()

    def test_residual_below_floor(self):
        assert judge({"dphi": 1e-3}, 0.0, expected=NEGATIVE).status == FAIL
        assert judge({"dphi": 1e-3}, 0.0, expected=NEGATIVE, floor=1e-4).status == PASS

    def test_converging_control(self):
        assert judge({"dphi": 0.2}, 0.0, expected=NEGATIVE, convergence={"dphi": SECOND_ORDER}).status == FAIL
        assert judge({"dphi": 0.2}, 0.0, expected=NEGATIVE, convergence={"dphi": EXACT}).status == FAIL

    def test_order_outside_both_bands_fails(self):
        verdict = judge({"dphi": 0.2}, 0.0, expected=NEGATIVE, convergence={"dphi": FIRST_ORDER})
        assert verdict.status == FAIL
        assert "null band" in verdict.reasons[0]

    def test_null_band(self):
        assert judge({"dphi": 0.2}, 0.0, expected=NEGATIVE, convergence={"dphi": SLOW_ORDER}).status == PASS
        narrow = judge({"dphi": 0.2}, 0.0, expected=NEGATIVE, convergence={"dphi": SLOW_ORDER}, null_band=(-0.1, 0.1))
        assert narrow.status == FAIL
        wide = judge({"dphi": 0.2}, 0.0, expected=NEGATIVE, convergence={"dphi": FIRST_ORDER}, null_band=(-1.5, 1.5))
        assert wide.status == PASS

    def test_unestimated_order_fails(self):
        unknown = ConvergenceResult((1.0, 0.5, 0.25), (1.0, 1.0, 1.0), None)
        assert judge({"dphi": 0.2}, 0.0, expected=NEGATIVE, convergence={"dphi": unknown}).status == FAIL


class TestOutput:
    def test_write_jsonl(self):
        stream = io.StringIO()
        assert write_jsonl([report(), report(check_id="algebra.g2-basis")], stream) == 2
        lines = stream.getvalue().splitlines()
        assert [json.loads(line)["check_id"] for line in lines] == ["algebra.lift", "algebra.g2-basis"]

    def test_summary_table(self):
        table = summary_table(
            [
                report(residuals={"dphi": 1e-4}, order_estimate=2.01),
                report(check_id="negative.ellipsoid", status=FAIL, residuals={"umbilic": 0.3}, expected=NEGATIVE),
            ]
        )
        lines = table.splitlines()
        assert lines[0].split() == ["check", "expected", "status", "max", "residual", "order"]
        assert "negative.ellipsoid" in lines[3]
        assert "0.3" in lines[3]
        assert lines[-1] == "1 of 2 checks passed"
