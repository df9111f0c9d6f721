# coding=utf-8
"""
Tests for suite manifests, check execution and convergence studies.
"""
import csv
import json

import pytest

from g2_geometry.exceptions import G2GeometryError, InvalidConfigError
from g2_geometry.gallery import NEGATIVE
from g2_geometry.convergence import ConvergenceResult
from g2_report.checks import Check, Measurement
from g2_report.config import RunConfig
from g2_report.exceptions import StudyNotSupportedError, UnknownCheckError, UnknownSuiteError
from g2_report.reports import FAIL, PASS, WARN
from g2_report.suites import (
    SUITE_BUILDERS,
    SUITE_NAMES,
    find_check,
    manifest,
    run_check,
    run_convergence_study,
    run_suite,
)

SMALL = RunConfig(samples=3)


@pytest.fixture(scope="module")
def algebra_run():
    return run_suite("algebra", RunConfig())


class TestManifests:
    def test_suite_names(self):
        assert SUITE_NAMES == (
            "algebra",
            "octonion",
            "gh",
            "g2-thm1",
            "g2-thm2",
            "hypersurface",
            "negative-controls",
            "all",
        )

    def test_all_covers_every_suite_in_order(self):
        expected = [check_id for name in SUITE_BUILDERS for check_id in manifest(name).check_ids]
        assert manifest("all").check_ids == expected
        assert len(set(expected)) == len(expected)

    def test_ids_are_prefixed_by_suite(self):
        prefixes = {"negative-controls": "negative."}
        for name in SUITE_BUILDERS:
            prefix = prefixes.get(name, name + ".")
            assert all(check_id.startswith(prefix) for check_id in manifest(name).check_ids)

    def test_negative_controls_are_marked(self):
        assert all(check.expected == NEGATIVE for check in manifest("negative-controls").checks)
        assert not any(check.expected == NEGATIVE for check in manifest("algebra").checks)

    def test_unknown_suite(self):
        with pytest.raises(UnknownSuiteError) as info:
            manifest("g2-thm3")
        assert info.value.name == "g2-thm3"
        with pytest.raises(UnknownSuiteError):
            run_suite("g2-thm3")

    def test_find_check(self):
        assert find_check("gh.taub-nut.ricci").supports_study
        assert not find_check("algebra.lift").supports_study
        with pytest.raises(UnknownCheckError):
            find_check("algebra.nothing")


class TestAlgebraSuite:
    def test_every_check_passes(self, algebra_run):
        reports, code = algebra_run
        assert code == 0
        assert [report.check_id for report in reports] == manifest("algebra").check_ids
        assert all(report.status == PASS for report in reports)

    def test_lift_is_reported_exactly(self, algebra_run):
        reports, _ = algebra_run
        lift = json.loads(next(r for r in reports if r.check_id == "algebra.lift").to_json())
        assert lift["params"]["scale"] == {"num": "2", "den": "1"}
        assert lift["params"]["permutation"] == [0, 1, 2, 6, 3, 4, 5]
        assert lift["residuals"] == {"complement_defect": 0, "scale_mismatch": 0}

    def test_byte_stable(self, algebra_run):
        reports, _ = algebra_run
        again, _ = run_suite("algebra", RunConfig())
        assert [r.to_json() for r in reports] == [r.to_json() for r in again]
        assert all(r.runtime_ms == 0 for r in reports)

    def test_workers_keep_manifest_order(self, algebra_run):
        reports, _ = algebra_run
        parallel, code = run_suite("algebra", RunConfig(workers=3))
        assert code == 0
        assert [r.to_json() for r in parallel] == [r.to_json() for r in reports]


class TestNegativeControls:
    def test_every_control_fails_as_expected(self):
        reports, code = run_suite("negative-controls", SMALL)
        assert code == 0, [r.params.get("reasons") for r in reports]
        assert all(report.status == PASS for report in reports)
        assert all(report.expected == NEGATIVE for report in reports)

    def test_provenance(self):
        report = run_check(find_check("negative.mismatched-alpha"), SMALL)
        assert report.params["provenance"]
        assert report.params["samples"] == 3


class TestWarnings:
    @staticmethod
    def unestimated(config):
        flat = ConvergenceResult(config.steps, (0.0, 1e-3, 0.0), None)
        return Measurement(residuals={"ricci": 0.0}, convergence={"ricci": flat})

    def test_unestimated_order_fails_the_suite(self, monkeypatch):
        monkeypatch.setitem(SUITE_BUILDERS, "gh", lambda: [Check("gh.flat.riemann", self.unestimated, tolerance=1e-3)])
        reports, code = run_suite("gh", SMALL)
        assert [report.status for report in reports] == [WARN]
        assert not reports[0].passed
        assert code == 1


class TestCurvatureSamples:
    def test_samples_are_honored_up_to_the_cap(self):
        report = run_check(find_check("gh.flat.riemann"), RunConfig(samples=5, curvature_samples=3))
        assert report.params["samples_used"] == 3
        report = run_check(find_check("gh.flat.riemann"), RunConfig(samples=2))
        assert report.params["samples_used"] == 2


class TestRunCheck:
    def test_geometry_error_becomes_failure(self):
        def measure(config):
            raise G2GeometryError("the sampler gave up")

        report = run_check(Check("g2-thm1.broken", measure, tolerance=1e-3), SMALL)
        assert report.status == FAIL
        assert report.residuals == {}
        assert "the sampler gave up" in report.params["error"]

    def test_timings(self):
        report = run_check(find_check("algebra.killing-form"), RunConfig(timings=True))
        assert report.runtime_ms >= 0
        assert report.status == PASS

    def test_hyperplane(self):
        report = run_check(find_check("hypersurface.hyperplane"), SMALL)
        assert report.status == PASS
        assert set(report.residuals) == {"kahler", "geodesic"}

    def test_dump_samples(self, tmp_path):
        config = RunConfig(samples=2, dump_dir=str(tmp_path / "samples"))
        run_check(find_check("hypersurface.hyperplane"), config)
        with open(tmp_path / "samples" / "hypersurface.hyperplane.csv") as stream:
            rows = list(csv.reader(stream))
        assert rows[0][:2] == ["x0", "x1"]
        assert "geodesic" in rows[0]
        assert len(rows) == 3


class TestConvergenceStudy:
    def test_exact_residual(self):
        report = run_convergence_study("g2-thm1.rho-trivial", (2e-2, 1e-2, 5e-3), RunConfig(samples=2))
        assert report.status == PASS
        assert report.order_estimate == "exact"
        assert "rho_xy@h=0.01" in report.residuals

    def test_broken_monopole_does_not_converge(self):
        report = run_convergence_study("negative.broken-monopole", "2e-2,1e-2,5e-3", RunConfig(samples=2))
        assert report.status == PASS
        assert abs(report.order_estimate) <= 0.2
        assert report.params["steps"] == [0.02, 0.01, 0.005]

    def test_unsupported_check(self):
        with pytest.raises(StudyNotSupportedError):
            run_convergence_study("algebra.lift", (2e-2, 1e-2, 5e-3))

    def test_too_few_steps(self):
        with pytest.raises(InvalidConfigError):
            run_convergence_study("g2-thm1.rho-trivial", (2e-2, 1e-2))
