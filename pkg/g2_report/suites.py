# coding=utf-8
"""
date:           oct-2026

usage:          suite manifests, check execution and convergence studies.

                run_suite() returns the CheckReports in manifest order together with the exit
                code: 0 when every check passed, 1 otherwise. Unknown suites and checks raise
                G2ReportError subclasses, which the management commands map to exit code 2.
"""
# python
import logging
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Callable, Dict, List, Optional, Sequence, Tuple

# 3rd party
import numpy as np
from secure_logger.decorators import secure_logger

# this repo
from g2_algebra.exceptions import G2AlgebraError
from g2_geometry.exceptions import G2GeometryError
from g2_geometry.gallery import gallery
from g2_geometry.sampling import write_samples_csv
from g2_report.checks import (
    Check,
    Measurement,
    algebra_checks,
    g2_thm1_checks,
    g2_thm2_checks,
    gh_checks,
    hypersurface_checks_manifest,
    negative_checks,
    octonion_checks,
)
from g2_report.config import RunConfig, parse_floats
from g2_report.exceptions import G2ReportError, StudyNotSupportedError, UnknownCheckError, UnknownSuiteError
from g2_report.reports import FAIL, CheckReport, judge

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class SuiteManifest:
    name: str
    checks: Tuple[Check, ...]
    overrides: Dict[str, object] = field(default_factory=dict)

    def __post_init__(self):
        seen = set()
        for check in self.checks:
            if check.check_id in seen:
                raise G2ReportError("duplicate check {c} in suite {s}".format(c=check.check_id, s=self.name))
            seen.add(check.check_id)

    @property
    def check_ids(self) -> List[str]:
        return [check.check_id for check in self.checks]

    def configure(self, config: RunConfig) -> RunConfig:
        return replace(config, **self.overrides) if self.overrides else config


SUITE_BUILDERS: Dict[str, Callable[[], List[Check]]] = {
    "algebra": algebra_checks,
    "octonion": octonion_checks,
    "gh": gh_checks,
    "g2-thm1": g2_thm1_checks,
    "g2-thm2": g2_thm2_checks,
    "hypersurface": hypersurface_checks_manifest,
    "negative-controls": negative_checks,
}
ALL = "all"
SUITE_NAMES = tuple(SUITE_BUILDERS) + (ALL,)


def manifest(name: str) -> SuiteManifest:
    if name == ALL:
        return SuiteManifest(ALL, tuple(check for builder in SUITE_BUILDERS.values() for check in builder()))
    if name not in SUITE_BUILDERS:
        raise UnknownSuiteError(name, SUITE_NAMES)
    return SuiteManifest(name, tuple(SUITE_BUILDERS[name]()))


def find_check(check_id: str) -> Check:
    for check in manifest(ALL).checks:
        if check.check_id == check_id:
            return check
    raise UnknownCheckError("unknown check {c!r}".format(c=check_id))


def _base_params(check: Check, config: RunConfig) -> Dict[str, object]:
    params = config.as_params()
    if check.entry is not None:
        params["provenance"] = gallery()[check.entry].provenance
    return params


def _order_of(measurement: Measurement):
    """the first convergence result stands for the check"""
    for result in measurement.convergence.values():
        return result.label
    return None


def _elapsed_ms(started: float, config: RunConfig) -> int:
    return int(round((time.perf_counter() - started) * 1000)) if config.timings else 0


def dump_samples(check: Check, config: RunConfig) -> Optional[str]:
    """per-sample residual norms of a pointwise check as CSV in config.dump_dir"""
    if config.dump_dir is None or check.pointwise is None:
        return None
    points, residual = check.pointwise(config)
    columns: Dict[str, List[float]] = {}
    for p in points:
        for name, value in residual([p]).items():
            columns.setdefault(name, []).append(value)
    os.makedirs(config.dump_dir, exist_ok=True)
    filename = os.path.join(config.dump_dir, "{c}.csv".format(c=check.check_id))
    write_samples_csv(filename, np.asarray(points), columns)
    return filename


def run_check(check: Check, config: RunConfig) -> CheckReport:
    started = time.perf_counter()
    params = _base_params(check, config)
    try:
        measurement = check.measure(config)
        dump_samples(check, config)
    except (G2AlgebraError, G2GeometryError) as e:
        log.error("check {c} raised {t}: {m}".format(c=check.check_id, t=type(e).__name__, m=e))
        params["error"] = "{t}: {m}".format(t=type(e).__name__, m=e)
        return CheckReport(
            check_id=check.check_id,
            params=params,
            status=FAIL,
            residuals={},
            tolerance=check.tolerance,
            seed=config.seed,
            runtime_ms=_elapsed_ms(started, config),
            expected=check.expected,
        )

    params.update(measurement.params)
    if measurement.bounds:
        params["bounds"] = {
            name: {"value": value, "floor": floor} for name, (value, floor) in measurement.bounds.items()
        }
    if measurement.convergence:
        params["convergence"] = dict(measurement.convergence)
    verdict = judge(
        measurement.residuals,
        check.tolerance,
        expected=check.expected,
        bounds=measurement.bounds,
        convergence=measurement.convergence,
        band=config.order_band,
        floor=config.negative_floor,
        null_band=config.null_band,
    )
    if verdict.reasons:
        params["reasons"] = list(verdict.reasons)
    report = CheckReport(
        check_id=check.check_id,
        params=params,
        status=verdict.status,
        residuals=dict(measurement.residuals),
        order_estimate=_order_of(measurement),
        tolerance=check.tolerance,
        seed=config.seed,
        runtime_ms=_elapsed_ms(started, config),
        expected=check.expected,
    )
    log.info("check {c}: {s}".format(c=check.check_id, s=report.status))
    return report


@secure_logger()
def run_suite(name: str, config: Optional[RunConfig] = None) -> Tuple[List[CheckReport], int]:
    suite = manifest(name)
    config = suite.configure(config or RunConfig())
    log.info("running suite {n}: {k} checks, {w} worker(s)".format(n=name, k=len(suite.checks), w=config.workers))
    with ThreadPoolExecutor(max_workers=config.workers) as executor:
        # map() yields in submission order, which is manifest order
        reports = list(executor.map(lambda check: run_check(check, config), suite.checks))
    code = 0 if all(report.passed for report in reports) else 1
    log.info("suite {n} finished with exit code {c}".format(n=name, c=code))
    return reports, code


@secure_logger()
def run_convergence_study(check_id: str, steps: Sequence[float], config: Optional[RunConfig] = None) -> CheckReport:
    """
    residual of every study of the check at each step, and the least-squares order. Positive
    checks pass when every order lies in the band; negative controls when every order lies in the
    null band.
    """
    check = find_check(check_id)
    if not check.supports_study:
        raise StudyNotSupportedError("check {c} has no step-size dependent residual".format(c=check_id))
    steps = parse_floats(steps, "steps")
    config = (config or RunConfig()).with_steps(steps)
    started = time.perf_counter()
    params = _base_params(check, config)
    params["steps"] = list(steps)
    try:
        studies = check.studies(config)
        convergence = {study.name: study.run(steps) for study in studies}
    except (G2AlgebraError, G2GeometryError) as e:
        params["error"] = "{t}: {m}".format(t=type(e).__name__, m=e)
        return CheckReport(
            check_id=check_id,
            params=params,
            status=FAIL,
            residuals={},
            tolerance=check.tolerance,
            seed=config.seed,
            runtime_ms=_elapsed_ms(started, config),
            expected=check.expected,
        )

    residuals = {
        "{n}@h={h:g}".format(n=name, h=h): value
        for name, result in convergence.items()
        for h, value in zip(result.steps, result.residuals)
    }
    params["convergence"] = convergence
    verdict = judge(
        {},
        check.tolerance,
        expected=check.expected,
        convergence=convergence,
        band=config.order_band,
        floor=config.negative_floor,
        null_band=config.null_band,
    )
    if verdict.reasons:
        params["reasons"] = list(verdict.reasons)
    first = next(iter(convergence.values()), None)
    return CheckReport(
        check_id=check_id,
        params=params,
        status=verdict.status,
        residuals=residuals,
        order_estimate=None if first is None else first.label,
        tolerance=check.tolerance,
        seed=config.seed,
        runtime_ms=_elapsed_ms(started, config),
        expected=check.expected,
    )

