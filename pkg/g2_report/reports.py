# coding=utf-8
"""
date:           oct-2026

usage:          CheckReport records, their pass/fail verdicts, JSON Lines serialization and the
                human summary table.
"""
# python
import json
import logging
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, Optional, Sequence, Tuple, Union

# 3rd party
import numpy as np

# this repo
from g2_geometry.convergence import ConvergenceResult
from g2_geometry.gallery import NEGATIVE, POSITIVE

log = logging.getLogger(__name__)

PASS = "pass"
FAIL = "fail"
WARN = "warn"


class ReportJSONEncoder(json.JSONEncoder):
    """exact rationals become {"num": "...", "den": "..."}; numpy scalars and arrays become plain JSON"""

    def default(self, obj):
        if isinstance(obj, Fraction):
            return {"num": str(obj.numerator), "den": str(obj.denominator)}
        if isinstance(obj, bytes):
            return str(obj, encoding="utf-8")
        if isinstance(obj, np.integer):
            return int(obj)
        if isinstance(obj, np.floating):
            return float(obj)
        if isinstance(obj, np.bool_):
            return bool(obj)
        if isinstance(obj, np.ndarray):
            return obj.tolist()
        if isinstance(obj, ConvergenceResult):
            return {"steps": list(obj.steps), "residuals": list(obj.residuals), "order": obj.label}
        try:
            return json.JSONEncoder.default(self, obj)
        except TypeError:
            # obj probably is not json serializable.
            return str(obj)


@dataclass
class CheckReport:
    check_id: str
    params: Dict[str, object]
    status: str
    residuals: Dict[str, object]
    order_estimate: Optional[Union[float, str]] = None
    tolerance: float = 0.0
    seed: int = 42
    runtime_ms: int = 0
    expected: str = POSITIVE

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def as_dict(self) -> Dict[str, object]:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), cls=ReportJSONEncoder, sort_keys=True, ensure_ascii=False)


@dataclass(frozen=True)
class Verdict:
    status: str
    reasons: Tuple[str, ...] = field(default=())


def _as_number(value) -> float:
    if isinstance(value, Fraction):
        return float(value)
    return float(np.max(np.abs(np.asarray(value, dtype=float)))) if np.size(value) else 0.0


def judge(
    residuals: Dict[str, object],
    tolerance,
    expected: str = POSITIVE,
    bounds: Optional[Dict[str, Tuple[float, float]]] = None,
    convergence: Optional[Dict[str, ConvergenceResult]] = None,
    band: Tuple[float, float] = (1.8, 2.2),
    floor: float = 0.01,
    null_band: Tuple[float, float] = (-0.2, 0.2),
) -> Verdict:
    """
    positive checks pass when every residual is within tolerance, every bound value reaches its
    floor and every convergence order lies in the band; exact residuals are compared exactly.

    negative controls pass ("fail as expected") when every residual reaches the negative-control
    floor and every convergence order lies in the null band, i.e. the residual does not shrink
    with h. A positive check whose order cannot be estimated is a warning, which does not pass.
    """
    bounds = bounds or {}
    convergence = convergence or {}
    reasons = []
    if expected == NEGATIVE:
        for name, value in residuals.items():
            if _as_number(value) < floor:
                reasons.append("{n} = {v:.3e} below control floor {f}".format(n=name, v=_as_number(value), f=floor))
        for name, result in convergence.items():
            if result.exact:
                reasons.append("{n} is exact".format(n=name))
            elif not result.within(*null_band):
                reasons.append(
                    "{n} order {o} outside null band {b}".format(n=name, o=result.label, b=list(null_band))
                )
        return Verdict(FAIL if reasons else PASS, tuple(reasons))

    for name, value in residuals.items():
        exceeded = value > tolerance if isinstance(value, (int, Fraction)) else _as_number(value) > tolerance
        if exceeded:
            reasons.append("{n} = {v} exceeds {t}".format(n=name, v=value, t=tolerance))
    for name, (value, minimum) in bounds.items():
        if value < minimum:
            reasons.append("{n} = {v:.3e} below {m}".format(n=name, v=value, m=minimum))
    unestimated = []
    for name, result in convergence.items():
        if result.order is None and not result.exact:
            unestimated.append(name)
        elif not result.within(*band):
            reasons.append("{n} order {o} outside {b}".format(n=name, o=result.label, b=list(band)))
    if reasons:
        return Verdict(FAIL, tuple(reasons))
    if unestimated:
        return Verdict(WARN, tuple("no order estimate for {n}".format(n=n) for n in unestimated))
    return Verdict(PASS)


def write_jsonl(reports: Iterable[CheckReport], stream) -> int:
    count = 0
    for report in reports:
        stream.write(report.to_json() + "\n")
        count += 1
    return count


def _short(value) -> str:
    if isinstance(value, str):
        return value
    if value is None:
        return "-"
    return "{v:.3g}".format(v=float(value))


def summary_table(reports: Sequence[CheckReport]) -> str:
    """fixed-width table: check, expectation, status, worst residual, order"""
    header = ("check", "expected", "status", "max residual", "order")
    rows = [header]
    for report in reports:
        worst = max((_as_number(v) for v in report.residuals.values()), default=0.0)
        rows.append((report.check_id, report.expected, report.status, _short(worst), _short(report.order_estimate)))
    widths = [max(len(row[i]) for row in rows) for i in range(len(header))]
    lines = ["  ".join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip() for row in rows]
    lines.insert(1, "  ".join("-" * width for width in widths))
    passed = sum(1 for report in reports if report.passed)
    lines.append("{p} of {n} checks passed".format(p=passed, n=len(reports)))
    return "\n".join(lines)
