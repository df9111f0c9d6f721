# coding=utf-8
"""
date:           oct-2026

usage:          convergence orders from residuals measured at several step sizes.
"""
# python
import logging
from dataclasses import dataclass
from typing import Callable, Optional, Sequence, Tuple, Union

# 3rd party
import numpy as np

# this repo
from g2_geometry.exceptions import InvalidConfigError
from g2_geometry.fields import StencilConfig

log = logging.getLogger(__name__)

EXACT = "exact"
DEFAULT_STEPS = (2e-2, 1e-2, 5e-3)
TINY = 1e-300


@dataclass(frozen=True)
class ConvergenceResult:
    steps: Tuple[float, ...]
    residuals: Tuple[float, ...]
    order: Optional[float]
    exact: bool = False

    @property
    def label(self) -> Union[str, float, None]:
        return EXACT if self.exact else self.order

    def within(self, low: float, high: float) -> bool:
        return self.exact or (self.order is not None and low <= self.order <= high)


def estimate_order(steps: Sequence[float], residuals: Sequence[float], exact_floor: float = 0.0):
    """least-squares slope of log(residual) against log(h)"""
    if len(steps) != len(residuals):
        raise InvalidConfigError("need one residual per step")
    if len(steps) < 2:
        raise InvalidConfigError("an order estimate needs at least two step sizes")
    steps = tuple(float(h) for h in steps)
    residuals = tuple(float(r) for r in residuals)
    if all(r <= exact_floor for r in residuals):
        return ConvergenceResult(steps, residuals, order=None, exact=True)
    logs = np.log(np.maximum(np.asarray(residuals), TINY))
    slope = float(np.polyfit(np.log(np.asarray(steps)), logs, 1)[0])
    return ConvergenceResult(steps, residuals, order=slope)


def convergence_study(
    residual: Callable[[StencilConfig], float],
    steps: Sequence[float] = DEFAULT_STEPS,
    cfg: StencilConfig = StencilConfig(order=2),
    exact_floor: float = 0.0,
) -> ConvergenceResult:
    if len(steps) < 3:
        raise InvalidConfigError("a convergence study needs at least three step sizes, got {n}".format(n=len(steps)))
    values = [residual(cfg.with_step(h)) for h in steps]
    result = estimate_order(steps, values, exact_floor)
    log.info("convergence study over h={s}: residuals {r}, order {o}".format(s=list(steps), r=values, o=result.label))
    return result


def richardson_error(coarse, fine, order: int = 2) -> float:
    """truncation estimate for the coarse value, from values at h and h/2"""
    factor = 2.0**order
    return float(np.max(np.abs(np.asarray(coarse) - np.asarray(fine)))) * factor / (factor - 1.0)
