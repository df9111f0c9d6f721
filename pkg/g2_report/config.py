# coding=utf-8
"""
date:           oct-2026

usage:          RunConfig: the resolved, validated settings of one certification run.

                Django settings are read here and nowhere else; everything downstream receives a
                RunConfig.
"""
# python
import logging
from dataclasses import dataclass, field, replace
from typing import Optional, Tuple

# 3rd party
from django.conf import settings

# this repo
from g2_geometry.convergence import DEFAULT_STEPS
from g2_geometry.exceptions import InvalidConfigError
from g2_geometry.fields import CURVATURE, FIRST_DERIVATIVES, Domain, StencilConfig
from g2_geometry.sampling import sample_points

log = logging.getLogger(__name__)


def parse_floats(value, name: str) -> Tuple[float, ...]:
    """'2e-2,1e-2,5e-3' -> (0.02, 0.01, 0.005)"""
    if isinstance(value, (tuple, list)):
        items = value
    else:
        items = [item for item in str(value).split(",") if item.strip()]
    try:
        return tuple(float(item) for item in items)
    except ValueError as e:
        raise InvalidConfigError("{n} must be comma separated numbers, got {v!r}".format(n=name, v=value)) from e


@dataclass(frozen=True)
class RunConfig:
    seed: int = 42
    samples: int = 200
    fd: StencilConfig = FIRST_DERIVATIVES
    curvature: StencilConfig = CURVATURE
    margin: float = 10.0
    steps: Tuple[float, ...] = DEFAULT_STEPS
    order_band: Tuple[float, float] = (1.8, 2.2)
    negative_floor: float = 0.01
    null_band: Tuple[float, float] = (-0.2, 0.2)
    curvature_samples: int = 100
    workers: int = 1
    timings: bool = False
    dump_dir: Optional[str] = field(default=None, compare=False)

    def __post_init__(self):
        if self.samples < 1:
            raise InvalidConfigError("samples must be positive, got {n}".format(n=self.samples))
        if self.workers < 1:
            raise InvalidConfigError("workers must be positive, got {n}".format(n=self.workers))
        if self.margin < 0:
            raise InvalidConfigError("exclusion margin must not be negative, got {m}".format(m=self.margin))
        if len(self.steps) < 3 or any(h <= 0 for h in self.steps):
            raise InvalidConfigError("need at least three positive convergence steps, got {s}".format(s=self.steps))
        if len(self.order_band) != 2 or self.order_band[0] > self.order_band[1]:
            raise InvalidConfigError("order band must be 'low,high', got {b}".format(b=self.order_band))
        if len(self.null_band) != 2 or self.null_band[0] > self.null_band[1]:
            raise InvalidConfigError("null band must be 'low,high', got {b}".format(b=self.null_band))
        if self.curvature_samples < 1:
            raise InvalidConfigError("curvature samples must be positive, got {n}".format(n=self.curvature_samples))

    @classmethod
    def from_settings(cls, **overrides) -> "RunConfig":
        """
        defaults from the G2_* django settings; keyword overrides win. `h` replaces the
        first-derivative step.
        """
        h = overrides.pop("h", None)
        fd = StencilConfig(h=settings.G2_FD_STEP, order=settings.G2_FD_ORDER)
        if h is not None:
            fd = fd.with_step(float(h))
        values = {
            "seed": settings.G2_SEED,
            "samples": settings.G2_SAMPLES,
            "fd": fd,
            "curvature": StencilConfig(h=settings.G2_CURVATURE_STEP, order=settings.G2_CURVATURE_ORDER),
            "margin": settings.G2_EXCLUSION_MARGIN,
            "steps": settings.G2_CONVERGENCE_STEPS,
            "order_band": settings.G2_ORDER_BAND,
            "negative_floor": settings.G2_NEGATIVE_CONTROL_FLOOR,
            "null_band": settings.G2_NULL_BAND,
            "curvature_samples": settings.G2_CURVATURE_SAMPLES,
            "workers": settings.G2_WORKERS,
            "timings": settings.G2_REPORT_TIMINGS,
        }
        values.update({key: value for key, value in overrides.items() if value is not None})
        values["steps"] = parse_floats(values["steps"], "G2_CONVERGENCE_STEPS")
        values["order_band"] = parse_floats(values["order_band"], "G2_ORDER_BAND")
        values["null_band"] = parse_floats(values["null_band"], "G2_NULL_BAND")
        return cls(**values)

    def with_steps(self, steps) -> "RunConfig":
        return replace(self, steps=parse_floats(steps, "steps"))

    @property
    def widest_step(self) -> float:
        return max(max(self.steps), self.fd.h, self.curvature.h)

    def sample(self, domain: Domain, cap: Optional[int] = None, step: Optional[float] = None):
        """
        seeded sample points at least margin·step away from the box faces and exclusions. `cap`
        bounds the count for checks whose per-point cost is high.
        """
        count = self.samples if cap is None else min(self.samples, cap)
        step = self.widest_step if step is None else step
        return sample_points(domain, count, seed=self.seed, margin=self.margin * step)

    def as_params(self) -> dict:
        return {
            "samples": self.samples,
            "h": self.fd.h,
            "fd_order": self.fd.order,
            "curvature_h": self.curvature.h,
            "curvature_order": self.curvature.order,
            "margin": self.margin,
        }
