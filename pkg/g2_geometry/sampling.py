# coding=utf-8
"""
date:           oct-2026

usage:          seeded quasi-random interior sample points and CSV sample dumps.
"""
# python
import logging
from typing import Dict, Sequence

# 3rd party
import numpy as np
from scipy.stats import qmc

# this repo
from g2_geometry.exceptions import G2GeometryError
from g2_geometry.fields import Domain

log = logging.getLogger(__name__)

DEFAULT_SAMPLES = 200
DEFAULT_SEED = 42
MAX_DRAWS = 50


def sample_points(domain: Domain, count: int = DEFAULT_SAMPLES, seed: int = DEFAULT_SEED, margin: float = 0.0):
    """
    `count` points of a scrambled Halton sequence over the domain's box, keeping only points at
    least `margin` away from the box faces and every exclusion. Deterministic in `seed`.
    """
    if count <= 0:
        return np.zeros((0, domain.dim))
    sampler = qmc.Halton(d=domain.dim, scramble=True, seed=seed)
    accepted = []
    for _ in range(MAX_DRAWS):
        batch = qmc.scale(sampler.random(2 * count), domain.lower, domain.upper)
        accepted.extend(p for p in batch if domain.contains(p, margin))
        if len(accepted) >= count:
            return np.array(accepted[:count])
    raise G2GeometryError(
        "only {n} of {c} requested samples fit the domain with margin {m}".format(n=len(accepted), c=count, m=margin)
    )


def write_samples_csv(filename, points: np.ndarray, residuals: Dict[str, Sequence[float]]) -> None:
    """one row per sample: coordinates x0..x{n-1}, then one column per named residual"""
    points = np.atleast_2d(np.asarray(points, dtype=float))
    names = sorted(residuals)
    columns = [points] + [np.asarray(residuals[name], dtype=float).reshape(-1, 1) for name in names]
    header = ",".join(["x{i}".format(i=i) for i in range(points.shape[1])] + names)
    np.savetxt(filename, np.hstack(columns), delimiter=",", header=header, comments="", fmt="%.17g")
    log.info("wrote {n} sample rows to {f}".format(n=points.shape[0], f=filename))
