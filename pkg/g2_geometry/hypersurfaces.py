# coding=utf-8
"""
date:           oct-2026

usage:          almost Hermitian structure J(X) = n × X induced on a hypersurface of flat ℝ⁷,
                with nearly-Kähler, Kähler, umbilic and geodesic residuals.

                For a hypersurface of flat space, (∇_X J)Y is the tangential part of dn(X) × Y,
                so every residual reduces to first derivatives of the unit normal.
"""
# python
import logging
from typing import Dict, Sequence

# 3rd party
import numpy as np

# this repo
from g2_geometry.exceptions import DegenerateMetricError
from g2_geometry.fields import FieldFn, StencilConfig, jacobian, sup_over
from g2_geometry.model import model_phi

log = logging.getLogger(__name__)

HYPERSURFACE = StencilConfig(h=1e-3, order=4)


def tangent_frame(differential: np.ndarray):
    """
    orthonormal tangent frame E = DF · C with C = L⁻ᵀ, L the Cholesky factor of the induced
    metric; returns (E, C)
    """
    induced = differential.T @ differential
    try:
        lower = np.linalg.cholesky(induced)
    except np.linalg.LinAlgError as e:
        raise DegenerateMetricError("induced metric is degenerate") from e
    coefficients = np.linalg.inv(lower).T
    return differential @ coefficients, coefficients


def unit_normal(differential: np.ndarray) -> np.ndarray:
    """generalized cross product of the six tangent columns, normalized"""
    normal = np.array([(-1) ** k * np.linalg.det(np.delete(differential, k, axis=0)) for k in range(7)])
    length = np.linalg.norm(normal)
    if length == 0.0:
        raise DegenerateMetricError("immersion is not an immersion here")
    return normal / length


def normal_field(immersion: FieldFn, cfg: StencilConfig = HYPERSURFACE) -> FieldFn:
    return FieldFn(6, lambda s: unit_normal(jacobian(immersion, s, cfg).T), immersion.domain, "n")


def structure_at(immersion: FieldFn, s: np.ndarray, cfg: StencilConfig = HYPERSURFACE) -> Dict[str, np.ndarray]:
    """
    shape operator S[a, b] = −⟨dn(E_a), E_b⟩ and K[a, b, c] = ⟨(∇_{E_a} J) E_b, E_c⟩ in the
    tangent frame E
    """
    differential = jacobian(immersion, s, cfg).T
    frame, coefficients = tangent_frame(differential)
    dn = jacobian(normal_field(immersion, cfg), s, cfg).T @ coefficients
    shape = -dn.T @ frame
    crossed = np.einsum("ijk,ia,jb->abk", model_phi(), dn, frame)
    return {"shape": shape, "nabla_j": np.einsum("abk,kc->abc", crossed, frame)}


def hypersurface_checks(
    immersion: FieldFn, samples: Sequence[Sequence[float]], cfg: StencilConfig = HYPERSURFACE
) -> Dict[str, float]:
    """
    sup over samples of frame-independent norms:
        nearly_kahler   |(∇_X J)X|, via the part of K symmetric in (a, b)
        kahler          |∇J|
        umbilic         |S − (tr S / 6)·1|
        geodesic        |S|
    """

    def residual(s):
        structure = structure_at(immersion, s, cfg)
        shape, nabla_j = structure["shape"], structure["nabla_j"]
        return {
            "nearly_kahler": np.linalg.norm(nabla_j + np.einsum("abc->bac", nabla_j)),
            "kahler": np.linalg.norm(nabla_j),
            "umbilic": np.linalg.norm(shape - np.trace(shape) / 6.0 * np.eye(6)),
            "geodesic": np.linalg.norm(shape),
        }

    report = sup_over(samples, residual)
    log.info("hypersurface {n}: {r}".format(n=immersion.name, r=report))
    return report
