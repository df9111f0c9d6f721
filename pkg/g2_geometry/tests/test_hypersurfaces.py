# coding=utf-8
"""
Tests for the almost Hermitian structure induced on hypersurfaces of ℝ⁷.
"""
import numpy as np
import pytest

from g2_geometry.exceptions import DegenerateMetricError
from g2_geometry.gallery import ellipsoid_patch, hyperplane, sphere_patch
from g2_geometry.hypersurfaces import hypersurface_checks, structure_at, tangent_frame, unit_normal
from g2_geometry.sampling import sample_points


def patch_samples(immersion, count=3):
    return sample_points(immersion.domain, count, seed=42, margin=0.02)


class TestFrames:
    def test_unit_normal_of_coordinate_hyperplane(self):
        differential = np.delete(np.eye(7), 3, axis=1)
        normal = unit_normal(differential)
        assert np.abs(normal) == pytest.approx(np.eye(7)[3])

    def test_normal_is_orthogonal(self):
        rng = np.random.default_rng(5)
        differential = rng.normal(size=(7, 6))
        normal = unit_normal(differential)
        assert normal @ normal == pytest.approx(1.0)
        assert normal @ differential == pytest.approx(np.zeros(6), abs=1e-12)

    def test_degenerate_immersion(self):
        with pytest.raises(DegenerateMetricError):
            unit_normal(np.zeros((7, 6)))
        with pytest.raises(DegenerateMetricError):
            tangent_frame(np.zeros((7, 6)))

    def test_tangent_frame_is_orthonormal(self):
        differential = np.random.default_rng(6).normal(size=(7, 6))
        frame, _ = tangent_frame(differential)
        assert frame.T @ frame == pytest.approx(np.eye(6))


class TestHypersurfaces:
    def test_hyperplane_is_kahler(self):
        immersion = hyperplane()
        residuals = hypersurface_checks(immersion, patch_samples(immersion))
        assert residuals["kahler"] <= 1e-8
        assert residuals["geodesic"] <= 1e-8

    def test_sphere_is_nearly_kahler_not_kahler(self):
        immersion = sphere_patch()
        residuals = hypersurface_checks(immersion, patch_samples(immersion))
        assert residuals["nearly_kahler"] <= 1e-5
        assert residuals["umbilic"] <= 1e-5
        assert residuals["kahler"] >= 1.0
        assert residuals["kahler"] == pytest.approx(np.sqrt(24.0), abs=1e-4)

    def test_sphere_shape_operator(self):
        immersion = sphere_patch()
        shape = structure_at(immersion, np.full(6, 0.1))["shape"]
        assert np.abs(shape) == pytest.approx(np.eye(6), abs=1e-6)

    def test_ellipsoid_control(self):
        immersion = ellipsoid_patch()
        residuals = hypersurface_checks(immersion, patch_samples(immersion))
        assert residuals["umbilic"] >= 0.01
        assert residuals["nearly_kahler"] >= 0.01
