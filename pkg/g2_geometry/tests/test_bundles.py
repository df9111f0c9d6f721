# coding=utf-8
"""
Tests for the G2 metric builders and their torsion and holonomy verifiers.
"""
import numpy as np
import pytest

from g2_geometry.bundles import (
    CANONICAL,
    OrientationChoice,
    g2_build_thm1,
    holonomy_residual,
    sign_audit,
    standard_coordinates_phi,
    taub_nut_mono,
    total_domain,
    torsionfree_residual,
)
from g2_geometry.fields import StencilConfig
from g2_geometry.gallery import (
    broken_mono,
    round_sphere_bundle,
    thm1_broken,
    thm1_flat,
    thm1_taub_nut,
    thm2_mismatched,
    thm2_taub_nut,
)
from g2_geometry.monopoles import BASE_SPLIT, base_domain, flat_metric
from g2_geometry.sampling import sample_points

COARSE = StencilConfig(h=1e-2)


@pytest.fixture(scope="module")
def base_samples():
    return sample_points(base_domain(), 3, seed=42, margin=0.1)


@pytest.fixture(scope="module")
def samples():
    return sample_points(total_domain(base_domain()), 3, seed=42, margin=0.1)


class TestFlatBundle:
    def test_reproduces_model_phi(self, samples):
        bundle = thm1_flat()
        expected = standard_coordinates_phi()
        assert all(np.array_equal(bundle.phi(p), expected) for p in samples)
        assert bundle.metric(samples[0]) == pytest.approx(np.eye(7))

    def test_torsion_is_exactly_zero(self, samples):
        report = torsionfree_residual(thm1_flat(), samples)
        assert report.dphi == 0.0
        assert report.dpsi == 0.0
        assert report.dphi_order.exact

    def test_holonomy_is_trivial(self, samples):
        report = holonomy_residual(thm1_flat(), samples[:1])
        assert report.off_g2_fraction == 0.0
        assert report.max_curvature == 0.0


class TestTaubNutBundle:
    def test_torsion_free_to_second_order(self, samples):
        report = torsionfree_residual(thm1_taub_nut(), samples, COARSE)
        assert report.dphi < 1e-2
        assert report.dpsi < 1e-2
        assert report.dphi_order.within(1.8, 2.2)
        assert report.dpsi_order.within(1.8, 2.2)

    def test_holonomy_in_g2(self, samples):
        report = holonomy_residual(thm1_taub_nut(), samples[:1])
        assert report.off_g2_fraction < 1e-3
        assert report.ricci < 1e-3
        assert report.min_curvature > 1e-3

    def test_provenance_records_monopole_residual(self, base_samples):
        bundle = g2_build_thm1(flat_metric(), BASE_SPLIT, taub_nut_mono(), samples=base_samples, inputs="taub-nut")
        assert bundle.provenance["builder"] == "g2_build_thm1"
        assert bundle.provenance["inputs"] == "taub-nut"
        assert bundle.provenance["monopole_residual"] < 1e-3
        assert "warning" not in bundle.provenance

    def test_weak_builder_agrees(self, samples):
        strong, weak = thm1_taub_nut(), thm2_taub_nut()
        for p in samples:
            assert np.max(np.abs(strong.phi(p) - weak.phi(p))) <= 1e-12
        assert weak.provenance["builder"] == "g2_build_thm2"


class TestNegativeControls:
    def test_broken_monopole_keeps_torsion(self, samples):
        report = torsionfree_residual(thm1_broken(), samples, COARSE)
        assert report.dphi > 0.01
        assert abs(report.dphi_order.order) <= 0.2

    def test_broken_monopole_warns(self, base_samples):
        bundle = g2_build_thm1(flat_metric(), BASE_SPLIT, broken_mono(), samples=base_samples)
        assert "warning" in bundle.provenance

    def test_mismatched_alpha(self, samples):
        assert torsionfree_residual(thm2_mismatched(), samples, COARSE).dphi > 0.01

    def test_round_sphere_is_not_g2(self):
        report = holonomy_residual(round_sphere_bundle(), [np.full(7, 0.1)])
        assert report.off_g2_fraction == pytest.approx(np.sqrt(1.0 / 3.0), abs=1e-2)


class TestSignAudit:
    def test_only_canonical_choice_passes(self):
        points = sample_points(total_domain(base_domain()), 2, seed=42, margin=0.1)
        entries = sign_audit(points, COARSE)
        assert len(entries) == 8
        passed = [entry.choice for entry in entries if entry.passed]
        assert passed == [CANONICAL]

    def test_labels(self):
        assert CANONICAL.label == "A+1 unit+1"
        assert OrientationChoice(-1, 1, True).label == "A-1 unit+1 swapped"
