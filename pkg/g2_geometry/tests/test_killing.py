# coding=utf-8
"""
Tests for the Killing-reduction conditions and the ρ-connection torsion.
"""
import numpy as np
import pytest

from g2_geometry.exceptions import DegenerateMetricError, FieldValueError
from g2_geometry.fields import Domain, constant_field
from g2_geometry.gallery import killing_flat, killing_taub_nut, rho_polynomial, rho_trivial
from g2_geometry.killing import (
    KillingData,
    dA_conditions_check,
    gamma_check,
    gamma_matrix,
    h_gamma,
    killing_conditions_check,
    orthonormal_frame,
    rho_torsion_check,
    script_b,
    torsion_of,
    weak_structure_residual,
)
from g2_geometry.monopoles import BASE_SPLIT, base_domain, flat_metric
from g2_geometry.sampling import sample_points


@pytest.fixture(scope="module")
def samples():
    return sample_points(base_domain(), 4, seed=42, margin=0.1)


@pytest.fixture(scope="module")
def box_samples():
    return sample_points(Domain.box(6), 4, seed=42, margin=0.05)


class TestFrames:
    def test_orthonormal(self):
        metric = np.diag([1.0, 2.0, 3.0, 4.0, 5.0, 6.0])
        metric[0, 1] = metric[1, 0] = 0.5
        frame = orthonormal_frame(metric)
        assert frame.T @ metric @ frame == pytest.approx(np.eye(6))
        assert frame[3:, :3] == pytest.approx(np.zeros((3, 3)))

    def test_blocks_must_be_orthogonal(self):
        metric = np.eye(6)
        metric[0, 4] = metric[4, 0] = 0.1
        with pytest.raises(DegenerateMetricError):
            orthonormal_frame(metric)

    def test_zero_connection_on_commuting_frame(self):
        assert torsion_of(np.zeros((6, 6, 6)), np.zeros((6, 6, 6))) == pytest.approx(np.zeros((6, 6, 6)))


class TestKillingData:
    def test_u_must_not_vanish(self):
        data = KillingData(
            metric=flat_metric(),
            u=constant_field(6, 0.0),
            A=constant_field(6, np.zeros(6)),
            b=constant_field(6, np.zeros(3)),
            B=constant_field(6, np.zeros((3, 3))),
        )
        with pytest.raises(FieldValueError):
            data.u_at(np.zeros(6))

    def test_B_must_be_tracefree_and_symmetric(self):
        data = KillingData(
            metric=flat_metric(),
            u=constant_field(6, 1.0),
            A=constant_field(6, np.zeros(6)),
            b=constant_field(6, np.zeros(3)),
            B=constant_field(6, np.eye(3)),
        )
        with pytest.raises(FieldValueError):
            data.B_at(np.zeros(6))

    def test_script_b_blocks(self):
        B = np.diag([1.0, -1.0, 0.0])
        matrix = script_b(np.array([0.0, 0.0, 1.0]), B)
        assert matrix[3:, :3] == pytest.approx(B)
        assert matrix[:3, 3:] == pytest.approx(-B)
        assert matrix[1, 0] == 1.0
        assert matrix[4, 3] == 1.0


class TestKillingConditions:
    def test_flat(self, samples):
        residuals = killing_conditions_check(killing_flat(), samples)
        assert max(residuals.values()) == 0.0

    def test_taub_nut(self, samples):
        residuals = killing_conditions_check(killing_taub_nut(), samples)
        assert set(residuals) == {"torsion", "dA", "levi_civita", "metricity", "sl3"}
        assert max(residuals.values()) < 1e-3

    def test_perturbed_potential_fails_dA(self, samples):
        residuals = killing_conditions_check(killing_taub_nut(perturbed=True), samples)
        assert residuals["dA"] > 0.04
        assert residuals["torsion"] < 1e-3

    def test_gamma_expansion_agrees(self, samples):
        assert gamma_check(killing_taub_nut(), samples) < 1e-12

    def test_gamma_vanishes_on_flat(self):
        assert gamma_matrix(killing_flat(), np.zeros(6)) == pytest.approx(np.zeros((6, 6)))

    def test_h_gamma_shape(self):
        assert h_gamma(np.eye(6)).shape == (6, 6, 6)


class TestDAConditions:
    def test_taub_nut(self, samples):
        residuals = dA_conditions_check(killing_taub_nut(), samples)
        assert residuals["plus_plus"] < 1e-5
        assert residuals["plus_minus"] == 0.0
        assert residuals["minus_minus"] < 1e-3
        assert residuals["monopole_minus_minus"] < 1e-3

    def test_two_forms_agree(self, samples):
        for data in (killing_taub_nut(), killing_taub_nut(perturbed=True)):
            assert dA_conditions_check(data, samples)["form_agreement"] < 1e-10

    def test_perturbed(self, samples):
        assert dA_conditions_check(killing_taub_nut(perturbed=True), samples)["minus_minus"] > 0.04


class TestWeakStructure:
    def test_flat_without_alpha(self, samples):
        assert weak_structure_residual(flat_metric(), BASE_SPLIT, None, samples) == 0.0

    def test_flat_rejects_nonzero_alpha(self, samples):
        alpha = constant_field(6, np.array([1.0, 0.0, 0.0]))
        assert weak_structure_residual(flat_metric(), BASE_SPLIT, alpha, samples) > 0.1


class TestRhoTorsion:
    def test_trivial(self, box_samples):
        assert max(rho_torsion_check(rho_trivial(), box_samples).values()) == 0.0

    def test_polynomial(self, box_samples):
        residuals = rho_torsion_check(rho_polynomial(), box_samples)
        assert set(residuals) == {"tm_xy", "unit_xy", "tm_x1", "unit_x1"}
        assert max(residuals.values()) < 1e-3

