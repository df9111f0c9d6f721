# coding=utf-8
"""
Tests for the float views of the model forms and projections.
"""
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from g2_geometry.model import (
    cross,
    g2_float_basis,
    h_of,
    h_tensor,
    model_phi,
    model_psi,
    off_g2,
    off_sl3,
    project_g2,
    sl3_float_basis,
)

vectors7 = st.lists(st.floats(min_value=-2, max_value=2, allow_nan=False), min_size=7, max_size=7).map(np.array)


class TestModelForms:
    def test_phi_is_alternating(self):
        phi = model_phi()
        assert phi[0, 1, 2] == 1.0
        assert phi[1, 0, 2] == -1.0
        assert np.allclose(phi, -np.transpose(phi, (0, 2, 1)))

    def test_norms(self):
        assert np.einsum("ijk,ijk->", model_phi(), model_phi()) == pytest.approx(42.0)
        assert np.einsum("ijkl,ijkl->", model_psi(), model_psi()) == pytest.approx(168.0)

    def test_psi_components(self):
        psi = model_psi()
        assert psi[3, 4, 5, 6] == 1.0
        assert psi[1, 2, 5, 6] == -1.0

    def test_forms_are_read_only(self):
        with pytest.raises(ValueError):
            model_phi()[0, 1, 2] = 0.0


class TestCrossProduct:
    def test_units(self):
        e = np.eye(7)
        assert cross(e[0], e[1]) == pytest.approx(e[2])
        assert cross(e[1], e[0]) == pytest.approx(-e[2])

    @given(vectors7, vectors7)
    @settings(max_examples=30, deadline=None)
    def test_norm_identity(self, x, y):
        expected = (x @ x) * (y @ y) - (x @ y) ** 2
        assert cross(x, y) @ cross(x, y) == pytest.approx(expected, abs=1e-9)

    @given(vectors7, vectors7)
    @settings(max_examples=30, deadline=None)
    def test_orthogonal_to_factors(self, x, y):
        product = cross(x, y)
        assert product @ x == pytest.approx(0.0, abs=1e-9)
        assert product @ y == pytest.approx(0.0, abs=1e-9)


class TestProjections:
    def test_bases(self):
        assert g2_float_basis().shape == (14, 7, 7)
        assert sl3_float_basis().shape == (8, 6, 6)

    def test_g2_elements_are_fixed(self):
        for element in g2_float_basis():
            assert np.max(np.abs(off_g2(element))) < 1e-12

    def test_sl3_elements_are_fixed(self):
        for element in sl3_float_basis():
            assert np.max(np.abs(off_sl3(element))) < 1e-12

    def test_projection_is_idempotent(self):
        rng = np.random.default_rng(3)
        matrix = rng.normal(size=(7, 7))
        matrix = matrix - matrix.T
        once = project_g2(matrix)
        assert project_g2(once) == pytest.approx(once)
        assert np.max(np.abs(off_g2(matrix))) > 0.1

    def test_h_is_linear_and_off_sl3(self):
        h = h_tensor()
        assert h.shape == (6, 6, 6)
        vector = np.arange(1.0, 7.0)
        assert h_of(vector) == pytest.approx(np.einsum("c,cab->ab", vector, h))
        for element in h:
            assert np.max(np.abs(off_sl3(element))) > 0.1
            assert element == pytest.approx(-element.T)
