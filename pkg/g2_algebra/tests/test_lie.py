# coding=utf-8
"""
Tests for the explicit sl(3) ⊂ g2 ⊂ so(7) embeddings.
"""
from dataclasses import replace
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from g2_algebra.exceptions import DimensionMismatchError, InvalidParameterError
from g2_algebra.lie import (
    MVector,
    Sl3Param,
    UNIT_INDEX,
    adjoint_matrices,
    certify_h_equivariance,
    certify_lift,
    certify_orthogonality,
    closure_failures,
    cross3,
    equivariance_failures,
    g2_basis,
    h_map,
    h_map_scale,
    hat3,
    intertwiner_solve,
    killing_ratio,
    lift_gtilde,
    m_embed,
    m_so7_basis,
    orthogonality_failures,
    reductive_pair,
    sl3_basis_params,
    sl3_embed,
    sl3_real_basis,
    sl3_so7_basis,
    so6_to_so7,
)
from g2_algebra.linalg import ExactMatrix, bracket, span, trace_form

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)
vectors3 = st.tuples(rationals, rationals, rationals)


class TestHat:
    def test_convention(self):
        assert hat3((1, 0, 0)).apply((0, 1, 0)) == (0, 0, 1)

    @given(vectors3)
    @settings(max_examples=30, deadline=None)
    def test_kills_its_axis(self, x):
        assert hat3(x).apply(x) == (0, 0, 0)

    @given(vectors3, vectors3)
    @settings(max_examples=30, deadline=None)
    def test_bracket_is_cross(self, x, y):
        assert bracket(hat3(x), hat3(y)) == hat3(cross3(x, y))


class TestSl3Embedding:
    def test_zero(self):
        assert sl3_embed(Sl3Param(x=(0, 0, 0), y=ExactMatrix.zeros(3))).is_zero()

    def test_rotation_is_block_diagonal(self):
        m = sl3_embed(Sl3Param(x=(1, 0, 0), y=ExactMatrix.zeros(3)))
        expected = ExactMatrix.block([[hat3((1, 0, 0)), ExactMatrix.zeros(3)], [ExactMatrix.zeros(3), hat3((1, 0, 0))]])
        assert m == expected

    def test_invalid_y(self):
        with pytest.raises(InvalidParameterError):
            Sl3Param(x=(0, 0, 0), y=ExactMatrix.identity(3))
        with pytest.raises(InvalidParameterError):
            Sl3Param(x=(0, 0, 0), y=ExactMatrix.elementary(3, 0, 1))

    def test_basis_independent_and_skew(self):
        images = sl3_so7_basis()
        assert len(images) == 8
        assert span(images).dim == 8
        for m in images:
            assert m.is_skew()
            assert all(m[UNIT_INDEX, j] == 0 for j in range(7))

    def test_closure(self):
        images = [sl3_embed(p) for p in sl3_basis_params()]
        sub = span(images)
        for a in images:
            for b in images:
                assert sub.contains(bracket(a, b))

    def test_so6_to_so7_shape(self):
        with pytest.raises(DimensionMismatchError):
            so6_to_so7(ExactMatrix.identity(7))


class TestMEmbedding:
    def test_displayed_matrix(self):
        m = m_embed(MVector(a=(1, 0, 0), b=(0, 0, 0)))
        assert m[0, 3] == 2
        assert m[3, 0] == -2
        assert m.entries[0:3, 4:7].tolist() == hat3((1, 0, 0)).entries.tolist()
        assert m.entries[4:7, 0:3].tolist() == hat3((1, 0, 0)).entries.tolist()
        assert m.is_skew()

    def test_zero(self):
        assert m_embed(MVector(a=(0, 0, 0), b=(0, 0, 0))).is_zero()

    def test_unit_column(self):
        m = m_embed(MVector(a=(1, 2, 3), b=(4, 5, 6)))
        assert [m[i, UNIT_INDEX] for i in range(7)] == [2, 4, 6, 0, 8, 10, 12]

    def test_orthogonal_to_sl3(self):
        assert certify_orthogonality(sl3_so7_basis(), m_so7_basis()) == 48
        assert orthogonality_failures(sl3_so7_basis(), m_so7_basis()) == []

    def test_orthogonality_failures_are_counted(self):
        h = sl3_so7_basis()[:2]
        assert orthogonality_failures(h, h[:1]) == [(0, 0)]


class TestG2Basis:
    def test_dimension(self):
        basis = g2_basis()
        assert len(basis.elements) == 14
        assert basis.subspace.dim == 14
        assert all(e.is_skew() for e in basis.elements)

    def test_structure_constants_reproduce_brackets(self):
        basis = g2_basis()
        for i in (0, 3, 8):
            for j in (1, 9, 13):
                coords = basis.structure_constants[i][j]
                total = ExactMatrix.zeros(7)
                for c, e in zip(coords, basis.elements):
                    total = total + c * e
                assert total == bracket(basis.elements[i], basis.elements[j])

    def test_bracket_closure_has_no_failures(self):
        assert closure_failures(g2_basis()) == []

    def test_corrupted_structure_constant_is_counted(self):
        basis = g2_basis()
        i, j = next(
            (i, j) for i in range(14) for j in range(14) if any(c != 0 for c in basis.structure_constants[i][j])
        )
        constants = [list(row) for row in basis.structure_constants]
        constants[i][j] = (Fraction(0),) * 14
        corrupted = replace(basis, structure_constants=tuple(tuple(row) for row in constants))
        assert closure_failures(corrupted) == [(i, j)]

    def test_reductive(self):
        basis = g2_basis()
        pair = reductive_pair(basis.h_elements, basis.m_elements)
        assert pair.g_sub == basis.subspace
        assert not pair.symmetric

    def test_m_brackets_have_h_part(self):
        basis = g2_basis()
        h_parts = [
            basis.h_component(basis.structure_constants[i][j]) for i in basis.m_indices for j in basis.m_indices
        ]
        assert any(any(c != 0 for c in part) for part in h_parts)

    def test_m_brackets_leave_m(self):
        basis = g2_basis()
        m_sub = span(basis.m_elements)
        assert not all(m_sub.contains(bracket(x, y)) for x in basis.m_elements for y in basis.m_elements)


class TestHMap:
    def test_zero(self):
        assert h_map(MVector(a=(0, 0, 0), b=(0, 0, 0))).is_zero()

    def test_scale_against_m_embed(self):
        assert h_map_scale() == 2

    def test_equivariance(self):
        assert certify_h_equivariance() == 48
        assert equivariance_failures() == []

    @given(vectors3, vectors3)
    @settings(max_examples=20, deadline=None)
    def test_skew(self, a, b):
        assert h_map(MVector(a=a, b=b)).is_skew()


class TestLift:
    def test_zero(self):
        assert lift_gtilde(ExactMatrix.zeros(6), (0,) * 6).is_zero()

    def test_pure_h_element(self):
        a = sl3_embed(sl3_basis_params()[4])
        assert lift_gtilde(a, (0,) * 6) == a.insert_zero(6)

    def test_shape_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            lift_gtilde(ExactMatrix.zeros(6), (0,) * 5)

    def test_skew(self):
        a = sl3_embed(sl3_basis_params()[1])
        assert lift_gtilde(a, (1, 0, 2, 0, -1, 3)).is_skew()

    def test_certificate(self):
        certificate = certify_lift()
        assert certificate.permutation == (0, 1, 2, 6, 3, 4, 5)
        assert certificate.scale == 2
        assert certificate.h_scale == 2
        assert certificate.complement_dim == 6


class TestIntertwiner:
    def test_identical_reps(self):
        rep = sl3_real_basis()
        report = intertwiner_solve(rep, rep)
        assert report.equivalent
        assert report.dimension == 1
        assert report.solutions[0] == report.solutions[0][0, 0] * ExactMatrix.identity(3)

    def test_adjoint_on_m_matches_canonical(self):
        basis = g2_basis()
        adjoint = adjoint_matrices(basis.h_elements, basis.m_elements)
        canonical = [sl3_embed(p) for p in sl3_basis_params()]
        report = intertwiner_solve(canonical, adjoint)
        assert report.equivalent
        assert report.dimension == 2
        assert adjoint == canonical

    def test_dual_is_inequivalent(self):
        rep = sl3_real_basis()
        dual = [-m.T for m in rep]
        report = intertwiner_solve(rep, dual)
        assert not report.equivalent
        assert report.dimension == 0

    def test_length_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            intertwiner_solve(sl3_real_basis(), sl3_real_basis()[:3])


class TestKillingForm:
    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_ratio(self, n):
        assert killing_ratio(n) == Fraction(n - 2)

    def test_small_n(self):
        with pytest.raises(InvalidParameterError):
            killing_ratio(2)

    def test_trace_form_on_g2_is_negative(self):
        for e in g2_basis().elements:
            assert trace_form(e, e) < 0
