# coding=utf-8
"""
Tests for the invariant 3-form, the cross product and the octonion table.
"""
from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from g2_algebra.exceptions import DimensionMismatchError, InvalidParameterError
from g2_algebra.lie import g2_basis
from g2_algebra.linalg import ExactMatrix
from g2_algebra.octonions import (
    AlternatingForm,
    OctonionTable,
    act_on_threeform,
    associative_test,
    calibration_ratio,
    certified_octonions,
    certified_phi,
    certify_cross_identities,
    coassociative_test,
    cross_identity_failures,
    dot,
    exact_sqrt,
    gram_determinant,
    invariant_threeform_kernel,
    octonion_failures,
    phi_cross_duality,
    stabilizer,
    star_phi,
    torsion_cross,
    wedge_exact,
)

rationals = st.fractions(min_value=-3, max_value=3, max_denominator=4)
vectors7 = st.lists(rationals, min_size=7, max_size=7).map(tuple)

# e123 − e145 − e246 − e347 − e167 + e257 − e356, 0-based
EXPECTED_PHI = {
    (0, 1, 2): 1,
    (0, 3, 4): -1,
    (1, 3, 5): -1,
    (2, 3, 6): -1,
    (0, 5, 6): -1,
    (1, 4, 6): 1,
    (2, 4, 5): -1,
}


def e(i):
    return tuple(Fraction(int(k == i)) for k in range(7))


class TestInvariantThreeForm:
    def test_components(self):
        phi = certified_phi()
        assert dict(phi.items()) == EXPECTED_PHI

    def test_normalized(self):
        assert certified_phi().norm_squared() == 7

    def test_annihilated_by_g2(self):
        phi = certified_phi()
        for element in g2_basis().elements:
            assert all(v == 0 for v in act_on_threeform(element, phi).values)

    def test_kernel_is_one_dimensional(self):
        assert len(invariant_threeform_kernel()) == 1

    def test_stabilizer_is_g2(self):
        assert stabilizer(certified_phi()) == g2_basis().subspace

    def test_component_antisymmetry(self):
        phi = certified_phi()
        assert phi.component(1, 0, 2) == -1
        assert phi.component(2, 0, 1) == 1
        assert phi.component(0, 0, 2) == 0

    def test_wrong_component_count(self):
        with pytest.raises(DimensionMismatchError):
            AlternatingForm(3, (1, 2, 3))


class TestCrossProduct:
    def test_duality_on_units(self):
        cross = phi_cross_duality(certified_phi())
        assert cross(e(0), e(1)) == e(2)
        for i in range(3):
            assert cross(e(3), e(i)) == e(4 + i)

    @given(vectors7, vectors7)
    @settings(max_examples=15, deadline=None)
    def test_identities(self, x, y):
        cross = phi_cross_duality(certified_phi())
        assert certify_cross_identities(cross, [(x, y)]) == 1
        assert cross_identity_failures(cross, [(x, y)]) == []

    def test_rescaled_cross_fails_two_identities(self):
        cross = phi_cross_duality(certified_phi()).scaled(2)
        failures = cross_identity_failures(cross, [(e(0), e(1))])
        assert [message for message, _, _ in failures] == ["|x × y|² identity fails", "x × (x × y) identity fails"]

    @given(vectors7, vectors7, vectors7)
    @settings(max_examples=10, deadline=None)
    def test_triple_product_alternates(self, x, y, z):
        cross = phi_cross_duality(certified_phi())
        value = dot(cross(x, y), z)
        assert value == certified_phi()(x, y, z)
        assert value == -dot(cross(y, x), z)
        assert value == -dot(cross(x, z), y)

    def test_torsion_is_proportional(self):
        report = torsion_cross()
        assert report.complement_dim == 7
        assert report.intertwiner_dim == 1
        assert report.scale != 0
        assert report.cross.is_antisymmetric()
        assert report.cross == phi_cross_duality(certified_phi()).scaled(report.scale)


class TestHodgeStar:
    def test_norm(self):
        assert star_phi(certified_phi()).norm_squared() == 7

    def test_phi_wedge_star_phi(self):
        phi = certified_phi()
        volume = wedge_exact(phi, star_phi(phi))
        assert volume.degree == 7
        assert volume.values == (7,)

    def test_star_of_e123(self):
        assert star_phi(certified_phi()).component(3, 4, 5, 6) == 1

    def test_scaled_metric(self):
        phi = certified_phi()
        scaled = star_phi(phi, 4 * ExactMatrix.identity(7))
        assert scaled == star_phi(phi).scaled(2)

    def test_exact_sqrt(self):
        assert exact_sqrt(Fraction(9, 4)) == Fraction(3, 2)
        with pytest.raises(InvalidParameterError):
            exact_sqrt(Fraction(2))


class TestAssociative:
    def test_first_block(self):
        assert associative_test([e(0), e(1), e(2)])

    def test_second_block_is_not_associative(self):
        assert not associative_test([e(4), e(5), e(6)])
        assert certified_phi()(e(4), e(5), e(6)) == 0

    def test_coassociative_complement(self):
        assert coassociative_test([e(3), e(4), e(5), e(6)])
        assert not coassociative_test([e(0), e(1), e(2), e(3)])

    def test_basis_independent(self):
        assert associative_test([(1, 1, 0, 0, 0, 0, 0), (0, 1, 0, 0, 0, 0, 0), (3, 0, 2, 0, 0, 0, 0)])

    def test_generic_plane(self):
        ratio = calibration_ratio(certified_phi(), [e(0), e(1), tuple(a + b for a, b in zip(e(2), e(3)))])
        assert ratio == Fraction(1, 2)
        assert 0 < ratio < 1

    @given(vectors7, vectors7)
    @settings(max_examples=10, deadline=None)
    def test_closed_under_cross(self, x, y):
        assume(gram_determinant([x, y]) != 0)
        cross = phi_cross_duality(certified_phi())
        assert associative_test([x, y, cross(x, y)])

    @given(vectors7, vectors7, vectors7)
    @settings(max_examples=10, deadline=None)
    def test_calibration_bound(self, x, y, z):
        assume(gram_determinant([x, y, z]) != 0)
        assert calibration_ratio(certified_phi(), [x, y, z]) <= 1

    def test_dependent_vectors(self):
        with pytest.raises(InvalidParameterError):
            associative_test([e(0), e(0), e(1)])


class TestOctonions:
    def test_unit(self):
        table = certified_octonions()
        q = (Fraction(1, 2), 1, 2, 3, 4, 5, 6, 7)
        assert table.multiply(table.unit(0), q) == q

    def test_imaginary_units_square_to_minus_one(self):
        table = certified_octonions()
        for i in range(1, 8):
            assert table.multiply(table.unit(i), table.unit(i)) == (-1, 0, 0, 0, 0, 0, 0, 0)

    def test_not_associative(self):
        table = certified_octonions()
        result = table.associator(table.unit(1), table.unit(2), table.unit(4))
        assert result == (0, 0, 0, 0, 0, 0, 0, -2)

    def test_conjugate_product_is_norm(self):
        table = certified_octonions()
        p = (1, 2, 0, Fraction(1, 3), 0, -1, 0, 4)
        product = table.multiply(p, table.conjugate(p))
        assert product == (table.norm_squared(p), 0, 0, 0, 0, 0, 0, 0)

    def test_certified_table_has_no_failures(self):
        assert octonion_failures(certified_octonions(), samples=10, seed=3) == []

    def test_rescaled_cross_breaks_norm(self):
        table = OctonionTable(cross=phi_cross_duality(certified_phi()).scaled(2))
        messages = {message for message, _ in octonion_failures(table, samples=10, seed=3)}
        assert "norm is not multiplicative" in messages
        assert "(1,0) is not a unit" not in messages
