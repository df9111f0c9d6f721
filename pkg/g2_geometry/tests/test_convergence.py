# coding=utf-8
"""
Tests for convergence-order estimation.
"""
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from g2_geometry.convergence import EXACT, convergence_study, estimate_order, richardson_error
from g2_geometry.exceptions import InvalidConfigError
from g2_geometry.fields import FieldFn, StencilConfig, fd_partial

STEPS = (2e-2, 1e-2, 5e-3)


class TestEstimateOrder:
    @given(st.floats(min_value=0.5, max_value=4.0), st.floats(min_value=1e-3, max_value=1e3))
    @settings(max_examples=40, deadline=None)
    def test_recovers_power_law(self, power, constant):
        residuals = [constant * h**power for h in STEPS]
        assert estimate_order(STEPS, residuals).order == pytest.approx(power, abs=1e-6)

    def test_exact_when_all_residuals_vanish(self):
        result = estimate_order(STEPS, [0.0, 0.0, 0.0])
        assert result.exact
        assert result.label == EXACT
        assert result.within(1.8, 2.2)

    def test_flat_residuals_have_order_zero(self):
        result = estimate_order(STEPS, [0.1, 0.1, 0.1])
        assert result.order == pytest.approx(0.0, abs=1e-9)
        assert not result.within(1.8, 2.2)

    def test_needs_two_steps(self):
        with pytest.raises(InvalidConfigError):
            estimate_order((1e-2,), (1e-4,))

    def test_needs_matching_lengths(self):
        with pytest.raises(InvalidConfigError):
            estimate_order(STEPS, (1e-4, 1e-5))


class TestConvergenceStudy:
    def test_central_difference_is_second_order(self):
        f = FieldFn(1, lambda p: np.sin(p[0]))

        def residual(cfg):
            return abs(float(fd_partial(f, [0.3], 0, cfg)) - np.cos(0.3))

        result = convergence_study(residual, STEPS)
        assert result.within(1.8, 2.2)
        assert result.steps == STEPS

    def test_fourth_order_stencil(self):
        f = FieldFn(1, lambda p: np.exp(p[0]))

        def residual(cfg):
            return abs(float(fd_partial(f, [0.1], 0, cfg)) - np.exp(0.1))

        result = convergence_study(residual, (2e-1, 1e-1, 5e-2), StencilConfig(order=4))
        assert result.within(3.7, 4.3)

    def test_needs_three_steps(self):
        with pytest.raises(InvalidConfigError):
            convergence_study(lambda cfg: cfg.h, (1e-2, 5e-3))


class TestRichardsonError:
    def test_estimates_truncation(self):
        f = FieldFn(1, lambda p: np.sin(p[0]))
        coarse = fd_partial(f, [0.3], 0, StencilConfig(h=1e-1))
        fine = fd_partial(f, [0.3], 0, StencilConfig(h=5e-2))
        true_error = abs(coarse - np.cos(0.3))
        assert richardson_error(coarse, fine) == pytest.approx(true_error, rel=1e-2)
