# coding=utf-8
"""
Tests for seeded interior sampling and CSV sample dumps.
"""
import numpy as np
import pytest

from g2_geometry.exceptions import G2GeometryError
from g2_geometry.fields import Domain, Exclusion
from g2_geometry.monopoles import base_domain
from g2_geometry.sampling import sample_points, write_samples_csv


class TestSamplePoints:
    def test_deterministic_in_seed(self):
        domain = base_domain()
        first = sample_points(domain, 20, seed=42, margin=0.01)
        again = sample_points(domain, 20, seed=42, margin=0.01)
        other = sample_points(domain, 20, seed=7, margin=0.01)
        assert np.array_equal(first, again)
        assert not np.array_equal(first, other)

    def test_points_respect_margin_and_exclusions(self):
        domain = base_domain()
        points = sample_points(domain, 50, margin=0.05)
        assert points.shape == (50, 6)
        assert all(domain.contains(p, 0.05) for p in points)
        assert all(np.linalg.norm(p[3:]) >= 0.5 for p in points)

    def test_zero_count(self):
        assert sample_points(Domain.box(3), 0).shape == (0, 3)

    def test_empty_domain(self):
        domain = Domain.box(2, exclusions=(Exclusion("everything", lambda p: -1.0),))
        with pytest.raises(G2GeometryError):
            sample_points(domain, 5)


class TestWriteSamples:
    def test_csv_layout(self, tmp_path):
        points = np.array([[0.0, 1.0], [2.0, 3.0], [4.0, 5.0]])
        filename = tmp_path / "samples.csv"
        write_samples_csv(filename, points, {"torsion": [1e-3, 2e-3, 3e-3], "dA": [0.0, 0.5, 1.0]})
        lines = filename.read_text().splitlines()
        assert lines[0] == "x0,x1,dA,torsion"
        table = np.loadtxt(filename, delimiter=",", skiprows=1)
        assert table.shape == (3, 4)
        assert table[1] == pytest.approx([2.0, 3.0, 0.5, 2e-3])
