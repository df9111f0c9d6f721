# coding=utf-8
"""
Tests for the oracle fixtures that hypersurface floors are read from.
"""
import numpy as np
import pytest

from g2_geometry.exceptions import InvalidConfigError
from g2_geometry.gallery import sphere_patch
from g2_geometry.hypersurfaces import HYPERSURFACE, hypersurface_checks
from g2_geometry.oracles import (
    ORACLE,
    ORACLE_POINTS,
    load_fixture,
    oracle_floor,
    oracle_residual,
    sphere_kahler_record,
    write_fixture,
)


class TestSphereKahlerFixture:
    def test_fixture_matches_oracle(self):
        stored = load_fixture("sphere_kahler")
        fresh = sphere_kahler_record()
        assert stored["value"] == pytest.approx(fresh["value"], abs=1e-6)
        assert stored["floor"] == pytest.approx(fresh["floor"], abs=1e-6)
        assert (stored["h"], stored["order"], stored["richardson"]) == (ORACLE.h, ORACLE.order, ORACLE.richardson)
        assert stored["points"] == [list(p) for p in ORACLE_POINTS]

    def test_floor_is_below_the_oracle(self):
        stored = load_fixture("sphere_kahler")
        assert stored["floor"] == pytest.approx(stored["value"] * (1.0 - stored["allowance"]), rel=1e-12)
        assert oracle_floor("sphere_kahler") < stored["value"]

    def test_oracle_agrees_with_closed_form(self):
        assert oracle_residual(sphere_patch(), "kahler") == pytest.approx(np.sqrt(24.0), abs=1e-6)

    def test_production_stencil_reaches_the_floor(self):
        value = hypersurface_checks(sphere_patch(), ORACLE_POINTS, HYPERSURFACE)["kahler"]
        assert value >= oracle_floor("sphere_kahler")

    def test_missing_fixture(self):
        with pytest.raises(InvalidConfigError, match="no-such-oracle"):
            load_fixture("no-such-oracle")


class TestWriteFixture:
    def test_round_trip(self, tmp_path, monkeypatch):
        monkeypatch.setattr("g2_geometry.oracles.FIXTURE_DIR", tmp_path)
        path = write_fixture("scratch", {"value": 1.5, "floor": 1.0})
        assert path == tmp_path / "scratch.json"
        assert load_fixture("scratch") == {"value": 1.5, "floor": 1.0}
