# coding=utf-8
"""
date:           oct-2026

usage:          reference values that production floors are read from.

                An oracle is a residual recomputed with a finer, Richardson-extrapolated
                stencil. Its value is recorded in g2_geometry/fixtures/<name>.json together with
                the stencil and points it was computed at, and the floor a check must reach.
"""
# python
import json
import logging
from functools import lru_cache
from pathlib import Path
from typing import Dict, Sequence

# this repo
from g2_geometry.exceptions import InvalidConfigError
from g2_geometry.fields import FieldFn, StencilConfig
from g2_geometry.gallery import sphere_patch
from g2_geometry.hypersurfaces import hypersurface_checks

log = logging.getLogger(__name__)

FIXTURE_DIR = Path(__file__).resolve().parent / "fixtures"
ORACLE = StencilConfig(h=1e-4, order=4, richardson=True)
ORACLE_POINTS = (
    (0.0, 0.0, 0.0, 0.0, 0.0, 0.0),
    (0.1, 0.1, 0.1, 0.1, 0.1, 0.1),
    (-0.2, 0.1, 0.0, 0.15, -0.1, 0.05),
)
# relative slack between the oracle and the production stencil
ALLOWANCE = 1e-3


def oracle_residual(immersion: FieldFn, key: str, points: Sequence[Sequence[float]] = ORACLE_POINTS, cfg=ORACLE):
    return hypersurface_checks(immersion, points, cfg)[key]


def sphere_kahler_record() -> Dict[str, object]:
    """the sphere's |∇J| at the oracle stencil and the floor derived from it"""
    value = oracle_residual(sphere_patch(), "kahler")
    return {
        "immersion": "sphere",
        "residual": "kahler",
        "h": ORACLE.h,
        "order": ORACLE.order,
        "richardson": ORACLE.richardson,
        "points": [list(p) for p in ORACLE_POINTS],
        "value": value,
        "allowance": ALLOWANCE,
        "floor": value * (1.0 - ALLOWANCE),
    }


def load_fixture(name: str) -> Dict[str, object]:
    path = FIXTURE_DIR / "{n}.json".format(n=name)
    try:
        with path.open("r", encoding="utf-8") as f:
            return json.load(f)
    except (OSError, ValueError) as e:
        raise InvalidConfigError("cannot read oracle fixture {p}: {e}".format(p=path, e=e)) from e


def write_fixture(name: str, record: Dict[str, object]) -> Path:
    path = FIXTURE_DIR / "{n}.json".format(n=name)
    with path.open("w", encoding="utf-8") as f:
        json.dump(record, f, indent=2, sort_keys=True)
        f.write("\n")
    log.info("oracle fixture {n} written: {v}".format(n=name, v=record.get("value")))
    return path


@lru_cache(maxsize=None)
def oracle_floor(name: str) -> float:
    return float(load_fixture(name)["floor"])
