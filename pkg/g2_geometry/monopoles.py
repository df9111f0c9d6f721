# coding=utf-8
"""
date:           oct-2026

usage:          monopole data on a split 6-manifold, the classical Gibbons-Hawking metric, and
                residuals of the monopole equations.

                Base coordinates are (x₁, x₂, x₃ | y₁, y₂, y₃): the plus block (V-leaves, T⁺)
                then the minus block (H, T⁻). Point charges sit at y = 0 and the Dirac string
                runs down the negative y₃ axis.

                    v = c + m/r            A = m (y₁dy₂ − y₂dy₁) / (r (r + y₃))
                    dA = −*_H dv           (monopole sign)
                    dA = *dV               (Gibbons-Hawking sign, A replaced by −A)
"""
# python
import logging
from dataclasses import dataclass
from typing import Callable, Dict, Optional, Sequence

# 3rd party
import numpy as np

# this repo
from g2_geometry.exceptions import FieldValueError
from g2_geometry.fields import (
    FIRST_DERIVATIVES,
    Domain,
    Exclusion,
    FieldFn,
    SplitSpec,
    StencilConfig,
    derivative_field,
    exterior_d,
    extend,
    hodge_restricted,
    jacobian,
    restrict,
    sup_over,
)

log = logging.getLogger(__name__)

BASE_SPLIT = SplitSpec(dim=6, blocks=(("plus", (0, 1, 2)), ("minus", (3, 4, 5))))
R3_SPLIT = SplitSpec(dim=3, blocks=(("space", (0, 1, 2)),))
CORE_RADIUS = 0.5
STRING_CLEARANCE = 0.5


def _radius(y: np.ndarray) -> float:
    return float(np.sqrt(y @ y))


def charge_exclusions(offset: int) -> tuple:
    """exclusions around the point charge and the Dirac string, for y = p[offset:offset+3]"""

    def radius(p):
        return _radius(p[offset : offset + 3])

    def string(p):
        return radius(p) + p[offset + 2]

    return (
        Exclusion("monopole", radius, CORE_RADIUS),
        Exclusion("dirac-string", string, STRING_CLEARANCE),
    )


def base_domain(charged: bool = True) -> Domain:
    exclusions = charge_exclusions(3) if charged else ()
    return Domain(lower=(-1.0,) * 3 + (-2.0,) * 3, upper=(1.0,) * 3 + (2.0,) * 3, exclusions=exclusions)


def r3_domain(charged: bool = True) -> Domain:
    return Domain(lower=(-2.0,) * 3, upper=(2.0,) * 3, exclusions=charge_exclusions(0) if charged else ())


def point_charge(constant: float, mass: float, offset: int = 3, dim: int = 6, domain=None) -> FieldFn:
    def evaluate(p):
        return constant + mass / _radius(p[offset : offset + 3])

    return FieldFn(dim, evaluate, domain, "{c} + {m}/r".format(c=constant, m=mass))


def dirac_potential(mass: float, offset: int = 3, dim: int = 6, domain=None) -> FieldFn:
    """m (y₁dy₂ − y₂dy₁) / (r (r + y₃)), singular on the negative y₃ axis"""

    def evaluate(p):
        y = p[offset : offset + 3]
        r = _radius(y)
        scale = mass / (r * (r + y[2]))
        value = np.zeros(dim)
        value[offset] = -scale * y[1]
        value[offset + 1] = scale * y[0]
        return value

    return FieldFn(dim, evaluate, domain, "dirac({m})".format(m=mass))


def flat_metric(dim: int = 6, domain=None) -> FieldFn:
    identity = np.eye(dim)
    return FieldFn(dim, lambda p: identity, domain, "euclidean")


def positive(field: FieldFn, p: np.ndarray, label: str) -> float:
    value = float(field(p))
    if not value > 0:
        raise FieldValueError("{l} = {v} is not positive at {p}".format(l=label, v=value, p=list(np.round(p, 6))))
    return value


@dataclass(frozen=True)
class GHData:
    """V and A on a box in ℝ³ minus exclusions."""

    V: FieldFn
    A: FieldFn
    domain: Domain
    name: str = ""


def gh_data(V: Callable[[np.ndarray], float], A: Optional[FieldFn] = None, charged: bool = True, name: str = ""):
    domain = r3_domain(charged)
    potential = A if A is not None else FieldFn(3, lambda p: np.zeros(3), domain, "0")
    return GHData(V=FieldFn(3, V, domain, name), A=potential, domain=domain, name=name)


def gh_domain(data: GHData) -> Domain:
    """(t, y) with t ∈ [−1, 1], exclusions lifted to the last three coordinates"""
    lifted = tuple(
        Exclusion(e.name, (lambda level: lambda q: level(q[1:4]))(e.level), e.threshold) for e in data.domain.exclusions
    )
    return Domain(lower=(-1.0,) + data.domain.lower, upper=(1.0,) + data.domain.upper, exclusions=lifted)


def gh_build(data: GHData) -> FieldFn:
    """V (dy₁² + dy₂² + dy₃²) + V⁻¹ (dt + A)² on coordinates (t, y₁, y₂, y₃)"""
    spatial = np.diag([0.0, 1.0, 1.0, 1.0])

    def evaluate(q):
        y = q[1:4]
        V = positive(data.V, y, "V")
        theta = np.concatenate(([1.0], data.A(y)))
        return V * spatial + np.outer(theta, theta) / V

    return FieldFn(4, evaluate, gh_domain(data), "gibbons-hawking({n})".format(n=data.name))


def gh_residual(data: GHData, samples: Sequence[Sequence[float]], cfg: StencilConfig = FIRST_DERIVATIVES):
    """harmonicity of V and dA − *dV at samples of ℝ³"""
    gradient = derivative_field(data.V, cfg)
    identity = np.eye(3)

    def residual(y):
        laplacian = np.trace(jacobian(gradient, y, cfg))
        star_dv = hodge_restricted(jacobian(data.V, y, cfg), R3_SPLIT, identity, "space")
        return {"harmonic": laplacian, "monopole": exterior_d(data.A, y, cfg) - star_dv}

    return sup_over(samples, residual)


@dataclass(frozen=True)
class MonopoleData:
    """
    (v, A) on a split base. `alpha` is the T⁻ covector field of the weak case, given by its
    three coordinate components along the minus block; None means α = 0.
    """

    v: FieldFn
    A: FieldFn
    split: SplitSpec = BASE_SPLIT
    alpha: Optional[FieldFn] = None
    name: str = ""

    def alpha_at(self, p: np.ndarray) -> np.ndarray:
        return np.zeros(3) if self.alpha is None else self.alpha(p)


def _basicness(mono: MonopoleData, p: np.ndarray, cfg: StencilConfig) -> Dict[str, np.ndarray]:
    plus = list(mono.split.indices("plus"))
    dv = jacobian(mono.v, p, cfg)
    dA = jacobian(mono.A, p, cfg)
    return {
        "basic_v": dv[plus],
        "basic_A": np.concatenate([mono.A(p)[plus], dA[plus].reshape(-1)]),
    }


def monopole_residual(
    mono: MonopoleData, k: FieldFn, samples: Sequence[Sequence[float]], cfg: StencilConfig = FIRST_DERIVATIVES
) -> Dict[str, float]:
    """sup |dA + *_H dv| with H the minus block, plus basicness of v and A along the plus block"""

    def residual(p):
        positive(mono.v, p, "v")
        star_dv = hodge_restricted(jacobian(mono.v, p, cfg), mono.split, k(p), "minus")
        values = {"monopole": exterior_d(mono.A, p, cfg) + star_dv}
        values.update(_basicness(mono, p, cfg))
        return values

    return sup_over(samples, residual)


def weak_monopole_residual(
    mono: MonopoleData, k: FieldFn, samples: Sequence[Sequence[float]], cfg: StencilConfig = FIRST_DERIVATIVES
) -> Dict[str, float]:
    """
    blockwise residuals with v = u⁻²:
        (dA)₊₊ − u⁻¹ *₊α        (dA)₊₋        (dA)₋₋ + *₋(dv − v α)
    α is carried to T⁺ by block index; both stars use k, the rescaled base metric.
    """
    plus, minus = mono.split.indices("plus"), mono.split.indices("minus")
    dim = mono.split.dim

    def residual(p):
        g = k(p)
        v = positive(mono.v, p, "v")
        u = v**-0.5
        alpha = mono.alpha_at(p)
        dA = exterior_d(mono.A, p, cfg)
        star_plus = hodge_restricted(extend(alpha, plus, dim), mono.split, g, "plus")
        source = jacobian(mono.v, p, cfg) - v * extend(alpha, minus, dim)
        star_minus = hodge_restricted(source, mono.split, g, "minus")
        values = {
            "plus_plus": restrict(dA, plus) - restrict(star_plus, plus) / u,
            "plus_minus": dA[np.ix_(plus, minus)],
            "minus_minus": restrict(dA, minus) + restrict(star_minus, minus),
        }
        values.update(_basicness(mono, p, cfg))
        return values

    return sup_over(samples, residual)
