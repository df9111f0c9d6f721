# coding=utf-8
"""
date:           oct-2026

usage:          named example inputs for every construction, each with its expected verdict.

                Positive examples must pass their checks and converge; negative controls must
                fail them by a margin that does not shrink with h.
"""
# python
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Dict

# 3rd party
import numpy as np

# this repo
from g2_geometry.bundles import G2MetricBundle, flat_mono, g2_build_thm1, g2_build_thm2, taub_nut_mono
from g2_geometry.fields import Domain, Exclusion, FieldFn, constant_field
from g2_geometry.killing import LEVI_CIVITA, KillingData, RhoData
from g2_geometry.model import hat
from g2_geometry.monopoles import (
    BASE_SPLIT,
    GHData,
    MonopoleData,
    base_domain,
    dirac_potential,
    flat_metric,
    gh_data,
    r3_domain,
)

POSITIVE = "positive"
NEGATIVE = "negative-control"

TAUB_NUT_MASS = 0.5
PERTURBATION = 0.1


@dataclass(frozen=True)
class GalleryEntry:
    name: str
    kind: str
    builder: str
    inputs: str
    anchor: str
    verdict: str
    factory: Callable[[], object]

    @property
    def provenance(self) -> Dict[str, str]:
        return {"builder": self.builder, "inputs": self.inputs, "anchor": self.anchor}


def _radius(y) -> float:
    return float(np.sqrt(y @ y))


# Gibbons-Hawking


def gh_example(constant: float, mass: float, name: str) -> GHData:
    def V(y):
        return constant + mass / _radius(y)

    return gh_data(V, A=dirac_potential(-mass, offset=0, dim=3, domain=r3_domain()), name=name)


def gh_trivial() -> GHData:
    return gh_data(lambda y: 1.0, charged=False, name="V = 1")


def gh_non_harmonic() -> GHData:
    return gh_data(lambda y: 1.0 + float(y @ y), charged=False, name="V = 1 + r^2")


# G₂ metrics from monopoles


def thm1_flat() -> G2MetricBundle:
    domain = base_domain(charged=False)
    return g2_build_thm1(flat_metric(domain=domain), BASE_SPLIT, flat_mono(domain), inputs="k flat, v = 1, A = 0")


def thm1_taub_nut() -> G2MetricBundle:
    return g2_build_thm1(
        flat_metric(domain=base_domain()), BASE_SPLIT, taub_nut_mono(), inputs="k flat, v = 1 + 1/(2r), A dirac"
    )


def broken_mono() -> MonopoleData:
    mono = taub_nut_mono()
    v = mono.v
    perturbed = FieldFn(6, lambda p: float(v(p)) + PERTURBATION * p[3], v.domain, "1 + 1/(2r) + 0.1 y1")
    return MonopoleData(v=perturbed, A=mono.A, name="broken-monopole")


def thm1_broken() -> G2MetricBundle:
    return g2_build_thm1(
        flat_metric(domain=base_domain()), BASE_SPLIT, broken_mono(), inputs="v = 1 + 1/(2r) + 0.1 y1, A dirac"
    )


def thm2_taub_nut() -> G2MetricBundle:
    return g2_build_thm2(
        flat_metric(domain=base_domain()), BASE_SPLIT, taub_nut_mono(), inputs="k flat, alpha = 0, v = 1 + 1/(2r)"
    )


def mismatched_alpha_mono() -> MonopoleData:
    """A + 0.1 x₂dx₃ with α = 0.1 u dy₁, so that (dA)₊₊ = u⁻¹*₊α while the flat base has α = 0"""
    mono = taub_nut_mono()
    v, A = mono.v, mono.A

    def potential(p):
        value = A(p).copy()
        value[2] += PERTURBATION * p[1]
        return value

    def alpha(p):
        return np.array([PERTURBATION * float(v(p)) ** -0.5, 0.0, 0.0])

    return MonopoleData(
        v=v,
        A=FieldFn(6, potential, A.domain, "dirac + 0.1 x2 dx3"),
        alpha=FieldFn(6, alpha, v.domain, "0.1 u dy1"),
        name="mismatched-alpha",
    )


def thm2_mismatched() -> G2MetricBundle:
    return g2_build_thm2(
        flat_metric(domain=base_domain()),
        BASE_SPLIT,
        mismatched_alpha_mono(),
        inputs="k flat, A dirac + 0.1 x2 dx3, alpha = 0.1 u dy1",
    )


def round_sphere_bundle() -> G2MetricBundle:
    """4|dq|²/(1 + |q|²)², constant curvature 1 in dimension 7"""

    def coframe(q):
        return 2.0 / (1.0 + float(q @ q)) * np.eye(7)

    field = FieldFn(7, coframe, Domain.box(7), "round")
    return G2MetricBundle(coframe=field, provenance={"builder": "round_sphere_bundle", "inputs": "S^7 stereographic"})


# Killing reduction


def killing_flat() -> KillingData:
    domain = base_domain(charged=False)
    return KillingData(
        metric=flat_metric(domain=domain),
        u=constant_field(6, 1.0, domain, "1"),
        A=constant_field(6, np.zeros(6), domain, "0"),
        b=constant_field(6, np.zeros(3), domain, "0"),
        B=constant_field(6, np.zeros((3, 3)), domain, "0"),
        connection=LEVI_CIVITA,
        name="flat",
    )


def _taub_nut_parts(p):
    """v, u and (grad u)₋ in frame components, analytically"""
    y = p[3:6]
    r = _radius(y)
    v = 1.0 + TAUB_NUT_MASS / r
    grad_minus = 0.5 * TAUB_NUT_MASS * y / (v**2 * r**3)
    return v, v**-0.5, grad_minus


def killing_taub_nut(perturbed: bool = False) -> KillingData:
    """
    ⟨·,·⟩ = dx² + v dy², u = v^{−1/2}, b = ½u⁻¹(grad u)₋, B = 0, with ∇ acting by
    −½u⁻¹ (grad u)₋ × X₋ on both blocks
    """
    domain = base_domain()
    potential = dirac_potential(TAUB_NUT_MASS, domain=domain)

    def metric(p):
        v = _taub_nut_parts(p)[0]
        return np.diag([1.0, 1.0, 1.0, v, v, v])

    def b(p):
        _, u, grad_minus = _taub_nut_parts(p)
        return 0.5 * grad_minus / u

    def connection(p):
        _, u, grad_minus = _taub_nut_parts(p)
        value = np.zeros((6, 6, 6))
        for c in range(3):
            block = -0.5 / u * hat(np.cross(grad_minus, np.eye(3)[c]))
            value[3 + c, :3, :3] = block
            value[3 + c, 3:, 3:] = block
        return value

    A = potential
    if perturbed:

        def shifted(p):
            value = potential(p).copy()
            value[5] += PERTURBATION * p[4]
            return value

        A = FieldFn(6, shifted, domain, "dirac + 0.1 x5 dx6")
    return KillingData(
        metric=FieldFn(6, metric, domain, "dx^2 + v dy^2"),
        u=FieldFn(6, lambda p: _taub_nut_parts(p)[1], domain, "v^-1/2"),
        A=A,
        b=FieldFn(6, b, domain, "b"),
        B=constant_field(6, np.zeros((3, 3)), domain, "0"),
        connection=FieldFn(6, connection, domain, "∇"),
        name="killing-taub-nut-perturbed" if perturbed else "killing-taub-nut",
    )


# ρ-connection torsion


def rho_trivial() -> RhoData:
    domain = Domain.box(6)
    zero6, zero66 = constant_field(6, np.zeros(6), domain), constant_field(6, np.zeros((6, 6)), domain)
    return RhoData(
        gamma=zero66,
        gamma_unit=zero6,
        nabla_unit=zero66,
        u=constant_field(6, 1.0, domain),
        A=zero6,
        X=constant_field(6, np.arange(1.0, 7.0), domain),
        Y=constant_field(6, np.ones(6), domain),
    )


def rho_polynomial(seed: int = 42) -> RhoData:
    """random polynomial fields of degree ≤ 3 on [−1, 1]⁶"""
    rng = np.random.default_rng(seed)
    domain = Domain.box(6)
    g0, g1 = rng.uniform(-1, 1, (6, 6)), rng.uniform(-0.5, 0.5, (6, 6, 6))
    c0, c1 = rng.uniform(-1, 1, 6), rng.uniform(-0.5, 0.5, (6, 6))
    n0, n1 = rng.uniform(-1, 1, (6, 6)), rng.uniform(-0.5, 0.5, (6, 6, 6))
    a1, a2, a3 = rng.uniform(-1, 1, (6, 6)), rng.uniform(-0.5, 0.5, (6, 6, 6)), rng.uniform(-0.5, 0.5, 6)
    x0, x1, x2 = rng.uniform(-1, 1, 6), rng.uniform(-1, 1, (6, 6)), rng.uniform(-0.3, 0.3, (6, 6, 6))
    y0, y1, y2 = rng.uniform(-1, 1, 6), rng.uniform(-1, 1, (6, 6)), rng.uniform(-0.3, 0.3, (6, 6, 6))
    weights = rng.uniform(0.05, 0.2, 6)

    def quadratic(c, linear, square):
        return lambda q: c + linear @ q + np.einsum("ijk,j,k->i", square, q, q)

    return RhoData(
        gamma=FieldFn(6, lambda q: g0 + g1 @ q, domain, "γ"),
        gamma_unit=FieldFn(6, lambda q: c0 + c1 @ q, domain, "γ𝟙"),
        nabla_unit=FieldFn(6, lambda q: n0 + n1 @ q, domain, "∇𝟙"),
        u=FieldFn(6, lambda q: 1.0 + float(weights @ q**2), domain, "u"),
        A=FieldFn(6, lambda q: a1 @ q + np.einsum("ijk,j,k->i", a2, q, q) + a3 * q**3, domain, "A"),
        X=FieldFn(6, quadratic(x0, x1, x2), domain, "X"),
        Y=FieldFn(6, quadratic(y0, y1, y2), domain, "Y"),
    )


# hypersurfaces of ℝ⁷


def _ball_norm(s) -> float:
    return float(np.sqrt(s @ s))


def hyperplane(height: float = 0.3) -> FieldFn:
    def immersion(s):
        return np.concatenate((s[:3], [height], s[3:]))

    return FieldFn(6, immersion, Domain.box(6), "hyperplane ⊥ e4")


def sphere_patch(radius: float = 0.5) -> FieldFn:
    """graph of the unit sphere over the ball |s| ≤ radius"""
    domain = Domain.box(6, -radius, radius, (Exclusion("patch", lambda s: radius - _ball_norm(s)),))

    def immersion(s):
        return np.concatenate((s, [np.sqrt(1.0 - s @ s)]))

    return FieldFn(6, immersion, domain, "S6 patch")


def ellipsoid_patch(inner: float = 0.3, outer: float = 0.8, axis: float = 2.0) -> FieldFn:
    """graph of the ellipsoid with semi-axes (1, …, 1, axis) over inner < |s| < outer"""
    exclusions = (
        Exclusion("inner", lambda s: _ball_norm(s) - inner),
        Exclusion("outer", lambda s: outer - _ball_norm(s)),
    )

    def immersion(s):
        return np.concatenate((s, [axis * np.sqrt(1.0 - s @ s)]))

    return FieldFn(6, immersion, Domain.box(6, -outer, outer, exclusions), "ellipsoid")


@lru_cache(maxsize=None)
def gallery() -> Dict[str, GalleryEntry]:
    entries = [
        GalleryEntry(
            "gh-trivial", "gh", "gh_build", "V = 1, A = 0", "Gibbons-Hawking, flat", POSITIVE, gh_trivial
        ),
        GalleryEntry(
            "gh-flat",
            "gh",
            "gh_build",
            "V = 1/(2r), A = -dirac(1/2)",
            "Gibbons-Hawking with one centre and no constant is flat R^4",
            POSITIVE,
            lambda: gh_example(0.0, 0.5, "V = 1/(2r)"),
        ),
        GalleryEntry(
            "gh-taub-nut",
            "gh",
            "gh_build",
            "V = 1 + 1/(2r), A = -dirac(1/2)",
            "Taub-NUT: Ricci-flat, not flat",
            POSITIVE,
            lambda: gh_example(1.0, 0.5, "V = 1 + 1/(2r)"),
        ),
        GalleryEntry(
            "gh-non-harmonic",
            "gh",
            "gh_build",
            "V = 1 + r^2, A = 0",
            "non-harmonic V is not Ricci-flat",
            NEGATIVE,
            gh_non_harmonic,
        ),
        GalleryEntry(
            "g2-flat",
            "g2-thm1",
            "g2_build_thm1",
            "k flat, v = 1, A = 0",
            "k_V + v k_H + v^-1 (dt + A)^2 with dA = -*_H dv",
            POSITIVE,
            thm1_flat,
        ),
        GalleryEntry(
            "g2-taub-nut",
            "g2-thm1",
            "g2_build_thm1",
            "k flat on R3 x R3, v = 1 + 1/(2r), A = dirac(1/2)",
            "R^3 x Taub-NUT as a G2-manifold",
            POSITIVE,
            thm1_taub_nut,
        ),
        GalleryEntry(
            "g2-broken-monopole",
            "g2-thm1",
            "g2_build_thm1",
            "v = 1 + 1/(2r) + 0.1 y1, A = dirac(1/2)",
            "violating dA = -*_H dv by 0.1 leaves torsion",
            NEGATIVE,
            thm1_broken,
        ),
        GalleryEntry(
            "g2-weak-taub-nut",
            "g2-thm2",
            "g2_build_thm2",
            "k flat, alpha = 0, v = 1 + 1/(2r), A = dirac(1/2)",
            "k_+ + v k_- + v^-1 (dt + A)^2 over a weak SL(3) base",
            POSITIVE,
            thm2_taub_nut,
        ),
        GalleryEntry(
            "g2-mismatched-alpha",
            "g2-thm2",
            "g2_build_thm2",
            "k flat, A = dirac + 0.1 x2 dx3, alpha = 0.1 u dy1",
            "alpha inconsistent with the base connection leaves torsion",
            NEGATIVE,
            thm2_mismatched,
        ),
        GalleryEntry(
            "round-sphere-7",
            "holonomy",
            "round_sphere_bundle",
            "4|dq|^2 / (1 + |q|^2)^2",
            "constant curvature has holonomy SO(7), not G2",
            NEGATIVE,
            round_sphere_bundle,
        ),
        GalleryEntry(
            "killing-flat",
            "killing",
            "KillingData",
            "flat R3 x R3, u = 1, A = 0, b = 0, B = 0",
            "Killing reduction of flat R^7",
            POSITIVE,
            killing_flat,
        ),
        GalleryEntry(
            "killing-taub-nut",
            "killing",
            "KillingData",
            "dx^2 + v dy^2, u = v^-1/2, b = u^-1 (grad u)_- / 2, B = 0",
            "Killing reduction of R^3 x Taub-NUT along the circle",
            POSITIVE,
            killing_taub_nut,
        ),
        GalleryEntry(
            "killing-perturbed",
            "killing",
            "KillingData",
            "killing-taub-nut with A + 0.1 x5 dx6",
            "dA(X,Y) = 2u^-1 <gamma X, Y> fails",
            NEGATIVE,
            lambda: killing_taub_nut(perturbed=True),
        ),
        GalleryEntry(
            "rho-trivial",
            "rho",
            "RhoData",
            "flat R6, gamma = 0, u = 1, A = 0",
            "torsion of the connection on TM + R1",
            POSITIVE,
            rho_trivial,
        ),
        GalleryEntry(
            "rho-polynomial",
            "rho",
            "RhoData",
            "random polynomial gamma, u, A, X, Y, seed 42",
            "torsion of the connection on TM + R1",
            POSITIVE,
            rho_polynomial,
        ),
        GalleryEntry(
            "hyperplane",
            "hypersurface",
            "hypersurface_checks",
            "x4 = 0.3",
            "geodesic hypersurfaces are Kahler",
            POSITIVE,
            hyperplane,
        ),
        GalleryEntry(
            "sphere",
            "hypersurface",
            "hypersurface_checks",
            "unit S6, graph over |s| <= 0.5",
            "umbilical hypersurfaces are nearly-Kahler",
            POSITIVE,
            sphere_patch,
        ),
        GalleryEntry(
            "ellipsoid",
            "hypersurface",
            "hypersurface_checks",
            "semi-axes (1,1,1,1,1,1,2), 0.3 < |s| < 0.8",
            "non-umbilical hypersurfaces are not nearly-Kahler",
            NEGATIVE,
            ellipsoid_patch,
        ),
    ]
    return {entry.name: entry for entry in entries}
