# coding=utf-8
"""
date:           oct-2026

usage:          checks for the Killing reduction of a G₂-manifold N × ℝ with metric
                ⟨·,·⟩ + u²(dt + A)² to data (u, A, 𝓑, ∇) on a split 6-manifold N.

                Everything is evaluated in the orthonormal frame (f₀…f₅) obtained from a block
                Cholesky factorization of the base metric: f₀..f₂ span T⁺, f₃..f₅ span T⁻, and
                frame component index c matches the 𝔪-coordinate index of g2_algebra.lie.h_map.

                A frame connection is an array W[c, a, b] = ⟨∇_{f_c} f_b, f_a⟩.

                    𝓑 = [[b̂, −B], [B, b̂]]          γ = 𝓑 − u⁻¹ h(grad u)
"""
# python
import logging
from dataclasses import dataclass
from typing import Dict, Optional, Sequence, Union

# 3rd party
import numpy as np

# this repo
from g2_geometry.exceptions import DegenerateMetricError, FieldValueError
from g2_geometry.fields import (
    FIRST_DERIVATIVES,
    FieldFn,
    SplitSpec,
    StencilConfig,
    christoffel,
    exterior_d,
    jacobian,
    levi_civita_symbol,
    sup_over,
)
from g2_geometry.model import h_of, h_tensor, hat, off_sl3
from g2_geometry.monopoles import BASE_SPLIT

log = logging.getLogger(__name__)

LEVI_CIVITA = "levi-civita"
EPS3 = levi_civita_symbol(3)


def orthonormal_frame(metric: np.ndarray, split: SplitSpec = BASE_SPLIT) -> np.ndarray:
    """
    F with columns f₀…f₅ such that Fᵀ g F = 1; plus-block frame vectors first. The metric must
    make the two blocks orthogonal.
    """
    plus, minus = list(split.indices("plus")), list(split.indices("minus"))
    if np.max(np.abs(metric[np.ix_(plus, minus)]), initial=0.0) > 1e-12:
        raise DegenerateMetricError("metric does not make T⁺ and T⁻ orthogonal")
    frame = np.zeros((split.dim, split.dim))
    for slots, block in ((slice(0, 3), plus), (slice(3, 6), minus)):
        try:
            lower = np.linalg.cholesky(metric[np.ix_(block, block)])
        except np.linalg.LinAlgError as e:
            raise DegenerateMetricError("metric is not positive-definite on block {b}".format(b=block)) from e
        frame[block, slots] = np.linalg.inv(lower).T
    return frame


def frame_field(metric: FieldFn, split: SplitSpec = BASE_SPLIT) -> FieldFn:
    return FieldFn(metric.dim, lambda p: orthonormal_frame(metric(p), split), metric.domain, "frame")


@dataclass(frozen=True)
class FrameGeometry:
    """frame, inverse frame, bracket coefficients C[a, c, d] of [f_c, f_d], Levi-Civita W"""

    frame: np.ndarray
    inverse: np.ndarray
    brackets: np.ndarray
    levi_civita: np.ndarray


def frame_geometry(
    metric: FieldFn, p: np.ndarray, split: SplitSpec = BASE_SPLIT, cfg: StencilConfig = FIRST_DERIVATIVES
) -> FrameGeometry:
    frames = frame_field(metric, split)
    F = frames(p)
    Finv = np.linalg.inv(F)
    dF = jacobian(frames, p, cfg)
    directional = np.einsum("ic,ikd->kcd", F, dF)
    brackets = np.einsum("ak,kcd->acd", Finv, directional - np.einsum("kcd->kdc", directional))
    gamma = christoffel(metric, p, cfg)
    covariant = directional + np.einsum("kij,ic,jb->kcb", gamma, F, F)
    return FrameGeometry(F, Finv, brackets, np.einsum("ak,kcb->cab", Finv, covariant))


def torsion_of(connection: np.ndarray, brackets: np.ndarray) -> np.ndarray:
    """T[a, c, d] = frame components of T(f_c, f_d)"""
    return np.einsum("cad->acd", connection) - np.einsum("dac->acd", connection) - brackets


@dataclass(frozen=True)
class KillingData:
    """
    metric, u (nowhere zero) and A on the 6-dimensional base; b as T⁺ frame components and B as
    the trace-free self-adjoint T⁺ → T⁻ block in frame components; `connection` is either
    "levi-civita" or a FieldFn returning W[c, a, b].
    """

    metric: FieldFn
    u: FieldFn
    A: FieldFn
    b: FieldFn
    B: FieldFn
    split: SplitSpec = BASE_SPLIT
    connection: Union[str, FieldFn] = LEVI_CIVITA
    name: str = ""

    def u_at(self, p: np.ndarray) -> float:
        value = float(self.u(p))
        if value == 0.0:
            raise FieldValueError("u vanishes at {p}".format(p=list(np.round(p, 6))))
        return value

    def B_at(self, p: np.ndarray) -> np.ndarray:
        value = self.B(p)
        if abs(np.trace(value)) > 1e-10 or np.max(np.abs(value - value.T)) > 1e-10:
            raise FieldValueError("B is not trace-free and self-adjoint at {p}".format(p=list(np.round(p, 6))))
        return value


def frame_gradient(data: KillingData, p: np.ndarray, frame: np.ndarray, cfg: StencilConfig) -> np.ndarray:
    """(grad u) in frame components: f_c(u)"""
    return frame.T @ jacobian(data.u, p, cfg)


def script_b(b: np.ndarray, B: np.ndarray) -> np.ndarray:
    b_hat = hat(b)
    return np.block([[b_hat, -B], [B, b_hat]])


def gamma_matrix(data: KillingData, p: np.ndarray, cfg: StencilConfig = FIRST_DERIVATIVES) -> np.ndarray:
    """γ = 𝓑 − u⁻¹ h(grad u), as a matrix acting on frame components"""
    u = data.u_at(p)
    grad = frame_gradient(data, p, orthonormal_frame(data.metric(p), data.split), cfg)
    return script_b(data.b(p), data.B_at(p)) - h_of(grad) / u


def gamma_blockwise(data: KillingData, p: np.ndarray, cfg: StencilConfig = FIRST_DERIVATIVES) -> np.ndarray:
    """
    γ(X₊, X₋) expanded by blocks:
        b×X₊ − BX₋ − ½u⁻¹ (grad u)₋×X₊ − ½u⁻¹ (grad u)₊×X₋
        BX₊ + b×X₋ − ½u⁻¹ (grad u)₊×X₊ + ½u⁻¹ (grad u)₋×X₋
    """
    u = data.u_at(p)
    grad = frame_gradient(data, p, orthonormal_frame(data.metric(p), data.split), cfg)
    plus, minus = hat(grad[:3]) / (2 * u), hat(grad[3:]) / (2 * u)
    b_hat, B = hat(data.b(p)), data.B_at(p)
    return np.block([[b_hat - minus, -B - plus], [B - plus, b_hat + minus]])


def gamma_field(data: KillingData, cfg: StencilConfig = FIRST_DERIVATIVES) -> FieldFn:
    return FieldFn(data.metric.dim, lambda p: gamma_blockwise(data, p, cfg), data.metric.domain, "γ")


def gamma_check(data: KillingData, samples: Sequence[Sequence[float]], cfg: StencilConfig = FIRST_DERIVATIVES):
    """blockwise expansion against 𝓑 − u⁻¹h(grad u) applied through h"""
    return sup_over(samples, lambda p: gamma_blockwise(data, p, cfg) - gamma_matrix(data, p, cfg))["residual"]


def h_gamma(gamma: np.ndarray) -> np.ndarray:
    """Hγ[c] = h(γ f_c)"""
    return np.einsum("ac,aij->cij", gamma, h_tensor())


def killing_conditions_check(
    data: KillingData, samples: Sequence[Sequence[float]], cfg: StencilConfig = FIRST_DERIVATIVES
) -> Dict[str, float]:
    """
    residuals on frame pairs:
        torsion      T(X,Y) + h(γX)Y − h(γY)X
        dA           dA(X,Y) − 2u⁻¹⟨γX, Y⟩
        levi_civita  ∇ + h∘γ − Levi-Civita
        metricity    symmetric part of ∇ + h∘γ
        sl3          component of ∇ off the sl(3) image
    """

    def residual(p):
        geometry = frame_geometry(data.metric, p, data.split, cfg)
        u = data.u_at(p)
        gamma = gamma_matrix(data, p, cfg)
        hg = h_gamma(gamma)
        connection = geometry.levi_civita if data.connection == LEVI_CIVITA else data.connection(p)
        F = geometry.frame
        dA = F.T @ exterior_d(data.A, p, cfg) @ F
        total = connection + hg
        return {
            "torsion": torsion_of(connection, geometry.brackets)
            + np.einsum("cad->acd", hg)
            - np.einsum("dac->acd", hg),
            "dA": dA - 2.0 * gamma.T / u,
            "levi_civita": total - geometry.levi_civita,
            "metricity": total + np.einsum("cab->cba", total),
            "sl3": np.stack([off_sl3(w) for w in connection]),
        }

    report = sup_over(samples, residual)
    log.info("killing conditions for {n}: {r}".format(n=data.name, r=report))
    return report


def dA_conditions_check(
    data: KillingData, samples: Sequence[Sequence[float]], cfg: StencilConfig = FIRST_DERIVATIVES
) -> Dict[str, float]:
    """
    block equations for dA with α = ⟨2b − u⁻¹(grad u)₋, ·⟩, in frame components:
        plus_plus            (dA)₊₊ − u⁻¹ *₊α
        minus_minus          (dA)₋₋ − u⁻¹ *₋(α + 2u⁻¹du)
        plus_minus           dA(X₊,Y₋) − 2u⁻¹(⟨BX₊,Y₋⟩ − ½u⁻¹ det((grad u)₊, X₊, Y₋))
        monopole_minus_minus (dA)₋₋ + *¹₋(d − α)(u⁻²), with *¹ of the metric rescaled by u² on T⁻
        form_agreement       difference of the two right-hand sides for (dA)₋₋
    """

    def residual(p):
        F = orthonormal_frame(data.metric(p), data.split)
        u = data.u_at(p)
        grad = frame_gradient(data, p, F, cfg)
        alpha = 2.0 * data.b(p) - grad[3:] / u
        dA = F.T @ exterior_d(data.A, p, cfg) @ F
        B = data.B_at(p)
        first_two = np.einsum("abc,c->ab", EPS3, alpha + 2.0 * grad[3:] / u) / u
        # (d − α)(u⁻²) in frame components; *¹ on T⁻ is u times the unscaled star
        source = -2.0 * grad[3:] / u**3 - alpha / u**2
        rescaled = -u * np.einsum("abc,c->ab", EPS3, source)
        mixed = 2.0 * (B.T - 0.5 * np.einsum("jad,j->ad", EPS3, grad[:3]) / u) / u
        return {
            "plus_plus": dA[:3, :3] - np.einsum("abc,c->ab", EPS3, alpha) / u,
            "minus_minus": dA[3:, 3:] - first_two,
            "plus_minus": dA[:3, 3:] - mixed,
            "monopole_minus_minus": dA[3:, 3:] - rescaled,
            "form_agreement": first_two - rescaled,
        }

    return sup_over(samples, residual)


def weak_structure_residual(
    k: FieldFn,
    split: SplitSpec,
    alpha: Optional[FieldFn],
    samples: Sequence[Sequence[float]],
    cfg: StencilConfig = FIRST_DERIVATIVES,
) -> float:
    """
    distance of the non-sl(3) part of the Levi-Civita frame connection of k from h∘γ with
    γ = [[0, a], [a, 0]], aX = ¼ α♯ × X. α is given by coordinate components along T⁻.
    """
    minus = list(split.indices("minus"))

    def residual(p):
        geometry = frame_geometry(k, p, split, cfg)
        alpha_frame = np.zeros(3) if alpha is None else geometry.frame[minus, 3:].T @ alpha(p)
        a = hat(alpha_frame) / 4.0
        gamma = np.block([[np.zeros((3, 3)), a], [a, np.zeros((3, 3))]])
        expected = h_gamma(gamma)
        return np.stack([off_sl3(w) for w in geometry.levi_civita]) - expected

    return sup_over(samples, residual).get("residual", 0.0)


@dataclass(frozen=True)
class RhoData:
    """
    data for the ρ-connection ∇̃ on E = TM ⊕ ℝ𝟙 over flat ℝⁿ with coordinate ∇:
    γ on TM, γ(𝟙), ∇_𝟙 as an endomorphism field, u, A, and test vector fields X, Y.
    """

    gamma: FieldFn
    gamma_unit: FieldFn
    nabla_unit: FieldFn
    u: FieldFn
    A: FieldFn
    X: FieldFn
    Y: FieldFn


def _section(vector: Optional[FieldFn], unit: float, dim: int, domain) -> FieldFn:
    def evaluate(p):
        head = np.zeros(dim) if vector is None else vector(p)
        return np.concatenate((head, [unit]))

    return FieldFn(dim, evaluate, domain, "section")


def rho_torsion_check(
    data: RhoData, samples: Sequence[Sequence[float]], cfg: StencilConfig = FIRST_DERIVATIVES
) -> Dict[str, float]:
    """
    T̃ computed by antisymmetrizing
        ∇̃_X(Z, z) = (∇_X Z + h(γX)Z + zγX, X(z) − ⟨γX, Z⟩)
        ∇̃_𝟙(Z, z) = (∇_𝟙 Z + h(γ𝟙)Z + zγ𝟙, −⟨γ𝟙, Z⟩)
    with [X, Y]_E = ([X, Y], u(A([X,Y]) − X(A(Y)) + Y(A(X)))) and [X, 𝟙]_E = (0, u X(u⁻¹)),
    against the closed torsion formulas
        T̃(X,Y) = h(γX)Y − h(γY)X + (u dA(X,Y) − ⟨γX,Y⟩ + ⟨γY,X⟩) 𝟙
        T̃(X,𝟙) = γX − ∇_𝟙X − h(γ𝟙)X + (u⁻¹X(u) + ⟨γ𝟙, X⟩) 𝟙
    """
    dim = data.X.dim
    domain = data.X.domain
    sigma_x, sigma_y = _section(data.X, 0.0, dim, domain), _section(data.Y, 0.0, dim, domain)
    sigma_unit = _section(None, 1.0, dim, domain)
    a_of_x = FieldFn(dim, lambda p: data.A(p) @ data.X(p), domain, "A(X)")
    a_of_y = FieldFn(dim, lambda p: data.A(p) @ data.Y(p), domain, "A(Y)")
    inverse_u = FieldFn(dim, lambda p: 1.0 / float(data.u(p)), domain, "1/u")

    def residual(p):
        gamma, gamma_unit, nabla_unit = data.gamma(p), data.gamma_unit(p), data.nabla_unit(p)
        u = float(data.u(p))
        X, Y = data.X(p), data.Y(p)

        def along(vector, section):
            value = section(p)
            derivative = vector @ jacobian(section, p, cfg)
            Z, z = value[:dim], value[dim]
            gx = gamma @ vector
            head = derivative[:dim] + h_of(gx) @ Z + z * gx
            return np.concatenate((head, [derivative[dim] - gx @ Z]))

        def along_unit(section):
            value = section(p)
            Z, z = value[:dim], value[dim]
            head = nabla_unit @ Z + h_of(gamma_unit) @ Z + z * gamma_unit
            return np.concatenate((head, [-gamma_unit @ Z]))

        lie = X @ jacobian(data.Y, p, cfg) - Y @ jacobian(data.X, p, cfg)
        bracket_xy = np.concatenate(
            (lie, [u * (data.A(p) @ lie - X @ jacobian(a_of_y, p, cfg) + Y @ jacobian(a_of_x, p, cfg))])
        )
        bracket_x1 = np.concatenate((np.zeros(dim), [u * (X @ jacobian(inverse_u, p, cfg))]))
        direct_xy = along(X, sigma_y) - along(Y, sigma_x) - bracket_xy
        direct_x1 = along(X, sigma_unit) - along_unit(sigma_x) - bracket_x1

        gx, gy = gamma @ X, gamma @ Y
        dA = exterior_d(data.A, p, cfg)
        closed_xy = np.concatenate((h_of(gx) @ Y - h_of(gy) @ X, [u * (X @ dA @ Y) - gx @ Y + gy @ X]))
        du = jacobian(data.u, p, cfg)
        closed_x1 = np.concatenate(
            (gx - nabla_unit @ X - h_of(gamma_unit) @ X, [(X @ du) / u + gamma_unit @ X])
        )
        return {
            "tm_xy": direct_xy[:dim] - closed_xy[:dim],
            "unit_xy": direct_xy[dim] - closed_xy[dim],
            "tm_x1": direct_x1[:dim] - closed_x1[:dim],
            "unit_x1": direct_x1[dim] - closed_x1[dim],
        }

    return sup_over(samples, residual)
