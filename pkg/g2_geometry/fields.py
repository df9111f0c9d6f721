# coding=utf-8
"""
date:           oct-2026

usage:          pointwise finite-difference calculus on evaluable fields.

                Fields are closures sampled at points, never grids. Forms are dense totally
                antisymmetric numpy arrays of shape (n,)*k; a derivative index always comes
                first, so jacobian(f)[i, ...] = ∂ᵢf.

                Curvature conventions:
                    Γ[k, i, j]       = Γᵏᵢⱼ
                    R[l, k, i, j]    = Rˡₖᵢⱼ, with R(∂ᵢ, ∂ⱼ)∂ₖ = Rˡₖᵢⱼ ∂ₗ
                    Ric[k, j]        = Rⁱₖᵢⱼ
"""
# python
import logging
from dataclasses import dataclass, field, replace
from functools import lru_cache
from itertools import permutations
from math import factorial
from typing import Callable, Dict, Optional, Sequence, Tuple

# 3rd party
import numpy as np

# this repo
from g2_algebra.octonions import permutation_sign
from g2_geometry.exceptions import DegenerateMetricError, InvalidConfigError, StencilDomainError

log = logging.getLogger(__name__)

# central difference weights, keyed by order: (offsets, weights, denominator multiple of h)
STENCILS = {
    2: ((1, -1), (1.0, -1.0), 2.0),
    4: ((2, 1, -1, -2), (-1.0, 8.0, -8.0, 1.0), 12.0),
}


@dataclass(frozen=True)
class Exclusion:
    """points where level(p) < threshold are outside the smooth domain"""

    name: str
    level: Callable[[np.ndarray], float]
    threshold: float = 0.0

    def clearance(self, point: np.ndarray) -> float:
        return float(self.level(point)) - self.threshold


@dataclass(frozen=True)
class Domain:
    lower: Tuple[float, ...]
    upper: Tuple[float, ...]
    exclusions: Tuple[Exclusion, ...] = ()

    @classmethod
    def box(cls, dim: int, low: float = -1.0, high: float = 1.0, exclusions: Sequence[Exclusion] = ()) -> "Domain":
        return cls(lower=(low,) * dim, upper=(high,) * dim, exclusions=tuple(exclusions))

    @property
    def dim(self) -> int:
        return len(self.lower)

    def contains(self, point: Sequence[float], margin: float = 0.0) -> bool:
        p = np.asarray(point, dtype=float)
        if np.any(p < np.asarray(self.lower) + margin) or np.any(p > np.asarray(self.upper) - margin):
            return False
        return all(exclusion.clearance(p) >= margin for exclusion in self.exclusions)

    def excluding(self, *exclusions: Exclusion) -> "Domain":
        return replace(self, exclusions=self.exclusions + tuple(exclusions))


@dataclass(frozen=True)
class FieldFn:
    """
    A deterministic evaluable field on an n-dimensional coordinate domain. The value may be a
    scalar, a covector, a k-form, a frame or a symmetric 2-tensor; it is always returned as a
    numpy array.
    """

    dim: int
    evaluate: Callable[[np.ndarray], object]
    domain: Optional[Domain] = None
    name: str = ""

    def __call__(self, point: Sequence[float]) -> np.ndarray:
        return np.asarray(self.evaluate(np.asarray(point, dtype=float)), dtype=float)

    def contains(self, point: Sequence[float]) -> bool:
        return self.domain is None or self.domain.contains(point)

    def map(self, func: Callable[[np.ndarray], object], name: str = "") -> "FieldFn":
        """pointwise post-composition, keeping dimension and domain"""
        return FieldFn(self.dim, lambda p: func(self(p)), self.domain, name or self.name)


def constant_field(dim: int, value, domain: Optional[Domain] = None, name: str = "constant") -> FieldFn:
    array = np.asarray(value, dtype=float)
    return FieldFn(dim, lambda p: array, domain, name)


@dataclass(frozen=True)
class SplitSpec:
    """Named disjoint blocks of coordinate indices with one orientation sign per block."""

    dim: int
    blocks: Tuple[Tuple[str, Tuple[int, ...]], ...]
    orientation: Tuple[int, ...] = field(default=())

    def __post_init__(self):
        indices = [i for _, block in self.blocks for i in block]
        if sorted(indices) != list(range(self.dim)):
            raise InvalidConfigError(
                "split blocks {b} do not partition range({n})".format(b=[b for _, b in self.blocks], n=self.dim)
            )
        if not self.orientation:
            object.__setattr__(self, "orientation", (1,) * len(self.blocks))
        if len(self.orientation) != len(self.blocks) or any(s not in (1, -1) for s in self.orientation):
            raise InvalidConfigError("orientation must hold one ±1 per block")

    def indices(self, name: str) -> Tuple[int, ...]:
        for block_name, block in self.blocks:
            if block_name == name:
                return block
        raise KeyError(name)

    def sign(self, name: str) -> int:
        for (block_name, _), sign in zip(self.blocks, self.orientation):
            if block_name == name:
                return sign
        raise KeyError(name)


@dataclass(frozen=True)
class StencilConfig:
    h: float = 1e-3
    order: int = 2
    richardson: bool = False

    def __post_init__(self):
        if not self.h > 0:
            raise InvalidConfigError("stencil step must be positive, got {h}".format(h=self.h))
        if self.order not in STENCILS:
            raise InvalidConfigError("stencil order must be 2 or 4, got {o}".format(o=self.order))

    @property
    def reach(self) -> float:
        """largest coordinate offset of a single stencil"""
        return self.h * self.order / 2

    def halved(self) -> "StencilConfig":
        return replace(self, h=self.h / 2)

    def with_step(self, h: float) -> "StencilConfig":
        return replace(self, h=h)


FIRST_DERIVATIVES = StencilConfig(h=1e-3, order=2)
CURVATURE = StencilConfig(h=1e-2, order=4)


def _central(f: FieldFn, p: np.ndarray, direction: int, h: float, order: int) -> np.ndarray:
    offsets, weights, denominator = STENCILS[order]
    total = None
    for offset, weight in zip(offsets, weights):
        q = p.copy()
        q[direction] += offset * h
        if not f.contains(q):
            raise StencilDomainError(p, direction, h)
        value = weight * f(q)
        total = value if total is None else total + value
    return total / (denominator * h)


def fd_partial(f: FieldFn, p: Sequence[float], direction: int, cfg: StencilConfig = FIRST_DERIVATIVES) -> np.ndarray:
    """
    central difference ∂f/∂x_direction at p. With cfg.richardson the h and h/2 values are
    combined to cancel the leading error term.
    """
    p = np.asarray(p, dtype=float)
    if not f.contains(p):
        raise StencilDomainError(p, direction, cfg.h)
    coarse = _central(f, p, direction, cfg.h, cfg.order)
    if not cfg.richardson:
        return coarse
    fine = _central(f, p, direction, cfg.h / 2, cfg.order)
    factor = 2.0**cfg.order
    return (factor * fine - coarse) / (factor - 1.0)


def jacobian(f: FieldFn, p: Sequence[float], cfg: StencilConfig = FIRST_DERIVATIVES) -> np.ndarray:
    return np.stack([fd_partial(f, p, i, cfg) for i in range(f.dim)])


def derivative_field(f: FieldFn, cfg: StencilConfig = FIRST_DERIVATIVES, name: str = "") -> FieldFn:
    """the jacobian of f as a field in its own right, for nested derivatives"""
    return FieldFn(f.dim, lambda p: jacobian(f, p, cfg), f.domain, name or "d({n})".format(n=f.name))


@lru_cache(maxsize=None)
def _signed_permutations(degree: int) -> Tuple[Tuple[Tuple[int, ...], int], ...]:
    return tuple((perm, permutation_sign(perm)) for perm in permutations(range(degree)))


def alternate(tensor: np.ndarray) -> np.ndarray:
    """Alt(T) = (1/k!) Σ_σ sgn(σ) T∘σ over all k axes"""
    tensor = np.asarray(tensor, dtype=float)
    degree = tensor.ndim
    if degree < 2:
        return tensor
    total = np.zeros_like(tensor)
    for perm, sign in _signed_permutations(degree):
        total += sign * np.transpose(tensor, perm)
    return total / factorial(degree)


def exterior_d(form: FieldFn, p: Sequence[float], cfg: StencilConfig = FIRST_DERIVATIVES) -> np.ndarray:
    """(dω)_{i₀…i_k} = Σ_j (−1)^j ∂_{i_j} ω_{i₀…î_j…i_k}, computed as (k+1)·Alt(∂ω)"""
    derivative = jacobian(form, p, cfg)
    return (derivative.ndim) * alternate(derivative)


def exterior_d_field(form: FieldFn, cfg: StencilConfig = FIRST_DERIVATIVES) -> FieldFn:
    return FieldFn(form.dim, lambda p: exterior_d(form, p, cfg), form.domain, "d({n})".format(n=form.name))


def wedge(alpha: np.ndarray, beta: np.ndarray) -> np.ndarray:
    alpha, beta = np.asarray(alpha, dtype=float), np.asarray(beta, dtype=float)
    p, q = alpha.ndim, beta.ndim
    coefficient = factorial(p + q) / (factorial(p) * factorial(q))
    return coefficient * alternate(np.multiply.outer(alpha, beta))


def pullback(form: np.ndarray, coframe: np.ndarray) -> np.ndarray:
    """
    coordinate components of a form given on a coframe: coframe[a, i] is the i-th coordinate
    component of eᵃ, and the result is Σ ω_{a…} coframe[a, i]…
    """
    result = np.asarray(form, dtype=float)
    for _ in range(result.ndim):
        result = np.tensordot(result, coframe, axes=([0], [0]))
    return result


@lru_cache(maxsize=None)
def levi_civita_symbol(dim: int) -> np.ndarray:
    symbol = np.zeros((dim,) * dim)
    for perm, sign in _signed_permutations(dim):
        symbol[perm] = sign
    symbol.setflags(write=False)
    return symbol


def _block_metric(g: np.ndarray, block: Sequence[int]) -> np.ndarray:
    gb = np.asarray(g, dtype=float)[np.ix_(block, block)]
    try:
        np.linalg.cholesky(gb)
    except np.linalg.LinAlgError as e:
        raise DegenerateMetricError("metric is not positive-definite on block {b}".format(b=tuple(block))) from e
    return gb


def restrict(form: np.ndarray, block: Sequence[int]) -> np.ndarray:
    form = np.asarray(form, dtype=float)
    if form.ndim == 0:
        return form
    return form[np.ix_(*([list(block)] * form.ndim))]


def extend(form: np.ndarray, block: Sequence[int], dim: int) -> np.ndarray:
    """embed a form on block coordinates into the full coordinate space, zero elsewhere"""
    form = np.asarray(form, dtype=float)
    if form.ndim == 0:
        return form
    result = np.zeros((dim,) * form.ndim)
    result[np.ix_(*([list(block)] * form.ndim))] = form
    return result


def hodge_restricted(form: np.ndarray, split: SplitSpec, g: np.ndarray, block: str) -> np.ndarray:
    """
    Hodge star of the block-restricted form inside the block, w.r.t. the block metric and the
    block's declared orientation; the result is extended by zero to all coordinates.
    """
    indices = split.indices(block)
    gb = _block_metric(g, indices)
    m = len(indices)
    omega = restrict(form, indices)
    degree = omega.ndim
    if degree > m:
        raise InvalidConfigError("cannot star a {k}-form on a {m}-dimensional block".format(k=degree, m=m))
    ginv = np.linalg.inv(gb)
    raised = omega
    for axis in range(degree):
        raised = np.moveaxis(np.tensordot(ginv, raised, axes=([1], [axis])), 0, axis)
    volume = split.sign(block) * np.sqrt(np.linalg.det(gb)) * levi_civita_symbol(m)
    star = np.tensordot(raised, volume, axes=degree) / factorial(degree)
    return extend(star, indices, split.dim)


def christoffel(g: FieldFn, p: Sequence[float], cfg: StencilConfig = FIRST_DERIVATIVES) -> np.ndarray:
    """Γᵏᵢⱼ = ½ gᵏˡ (∂ᵢ gⱼₗ + ∂ⱼ gᵢₗ − ∂ₗ gᵢⱼ)"""
    metric = g(p)
    try:
        ginv = np.linalg.inv(metric)
    except np.linalg.LinAlgError as e:
        raise DegenerateMetricError("singular metric at {p}".format(p=list(np.round(p, 6)))) from e
    dg = jacobian(g, p, cfg)
    lowered = dg + np.einsum("jil->ijl", dg) - np.einsum("lij->ijl", dg)
    return 0.5 * np.einsum("kl,ijl->kij", ginv, lowered)


def christoffel_field(g: FieldFn, cfg: StencilConfig = FIRST_DERIVATIVES) -> FieldFn:
    return FieldFn(g.dim, lambda p: christoffel(g, p, cfg), g.domain, "Γ({n})".format(n=g.name))


def riemann(g: FieldFn, p: Sequence[float], cfg: StencilConfig = CURVATURE) -> np.ndarray:
    """Rˡₖᵢⱼ = ∂ᵢΓˡⱼₖ − ∂ⱼΓˡᵢₖ + ΓˡᵢₘΓᵐⱼₖ − ΓˡⱼₘΓᵐᵢₖ"""
    gamma_field = christoffel_field(g, cfg)
    gamma = gamma_field(p)
    d_gamma = jacobian(gamma_field, p, cfg)
    return (
        np.einsum("iljk->lkij", d_gamma)
        - np.einsum("jlik->lkij", d_gamma)
        + np.einsum("lim,mjk->lkij", gamma, gamma)
        - np.einsum("ljm,mik->lkij", gamma, gamma)
    )


def ricci(g: FieldFn, p: Sequence[float], cfg: StencilConfig = CURVATURE, curvature: Optional[np.ndarray] = None):
    curvature = riemann(g, p, cfg) if curvature is None else curvature
    return np.einsum("ikij->kj", curvature)


def scalar_curvature(g: FieldFn, p: Sequence[float], cfg: StencilConfig = CURVATURE) -> float:
    return float(np.einsum("kj,kj->", np.linalg.inv(g(p)), ricci(g, p, cfg)))


def curvature_operator(
    g: FieldFn,
    p: Sequence[float],
    x: Sequence[float],
    y: Sequence[float],
    cfg: StencilConfig = CURVATURE,
    curvature: Optional[np.ndarray] = None,
) -> np.ndarray:
    """the endomorphism R(X, Y) as a coordinate matrix M[l, k]"""
    curvature = riemann(g, p, cfg) if curvature is None else curvature
    return np.einsum("lkij,i,j->lk", curvature, np.asarray(x, dtype=float), np.asarray(y, dtype=float))


def bianchi_residual(curvature: np.ndarray) -> float:
    """max |Rˡₖᵢⱼ + Rˡᵢⱼₖ + Rˡⱼₖᵢ|"""
    cyclic = curvature + np.einsum("lkij->lijk", curvature) + np.einsum("lkij->ljki", curvature)
    return float(np.max(np.abs(cyclic)))


def sup_norm(value) -> float:
    array = np.asarray(value, dtype=float)
    return float(np.max(np.abs(array))) if array.size else 0.0


def sup_over(samples: Sequence[Sequence[float]], func: Callable[[np.ndarray], object]) -> Dict[str, float]:
    """
    sup of |func(p)| over samples. func returns an array or a
    dict of arrays keyed by residual name.
    """
    best: Dict[str, float] = {}
    for p in samples:
        value = func(np.asarray(p, dtype=float))
        items = value.items() if isinstance(value, dict) else (("residual", value),)
        for key, item in items:
            best[key] = max(best.get(key, 0.0), sup_norm(item))
    return best
