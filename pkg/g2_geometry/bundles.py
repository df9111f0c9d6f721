# coding=utf-8
"""
date:           oct-2026

usage:          G₂ metrics on ℝ × N from monopole data, and their verifiers.

                Total-space coordinates are (t, x₁, x₂, x₃, y₁, y₂, y₃). The adapted coframe is
                    e⁰..e²  orthonormal coframe of k on the plus block       (T⁺ slots)
                    e³      v^{−1/2} (dt + A)                               (𝟙 slot)
                    e⁴..e⁶  √v · orthonormal coframe of k on the minus block (T⁻ slots)
                and φ, *φ are the model forms pulled back through it.
"""
# python
import logging
from dataclasses import dataclass, field
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

# 3rd party
import numpy as np

# this repo
from g2_geometry.convergence import ConvergenceResult, estimate_order
from g2_geometry.exceptions import DegenerateMetricError
from g2_geometry.fields import (
    CURVATURE,
    FIRST_DERIVATIVES,
    Domain,
    Exclusion,
    FieldFn,
    SplitSpec,
    StencilConfig,
    curvature_operator,
    exterior_d,
    pullback,
    ricci,
    riemann,
    sup_norm,
)
from g2_geometry.killing import weak_structure_residual
from g2_geometry.model import model_phi, model_psi, off_g2
from g2_geometry.monopoles import (
    BASE_SPLIT,
    MonopoleData,
    base_domain,
    dirac_potential,
    flat_metric,
    monopole_residual,
    point_charge,
    positive,
    weak_monopole_residual,
)

log = logging.getLogger(__name__)

# coordinate carried by each model slot in the canonical flat bundle
STANDARD_SLOTS = (1, 2, 3, 0, 4, 5, 6)
MONOPOLE_TOLERANCE = 1e-4
FLAT_CURVATURE_FLOOR = 1e-10


@dataclass(frozen=True)
class OrientationChoice:
    """sign of A, sign of the 𝟙-coframe, and whether the plus/minus blocks trade slots"""

    a_sign: int = 1
    unit_sign: int = 1
    swap_blocks: bool = False

    @property
    def label(self) -> str:
        return "A{a:+d} unit{u:+d}{s}".format(a=self.a_sign, u=self.unit_sign, s=" swapped" if self.swap_blocks else "")


CANONICAL = OrientationChoice()


def total_domain(base: Optional[Domain]) -> Optional[Domain]:
    """t ∈ [−1, 1] prepended to a base domain; exclusions read the base coordinates"""
    if base is None:
        return None
    lifted = tuple(
        Exclusion(e.name, (lambda level: lambda q: level(q[1:]))(e.level), e.threshold) for e in base.exclusions
    )
    return Domain(lower=(-1.0,) + base.lower, upper=(1.0,) + base.upper, exclusions=lifted)


def _block_coframe(metric: np.ndarray, block: Sequence[int]) -> np.ndarray:
    try:
        return np.linalg.cholesky(metric[np.ix_(block, block)]).T
    except np.linalg.LinAlgError as e:
        raise DegenerateMetricError("base metric is not positive-definite on block {b}".format(b=tuple(block))) from e


@dataclass(frozen=True)
class G2MetricBundle:
    coframe: FieldFn
    provenance: Dict[str, object] = field(default_factory=dict)

    @property
    def domain(self) -> Optional[Domain]:
        return self.coframe.domain

    @property
    def metric(self) -> FieldFn:
        return self.coframe.map(lambda e: e.T @ e, "metric")

    @property
    def phi(self) -> FieldFn:
        return self.coframe.map(lambda e: pullback(model_phi(), e), "φ")

    @property
    def psi(self) -> FieldFn:
        return self.coframe.map(lambda e: pullback(model_psi(), e), "*φ")


def adapted_coframe(
    k: FieldFn, split: SplitSpec, mono: MonopoleData, choice: OrientationChoice = CANONICAL
) -> FieldFn:
    plus = [1 + i for i in split.indices("plus")]
    minus = [1 + i for i in split.indices("minus")]
    if choice.swap_blocks:
        plus, minus = minus, plus

    def evaluate(q):
        p = q[1:]
        metric = k(p)
        v = positive(mono.v, p, "v")
        coframe = np.zeros((7, 7))
        coframe[0:3, plus] = _block_coframe(metric, [i - 1 for i in plus])
        theta = np.concatenate(([1.0], choice.a_sign * mono.A(p)))
        coframe[3] = choice.unit_sign * theta / np.sqrt(v)
        coframe[4:7, minus] = np.sqrt(v) * _block_coframe(metric, [i - 1 for i in minus])
        return coframe

    return FieldFn(7, evaluate, total_domain(mono.v.domain), "coframe({n})".format(n=mono.name))


def _build(
    builder: str,
    anchor: str,
    k: FieldFn,
    split: SplitSpec,
    mono: MonopoleData,
    precheck: Optional[Dict[str, float]],
    inputs: str,
    choice: OrientationChoice,
    extra: Optional[Dict[str, object]] = None,
) -> G2MetricBundle:
    provenance = {"builder": builder, "anchor": anchor, "inputs": inputs or mono.name}
    if choice != CANONICAL:
        provenance["orientation"] = choice.label
    if precheck is not None:
        worst = max(precheck.values(), default=0.0)
        provenance["monopole_residual"] = worst
        if worst > MONOPOLE_TOLERANCE:
            provenance["warning"] = "monopole residual {w:.3e} exceeds {t:.1e}".format(w=worst, t=MONOPOLE_TOLERANCE)
            log.warning("{b}: {w}".format(b=builder, w=provenance["warning"]))
    provenance.update(extra or {})
    return G2MetricBundle(coframe=adapted_coframe(k, split, mono, choice), provenance=provenance)


def g2_build_thm1(
    k: FieldFn,
    split: SplitSpec,
    mono: MonopoleData,
    samples: Optional[Sequence[Sequence[float]]] = None,
    cfg: StencilConfig = FIRST_DERIVATIVES,
    inputs: str = "",
    choice: OrientationChoice = CANONICAL,
) -> G2MetricBundle:
    """k_V + v k_H + v⁻¹(dt + A)² for a monopole with dA = −*_H dv"""
    precheck = None if samples is None else monopole_residual(mono, k, samples, cfg)
    return _build(
        "g2_build_thm1",
        "k_V + v k_H + v^-1 (dt + A)^2 with dA = -*_H dv",
        k,
        split,
        mono,
        precheck,
        inputs,
        choice,
    )


def g2_build_thm2(
    k: FieldFn,
    split: SplitSpec,
    mono: MonopoleData,
    samples: Optional[Sequence[Sequence[float]]] = None,
    cfg: StencilConfig = FIRST_DERIVATIVES,
    inputs: str = "",
) -> G2MetricBundle:
    """k₊ + v k₋ + v⁻¹(dt + A)² over a weak SL(3) base with a weak monopole"""
    precheck, extra = None, {}
    if samples is not None:
        precheck = weak_monopole_residual(mono, k, samples, cfg)
        extra["weak_structure_residual"] = weak_structure_residual(k, split, mono.alpha, samples, cfg)
    return _build(
        "g2_build_thm2",
        "k_+ + v k_- + v^-1 (dt + A)^2 over a weak SL(3) base",
        k,
        split,
        mono,
        precheck,
        inputs,
        CANONICAL,
        extra,
    )


@dataclass(frozen=True)
class TorsionReport:
    dphi: float
    dpsi: float
    dphi_order: ConvergenceResult
    dpsi_order: ConvergenceResult


def _sup_exterior(form: FieldFn, samples, cfg: StencilConfig) -> float:
    return max((sup_norm(exterior_d(form, p, cfg)) for p in samples), default=0.0)


def torsionfree_residual(
    bundle: G2MetricBundle, samples: Sequence[Sequence[float]], cfg: StencilConfig = FIRST_DERIVATIVES
) -> TorsionReport:
    """sup|dφ| and sup|d*φ| at h, with orders measured over h, h/2, h/4"""
    steps = (cfg.h, cfg.h / 2, cfg.h / 4)
    dphi = [_sup_exterior(bundle.phi, samples, cfg.with_step(h)) for h in steps]
    dpsi = [_sup_exterior(bundle.psi, samples, cfg.with_step(h)) for h in steps]
    report = TorsionReport(dphi[0], dpsi[0], estimate_order(steps, dphi), estimate_order(steps, dpsi))
    log.info(
        "torsion of {b}: sup|dφ| = {p:.3e} (order {po}), sup|d*φ| = {s:.3e} (order {so})".format(
            b=bundle.provenance.get("inputs", ""),
            p=report.dphi,
            po=report.dphi_order.label,
            s=report.dpsi,
            so=report.dpsi_order.label,
        )
    )
    return report


@dataclass(frozen=True)
class HolonomyReport:
    off_g2_fraction: float
    ricci: float
    min_curvature: float
    max_curvature: float


def holonomy_fraction(bundle: G2MetricBundle, p: np.ndarray, curvature: np.ndarray) -> Tuple[float, float]:
    """(off-g₂ fraction, curvature norm) of all R(f_a, f_b) expressed in the adapted frame"""
    coframe = bundle.coframe(p)
    frame = np.linalg.inv(coframe)
    metric = bundle.metric
    total = off = 0.0
    for a in range(7):
        for b in range(a + 1, 7):
            operator = curvature_operator(metric, p, frame[:, a], frame[:, b], curvature=curvature)
            operator = coframe @ operator @ frame
            total += float(np.sum(operator**2))
            off += float(np.sum(off_g2(operator) ** 2))
    norm = np.sqrt(total)
    if norm < FLAT_CURVATURE_FLOOR:
        return 0.0, norm
    return float(np.sqrt(off) / norm), norm


def holonomy_residual(
    bundle: G2MetricBundle, samples: Sequence[Sequence[float]], cfg: StencilConfig = CURVATURE
) -> HolonomyReport:
    metric = bundle.metric
    fractions, norms, riccis = [], [], []
    for p in samples:
        p = np.asarray(p, dtype=float)
        curvature = riemann(metric, p, cfg)
        fraction, norm = holonomy_fraction(bundle, p, curvature)
        fractions.append(fraction)
        norms.append(norm)
        riccis.append(sup_norm(ricci(metric, p, cfg, curvature=curvature)))
    if not fractions:
        return HolonomyReport(0.0, 0.0, 0.0, 0.0)
    return HolonomyReport(max(fractions), max(riccis), min(norms), max(norms))


def flat_mono(domain: Optional[Domain] = None) -> MonopoleData:
    return MonopoleData(
        v=FieldFn(6, lambda p: 1.0, domain, "1"), A=FieldFn(6, lambda p: np.zeros(6), domain, "0"), name="flat"
    )


def taub_nut_mono() -> MonopoleData:
    domain = base_domain()
    return MonopoleData(
        v=point_charge(1.0, 0.5, domain=domain),
        A=dirac_potential(0.5, domain=domain),
        name="taub-nut",
    )


def standard_coordinates_phi() -> np.ndarray:
    placement = np.zeros((7, 7))
    placement[range(7), STANDARD_SLOTS] = 1.0
    return pullback(model_phi(), placement)


@dataclass(frozen=True)
class SignAuditEntry:
    choice: OrientationChoice
    reproduces_flat: bool
    converges: Optional[bool]

    @property
    def passed(self) -> bool:
        return bool(self.reproduces_flat and self.converges)


def sign_audit(
    samples: Sequence[Sequence[float]], cfg: StencilConfig = FIRST_DERIVATIVES, order_floor: float = 1.8
) -> List[SignAuditEntry]:
    """
    all 2³ choices of (sign of A, sign of the 𝟙-coframe, block order). A choice passes when the
    flat bundle equals the model φ in standard coordinates and the ℝ³ × Taub-NUT bundle has
    convergent dφ. The convergence study only runs for choices that pass the flat test.
    """
    expected = standard_coordinates_phi()
    k = flat_metric()
    entries = []
    for a_sign, unit_sign, swap in product((1, -1), (1, -1), (False, True)):
        choice = OrientationChoice(a_sign, unit_sign, swap)
        flat = g2_build_thm1(k, BASE_SPLIT, flat_mono(base_domain(charged=False)), choice=choice)
        reproduces = all(np.array_equal(flat.phi(p), expected) for p in samples)
        converges = None
        if reproduces:
            bundle = g2_build_thm1(k, BASE_SPLIT, taub_nut_mono(), choice=choice)
            report = torsionfree_residual(bundle, samples, cfg)
            converges = report.dphi_order.exact or (report.dphi_order.order or 0.0) >= order_floor
        entries.append(SignAuditEntry(choice, reproduces, converges))
        log.info("sign audit {c}: flat {f}, converges {v}".format(c=choice.label, f=reproduces, v=converges))
    return entries
