# coding=utf-8
"""
date:           oct-2026

usage:          the catalogue of certification checks.

                A Check measures named residuals for one RunConfig. Checks with step-size
                dependent residuals also expose Studies, which the convergence_study command
                and the suites run over a list of step sizes.
"""
# python
import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Dict, List, Optional, Sequence, Tuple

# 3rd party
import numpy as np

# this repo
from g2_algebra.lie import (
    adjoint_matrices,
    certify_lift,
    closure_failures,
    equivariance_failures,
    g2_basis,
    intertwiner_solve,
    killing_ratio,
    m_basis_vectors,
    orthogonality_failures,
    reductive_pair,
    sl3_basis_params,
    sl3_embed,
)
from g2_algebra.octonions import (
    DIM,
    OctonionTable,
    associative_test,
    certified_octonions,
    certified_phi,
    coassociative_test,
    cross_identity_failures,
    invariant_threeform_kernel,
    octonion_failures,
    phi_cross_duality,
    random_rationals,
    stabilizer,
    torsion_cross,
)
from g2_algebra.so8 import clifford_failures, so8_intersection_report
from g2_geometry.bundles import CANONICAL, holonomy_residual, sign_audit, taub_nut_mono, total_domain
from g2_geometry.convergence import ConvergenceResult, convergence_study
from g2_geometry.fields import StencilConfig, exterior_d, ricci, riemann, sup_norm, sup_over
from g2_geometry.gallery import NEGATIVE, POSITIVE, gallery, mismatched_alpha_mono
from g2_geometry.hypersurfaces import HYPERSURFACE, hypersurface_checks
from g2_geometry.killing import (
    dA_conditions_check,
    gamma_check,
    killing_conditions_check,
    rho_torsion_check,
    weak_structure_residual,
)
from g2_geometry.monopoles import (
    BASE_SPLIT,
    base_domain,
    flat_metric,
    gh_build,
    gh_domain,
    gh_residual,
    monopole_residual,
    weak_monopole_residual,
)
from g2_geometry.oracles import oracle_floor
from g2_report.config import RunConfig

log = logging.getLogger(__name__)

SIGN_AUDIT_STEP = 1e-2
OCTONION_PAIRS = 100
CONTROL_STEP = 5e-3

# (t, y) points of the Gibbons-Hawking chart well away from the charge and the string
GH_REFERENCE_POINTS = ((0.1, 0.6, 0.5, 0.7), (-0.3, 0.9, -0.4, 0.8))

ORDER_TWO = StencilConfig(order=2)


@dataclass(frozen=True)
class Study:
    """a residual as a function of the stencil; `cfg` fixes the order, the step varies"""

    name: str
    residual: Callable[[StencilConfig], float]
    cfg: StencilConfig = ORDER_TWO
    exact_floor: float = 0.0

    def run(self, steps: Sequence[float]) -> ConvergenceResult:
        return convergence_study(self.residual, steps, self.cfg, self.exact_floor)


@dataclass(frozen=True)
class Measurement:
    residuals: Dict[str, object]
    params: Dict[str, object] = field(default_factory=dict)
    bounds: Dict[str, Tuple[float, float]] = field(default_factory=dict)
    convergence: Dict[str, ConvergenceResult] = field(default_factory=dict)


@dataclass(frozen=True)
class Check:
    check_id: str
    measure: Callable[[RunConfig], Measurement]
    tolerance: float = 0
    expected: str = POSITIVE
    entry: Optional[str] = None
    studies: Optional[Callable[[RunConfig], List[Study]]] = None
    pointwise: Optional[Callable[[RunConfig], Tuple[np.ndarray, Callable]]] = None

    @property
    def supports_study(self) -> bool:
        return self.studies is not None


def _sup(samples, func) -> float:
    return sup_over(samples, func).get("residual", 0.0)


def _run_studies(studies: List[Study], config: RunConfig) -> Dict[str, ConvergenceResult]:
    return {study.name: study.run(config.steps) for study in studies}


def _with_studies(measure: Callable[[RunConfig], Measurement], studies: Callable[[RunConfig], List[Study]]):
    """measurement at the configured stencil plus convergence over config.steps"""

    def combined(config: RunConfig) -> Measurement:
        measurement = measure(config)
        convergence = dict(measurement.convergence)
        convergence.update(_run_studies(studies(config), config))
        return Measurement(measurement.residuals, measurement.params, measurement.bounds, convergence)

    return combined


def _factory(name: str):
    return gallery()[name].factory()


# -----------------------------------------------------------------------------
# exact algebra
# -----------------------------------------------------------------------------
def measure_g2_basis(config: RunConfig) -> Measurement:
    basis = g2_basis()
    dimension = basis.subspace.dim
    return Measurement(
        residuals={"dimension_defect": abs(dimension - 14), "closure_failures": len(closure_failures(basis))},
        params={"dimension": dimension, "brackets": len(basis.elements) ** 2},
    )


def measure_reductive_pair(config: RunConfig) -> Measurement:
    basis = g2_basis()
    pair = reductive_pair(basis.h_elements, basis.m_elements)
    return Measurement(
        residuals={"sum_defect": int(pair.g_sub != basis.subspace), "symmetric": int(pair.symmetric)},
        params={"h_dim": pair.h_sub.dim, "m_dim": pair.m_sub.dim, "symmetric": pair.symmetric},
    )


def measure_orthogonality(config: RunConfig) -> Measurement:
    basis = g2_basis()
    failures = orthogonality_failures(basis.h_elements, basis.m_elements)
    pairs = len(basis.h_elements) * len(basis.m_elements)
    return Measurement(residuals={"nonzero_pairs": len(failures)}, params={"pairs": pairs})


def measure_equivariance(config: RunConfig) -> Measurement:
    pairs = len(sl3_basis_params()) * len(m_basis_vectors())
    return Measurement(residuals={"failures": len(equivariance_failures())}, params={"pairs": pairs})


def measure_lift(config: RunConfig) -> Measurement:
    certificate = certify_lift()
    return Measurement(
        residuals={
            "scale_mismatch": int(certificate.scale != certificate.h_scale),
            "complement_defect": abs(certificate.complement_dim - 6),
        },
        params={
            "permutation": list(certificate.permutation),
            "scale": certificate.scale,
            "h_scale": certificate.h_scale,
            "basis_vectors": 6,
        },
    )


def measure_intertwiner(config: RunConfig) -> Measurement:
    basis = g2_basis()
    adjoint = adjoint_matrices(basis.h_elements, basis.m_elements)
    canonical = [sl3_embed(p) for p in sl3_basis_params()]
    report = intertwiner_solve(canonical, adjoint)
    return Measurement(
        residuals={"inequivalent": int(not report.equivalent)},
        params={"intertwiner_dim": report.dimension},
    )


def measure_killing_form(config: RunConfig) -> Measurement:
    ratio = killing_ratio(DIM)
    return Measurement(residuals={"ratio_defect": abs(ratio - (DIM - 2))}, params={"n": DIM, "ratio": ratio})


def measure_clifford(config: RunConfig) -> Measurement:
    table = certified_octonions()
    matrices = [table.left_matrix(table.unit(i)) for i in range(1, DIM + 1)]
    return Measurement(residuals={"failures": len(clifford_failures(matrices))}, params={"gammas": len(matrices)})


def measure_so8(config: RunConfig) -> Measurement:
    report = so8_intersection_report()
    return Measurement(
        residuals={
            "sum_defect": abs(report.sum_dim - 28),
            "intersection_defect": abs(report.intersection_dim - 14),
            "intersection_not_g2": int(not report.intersection_is_g2),
        },
        params={
            "spin7_dim": report.spin7_dim,
            "so7_dim": report.so7_dim,
            "sum_dim": report.sum_dim,
            "intersection_dim": report.intersection_dim,
        },
    )


# -----------------------------------------------------------------------------
# octonions
# -----------------------------------------------------------------------------
def _unit(i: int):
    return tuple(int(k == i) for k in range(DIM))


def measure_invariant_form(config: RunConfig) -> Measurement:
    kernel_dim = len(invariant_threeform_kernel())
    phi = certified_phi()
    stabilized = stabilizer(phi)
    return Measurement(
        residuals={"kernel_defect": abs(kernel_dim - 1), "stabilizer_mismatch": int(stabilized != g2_basis().subspace)},
        params={
            "kernel_dim": kernel_dim,
            "stabilizer_dim": stabilized.dim,
            "norm_squared": phi.norm_squared(),
            "components": {"".join(str(i + 1) for i in key): value for key, value in phi.items()},
        },
    )


def measure_torsion_cross(config: RunConfig) -> Measurement:
    report = torsion_cross()
    proportional = report.cross == phi_cross_duality(certified_phi()).scaled(report.scale)
    return Measurement(
        residuals={"not_proportional": int(not proportional)},
        params={
            "scale": report.scale,
            "complement_dim": report.complement_dim,
            "intertwiner_dim": report.intertwiner_dim,
        },
    )


def measure_cross_identities(config: RunConfig) -> Measurement:
    rng = np.random.default_rng(config.seed)
    pairs = list(zip(random_rationals(rng, OCTONION_PAIRS, DIM), random_rationals(rng, OCTONION_PAIRS, DIM)))
    failures = cross_identity_failures(phi_cross_duality(certified_phi()), pairs)
    return Measurement(residuals={"failures": len(failures)}, params={"pairs": len(pairs)})


def measure_octonion_table(config: RunConfig) -> Measurement:
    table = OctonionTable(cross=phi_cross_duality(certified_phi()))
    failures = octonion_failures(table, samples=OCTONION_PAIRS, seed=config.seed)
    witness = table.associator(table.unit(1), table.unit(2), table.unit(4))
    return Measurement(
        residuals={"failures": len(failures)},
        params={"pairs": OCTONION_PAIRS, "associator_e1_e2_e4": list(witness)},
    )


def measure_associative(config: RunConfig) -> Measurement:
    return Measurement(
        residuals={
            "e123_not_associative": int(not associative_test([_unit(0), _unit(1), _unit(2)])),
            "e4567_not_coassociative": int(not coassociative_test([_unit(3), _unit(4), _unit(5), _unit(6)])),
        },
        params={"e567_associative": associative_test([_unit(4), _unit(5), _unit(6)])},
    )


# -----------------------------------------------------------------------------
# Gibbons-Hawking
# -----------------------------------------------------------------------------
def gh_equations(name: str) -> Check:
    def measure(config: RunConfig) -> Measurement:
        data = _factory(name)
        return Measurement(residuals=gh_residual(data, config.sample(data.domain), config.fd))

    def pointwise(config: RunConfig):
        data = _factory(name)
        return config.sample(data.domain), lambda points: gh_residual(data, points, config.fd)

    return Check(
        "gh.{n}.equations".format(n=name[3:]), measure, tolerance=1e-3, entry=name, pointwise=pointwise
    )


def _gh_metric_and_samples(name: str, config: RunConfig):
    data = _factory(name)
    return gh_build(data), config.sample(gh_domain(data), cap=config.curvature_samples)


def _curvature_study(metric, samples, name: str, tensor=riemann) -> Study:
    return Study(name, lambda cfg: max((sup_norm(tensor(metric, p, cfg)) for p in samples), default=0.0))


def gh_flat_studies(config: RunConfig) -> List[Study]:
    metric, samples = _gh_metric_and_samples("gh-flat", config)
    return [_curvature_study(metric, samples, "riemann")]


def measure_gh_flat(config: RunConfig) -> Measurement:
    metric, samples = _gh_metric_and_samples("gh-flat", config)
    value = max(sup_norm(riemann(metric, p, config.curvature)) for p in samples)
    return Measurement(residuals={"riemann": value}, params={"samples_used": len(samples)})


def gh_taub_nut_studies(config: RunConfig) -> List[Study]:
    metric, samples = _gh_metric_and_samples("gh-taub-nut", config)
    return [_curvature_study(metric, samples, "ricci", ricci)]


def measure_gh_taub_nut(config: RunConfig) -> Measurement:
    metric, samples = _gh_metric_and_samples("gh-taub-nut", config)
    value = max(sup_norm(ricci(metric, p, config.curvature)) for p in samples)
    curvature = min(sup_norm(riemann(metric, np.asarray(p), config.curvature)) for p in GH_REFERENCE_POINTS)
    return Measurement(
        residuals={"ricci": value},
        params={"samples_used": len(samples)},
        bounds={"riemann_norm": (curvature, 0.01)},
    )


def measure_gh_non_harmonic(config: RunConfig) -> Measurement:
    data = _factory("gh-non-harmonic")
    metric, samples = gh_build(data), config.sample(gh_domain(data), cap=config.curvature_samples)
    cfg = config.curvature.with_step(CONTROL_STEP)
    value = max(sup_norm(ricci(metric, p, cfg)) for p in samples)
    harmonic = gh_residual(data, config.sample(data.domain), config.fd)["harmonic"]
    return Measurement(
        residuals={"ricci": value, "harmonic": harmonic},
        params={"ricci_h": CONTROL_STEP, "samples_used": len(samples)},
    )


# -----------------------------------------------------------------------------
# G2 metrics from monopoles
# -----------------------------------------------------------------------------
def _torsion_samples(bundle, config: RunConfig):
    return config.sample(bundle.domain)


def _exterior_study(bundle, samples, name: str) -> Study:
    form = bundle.phi if name == "dphi" else bundle.psi
    return Study(name, lambda cfg: _sup(samples, lambda p: exterior_d(form, p, cfg)))


def torsion_studies(name: str) -> Callable[[RunConfig], List[Study]]:
    def studies(config: RunConfig) -> List[Study]:
        bundle = _factory(name)
        samples = _torsion_samples(bundle, config)
        return [_exterior_study(bundle, samples, "dphi"), _exterior_study(bundle, samples, "dpsi")]

    return studies


def measure_torsion(name: str) -> Callable[[RunConfig], Measurement]:
    def measure(config: RunConfig) -> Measurement:
        bundle = _factory(name)
        samples = _torsion_samples(bundle, config)
        residuals = {
            "dphi": _sup(samples, lambda p: exterior_d(bundle.phi, p, config.fd)),
            "dpsi": _sup(samples, lambda p: exterior_d(bundle.psi, p, config.fd)),
        }
        return Measurement(residuals=residuals, params={"bundle": dict(bundle.provenance)})

    return measure


def holonomy_studies(name: str) -> Callable[[RunConfig], List[Study]]:
    def studies(config: RunConfig) -> List[Study]:
        bundle = _factory(name)
        samples = config.sample(bundle.domain, cap=config.curvature_samples)
        at_step = lru_cache(maxsize=None)(lambda cfg: holonomy_residual(bundle, samples, cfg))
        return [
            Study("ricci", lambda cfg: at_step(cfg).ricci),
            Study("off_g2", lambda cfg: at_step(cfg).off_g2_fraction),
        ]

    return studies


def measure_holonomy(name: str, floor: Optional[float] = None) -> Callable[[RunConfig], Measurement]:
    def measure(config: RunConfig) -> Measurement:
        bundle = _factory(name)
        samples = config.sample(bundle.domain, cap=config.curvature_samples)
        report = holonomy_residual(bundle, samples, config.curvature)
        bounds = {} if floor is None else {"min_curvature": (report.min_curvature, floor)}
        return Measurement(
            residuals={"ricci": report.ricci, "off_g2": report.off_g2_fraction},
            params={"max_curvature": report.max_curvature, "samples_used": len(samples)},
            bounds=bounds,
        )

    return measure


def _combine(*measures: Callable[[RunConfig], Measurement]) -> Callable[[RunConfig], Measurement]:
    def combined(config: RunConfig) -> Measurement:
        residuals, params, bounds = {}, {}, {}
        for measure in measures:
            part = measure(config)
            residuals.update(part.residuals)
            params.update(part.params)
            bounds.update(part.bounds)
        return Measurement(residuals, params, bounds)

    return combined


def _all_studies(*factories: Callable[[RunConfig], List[Study]]) -> Callable[[RunConfig], List[Study]]:
    return lambda config: [study for factory in factories for study in factory(config)]


def measure_taub_nut_monopole(config: RunConfig) -> Measurement:
    samples = config.sample(base_domain())
    report = monopole_residual(taub_nut_mono(), flat_metric(domain=base_domain()), samples, config.fd)
    return Measurement(residuals=report)


def measure_sign_audit(config: RunConfig) -> Measurement:
    samples = config.sample(total_domain(base_domain()), cap=config.curvature_samples)
    entries = sign_audit(samples, StencilConfig(h=SIGN_AUDIT_STEP), order_floor=config.order_band[0])
    passing = [entry.choice for entry in entries if entry.passed]
    return Measurement(
        residuals={
            "canonical_fails": int(CANONICAL not in passing),
            "other_choices_pass": sum(1 for choice in passing if choice != CANONICAL),
        },
        params={
            "choices": len(entries),
            "passing": [choice.label for choice in passing],
            "samples_used": len(samples),
        },
    )


def killing_conditions(name: str) -> Check:
    def measure(config: RunConfig) -> Measurement:
        data = _factory(name)
        return Measurement(residuals=killing_conditions_check(data, config.sample(data.metric.domain), config.fd))

    def pointwise(config: RunConfig):
        data = _factory(name)
        return config.sample(data.metric.domain), lambda points: killing_conditions_check(data, points, config.fd)

    return Check("g2-thm1.{n}".format(n=name), measure, tolerance=1e-3, entry=name, pointwise=pointwise)


def measure_gamma_oracle(config: RunConfig) -> Measurement:
    data = _factory("killing-taub-nut")
    return Measurement(residuals={"gamma": gamma_check(data, config.sample(data.metric.domain), config.fd)})


def _rho_samples(data, config: RunConfig):
    return config.sample(data.X.domain)


def rho_studies(name: str) -> Callable[[RunConfig], List[Study]]:
    def studies(config: RunConfig) -> List[Study]:
        data = _factory(name)
        samples = _rho_samples(data, config)
        at_step = lru_cache(maxsize=None)(lambda cfg: rho_torsion_check(data, samples, cfg))
        return [Study("rho_xy", lambda cfg: at_step(cfg)["tm_xy"]), Study("rho_x1", lambda cfg: at_step(cfg)["tm_x1"])]

    return studies


def measure_rho(name: str) -> Callable[[RunConfig], Measurement]:
    def measure(config: RunConfig) -> Measurement:
        data = _factory(name)
        return Measurement(residuals=rho_torsion_check(data, _rho_samples(data, config), config.fd))

    return measure


# -----------------------------------------------------------------------------
# weak SL(3) bases
# -----------------------------------------------------------------------------
def measure_weak_monopole(config: RunConfig) -> Measurement:
    samples = config.sample(base_domain())
    report = weak_monopole_residual(taub_nut_mono(), flat_metric(domain=base_domain()), samples, config.fd)
    return Measurement(residuals=report)


def measure_weak_structure(config: RunConfig) -> Measurement:
    samples = config.sample(base_domain())
    value = weak_structure_residual(flat_metric(domain=base_domain()), BASE_SPLIT, None, samples, config.fd)
    return Measurement(residuals={"weak_structure": value})


def measure_builder_agreement(config: RunConfig) -> Measurement:
    strong, weak = _factory("g2-taub-nut"), _factory("g2-weak-taub-nut")
    samples = config.sample(strong.domain)
    return Measurement(residuals={"phi": _sup(samples, lambda p: strong.phi(p) - weak.phi(p))})


def measure_dA_forms(config: RunConfig) -> Measurement:
    data = _factory("killing-taub-nut")
    return Measurement(residuals=dA_conditions_check(data, config.sample(data.metric.domain), config.fd))


# -----------------------------------------------------------------------------
# hypersurfaces of R^7
# -----------------------------------------------------------------------------
def _hypersurface_samples(immersion, config: RunConfig):
    return config.sample(immersion.domain, step=HYPERSURFACE.h)


def hypersurface(name: str, keys: Sequence[str], tolerance: float, expected: str = POSITIVE, bound=None) -> Check:
    """`keys` are judged against the tolerance; `bound` = (key, floor) must be reached"""

    def measure(config: RunConfig) -> Measurement:
        immersion = _factory(name)
        report = hypersurface_checks(immersion, _hypersurface_samples(immersion, config))
        others = {key: value for key, value in report.items() if key not in keys}
        bounds = {} if bound is None else {bound[0]: (report[bound[0]], bound[1])}
        return Measurement(residuals={key: report[key] for key in keys}, params=others, bounds=bounds)

    def pointwise(config: RunConfig):
        immersion = _factory(name)
        return _hypersurface_samples(immersion, config), lambda points: hypersurface_checks(immersion, points)

    prefix = "negative" if expected == NEGATIVE else "hypersurface"
    return Check(
        "{p}.{n}".format(p=prefix, n=name), measure, tolerance, expected=expected, entry=name, pointwise=pointwise
    )


# -----------------------------------------------------------------------------
# negative controls
# -----------------------------------------------------------------------------
def measure_mismatched_alpha(config: RunConfig) -> Measurement:
    torsion = measure_torsion("g2-mismatched-alpha")(config)
    samples = config.sample(base_domain())
    weak = weak_monopole_residual(mismatched_alpha_mono(), flat_metric(domain=base_domain()), samples, config.fd)
    return Measurement(
        residuals={"dphi": torsion.residuals["dphi"], "minus_minus": weak["minus_minus"]},
        params={"plus_plus": weak["plus_plus"], "dpsi": torsion.residuals["dpsi"]},
    )


def dphi_studies(name: str) -> Callable[[RunConfig], List[Study]]:
    return lambda config: torsion_studies(name)(config)[:1]


def measure_broken_monopole(config: RunConfig) -> Measurement:
    torsion = measure_torsion("g2-broken-monopole")(config)
    return Measurement(residuals={"dphi": torsion.residuals["dphi"]}, params={"dpsi": torsion.residuals["dpsi"]})


def measure_round_sphere(config: RunConfig) -> Measurement:
    bundle = _factory("round-sphere-7")
    samples = config.sample(bundle.domain, cap=config.curvature_samples)
    report = holonomy_residual(bundle, samples, config.curvature)
    return Measurement(
        residuals={"off_g2": report.off_g2_fraction}, params={"ricci": report.ricci, "samples_used": len(samples)}
    )


def measure_killing_perturbed(config: RunConfig) -> Measurement:
    data = _factory("killing-perturbed")
    report = killing_conditions_check(data, config.sample(data.metric.domain), config.fd)
    return Measurement(residuals={"dA": report["dA"]}, params={"torsion": report["torsion"]})


# -----------------------------------------------------------------------------
# manifests
# -----------------------------------------------------------------------------
def algebra_checks() -> List[Check]:
    return [
        Check("algebra.g2-basis", measure_g2_basis),
        Check("algebra.reductive-pair", measure_reductive_pair),
        Check("algebra.orthogonality", measure_orthogonality),
        Check("algebra.h-equivariance", measure_equivariance),
        Check("algebra.lift", measure_lift),
        Check("algebra.intertwiner", measure_intertwiner),
        Check("algebra.killing-form", measure_killing_form),
        Check("algebra.so8-clifford", measure_clifford),
        Check("algebra.so8-intersection", measure_so8),
    ]


def octonion_checks() -> List[Check]:
    return [
        Check("octonion.invariant-form", measure_invariant_form),
        Check("octonion.torsion-cross", measure_torsion_cross),
        Check("octonion.cross-identities", measure_cross_identities),
        Check("octonion.table", measure_octonion_table),
        Check("octonion.associative", measure_associative),
    ]


def gh_checks() -> List[Check]:
    return [
        gh_equations("gh-trivial"),
        gh_equations("gh-flat"),
        gh_equations("gh-taub-nut"),
        Check(
            "gh.flat.riemann",
            _with_studies(measure_gh_flat, gh_flat_studies),
            tolerance=1e-3,
            entry="gh-flat",
            studies=gh_flat_studies,
        ),
        Check(
            "gh.taub-nut.ricci",
            _with_studies(measure_gh_taub_nut, gh_taub_nut_studies),
            tolerance=1e-3,
            entry="gh-taub-nut",
            studies=gh_taub_nut_studies,
        ),
    ]


def g2_thm1_checks() -> List[Check]:
    flat_studies = torsion_studies("g2-flat")
    taub_nut_studies = _all_studies(torsion_studies("g2-taub-nut"), holonomy_studies("g2-taub-nut"))
    return [
        Check(
            "g2-thm1.flat",
            _with_studies(_combine(measure_torsion("g2-flat"), measure_holonomy("g2-flat")), flat_studies),
            tolerance=1e-10,
            entry="g2-flat",
            studies=flat_studies,
        ),
        Check("g2-thm1.taub-nut.monopole", measure_taub_nut_monopole, tolerance=1e-3, entry="g2-taub-nut"),
        Check(
            "g2-thm1.taub-nut",
            _with_studies(
                _combine(measure_torsion("g2-taub-nut"), measure_holonomy("g2-taub-nut", floor=1e-3)),
                taub_nut_studies,
            ),
            tolerance=1e-3,
            entry="g2-taub-nut",
            studies=taub_nut_studies,
        ),
        Check("g2-thm1.sign-audit", measure_sign_audit),
        killing_conditions("killing-flat"),
        killing_conditions("killing-taub-nut"),
        Check("g2-thm1.gamma-oracle", measure_gamma_oracle, tolerance=1e-10, entry="killing-taub-nut"),
        Check(
            "g2-thm1.rho-trivial",
            _with_studies(measure_rho("rho-trivial"), rho_studies("rho-trivial")),
            tolerance=1e-10,
            entry="rho-trivial",
            studies=rho_studies("rho-trivial"),
        ),
        Check(
            "g2-thm1.rho-polynomial",
            _with_studies(measure_rho("rho-polynomial"), rho_studies("rho-polynomial")),
            tolerance=1e-3,
            entry="rho-polynomial",
            studies=rho_studies("rho-polynomial"),
        ),
    ]


def g2_thm2_checks() -> List[Check]:
    weak_studies = torsion_studies("g2-weak-taub-nut")
    return [
        Check("g2-thm2.weak-monopole", measure_weak_monopole, tolerance=1e-3, entry="g2-weak-taub-nut"),
        Check("g2-thm2.weak-structure", measure_weak_structure, tolerance=1e-10, entry="g2-weak-taub-nut"),
        Check("g2-thm2.thm1-agreement", measure_builder_agreement, tolerance=1e-12, entry="g2-weak-taub-nut"),
        Check(
            "g2-thm2.torsion",
            _with_studies(measure_torsion("g2-weak-taub-nut"), weak_studies),
            tolerance=1e-3,
            entry="g2-weak-taub-nut",
            studies=weak_studies,
        ),
        Check("g2-thm2.dA-forms", measure_dA_forms, tolerance=1e-3, entry="killing-taub-nut"),
    ]


def hypersurface_checks_manifest() -> List[Check]:
    return [
        hypersurface("hyperplane", ("kahler", "geodesic"), 1e-8),
        hypersurface("sphere", ("nearly_kahler", "umbilic"), 1e-5, bound=("kahler", oracle_floor("sphere_kahler"))),
    ]


def negative_checks() -> List[Check]:
    broken, mismatched = dphi_studies("g2-broken-monopole"), dphi_studies("g2-mismatched-alpha")
    return [
        Check("negative.gh-non-harmonic", measure_gh_non_harmonic, expected=NEGATIVE, entry="gh-non-harmonic"),
        Check(
            "negative.broken-monopole",
            _with_studies(measure_broken_monopole, broken),
            expected=NEGATIVE,
            entry="g2-broken-monopole",
            studies=broken,
        ),
        Check(
            "negative.mismatched-alpha",
            _with_studies(measure_mismatched_alpha, mismatched),
            expected=NEGATIVE,
            entry="g2-mismatched-alpha",
            studies=mismatched,
        ),
        Check("negative.round-sphere-7", measure_round_sphere, expected=NEGATIVE, entry="round-sphere-7"),
        Check("negative.killing-perturbed", measure_killing_perturbed, expected=NEGATIVE, entry="killing-perturbed"),
        hypersurface("ellipsoid", ("umbilic", "nearly_kahler"), 0.0, expected=NEGATIVE),
    ]
