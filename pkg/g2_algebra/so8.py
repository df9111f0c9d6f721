# coding=utf-8
"""
date:           oct-2026

usage:          the two copies of so(7) inside so(8): so(7)₀ fixing the real octonion axis,
                and so(7)₁ = spin(7) spanned by ½[γᵢ, γⱼ], γᵢ = left multiplication by eᵢ.
                Their sum is so(8) and their intersection is g₂.

                so(8) slot 0 is the real axis; slots 1..7 are the imaginary units in the
                order of g2_algebra.octonions.
"""
# python
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

# this repo
from g2_algebra.exceptions import CertificationError
from g2_algebra.lie import g2_basis
from g2_algebra.linalg import ExactMatrix, Subspace, bracket, intersect, span, sum_spaces
from g2_algebra.octonions import OctonionTable, certified_octonions

log = logging.getLogger(__name__)


def gammas(table: Optional[OctonionTable] = None) -> List[ExactMatrix]:
    """γᵢ = L_{eᵢ} for i = 1..7, certified against γᵢγⱼ + γⱼγᵢ = −2δᵢⱼ."""
    table = certified_octonions() if table is None else table
    result = [table.left_matrix(table.unit(i)) for i in range(1, 8)]
    failures = clifford_failures(result)
    if failures:
        i, j = failures[0]
        raise CertificationError("Clifford relation fails for γ{i}, γ{j}".format(i=i, j=j), witness={"pair": (i, j)})
    return result


def clifford_failures(matrices: Sequence[ExactMatrix]) -> List[Tuple[int, int]]:
    """1-based pairs (i, j) with γᵢγⱼ + γⱼγᵢ ≠ −2δᵢⱼ"""
    n = matrices[0].rows if matrices else 0
    identity = ExactMatrix.identity(n)
    failures = []
    for i, gi in enumerate(matrices):
        for j, gj in enumerate(matrices):
            expected = -2 * identity if i == j else ExactMatrix.zeros(n)
            if gi @ gj + gj @ gi != expected:
                failures.append((i + 1, j + 1))
    return failures


def spin7_basis(table: Optional[OctonionTable] = None) -> List[ExactMatrix]:
    g = gammas(table)
    return [Fraction(1, 2) * bracket(g[i], g[j]) for i in range(7) for j in range(i + 1, 7)]


def so7_canonical_basis() -> List[ExactMatrix]:
    e = ExactMatrix.elementary
    return [e(8, a, b) - e(8, b, a) for a in range(1, 8) for b in range(a + 1, 8)]


@dataclass(frozen=True)
class So8IntersectionReport:
    spin7_dim: int
    so7_dim: int
    sum_dim: int
    intersection_dim: int
    intersection_is_g2: bool

    @property
    def passed(self) -> bool:
        return self.sum_dim == 28 and self.intersection_dim == 14 and self.intersection_is_g2


def _restrict_to_imaginary(space: Subspace) -> Subspace:
    matrices = [ExactMatrix.from_flat(v, 8).delete(0) for v in space.basis]
    return span(matrices, ambient_dim=49)


def so8_intersection_report(table: Optional[OctonionTable] = None) -> So8IntersectionReport:
    spin7 = span(spin7_basis(table))
    so7 = span(so7_canonical_basis())
    total = sum_spaces(spin7, so7)
    common = intersect(spin7, so7)
    is_g2 = common.dim == 14 and _restrict_to_imaginary(common) == g2_basis().subspace
    report = So8IntersectionReport(
        spin7_dim=spin7.dim,
        so7_dim=so7.dim,
        sum_dim=total.dim,
        intersection_dim=common.dim,
        intersection_is_g2=is_g2,
    )
    log.info(
        "so(8): dim(so7₀ + so7₁) = {s}, dim(so7₀ ∩ so7₁) = {i}, intersection is g2: {g}".format(
            s=report.sum_dim, i=report.intersection_dim, g=report.intersection_is_g2
        )
    )
    return report
