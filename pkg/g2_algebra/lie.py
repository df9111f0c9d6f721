# coding=utf-8
"""
date:           oct-2026

usage:          explicit matrices for sl(3) ⊂ so(6) ⊂ so(7), the complement 𝔪 ≅ ℂ⁶ ⊂ so(7),
                g₂ = sl(3) ⊕ 𝔪, the h-map, and the lift of 𝔥 ⊕ 𝔪 into so(n+1).

                ℝ⁷ uses the block convention (1..3 | 4 | 5..7); in 0-based code the
                𝟙-direction is index 3. Every identity is checked over ℚ and a failed
                check raises CertificationError.
"""
# python
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Callable, List, Optional, Sequence, Tuple

# this repo
from g2_algebra.exceptions import CertificationError, DimensionMismatchError, InvalidParameterError
from g2_algebra.linalg import (
    ExactMatrix,
    Subspace,
    Vector,
    as_vector,
    bracket,
    determinant,
    express,
    intersect,
    kernel,
    span,
    trace_form,
)

log = logging.getLogger(__name__)

UNIT_INDEX = 3  # 0-based slot of the 𝟙-direction in ℝ⁷


def unit_vector(n: int, i: int) -> Vector:
    return tuple(Fraction(1) if k == i else Fraction(0) for k in range(n))


def cross3(x: Sequence, y: Sequence) -> Vector:
    x, y = as_vector(x), as_vector(y)
    return (x[1] * y[2] - x[2] * y[1], x[2] * y[0] - x[0] * y[2], x[0] * y[1] - x[1] * y[0])


def hat3(x: Sequence) -> ExactMatrix:
    """the skew matrix with hat3(x)·y = x × y"""
    x1, x2, x3 = as_vector(x)
    zero = Fraction(0)
    return ExactMatrix([[zero, -x3, x2], [x3, zero, -x1], [-x2, x1, zero]])


# -----------------------------------------------------------------------------
# parameter types
# -----------------------------------------------------------------------------
@dataclass(frozen=True)
class Sl3Param:
    """x ∈ ℝ³ and y symmetric trace-free; together x̂ + i·y ∈ su(3) ⊗ ℂ = sl(3, ℂ)."""

    x: Vector
    y: ExactMatrix

    def __post_init__(self):
        object.__setattr__(self, "x", as_vector(self.x))
        object.__setattr__(self, "y", ExactMatrix(self.y))
        if len(self.x) != 3 or self.y.shape != (3, 3):
            raise InvalidParameterError("Sl3Param needs a 3-vector and a 3x3 matrix")
        if not self.y.is_symmetric() or self.y.trace() != 0:
            raise InvalidParameterError("Sl3Param.y must be symmetric and trace-free: {y}".format(y=self.y))


@dataclass(frozen=True)
class MVector:
    """coordinates (a, b) of 𝔪; also read as (X₊, X₋)."""

    a: Vector
    b: Vector

    def __post_init__(self):
        object.__setattr__(self, "a", as_vector(self.a))
        object.__setattr__(self, "b", as_vector(self.b))
        if len(self.a) != 3 or len(self.b) != 3:
            raise InvalidParameterError("MVector needs two 3-vectors")

    @classmethod
    def from_vector(cls, v: Sequence) -> "MVector":
        v = as_vector(v)
        if len(v) != 6:
            raise DimensionMismatchError("MVector.from_vector needs 6 entries, got {n}".format(n=len(v)))
        return cls(a=v[:3], b=v[3:])

    def as_vector(self) -> Vector:
        return self.a + self.b


def _symmetric_tracefree_basis() -> List[ExactMatrix]:
    e = ExactMatrix.elementary
    return [
        e(3, 0, 0) - e(3, 1, 1),
        e(3, 1, 1) - e(3, 2, 2),
        e(3, 0, 1) + e(3, 1, 0),
        e(3, 0, 2) + e(3, 2, 0),
        e(3, 1, 2) + e(3, 2, 1),
    ]


def sl3_basis_params() -> List[Sl3Param]:
    """3 rotation generators followed by 5 symmetric trace-free generators."""
    zero3 = ExactMatrix.zeros(3)
    params = [Sl3Param(x=unit_vector(3, i), y=zero3) for i in range(3)]
    params += [Sl3Param(x=(0, 0, 0), y=y) for y in _symmetric_tracefree_basis()]
    return params


def m_basis_vectors() -> List[MVector]:
    zero = (0, 0, 0)
    return [MVector(a=unit_vector(3, i), b=zero) for i in range(3)] + [
        MVector(a=zero, b=unit_vector(3, i)) for i in range(3)
    ]


# -----------------------------------------------------------------------------
# embeddings
# -----------------------------------------------------------------------------
def sl3_embed(p: Sl3Param) -> ExactMatrix:
    """[[x̂, −y], [y, x̂]] ∈ so(6)"""
    x_hat = hat3(p.x)
    return ExactMatrix.block([[x_hat, -p.y], [p.y, x_hat]])


def so6_to_so7(matrix: ExactMatrix) -> ExactMatrix:
    if matrix.shape != (6, 6):
        raise DimensionMismatchError("so6_to_so7 expects a 6x6 matrix, got {s}".format(s=matrix.shape))
    return matrix.insert_zero(UNIT_INDEX)


def m_embed(v: MVector) -> ExactMatrix:
    """{a}¹ + {b}² ∈ so(7); the 𝟙-column carries 2a in rows 1..3 and 2b in rows 5..7."""
    a_hat, b_hat = hat3(v.a), hat3(v.b)
    zero3 = ExactMatrix.zeros(3)
    zero_col = ExactMatrix.zeros(3, 1)
    zero_row = ExactMatrix.zeros(1, 3)
    zero_1 = ExactMatrix.zeros(1)
    a_col = ExactMatrix([[2 * x] for x in v.a])
    b_col = ExactMatrix([[2 * x] for x in v.b])
    part_a = ExactMatrix.block(
        [
            [zero3, a_col, a_hat],
            [-a_col.T, zero_1, zero_row],
            [a_hat, zero_col, zero3],
        ]
    )
    part_b = ExactMatrix.block(
        [
            [b_hat, zero_col, zero3],
            [zero_row, zero_1, -b_col.T],
            [zero3, b_col, -b_hat],
        ]
    )
    return part_a + part_b


def h_map(v: MVector) -> ExactMatrix:
    """h(X₊, X₋) = ½ [[X̂₋, X̂₊], [X̂₊, −X̂₋]]"""
    a_hat, b_hat = hat3(v.a), hat3(v.b)
    return Fraction(1, 2) * ExactMatrix.block([[b_hat, a_hat], [a_hat, -b_hat]])


def sl3_so7_basis() -> List[ExactMatrix]:
    return [so6_to_so7(sl3_embed(p)) for p in sl3_basis_params()]


def m_so7_basis() -> List[ExactMatrix]:
    return [m_embed(v) for v in m_basis_vectors()]


def so_basis(n: int) -> List[ExactMatrix]:
    """E_ab − E_ba for a < b."""
    return [
        ExactMatrix.elementary(n, a, b) - ExactMatrix.elementary(n, b, a) for a in range(n) for b in range(a + 1, n)
    ]


# -----------------------------------------------------------------------------
# g₂ and reductive pairs
# -----------------------------------------------------------------------------
@dataclass(frozen=True)
class ReductivePair:
    """𝔤 = 𝔥 ⊕ 𝔪 with [𝔥, 𝔪] ⊆ 𝔪, certified on construction by reductive_pair()."""

    h_sub: Subspace
    m_sub: Subspace
    n: int
    symmetric: bool

    @property
    def g_sub(self) -> Subspace:
        return self.h_sub + self.m_sub


def reductive_pair(h_elements: Sequence[ExactMatrix], m_elements: Sequence[ExactMatrix]) -> ReductivePair:
    n = h_elements[0].rows
    h_sub, m_sub = span(h_elements), span(m_elements)
    if intersect(h_sub, m_sub).dim != 0:
        raise CertificationError("𝔥 and 𝔪 intersect nontrivially")
    for i, a in enumerate(h_elements):
        for j, x in enumerate(m_elements):
            if not m_sub.contains(bracket(a, x)):
                raise CertificationError(
                    "[𝔥_{i}, 𝔪_{j}] leaves 𝔪".format(i=i, j=j), witness={"h_index": i, "m_index": j}
                )
    for i, a in enumerate(h_elements):
        for j, b in enumerate(h_elements[i + 1 :], start=i + 1):
            if not h_sub.contains(bracket(a, b)):
                raise CertificationError("𝔥 is not a subalgebra", witness={"pair": (i, j)})
    symmetric = all(h_sub.contains(bracket(x, y)) for x in m_elements for y in m_elements)
    return ReductivePair(h_sub=h_sub, m_sub=m_sub, n=n, symmetric=symmetric)


@dataclass(frozen=True)
class G2Basis:
    """
    14 skew 7x7 matrices: indices 0..7 span sl(3), 8..13 span 𝔪.
    structure_constants[i][j] are the coordinates of [e_i, e_j] in this basis.
    """

    elements: Tuple[ExactMatrix, ...]
    h_indices: Tuple[int, ...] = tuple(range(8))
    m_indices: Tuple[int, ...] = tuple(range(8, 14))
    structure_constants: Tuple[Tuple[Vector, ...], ...] = field(default=(), repr=False)

    @property
    def h_elements(self) -> List[ExactMatrix]:
        return [self.elements[i] for i in self.h_indices]

    @property
    def m_elements(self) -> List[ExactMatrix]:
        return [self.elements[i] for i in self.m_indices]

    @cached_property
    def subspace(self) -> Subspace:
        return span(self.elements)

    def h_component(self, coordinates: Vector) -> Vector:
        return tuple(coordinates[i] for i in self.h_indices)


@lru_cache(maxsize=None)
def g2_basis() -> G2Basis:
    elements = tuple(sl3_so7_basis() + m_so7_basis())
    for k, e in enumerate(elements):
        if not e.is_skew():
            raise CertificationError("g2 basis element {k} is not skew".format(k=k))
    if span(elements).dim != 14:
        raise CertificationError("g2 basis elements are linearly dependent")

    constants = []
    for i, a in enumerate(elements):
        brackets = [bracket(a, b) for b in elements]
        coords = express(elements, brackets)
        missing = [j for j, c in enumerate(coords) if c is None]
        if missing:
            raise CertificationError(
                "g2 basis is not closed under bracket: [{i}, {j}]".format(i=i, j=missing[0]),
                witness={"pair": (i, missing[0])},
            )
        constants.append(tuple(coords))
    log.info("g2 basis certified: 14 skew elements, closed under bracket")
    return G2Basis(elements=elements, structure_constants=tuple(constants))


def closure_failures(basis: G2Basis) -> List[Tuple[int, int]]:
    """index pairs (i, j) whose bracket differs from Σₖ cᵢⱼₖ eₖ built from the structure constants"""
    failures = []
    for i, a in enumerate(basis.elements):
        for j, b in enumerate(basis.elements):
            combination = ExactMatrix.zeros(a.rows)
            for c, e in zip(basis.structure_constants[i][j], basis.elements):
                if c != 0:
                    combination = combination + c * e
            if bracket(a, b) != combination:
                failures.append((i, j))
    return failures


def orthogonality_failures(
    h_elements: Sequence[ExactMatrix], m_elements: Sequence[ExactMatrix]
) -> List[Tuple[int, int]]:
    return [
        (i, j)
        for i, a in enumerate(h_elements)
        for j, x in enumerate(m_elements)
        if trace_form(a, x) != 0
    ]


def certify_orthogonality(h_elements: Sequence[ExactMatrix], m_elements: Sequence[ExactMatrix]) -> int:
    """trace_form(h, m) = 0 over all basis pairs. Returns the number of pairs checked."""
    failures = orthogonality_failures(h_elements, m_elements)
    if failures:
        i, j = failures[0]
        raise CertificationError("tr(h_{i} m_{j}) ≠ 0".format(i=i, j=j), witness={"pair": (i, j)})
    return len(h_elements) * len(m_elements)


def equivariance_failures() -> List[Tuple[Sl3Param, MVector]]:
    """pairs (A, x) with [A, h(x)] ≠ h(A·x)"""
    failures = []
    for p in sl3_basis_params():
        a = sl3_embed(p)
        for v in m_basis_vectors():
            if bracket(a, h_map(v)) != h_map(MVector.from_vector(a.apply(v.as_vector()))):
                failures.append((p, v))
    return failures


def certify_h_equivariance() -> int:
    """[A, h(x)] = h(A·x) for every sl(3) basis element A ⊂ so(6) and 𝔪 basis vector x."""
    failures = equivariance_failures()
    if failures:
        p, v = failures[0]
        raise CertificationError("h-map is not sl(3)-equivariant", witness={"A": p, "x": v})
    return len(sl3_basis_params()) * len(m_basis_vectors())


def h_map_scale() -> Fraction:
    """
    The factor c with (m_embed(v) with the 𝟙 row/column deleted) = c·h_map(v), computed
    on the first 𝔪 basis vector and verified on all of them.
    """
    scale: Optional[Fraction] = None
    for v in m_basis_vectors():
        reduced, h = m_embed(v).delete(UNIT_INDEX), h_map(v)
        if scale is None:
            index = next(k for k, x in enumerate(h.flatten()) if x != 0)
            scale = reduced.flatten()[index] / h.flatten()[index]
        if reduced != scale * h:
            raise CertificationError("m_embed and h_map are not proportional", witness={"x": v})
    return scale


# -----------------------------------------------------------------------------
# the lift 𝔥 ⊕ 𝔪 → so(n+1)
# -----------------------------------------------------------------------------
def lift_gtilde(
    a: ExactMatrix, x: Sequence, h: Callable[[Vector], ExactMatrix] = lambda v: h_map(MVector.from_vector(v))
) -> ExactMatrix:
    """[[A + h(x), x], [−xᵀ, 0]] ∈ so(n+1)"""
    x = as_vector(x)
    n = a.rows
    if not a.is_square() or len(x) != n:
        raise DimensionMismatchError(
            "lift_gtilde needs an nxn matrix and an n-vector, got {s} and {k}".format(s=a.shape, k=len(x))
        )
    column = ExactMatrix([[c] for c in x])
    return ExactMatrix.block([[a + h(x), column], [-column.T, ExactMatrix.zeros(1)]])


def lift_permutation(n: int = 6, slot: int = UNIT_INDEX) -> Tuple[int, ...]:
    """row order that moves the appended (n+1)-th slot of a lift to position `slot`."""
    order = list(range(n))
    order.insert(slot, n)
    return tuple(order)


@dataclass(frozen=True)
class LiftCertificate:
    permutation: Tuple[int, ...]
    scale: Fraction
    h_scale: Fraction
    complement_dim: int


def certify_lift() -> LiftCertificate:
    """
    m_embed(v) = scale · P lift_gtilde(0, v) Pᵀ on every 𝔪 basis vector, where P
    moves the lift's extra slot to the 𝟙 position. Also checks lift(A, 0) = A ⊕ 0
    and that the permuted lifts of 𝔪 span a complement of sl(3) in g₂.
    """
    order = lift_permutation()
    zero6 = ExactMatrix.zeros(6)
    scale: Optional[Fraction] = None
    lifted = []
    for v in m_basis_vectors():
        permuted = lift_gtilde(zero6, v.as_vector()).permute(order)
        target = m_embed(v)
        if scale is None:
            index = next(k for k, x in enumerate(permuted.flatten()) if x != 0)
            scale = target.flatten()[index] / permuted.flatten()[index]
        if target != scale * permuted:
            raise CertificationError("lift and m_embed disagree", witness={"x": v})
        lifted.append(permuted)

    for p in sl3_basis_params():
        a = sl3_embed(p)
        if lift_gtilde(a, (0,) * 6).permute(order) != so6_to_so7(a):
            raise CertificationError("lift of an sl(3) element is not its so(7) image", witness={"A": p})

    basis = g2_basis()
    sl3_sub = span(basis.h_elements)
    lifted_sub = span(lifted)
    if intersect(sl3_sub, lifted_sub).dim != 0 or (sl3_sub + lifted_sub) != basis.subspace:
        raise CertificationError("lifted 𝔪 is not a complement of sl(3) in g2")
    return LiftCertificate(permutation=order, scale=scale, h_scale=h_map_scale(), complement_dim=lifted_sub.dim)


# -----------------------------------------------------------------------------
# representations
# -----------------------------------------------------------------------------
def adjoint_matrices(acting: Sequence[ExactMatrix], module_basis: Sequence[ExactMatrix]) -> List[ExactMatrix]:
    """matrices of X ↦ [A, X] on span(module_basis), one per A; columns are images."""
    result = []
    for a in acting:
        coords = express(module_basis, [bracket(a, x) for x in module_basis])
        if any(c is None for c in coords):
            raise CertificationError("module is not invariant under the acting algebra")
        k = len(module_basis)
        result.append(ExactMatrix([[coords[col][row] for col in range(k)] for row in range(k)]))
    return result


@dataclass(frozen=True)
class IntertwinerReport:
    solutions: Tuple[ExactMatrix, ...]
    invertible: Optional[ExactMatrix]

    @property
    def dimension(self) -> int:
        return len(self.solutions)

    @property
    def equivalent(self) -> bool:
        return self.invertible is not None


def intertwiner_solve(rep1: Sequence[ExactMatrix], rep2: Sequence[ExactMatrix]) -> IntertwinerReport:
    """
    all T with T·rep1[i] = rep2[i]·T. The unknown T (d2 x d1) is flattened row-major;
    "inequivalent" is reported as invertible=None.
    """
    if len(rep1) != len(rep2) or not rep1:
        raise DimensionMismatchError("representations must be given on the same non-empty basis")
    d1, d2 = rep1[0].rows, rep2[0].rows
    rows = []
    for r1, r2 in zip(rep1, rep2):
        for p in range(d2):
            for q in range(d1):
                row = [Fraction(0)] * (d2 * d1)
                for b in range(d1):
                    row[p * d1 + b] += r1[b, q]
                for a in range(d2):
                    row[a * d1 + q] -= r2[p, a]
                rows.append(row)
    solutions = tuple(ExactMatrix.from_flat(v, d2, d1) for v in kernel(ExactMatrix(rows)))

    invertible = None
    if solutions and d1 == d2:
        candidates = list(solutions)
        candidates += [
            sum((Fraction(t) ** k * s for k, s in enumerate(solutions)), ExactMatrix.zeros(d1))
            for t in range(2, d1 * len(solutions) + 2)
        ]
        invertible = next((c for c in candidates if determinant(c) != 0), None)
    return IntertwinerReport(solutions=solutions, invertible=invertible)


def sl3_real_basis() -> List[ExactMatrix]:
    """sl(3, ℝ) in its defining 3-dimensional representation."""
    e = ExactMatrix.elementary
    basis = [e(3, i, j) for i in range(3) for j in range(3) if i != j]
    return basis + [e(3, 0, 0) - e(3, 1, 1), e(3, 1, 1) - e(3, 2, 2)]


def killing_ratio(n: int) -> Fraction:
    """
    the constant c with B(X, Y) = c·tr(XY) on so(n), B the Killing form tr(ad X ad Y).
    Computed over every basis pair; a non-constant ratio is a certification failure.
    """
    if n < 3:
        raise InvalidParameterError("so(n) is abelian for n < 3")
    basis = so_basis(n)
    ads = adjoint_matrices(basis, basis)
    ratio: Optional[Fraction] = None
    for i, x in enumerate(basis):
        for j, y in enumerate(basis):
            killing = trace_form(ads[i], ads[j])
            trace = trace_form(x, y)
            if trace == 0:
                if killing != 0:
                    raise CertificationError("Killing form is not proportional to the trace form")
                continue
            if ratio is None:
                ratio = killing / trace
            elif killing != ratio * trace:
                raise CertificationError("Killing form is not proportional to the trace form")
    return ratio
