# coding=utf-8
"""
date:           oct-2026

usage:          the 7-dimensional cross product, its calibration 3-form φ and the octonions.

                φ is computed twice: as the unique g₂-invariant 3-form, and as the torsion
                of the reductive decomposition so(7) = g₂ ⊕ (g₂)⊥. The two must agree up to a
                nonzero scalar. Indices are 0-based here; slot 3 is the 𝟙-direction.
"""
# python
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations
from math import isqrt
from typing import Dict, List, Optional, Sequence, Tuple

# 3rd party
import numpy as np

# this repo
from g2_algebra.exceptions import CertificationError, DimensionMismatchError, InvalidParameterError
from g2_algebra.lie import G2Basis, adjoint_matrices, g2_basis, intertwiner_solve, so_basis
from g2_algebra.linalg import (
    ExactMatrix,
    Subspace,
    Vector,
    as_vector,
    determinant,
    express,
    inverse,
    kernel,
    ortho_complement,
    span,
    to_fraction,
    trace_pairing,
)

log = logging.getLogger(__name__)

DIM = 7
Octonion = Tuple[Fraction, ...]


def permutation_sign(sequence: Sequence[int]) -> int:
    """sign of the permutation sorting `sequence`, 0 when an index repeats."""
    items = list(sequence)
    if len(set(items)) != len(items):
        return 0
    sign = 1
    for i in range(len(items)):
        for j in range(i + 1, len(items)):
            if items[i] > items[j]:
                sign = -sign
    return sign


def exact_sqrt(value: Fraction) -> Fraction:
    value = to_fraction(value)
    if value < 0:
        raise InvalidParameterError("square root of negative {v}".format(v=value))
    num, den = isqrt(value.numerator), isqrt(value.denominator)
    if num * num != value.numerator or den * den != value.denominator:
        raise InvalidParameterError("{v} is not the square of a rational".format(v=value))
    return Fraction(num, den)


@lru_cache(maxsize=None)
def index_tuples(degree: int, dim: int = DIM) -> Tuple[Tuple[int, ...], ...]:
    return tuple(combinations(range(dim), degree))


# -----------------------------------------------------------------------------
# forms
# -----------------------------------------------------------------------------
@dataclass(frozen=True)
class AlternatingForm:
    """
    an exact k-form on ℚ^dim stored on sorted index tuples. A ThreeForm is an
    AlternatingForm of degree 3.
    """

    degree: int
    values: Tuple[Fraction, ...]
    dim: int = DIM

    def __post_init__(self):
        object.__setattr__(self, "values", as_vector(self.values))
        if len(self.values) != len(index_tuples(self.degree, self.dim)):
            raise DimensionMismatchError(
                "a {k}-form on {n} dimensions has {c} components, got {m}".format(
                    k=self.degree, n=self.dim, c=len(index_tuples(self.degree, self.dim)), m=len(self.values)
                )
            )

    @classmethod
    def from_dict(cls, degree: int, components: Dict[Tuple[int, ...], object], dim: int = DIM) -> "AlternatingForm":
        values = [Fraction(0)] * len(index_tuples(degree, dim))
        position = {t: k for k, t in enumerate(index_tuples(degree, dim))}
        for indices, value in components.items():
            sign = permutation_sign(indices)
            if sign == 0:
                continue
            values[position[tuple(sorted(indices))]] += sign * to_fraction(value)
        return cls(degree=degree, values=tuple(values), dim=dim)

    def component(self, *indices: int) -> Fraction:
        sign = permutation_sign(indices)
        if sign == 0:
            return Fraction(0)
        return sign * self.values[index_tuples(self.degree, self.dim).index(tuple(sorted(indices)))]

    def items(self) -> List[Tuple[Tuple[int, ...], Fraction]]:
        return [(t, v) for t, v in zip(index_tuples(self.degree, self.dim), self.values) if v != 0]

    def norm_squared(self) -> Fraction:
        return sum((v * v for v in self.values), Fraction(0))

    def scaled(self, factor) -> "AlternatingForm":
        factor = to_fraction(factor)
        return AlternatingForm(self.degree, tuple(factor * v for v in self.values), self.dim)

    def normalize(self) -> "AlternatingForm":
        """scale to ‖·‖² = 7 with the first nonzero component positive."""
        norm2 = self.norm_squared()
        if norm2 == 0:
            raise InvalidParameterError("cannot normalize the zero form")
        scale = exact_sqrt(Fraction(7) / norm2)
        first = next(v for v in self.values if v != 0)
        return self.scaled(scale if first > 0 else -scale)

    def __call__(self, *vectors: Sequence) -> Fraction:
        """ω(v₁, …, v_k) = Σ_I ω_I det[v_a(I_b)]"""
        if len(vectors) != self.degree:
            raise DimensionMismatchError("a {k}-form takes {k} vectors".format(k=self.degree))
        vectors = [as_vector(v) for v in vectors]
        total = Fraction(0)
        for indices, value in self.items():
            minor = ExactMatrix([[v[i] for i in indices] for v in vectors])
            total += value * determinant(minor)
        return total

    def full_array(self) -> np.ndarray:
        """dense totally antisymmetric float array, shape (dim,)*degree"""
        array = np.zeros((self.dim,) * self.degree)
        for indices, value in self.items():
            for perm in permutations(range(self.degree)):
                permuted = tuple(indices[p] for p in perm)
                array[permuted] = permutation_sign(perm) * float(value)
        return array


ThreeForm = AlternatingForm


def wedge_exact(alpha: AlternatingForm, beta: AlternatingForm) -> AlternatingForm:
    """(α∧β)_I = Σ over shuffles of I into (J, K) of sign · α_J β_K"""
    if alpha.dim != beta.dim:
        raise DimensionMismatchError("forms live on different dimensions")
    degree = alpha.degree + beta.degree
    components = {}
    for indices in index_tuples(degree, alpha.dim):
        total = Fraction(0)
        for j in combinations(indices, alpha.degree):
            k = tuple(i for i in indices if i not in j)
            total += permutation_sign(j + k) * alpha.component(*j) * beta.component(*k)
        components[indices] = total
    return AlternatingForm.from_dict(degree, components, alpha.dim)


def hodge_star_exact(form: AlternatingForm, metric: Optional[ExactMatrix] = None) -> AlternatingForm:
    """
    (*ω)_J = √det g · Σ_I ω^I ε_{I J} over sorted I, indices raised by g⁻¹, orientation
    e1∧…∧e_n > 0. √det g must be rational.
    """
    n, k = form.dim, form.degree
    metric = ExactMatrix.identity(n) if metric is None else metric
    if metric.shape != (n, n):
        raise DimensionMismatchError("metric shape {s} on {n} dimensions".format(s=metric.shape, n=n))
    root = exact_sqrt(determinant(metric))
    g_inv = inverse(metric)
    raised = {}
    for i in index_tuples(k, n):
        minors = (determinant(ExactMatrix([[g_inv[a, b] for b in lowered] for a in i])) for lowered, _ in form.items())
        raised[i] = sum((value * m for (_, value), m in zip(form.items(), minors)), Fraction(0))
    components = {}
    for j in index_tuples(n - k, n):
        components[j] = root * sum((permutation_sign(i + j) * raised[i] for i in raised), Fraction(0))
    return AlternatingForm.from_dict(n - k, components, n)


def star_phi(phi: AlternatingForm, metric: Optional[ExactMatrix] = None) -> AlternatingForm:
    return hodge_star_exact(phi, metric)


# -----------------------------------------------------------------------------
# g₂ as the stabilizer of φ
# -----------------------------------------------------------------------------
def _action_operator(a: ExactMatrix) -> List[List[Fraction]]:
    """
    matrix of φ ↦ A·φ on 3-forms, (A·φ)_ijk = −Σ_l (A_li φ_ljk + A_lj φ_ilk + A_lk φ_ijl),
    in the basis of sorted triples.
    """
    triples = index_tuples(3)
    position = {t: k for k, t in enumerate(triples)}
    rows = [[Fraction(0)] * len(triples) for _ in triples]
    for r, (i, j, k) in enumerate(triples):
        for slot, target in enumerate((i, j, k)):
            for l in range(DIM):
                coefficient = a[l, target]
                if coefficient == 0:
                    continue
                replaced = [i, j, k]
                replaced[slot] = l
                sign = permutation_sign(replaced)
                if sign == 0:
                    continue
                rows[r][position[tuple(sorted(replaced))]] -= sign * coefficient
    return rows


def act_on_threeform(a: ExactMatrix, phi: AlternatingForm) -> AlternatingForm:
    rows = _action_operator(a)
    return AlternatingForm(3, tuple(sum((c * v for c, v in zip(row, phi.values)), Fraction(0)) for row in rows))


def invariant_threeform_kernel(basis: Optional[G2Basis] = None) -> List[Vector]:
    """basis of the 3-forms annihilated by every element of `basis`"""
    basis = g2_basis() if basis is None else basis
    rows = []
    for element in basis.elements:
        rows.extend(_action_operator(element))
    return kernel(ExactMatrix(rows))


def invariant_threeform(basis: Optional[G2Basis] = None) -> AlternatingForm:
    """the unique (up to scale) 3-form annihilated by g₂, normalized."""
    solutions = invariant_threeform_kernel(basis)
    if len(solutions) != 1:
        raise CertificationError(
            "invariant 3-forms form a {d}-dimensional space, expected 1".format(d=len(solutions)),
            witness={"kernel_dim": len(solutions)},
        )
    phi = AlternatingForm(3, solutions[0]).normalize()
    log.info("invariant 3-form certified: {n} nonzero components".format(n=len(phi.items())))
    return phi


def stabilizer(phi: AlternatingForm) -> Subspace:
    """{A ∈ so(7) : A·φ = 0} as a subspace of flattened 7x7 matrices."""
    generators = so_basis(DIM)
    images = [act_on_threeform(a, phi).values for a in generators]
    system = ExactMatrix([[images[c][r] for c in range(len(generators))] for r in range(len(images[0]))])
    matrices = []
    for coefficients in kernel(system):
        total = ExactMatrix.zeros(DIM)
        for c, a in zip(coefficients, generators):
            if c != 0:
                total = total + c * a
        matrices.append(total)
    return span(matrices, ambient_dim=DIM * DIM)


# -----------------------------------------------------------------------------
# cross products
# -----------------------------------------------------------------------------
@dataclass(frozen=True)
class CrossProduct7:
    """(x × y)_k = Σ λ[i][j][k] x_i y_j"""

    constants: Tuple[Tuple[Tuple[Fraction, ...], ...], ...]

    def __call__(self, x: Sequence, y: Sequence) -> Vector:
        x, y = as_vector(x), as_vector(y)
        return tuple(
            sum((self.constants[i][j][k] * x[i] * y[j] for i in range(DIM) for j in range(DIM)), Fraction(0))
            for k in range(DIM)
        )

    def scaled(self, factor) -> "CrossProduct7":
        factor = to_fraction(factor)
        return CrossProduct7(tuple(tuple(tuple(factor * c for c in row) for row in plane) for plane in self.constants))

    def is_antisymmetric(self) -> bool:
        return all(
            self.constants[i][j][k] == -self.constants[j][i][k]
            for i in range(DIM)
            for j in range(DIM)
            for k in range(DIM)
        )

    def ratio_to(self, other: "CrossProduct7") -> Optional[Fraction]:
        """λ with self = λ·other, or None when not proportional."""
        pairs = [
            (self.constants[i][j][k], other.constants[i][j][k])
            for i in range(DIM)
            for j in range(DIM)
            for k in range(DIM)
        ]
        reference = next(((a, b) for a, b in pairs if b != 0), None)
        if reference is None:
            return None
        ratio = reference[0] / reference[1]
        if any(a != ratio * b for a, b in pairs):
            return None
        return ratio


def dot(x: Sequence, y: Sequence) -> Fraction:
    return sum((a * b for a, b in zip(as_vector(x), as_vector(y))), Fraction(0))


def phi_cross_duality(phi: AlternatingForm) -> CrossProduct7:
    """⟨x × y, z⟩ = φ(x, y, z)"""
    return CrossProduct7(
        tuple(tuple(tuple(phi.component(i, j, k) for k in range(DIM)) for j in range(DIM)) for i in range(DIM))
    )


def certify_cross_identities(cross: CrossProduct7, samples: Sequence[Tuple[Vector, Vector]]) -> int:
    """
    ⟨x×y, x⟩ = 0, |x×y|² = |x|²|y|² − ⟨x,y⟩² and x×(x×y) = −|x|²y + ⟨x,y⟩x on every sample pair.
    """
    failures = cross_identity_failures(cross, samples)
    if failures:
        message, x, y = failures[0]
        raise CertificationError(message, witness={"x": x, "y": y})
    return len(samples)


def cross_identity_failures(
    cross: CrossProduct7, samples: Sequence[Tuple[Vector, Vector]]
) -> List[Tuple[str, Vector, Vector]]:
    """(message, x, y) for every identity that fails on a sample pair"""
    failures = []
    for x, y in samples:
        xy = cross(x, y)
        if dot(xy, x) != 0 or dot(xy, y) != 0:
            failures.append(("x × y is not orthogonal to its factors", x, y))
        if dot(xy, xy) != dot(x, x) * dot(y, y) - dot(x, y) ** 2:
            failures.append(("|x × y|² identity fails", x, y))
        expected = tuple(-dot(x, x) * b + dot(x, y) * a for a, b in zip(x, y))
        if cross(x, xy) != expected:
            failures.append(("x × (x × y) identity fails", x, y))
    return failures


@dataclass(frozen=True)
class TorsionCrossReport:
    cross: CrossProduct7
    scale: Fraction
    complement_dim: int
    intertwiner_dim: int


def torsion_cross(basis: Optional[G2Basis] = None, phi: Optional[AlternatingForm] = None) -> TorsionCrossReport:
    """
    Identify ℝ⁷ with (g₂)⊥ ⊂ so(7) equivariantly, then pull back the (g₂)⊥-component of
    the bracket. The result must be a nonzero multiple of the φ cross product.
    """
    basis = g2_basis() if basis is None else basis
    phi = invariant_threeform(basis) if phi is None else phi

    so7 = span(so_basis(DIM))
    complement = ortho_complement(basis.subspace, trace_pairing(DIM), within=so7)
    if complement.dim != DIM:
        raise CertificationError("(g2)⊥ in so(7) has dimension {d}".format(d=complement.dim))
    complement_mats = [ExactMatrix.from_flat(v, DIM) for v in complement.basis]

    report = intertwiner_solve(list(basis.elements), adjoint_matrices(basis.elements, complement_mats))
    if not report.equivalent:
        raise CertificationError("no invertible intertwiner between ℝ⁷ and (g2)⊥")
    t = report.invertible

    def embed(vector: Vector) -> ExactMatrix:
        coords = t.apply(vector)
        total = ExactMatrix.zeros(DIM)
        for c, m in zip(coords, complement_mats):
            if c != 0:
                total = total + c * m
        return total

    t_inv = inverse(t)
    g2_count = len(basis.elements)
    split_basis = list(basis.elements) + complement_mats
    images = [embed(tuple(Fraction(int(k == i)) for k in range(DIM))) for i in range(DIM)]
    constants = [[[Fraction(0)] * DIM for _ in range(DIM)] for _ in range(DIM)]
    for i in range(DIM):
        brackets = [images[i] @ images[j] - images[j] @ images[i] for j in range(DIM)]
        for j, coords in enumerate(express(split_basis, brackets)):
            projected = t_inv.apply(coords[g2_count:])
            for k in range(DIM):
                constants[i][j][k] = projected[k]
    pulled_back = CrossProduct7(tuple(tuple(tuple(row) for row in plane) for plane in constants))

    if not pulled_back.is_antisymmetric():
        raise CertificationError("pulled-back bracket is not antisymmetric")
    scale = pulled_back.ratio_to(phi_cross_duality(phi))
    if scale is None or scale == 0:
        raise CertificationError("pulled-back bracket is not a nonzero multiple of the φ cross product")
    log.info("torsion of so(7) = g2 ⊕ (g2)⊥ is {s} times the φ cross product".format(s=scale))
    return TorsionCrossReport(
        cross=pulled_back, scale=scale, complement_dim=complement.dim, intertwiner_dim=report.dimension
    )


# -----------------------------------------------------------------------------
# associative and coassociative subspaces
# -----------------------------------------------------------------------------
def gram_determinant(vectors: Sequence[Sequence]) -> Fraction:
    vectors = [as_vector(v) for v in vectors]
    return determinant(ExactMatrix([[dot(u, v) for v in vectors] for u in vectors]))


def calibration_ratio(form: AlternatingForm, vectors: Sequence[Sequence]) -> Fraction:
    """ω(v₁..v_k)² / det Gram: the squared value of ω on an orthonormal basis of the span."""
    volume = gram_determinant(vectors)
    if volume == 0:
        raise InvalidParameterError("vectors are linearly dependent")
    return form(*vectors) ** 2 / volume


def associative_test(vectors: Sequence[Sequence], phi: Optional[AlternatingForm] = None) -> bool:
    """true iff φ calibrates span(vectors): φ² = det Gram, exactly."""
    if len(vectors) != 3:
        raise DimensionMismatchError("an associative test needs 3 vectors")
    phi = invariant_threeform() if phi is None else phi
    return calibration_ratio(phi, vectors) == 1


def coassociative_test(vectors: Sequence[Sequence], phi: Optional[AlternatingForm] = None) -> bool:
    """true iff *φ calibrates span(vectors)."""
    if len(vectors) != 4:
        raise DimensionMismatchError("a coassociative test needs 4 vectors")
    phi = invariant_threeform() if phi is None else phi
    return calibration_ratio(star_phi(phi), vectors) == 1


# -----------------------------------------------------------------------------
# octonions
# -----------------------------------------------------------------------------
@dataclass(frozen=True)
class OctonionTable:
    """
    ℝ ⊕ ℝ⁷ with (a, x)(b, y) = (ab − ⟨x,y⟩, ay + bx + x × y). Slot 0 is the real axis.
    """

    cross: CrossProduct7

    def multiply(self, p: Sequence, q: Sequence) -> Octonion:
        p, q = as_vector(p), as_vector(q)
        if len(p) != DIM + 1 or len(q) != DIM + 1:
            raise DimensionMismatchError("octonions have 8 components")
        a, x, b, y = p[0], p[1:], q[0], q[1:]
        xy = self.cross(x, y)
        return (a * b - dot(x, y),) + tuple(a * yi + b * xi + ci for xi, yi, ci in zip(x, y, xy))

    def norm_squared(self, p: Sequence) -> Fraction:
        return dot(p, p)

    def conjugate(self, p: Sequence) -> Octonion:
        p = as_vector(p)
        return (p[0],) + tuple(-x for x in p[1:])

    def associator(self, p: Sequence, q: Sequence, r: Sequence) -> Octonion:
        left = self.multiply(self.multiply(p, q), r)
        right = self.multiply(p, self.multiply(q, r))
        return tuple(a - b for a, b in zip(left, right))

    def unit(self, i: int) -> Octonion:
        return tuple(Fraction(int(k == i)) for k in range(DIM + 1))

    def left_matrix(self, p: Sequence) -> ExactMatrix:
        """L_p as an 8x8 matrix: column k is p·e_k."""
        columns = [self.multiply(p, self.unit(k)) for k in range(DIM + 1)]
        return ExactMatrix([[columns[k][r] for k in range(DIM + 1)] for r in range(DIM + 1)])


def random_rationals(rng: np.random.Generator, count: int, length: int, bound: int = 9) -> List[Vector]:
    numerators = rng.integers(-bound, bound + 1, size=(count, length))
    denominators = rng.integers(1, bound + 1, size=(count, length))
    return [tuple(Fraction(int(n), int(d)) for n, d in zip(nr, dr)) for nr, dr in zip(numerators, denominators)]


def associator(table: OctonionTable, p: Sequence, q: Sequence, r: Sequence) -> Octonion:
    return table.associator(p, q, r)


def octonion_failures(table: OctonionTable, samples: int = 100, seed: int = 42) -> List[Tuple[str, dict]]:
    """(message, witness) for every failed unit, square, norm or alternativity test"""
    failures = []
    one = table.unit(0)
    minus_one = tuple(-x for x in one)
    for k in range(DIM + 1):
        e = table.unit(k)
        if table.multiply(one, e) != e or table.multiply(e, one) != e:
            failures.append(("(1,0) is not a unit", {"e": k}))
        if k > 0 and table.multiply(e, e) != minus_one:
            failures.append(("e_{k}² ≠ −1".format(k=k), {"e": k}))

    rng = np.random.default_rng(seed)
    pairs = list(zip(random_rationals(rng, samples, DIM + 1), random_rationals(rng, samples, DIM + 1)))
    zero = (Fraction(0),) * (DIM + 1)
    for p, q in pairs:
        if table.norm_squared(table.multiply(p, q)) != table.norm_squared(p) * table.norm_squared(q):
            failures.append(("norm is not multiplicative", {"p": p, "q": q}))
        if table.associator(p, p, q) != zero or table.associator(p, q, q) != zero:
            failures.append(("algebra is not alternative", {"p": p, "q": q}))
    return failures


def octonion_from_cross(cross: CrossProduct7, samples: int = 100, seed: int = 42) -> OctonionTable:
    """
    certifies the unit, eᵢ² = −1, |pq|² = |p|²|q|² on `samples` random rational pairs
    and alternativity on the same pairs.
    """
    table = OctonionTable(cross=cross)
    failures = octonion_failures(table, samples, seed)
    if failures:
        message, witness = failures[0]
        raise CertificationError(message, witness=witness)
    log.info("octonion table certified on {n} random pairs".format(n=samples))
    return table


@lru_cache(maxsize=None)
def certified_phi() -> AlternatingForm:
    return invariant_threeform()


@lru_cache(maxsize=None)
def certified_octonions() -> OctonionTable:
    return octonion_from_cross(phi_cross_duality(certified_phi()))

