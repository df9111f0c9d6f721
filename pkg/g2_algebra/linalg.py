# coding=utf-8
"""
date:           oct-2026

usage:          exact rational dense linear algebra. Everything that g2_algebra certifies
                reduces to the primitives in this module: matrix products, commutators,
                the trace form, and reduced row-echelon normal forms of subspaces.

                matrices are read-only numpy object arrays of fractions.Fraction. Vectors
                are plain tuples of Fraction. Matrices are flattened row-major whenever they
                are treated as elements of a Subspace.
"""
# python
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Callable, Iterable, List, Optional, Sequence, Tuple, Union

# 3rd party
import numpy as np

# this repo
from g2_algebra.exceptions import (
    AmbientMismatchError,
    DegenerateFormError,
    DimensionMismatchError,
    SingularMatrixError,
)

log = logging.getLogger(__name__)

Vector = Tuple[Fraction, ...]


def to_fraction(value) -> Fraction:
    """
    Coerce an exact scalar. Floats are refused: an identity that only holds
    in floating point is not certified by anything in this package.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (bool, np.bool_)):
        return Fraction(int(value))
    if isinstance(value, (int, np.integer)):
        return Fraction(int(value))
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError("exact scalar expected, got {t}".format(t=type(value).__name__))


def as_vector(values: Iterable) -> Vector:
    return tuple(to_fraction(v) for v in values)


def _exact_array(entries) -> np.ndarray:
    source = np.asarray(entries, dtype=object)
    if source.ndim != 2 or source.shape[0] == 0 or source.shape[1] == 0:
        raise DimensionMismatchError("a non-empty 2-dimensional array is required, got shape {s}".format(s=source.shape))
    data = np.empty(source.shape, dtype=object)
    for index, value in np.ndenumerate(source):
        data[index] = to_fraction(value)
    data.flags.writeable = False
    return data


class ExactMatrix:
    """
    Dense matrix of exact rationals. Instances are immutable and hashable.

    ExactMatrix([[1, 2], [3, 4]]) @ ExactMatrix.identity(2)
    """

    __slots__ = ("_data",)

    def __init__(self, entries):
        if isinstance(entries, ExactMatrix):
            self._data = entries._data
        else:
            self._data = _exact_array(entries)

    @classmethod
    def _wrap(cls, array: np.ndarray) -> "ExactMatrix":
        matrix = cls.__new__(cls)
        array = np.array(array, dtype=object)
        array.flags.writeable = False
        matrix._data = array
        return matrix

    # -------------------------------------------------------------------------
    # constructors
    # -------------------------------------------------------------------------
    @classmethod
    def zeros(cls, rows: int, cols: Optional[int] = None) -> "ExactMatrix":
        cols = rows if cols is None else cols
        array = np.empty((rows, cols), dtype=object)
        array.fill(Fraction(0))
        return cls._wrap(array)

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        array = np.empty((n, n), dtype=object)
        array.fill(Fraction(0))
        for i in range(n):
            array[i, i] = Fraction(1)
        return cls._wrap(array)

    @classmethod
    def elementary(cls, n: int, i: int, j: int) -> "ExactMatrix":
        """E_ij: a single 1 in row i, column j (0-based)."""
        array = np.empty((n, n), dtype=object)
        array.fill(Fraction(0))
        array[i, j] = Fraction(1)
        return cls._wrap(array)

    @classmethod
    def from_flat(cls, values: Sequence, rows: int, cols: Optional[int] = None) -> "ExactMatrix":
        cols = rows if cols is None else cols
        if len(values) != rows * cols:
            raise DimensionMismatchError(
                "{n} entries cannot fill a {r}x{c} matrix".format(n=len(values), r=rows, c=cols)
            )
        return cls([list(values[r * cols : (r + 1) * cols]) for r in range(rows)])

    @classmethod
    def block(cls, blocks: Sequence[Sequence["ExactMatrix"]]) -> "ExactMatrix":
        return cls._wrap(np.block([[b._data for b in row] for row in blocks]))

    # -------------------------------------------------------------------------
    # accessors
    # -------------------------------------------------------------------------
    @property
    def shape(self) -> Tuple[int, int]:
        return self._data.shape

    @property
    def rows(self) -> int:
        return self._data.shape[0]

    @property
    def cols(self) -> int:
        return self._data.shape[1]

    @property
    def entries(self) -> np.ndarray:
        return self._data

    @property
    def T(self) -> "ExactMatrix":
        return self._wrap(self._data.T)

    def __getitem__(self, index) -> Fraction:
        return self._data[index]

    def flatten(self) -> Vector:
        return tuple(self._data.flatten())

    def row(self, i: int) -> Vector:
        return tuple(self._data[i, :])

    def column(self, j: int) -> Vector:
        return tuple(self._data[:, j])

    def to_float(self) -> np.ndarray:
        return self._data.astype(np.float64)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return all(x == 0 for x in self._data.flat)

    def is_skew(self) -> bool:
        return self.is_square() and self == -self.T

    def is_symmetric(self) -> bool:
        return self.is_square() and self == self.T

    def trace(self) -> Fraction:
        if not self.is_square():
            raise DimensionMismatchError("trace of a non-square {s} matrix".format(s=self.shape))
        return sum((self._data[i, i] for i in range(self.rows)), Fraction(0))

    def delete(self, index: int) -> "ExactMatrix":
        """Drop row and column `index` of a square matrix."""
        return self._wrap(np.delete(np.delete(self._data, index, axis=0), index, axis=1))

    def insert_zero(self, index: int) -> "ExactMatrix":
        """Insert a zero row and a zero column at position `index`."""
        array = np.insert(self._data, index, Fraction(0), axis=0)
        return self._wrap(np.insert(array, index, Fraction(0), axis=1))

    def permute(self, order: Sequence[int]) -> "ExactMatrix":
        """P A Pᵀ where row k of the result is row order[k] of A."""
        order = list(order)
        return self._wrap(self._data[np.ix_(order, order)])

    def apply(self, vector: Sequence) -> Vector:
        vector = as_vector(vector)
        if len(vector) != self.cols:
            raise DimensionMismatchError(
                "cannot apply a {s} matrix to a vector of length {n}".format(s=self.shape, n=len(vector))
            )
        return tuple(sum((a * b for a, b in zip(self._data[i, :], vector)), Fraction(0)) for i in range(self.rows))

    # -------------------------------------------------------------------------
    # arithmetic
    # -------------------------------------------------------------------------
    def _check_same_shape(self, other: "ExactMatrix", op: str):
        if self.shape != other.shape:
            raise DimensionMismatchError("{op}: shapes {a} and {b} differ".format(op=op, a=self.shape, b=other.shape))

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_same_shape(other, "add")
        return self._wrap(self._data + other._data)

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_same_shape(other, "subtract")
        return self._wrap(self._data - other._data)

    def __neg__(self) -> "ExactMatrix":
        return self._wrap(-self._data)

    def __mul__(self, scalar) -> "ExactMatrix":
        return self._wrap(self._data * to_fraction(scalar))

    __rmul__ = __mul__

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise DimensionMismatchError("matmul: shapes {a} and {b} differ".format(a=self.shape, b=other.shape))
        return self._wrap(self._data @ other._data)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.shape == other.shape and bool(np.all(self._data == other._data))

    def __hash__(self) -> int:
        return hash((self.shape, self.flatten()))

    def __repr__(self) -> str:
        rows = ["[" + ", ".join(str(x) for x in self._data[i, :]) + "]" for i in range(self.rows)]
        return "ExactMatrix([" + ", ".join(rows) + "])"


def _check_square_pair(a: ExactMatrix, b: ExactMatrix, op: str):
    if not (a.is_square() and b.is_square() and a.shape == b.shape):
        raise DimensionMismatchError(
            "{op} requires square matrices of equal size, got {a} and {b}".format(op=op, a=a.shape, b=b.shape)
        )


def bracket(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    """the commutator AB − BA."""
    _check_square_pair(a, b, "bracket")
    return a @ b - b @ a


def trace_form(a: ExactMatrix, b: ExactMatrix) -> Fraction:
    """tr(AB). Negative definite on real skew matrices."""
    _check_square_pair(a, b, "trace_form")
    return Fraction(np.sum(a.entries * b.entries.T))


def trace_pairing(n: int) -> ExactMatrix:
    """
    Gram matrix of the trace form on row-major flattened n×n matrices:
    vec(A)ᵀ G vec(B) = tr(AB).
    """
    size = n * n
    array = np.empty((size, size), dtype=object)
    array.fill(Fraction(0))
    for i in range(n):
        for j in range(n):
            array[i * n + j, j * n + i] = Fraction(1)
    return ExactMatrix._wrap(array)


# -----------------------------------------------------------------------------
# echelon engine
# -----------------------------------------------------------------------------
def _primitive(row: List[Fraction]) -> List[int]:
    """scale a rational row to coprime integers."""
    denominator = reduce(lcm, (x.denominator for x in row), 1)
    integers = [int(x * denominator) for x in row]
    divisor = reduce(gcd, integers, 0)
    if divisor > 1:
        integers = [x // divisor for x in integers]
    return integers


def _rref(rows: Sequence[Sequence], pivot_limit: Optional[int] = None) -> Tuple[List[List[Fraction]], List[int]]:
    """
    Fraction-free Gauss-Jordan elimination. Rows are kept as primitive integer
    vectors during elimination and divided by their pivot only at the end.

    Pivots are searched for in the first `pivot_limit` columns only, which lets
    callers append right-hand sides. Returns (rows, pivots): the first
    len(pivots) rows are the reduced pivot rows, any remaining rows vanish on
    the first pivot_limit columns.
    """
    work = [_primitive([to_fraction(x) for x in row]) for row in rows]
    work = [row for row in work if any(row)]
    if not work:
        return [], []
    width = len(work[0])
    limit = width if pivot_limit is None else pivot_limit
    pivots: List[int] = []
    rank = 0
    for col in range(limit):
        if rank == len(work):
            break
        found = next((r for r in range(rank, len(work)) if work[r][col] != 0), None)
        if found is None:
            continue
        work[rank], work[found] = work[found], work[rank]
        pivot_row = work[rank]
        a = pivot_row[col]
        for r in range(len(work)):
            if r == rank or work[r][col] == 0:
                continue
            b = work[r][col]
            reduced = [a * x - b * y for x, y in zip(work[r], pivot_row)]
            divisor = reduce(gcd, reduced, 0)
            work[r] = [x // divisor for x in reduced] if divisor > 1 else reduced
        pivots.append(col)
        rank += 1

    result = []
    for r, row in enumerate(work):
        if r < rank:
            p = row[pivots[r]]
            result.append([Fraction(x, p) for x in row])
        elif any(row):
            result.append([Fraction(x) for x in row])
    return result, pivots


def _kernel_from_rref(reduced: List[List[Fraction]], pivots: List[int], ncols: int) -> List[Vector]:
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        vector = [Fraction(0)] * ncols
        vector[f] = Fraction(1)
        for r, p in enumerate(pivots):
            vector[p] = -reduced[r][f]
        basis.append(tuple(vector))
    return basis


def _vectorize(item) -> Vector:
    if isinstance(item, ExactMatrix):
        return item.flatten()
    return as_vector(item)


def rank(matrix: ExactMatrix) -> int:
    return len(_rref([matrix.row(i) for i in range(matrix.rows)])[1])


def kernel(matrix: ExactMatrix) -> List[Vector]:
    """basis of {x : Mx = 0}"""
    reduced, pivots = _rref([matrix.row(i) for i in range(matrix.rows)])
    return _kernel_from_rref(reduced, pivots, matrix.cols)


def determinant(matrix: ExactMatrix) -> Fraction:
    """Bareiss fraction-free determinant."""
    if not matrix.is_square():
        raise DimensionMismatchError("determinant of a non-square {s} matrix".format(s=matrix.shape))
    n = matrix.rows
    scale = reduce(lcm, (x.denominator for x in matrix.entries.flat), 1)
    work = [[int(x * scale) for x in matrix.row(i)] for i in range(n)]
    sign = 1
    previous = 1
    for k in range(n - 1):
        if work[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if work[r][k] != 0), None)
            if swap is None:
                return Fraction(0)
            work[k], work[swap] = work[swap], work[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                work[i][j] = (work[i][j] * work[k][k] - work[i][k] * work[k][j]) // previous
        previous = work[k][k]
    return Fraction(sign * work[n - 1][n - 1], scale**n)


def inverse(matrix: ExactMatrix) -> ExactMatrix:
    if not matrix.is_square():
        raise DimensionMismatchError("inverse of a non-square {s} matrix".format(s=matrix.shape))
    n = matrix.rows
    identity = ExactMatrix.identity(n)
    augmented = [list(matrix.row(i)) + list(identity.row(i)) for i in range(n)]
    reduced, pivots = _rref(augmented, pivot_limit=n)
    if len(pivots) < n:
        raise SingularMatrixError("matrix of rank {r} < {n} has no inverse".format(r=len(pivots), n=n))
    return ExactMatrix([row[n:] for row in reduced[:n]])


# -----------------------------------------------------------------------------
# subspaces
# -----------------------------------------------------------------------------
@dataclass(frozen=True)
class Subspace:
    """
    A subspace of ℚ^ambient_dim in canonical form: the basis is the reduced
    row-echelon form of any spanning set, so equal subspaces compare equal.
    """

    ambient_dim: int
    basis: Tuple[Vector, ...]
    pivots: Tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def _check_vector(self, vector: Vector):
        if len(vector) != self.ambient_dim:
            raise AmbientMismatchError(
                "vector of length {n} is not in ambient dimension {d}".format(n=len(vector), d=self.ambient_dim)
            )

    def coordinates(self, item) -> Optional[Vector]:
        """
        coordinates of `item` in the echelon basis, or None when it lies outside.
        With a reduced basis the coordinates are the entries at the pivot columns.
        """
        vector = _vectorize(item)
        self._check_vector(vector)
        coords = tuple(vector[p] for p in self.pivots)
        for k in range(self.ambient_dim):
            value = sum((c * b[k] for c, b in zip(coords, self.basis)), Fraction(0))
            if value != vector[k]:
                return None
        return coords

    def contains(self, item) -> bool:
        return self.coordinates(item) is not None

    def __add__(self, other: "Subspace") -> "Subspace":
        return sum_spaces(self, other)

    def __and__(self, other: "Subspace") -> "Subspace":
        return intersect(self, other)

    def __le__(self, other: "Subspace") -> bool:
        return all(other.contains(v) for v in self.basis)


def span(vectors: Iterable, ambient_dim: Optional[int] = None) -> Subspace:
    """vectors may be exact sequences or ExactMatrix instances (flattened row-major)."""
    rows = [_vectorize(v) for v in vectors]
    lengths = {len(r) for r in rows}
    if ambient_dim is not None:
        lengths.add(ambient_dim)
    if len(lengths) > 1:
        raise AmbientMismatchError("inconsistent vector lengths {n}".format(n=sorted(lengths)))
    if not lengths:
        raise AmbientMismatchError("span of no vectors needs an explicit ambient_dim")
    reduced, pivots = _rref(rows)
    return Subspace(ambient_dim=lengths.pop(), basis=tuple(tuple(r) for r in reduced), pivots=tuple(pivots))


def ambient(n: int) -> Subspace:
    return span(ExactMatrix.identity(n).row(i) for i in range(n))


def _check_ambient(s1: Subspace, s2: Subspace):
    if s1.ambient_dim != s2.ambient_dim:
        raise AmbientMismatchError(
            "ambient dimensions {a} and {b} differ".format(a=s1.ambient_dim, b=s2.ambient_dim)
        )


def contains(space: Subspace, item) -> bool:
    return space.contains(item)


def sum_spaces(s1: Subspace, s2: Subspace) -> Subspace:
    _check_ambient(s1, s2)
    return span(list(s1.basis) + list(s2.basis), ambient_dim=s1.ambient_dim)


def intersect(s1: Subspace, s2: Subspace) -> Subspace:
    """
    solves Σ c_i u_i = Σ d_j w_j: the kernel of the stacked system [U | −W]
    (basis vectors as columns) parametrizes the intersection.
    """
    _check_ambient(s1, s2)
    n = s1.ambient_dim
    if s1.dim == 0 or s2.dim == 0:
        return span([], ambient_dim=n)
    k1 = s1.dim
    system = [[u[i] for u in s1.basis] + [-w[i] for w in s2.basis] for i in range(n)]
    reduced, pivots = _rref(system)
    coefficients = _kernel_from_rref(reduced, pivots, k1 + s2.dim)
    vectors = [
        tuple(sum((c[a] * s1.basis[a][i] for a in range(k1)), Fraction(0)) for i in range(n)) for c in coefficients
    ]
    return span(vectors, ambient_dim=n)


def _bilinear(gram: ExactMatrix, u: Vector, v: Vector) -> Fraction:
    return Fraction(np.asarray(u, dtype=object) @ gram.entries @ np.asarray(v, dtype=object))


FormLike = Union[ExactMatrix, Callable[[Vector, Vector], Fraction]]


def ortho_complement(space: Subspace, form: FormLike, within: Optional[Subspace] = None) -> Subspace:
    """
    {w ∈ within : form(w, s) = 0 for all s ∈ space}. `form` is a Gram matrix on
    the ambient space or a callable on pairs of vectors; it must be
    nondegenerate on `within` (the whole ambient space by default).
    """
    within = ambient(space.ambient_dim) if within is None else within
    _check_ambient(space, within)
    if isinstance(form, ExactMatrix):
        if form.shape != (space.ambient_dim, space.ambient_dim):
            raise AmbientMismatchError(
                "form of shape {s} on ambient dimension {d}".format(s=form.shape, d=space.ambient_dim)
            )
        gram = form
        evaluate = lambda u, v: _bilinear(gram, u, v)  # noqa: E731
    else:
        evaluate = form

    restricted = ExactMatrix(
        [[to_fraction(evaluate(u, v)) for v in within.basis] for u in within.basis]
    ) if within.dim else None
    if restricted is not None and rank(restricted) < within.dim:
        raise DegenerateFormError("form is degenerate on the {d}-dimensional domain".format(d=within.dim))
    if space.dim == 0:
        return within

    system = [[to_fraction(evaluate(w, s)) for w in within.basis] for s in space.basis]
    reduced, pivots = _rref(system)
    coefficients = _kernel_from_rref(reduced, pivots, within.dim)
    vectors = [
        tuple(sum((c[a] * within.basis[a][i] for a in range(within.dim)), Fraction(0)) for i in range(space.ambient_dim))
        for c in coefficients
    ]
    return span(vectors, ambient_dim=space.ambient_dim)


# -----------------------------------------------------------------------------
# linear systems
# -----------------------------------------------------------------------------
@dataclass(frozen=True)
class LinearSolution:
    """general solution particular + span(kernel); particular is None when inconsistent."""

    particular: Optional[Vector]
    kernel: Tuple[Vector, ...]

    @property
    def consistent(self) -> bool:
        return self.particular is not None

    @property
    def unique(self) -> bool:
        return self.consistent and not self.kernel


def solve_linear(matrix: ExactMatrix, rhs: Sequence) -> LinearSolution:
    rhs = as_vector(rhs)
    if len(rhs) != matrix.rows:
        raise DimensionMismatchError(
            "right-hand side of length {n} for a {s} system".format(n=len(rhs), s=matrix.shape)
        )
    n = matrix.cols
    augmented = [list(matrix.row(i)) + [rhs[i]] for i in range(matrix.rows)]
    reduced, pivots = _rref(augmented, pivot_limit=n)
    kernel_basis = tuple(_kernel_from_rref(reduced, pivots, n))
    if any(row[n] != 0 for row in reduced[len(pivots) :]):
        return LinearSolution(particular=None, kernel=kernel_basis)
    particular = [Fraction(0)] * n
    for r, p in enumerate(pivots):
        particular[p] = reduced[r][n]
    return LinearSolution(particular=tuple(particular), kernel=kernel_basis)


def express(basis: Sequence, targets: Sequence) -> List[Optional[Vector]]:
    """
    coordinates of each target in an (independent, not necessarily echelon) basis,
    solved against all targets at once. A target outside the span yields None.
    """
    rhs = [_vectorize(t) for t in targets]
    if not basis:
        # the empty basis spans only the zero vector
        return [() if all(x == 0 for x in t) else None for t in rhs]
    columns = [_vectorize(b) for b in basis]
    n = len(columns[0])
    if any(len(v) != n for v in columns + rhs):
        raise AmbientMismatchError("basis and targets must share one ambient dimension")
    k = len(columns)
    augmented = [[c[i] for c in columns] + [t[i] for t in rhs] for i in range(n)]
    reduced, pivots = _rref(augmented, pivot_limit=k)
    if len(pivots) < k:
        raise DegenerateFormError("basis of {k} vectors is linearly dependent".format(k=k))
    tail = reduced[len(pivots) :]
    result: List[Optional[Vector]] = []
    for j in range(len(rhs)):
        if any(row[k + j] != 0 for row in tail):
            result.append(None)
            continue
        result.append(tuple(reduced[r][k + j] for r in range(k)))
    return result
