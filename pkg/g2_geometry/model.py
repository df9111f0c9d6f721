# coding=utf-8
"""
date:           oct-2026

usage:          float64 views of the certified exact objects of g2_algebra: the model φ and *φ,
                the 7-dimensional cross product, the map h: 𝔪 → so(6), and orthogonal
                projections onto g₂ ⊂ so(7) and sl(3) ⊂ so(6).

                Slot order is (T⁺ | 𝟙 | T⁻) = (0, 1, 2 | 3 | 4, 5, 6).
"""
# python
from functools import lru_cache

# 3rd party
import numpy as np

# this repo
from g2_algebra.lie import MVector, g2_basis, h_map, sl3_basis_params, sl3_embed
from g2_algebra.octonions import certified_phi, star_phi

PLUS = (0, 1, 2)
UNIT = 3
MINUS = (4, 5, 6)


def _frozen(array: np.ndarray) -> np.ndarray:
    array = np.asarray(array, dtype=float)
    array.setflags(write=False)
    return array


@lru_cache(maxsize=None)
def model_phi() -> np.ndarray:
    return _frozen(certified_phi().full_array())


@lru_cache(maxsize=None)
def model_psi() -> np.ndarray:
    return _frozen(star_phi(certified_phi()).full_array())


def cross(x, y) -> np.ndarray:
    """(x × y)ₖ = φᵢⱼₖ xⁱ yʲ"""
    return np.einsum("ijk,i,j->k", model_phi(), np.asarray(x, dtype=float), np.asarray(y, dtype=float))


def hat(v) -> np.ndarray:
    x, y, z = np.asarray(v, dtype=float)
    return np.array([[0.0, -z, y], [z, 0.0, -x], [-y, x, 0.0]])


@lru_cache(maxsize=None)
def h_tensor() -> np.ndarray:
    """H[c] = h(unit c) for the six 𝔪-coordinates (X₊ then X₋)"""
    units = [tuple(int(i == c) for i in range(6)) for c in range(6)]
    return _frozen(np.stack([h_map(MVector.from_vector(u)).to_float() for u in units]))


def h_of(vector) -> np.ndarray:
    return np.einsum("c,cab->ab", np.asarray(vector, dtype=float), h_tensor())


def _orthonormal_columns(matrices: np.ndarray) -> np.ndarray:
    flat = matrices.reshape(matrices.shape[0], -1).T
    q, _ = np.linalg.qr(flat)
    return q


@lru_cache(maxsize=None)
def g2_float_basis() -> np.ndarray:
    return _frozen(np.stack([e.to_float() for e in g2_basis().elements]))


@lru_cache(maxsize=None)
def _g2_projector() -> np.ndarray:
    return _frozen(_orthonormal_columns(g2_float_basis()))


@lru_cache(maxsize=None)
def sl3_float_basis() -> np.ndarray:
    return _frozen(np.stack([sl3_embed(p).to_float() for p in sl3_basis_params()]))


@lru_cache(maxsize=None)
def _sl3_projector() -> np.ndarray:
    return _frozen(_orthonormal_columns(sl3_float_basis()))


def _project(q: np.ndarray, matrix: np.ndarray) -> np.ndarray:
    vector = np.asarray(matrix, dtype=float).reshape(-1)
    return (q @ (q.T @ vector)).reshape(np.shape(matrix))


def project_g2(matrix) -> np.ndarray:
    return _project(_g2_projector(), matrix)


def off_g2(matrix) -> np.ndarray:
    return np.asarray(matrix, dtype=float) - project_g2(matrix)


def off_sl3(matrix) -> np.ndarray:
    return np.asarray(matrix, dtype=float) - _project(_sl3_projector(), matrix)
