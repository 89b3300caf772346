"""Symmetric and antisymmetric tensors: projectors, products and bases."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, SizeGuardExceeded
from .tensor import Permutation, Tensor, multinomial, permute_array, tensor_product

MAX_PROJECTOR_ORDER = 8
MAX_PERMANENT_SIZE = 12


def _signed_permutation_sum(arr: np.ndarray, signed: bool) -> np.ndarray:
    k = arr.ndim
    if k > MAX_PROJECTOR_ORDER:
        raise SizeGuardExceeded(f"projector over S_{k} exceeds the order cap {MAX_PROJECTOR_ORDER}")
    out = np.zeros_like(arr)
    for sigma in Permutation.all(k):
        term = permute_array(arr, sigma)
        if signed and sigma.sign < 0:
            out -= term
        else:
            out += term
    return out / math.factorial(k)


def symmetrize(u: Tensor) -> Tensor:
    """Orthogonal projection onto the totally symmetric tensors."""
    return Tensor(u.n, u.k, _signed_permutation_sum(u.coeffs, signed=False), "symmetric")


def antisymmetrize(u: Tensor) -> Tensor:
    """Orthogonal projection onto the totally antisymmetric tensors."""
    return Tensor(u.n, u.k, _signed_permutation_sum(u.coeffs, signed=True), "antisymmetric")


def vee(a: Tensor, b: Tensor) -> Tensor:
    if a.n != b.n:
        raise DimensionMismatch(f"dimensions differ: {a.n} vs {b.n}")
    return symmetrize(tensor_product(a, b))


def wedge(a: Tensor, b: Tensor) -> Tensor:
    if a.n != b.n:
        raise DimensionMismatch(f"dimensions differ: {a.n} vs {b.n}")
    return antisymmetrize(tensor_product(a, b))


def vee_vectors(vectors) -> Tensor:
    """``f1 v f2 v ... v fk`` for coefficient vectors."""
    return _product_of(vectors, symmetrize)


def wedge_vectors(vectors) -> Tensor:
    """``f1 ^ f2 ^ ... ^ fk`` for coefficient vectors."""
    return _product_of(vectors, antisymmetrize)


def _product_of(vectors, projector) -> Tensor:
    vecs = [np.asarray(v, dtype=complex) for v in vectors]
    arr = np.asarray(1.0 + 0j)
    for v in vecs:
        arr = np.multiply.outer(arr, v)
    return projector(Tensor.from_array(arr))


def permanent(a) -> complex:
    """Permanent by Ryser's inclusion-exclusion formula, O(2^m m^2)."""
    a = np.asarray(a, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("permanent needs a square matrix")
    m = a.shape[0]
    if m > MAX_PERMANENT_SIZE:
        raise SizeGuardExceeded(f"permanent of a {m}x{m} matrix exceeds the cap {MAX_PERMANENT_SIZE}")
    if m == 0:
        return 1.0 + 0j
    total = 0j
    for size in range(1, m + 1):
        sign = (-1) ** size
        for cols in itertools.combinations(range(m), size):
            total += sign * np.prod(a[:, cols].sum(axis=1))
    return complex((-1) ** m * total)


def determinant(a) -> complex:
    a = np.asarray(a, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("determinant needs a square matrix")
    if a.shape[0] == 0:
        return 1.0 + 0j
    return complex(np.linalg.det(a))


@dataclass(frozen=True)
class InducedBasisElement:
    """One vector of the orthonormal basis of the symmetric or antisymmetric power.

    For ``kind == "symmetric"`` the label is the multiplicity vector
    ``(k1, ..., kn)``; for ``"antisymmetric"`` it is the strictly increasing
    1-based index tuple.
    """

    kind: str
    label: tuple[int, ...]
    normalization: float
    tensor: Tensor


def induced_basis(n: int, k: int, kind: str) -> list[InducedBasisElement]:
    if k < 0:
        raise ValueError("order must be non-negative")
    if kind == "symmetric":
        combos = itertools.combinations_with_replacement(range(n), k)
    elif kind == "antisymmetric":
        combos = itertools.combinations(range(n), k)
    else:
        raise ValueError(f"unknown basis kind {kind!r}")
    out = []
    for combo in combos:
        arr = np.zeros((n,) * k, dtype=complex)
        arr[combo] = 1.0
        if kind == "symmetric":
            counts = tuple(combo.count(j) for j in range(n))
            norm = math.sqrt(multinomial(counts))
            tensor = symmetrize(Tensor(n, k, arr)) * norm
            label = counts
        else:
            norm = math.sqrt(math.factorial(k))
            tensor = antisymmetrize(Tensor(n, k, arr)) * norm
            label = tuple(i + 1 for i in combo)
        out.append(InducedBasisElement(kind, label, norm, tensor))
    return out
