"""Young tableaux, Young symmetrizers and simple states for parastatistics.

Operators in the group algebra of ``S_k`` are kept as exact formal sums
``sum_rho c_rho rho`` with rational coefficients (:class:`SymmetrizerOperator`)
and act on tensors through :func:`srank.tensor.permute`.  Because
``permute(permute(u, b), a) == permute(u, b * a)``, operator composition is
the opposite of composition of the underlying permutations:
``(A @ B)[b * a] += A[a] * B[b]``.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from . import config
from .decompositions import numerical_rank
from .entanglement import Verdict, s_rank
from .errors import DegenerateProbe, DependentVectors, NotInIrreducible, SizeGuardExceeded, ZeroTensor
from .tensor import Permutation, Tensor, permute_array

MAX_TABLEAU_ORDER = 8
MAX_CENTRAL_ORDER = 6
MAX_MATRIX_SIZE = 4096


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if not parts or any(p < 1 for p in parts):
            raise ValueError(f"partition parts must be positive: {self.parts!r}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"partition parts must be weakly decreasing: {self.parts!r}")
        object.__setattr__(self, "parts", parts)

    @property
    def k(self) -> int:
        return sum(self.parts)

    @property
    def rows(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)


@dataclass(frozen=True)
class YoungTableau:
    """Numbering of the boxes of a Young diagram by ``1..k``, stored row by row."""

    numbering: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        numbering = tuple(tuple(int(x) for x in row) for row in self.numbering)
        Partition(tuple(len(row) for row in numbering))
        k = sum(len(row) for row in numbering)
        if sorted(x for row in numbering for x in row) != list(range(1, k + 1)):
            raise ValueError(f"tableau numbering is not a bijection onto 1..{k}")
        object.__setattr__(self, "numbering", numbering)

    @classmethod
    def from_rows(cls, *rows: Sequence[int]) -> YoungTableau:
        return cls(tuple(tuple(r) for r in rows))

    @property
    def partition(self) -> Partition:
        return Partition(tuple(len(row) for row in self.numbering))

    @property
    def k(self) -> int:
        return self.partition.k

    @property
    def rows(self) -> int:
        return len(self.numbering)

    def columns(self) -> list[tuple[int, ...]]:
        width = len(self.numbering[0])
        return [
            tuple(row[c] for row in self.numbering if len(row) > c) for c in range(width)
        ]

    def row_of(self) -> tuple[int, ...]:
        """1-based row index of the box numbered ``i``, for ``i = 1..k``."""
        where = {x: r + 1 for r, row in enumerate(self.numbering) for x in row}
        return tuple(where[i] for i in range(1, self.k + 1))

    def to_dict(self) -> dict:
        return {
            "partition": list(self.partition.parts),
            "numbering": [list(row) for row in self.numbering],
        }

    @classmethod
    def from_dict(cls, data: dict) -> YoungTableau:
        tab = cls(tuple(tuple(row) for row in data["numbering"]))
        if "partition" in data and list(data["partition"]) != list(tab.partition.parts):
            raise ValueError("tableau partition does not match its numbering")
        return tab

    @classmethod
    def from_json(cls, text: str) -> YoungTableau:
        return cls.from_dict(json.loads(text))


def enumerate_partitions(k: int) -> list[Partition]:
    """Partitions of ``k`` in decreasing lexicographic order."""
    if not 1 <= k <= MAX_TABLEAU_ORDER:
        raise SizeGuardExceeded(f"k must lie in 1..{MAX_TABLEAU_ORDER}")

    def rec(remaining: int, cap: int):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, cap), 0, -1):
            for rest in rec(remaining - first, first):
                yield (first,) + rest

    return [Partition(p) for p in rec(k, k)]


def enumerate_tableaux(shape: Partition | Sequence[int]) -> list[YoungTableau]:
    """All ``k!`` numberings of the diagram."""
    parts = shape.parts if isinstance(shape, Partition) else tuple(shape)
    k = sum(parts)
    if not 1 <= k <= MAX_TABLEAU_ORDER:
        raise SizeGuardExceeded(f"k must lie in 1..{MAX_TABLEAU_ORDER}")
    out = []
    for perm in itertools.permutations(range(1, k + 1)):
        rows, pos = [], 0
        for p in parts:
            rows.append(perm[pos : pos + p])
            pos += p
        out.append(YoungTableau(tuple(rows)))
    return out


def _cycle_count(p: Permutation) -> int:
    seen, cycles = set(), 0
    for start in range(p.k):
        if start in seen:
            continue
        cycles += 1
        j = start
        while j not in seen:
            seen.add(j)
            j = p.images[j]
    return cycles


class SymmetrizerOperator:
    """Formal rational combination of permutations acting on ``H^{x k}``."""

    def __init__(self, k: int, terms: dict[Permutation, Fraction] | None = None):
        self.k = k
        self.terms = {p: Fraction(c) for p, c in (terms or {}).items() if c != 0}

    @classmethod
    def identity(cls, k: int) -> SymmetrizerOperator:
        return cls(k, {Permutation.identity(k): Fraction(1)})

    def __add__(self, other: SymmetrizerOperator) -> SymmetrizerOperator:
        terms = dict(self.terms)
        for p, c in other.terms.items():
            terms[p] = terms.get(p, Fraction(0)) + c
        return SymmetrizerOperator(self.k, terms)

    def __sub__(self, other: SymmetrizerOperator) -> SymmetrizerOperator:
        return self + other * -1

    def __mul__(self, c) -> SymmetrizerOperator:
        c = Fraction(c)
        return SymmetrizerOperator(self.k, {p: c * v for p, v in self.terms.items()})

    __rmul__ = __mul__

    def __matmul__(self, other: SymmetrizerOperator) -> SymmetrizerOperator:
        """Operator composition: ``(self @ other)(u) == self(other(u))``."""
        terms: dict[Permutation, Fraction] = {}
        for a, ca in self.terms.items():
            for b, cb in other.terms.items():
                p = b * a
                terms[p] = terms.get(p, Fraction(0)) + ca * cb
        return SymmetrizerOperator(self.k, terms)

    def __eq__(self, other):
        if not isinstance(other, SymmetrizerOperator):
            return NotImplemented
        return self.k == other.k and self.terms == other.terms

    def __len__(self):
        return len(self.terms)

    def adjoint(self) -> SymmetrizerOperator:
        # permutation operators are unitary and the coefficients are real
        return SymmetrizerOperator(self.k, {p.inverse(): c for p, c in self.terms.items()})

    def apply(self, u: Tensor) -> Tensor:
        if u.k != self.k:
            raise ValueError(f"operator on order {self.k} applied to order-{u.k} tensor")
        out = np.zeros_like(u.coeffs)
        for p, c in self.terms.items():
            out += float(c) * permute_array(u.coeffs, p)
        return Tensor(u.n, u.k, out)

    def matrix(self, n: int) -> np.ndarray:
        """Dense ``n^k x n^k`` matrix (row-major multi-index order)."""
        size = n**self.k
        if size > MAX_MATRIX_SIZE:
            raise SizeGuardExceeded(f"operator matrix of size {size} exceeds {MAX_MATRIX_SIZE}")
        eye = np.eye(size).reshape((n,) * self.k + (size,))
        out = np.zeros((size, size))
        for p, c in self.terms.items():
            axes = p.images + (self.k,)
            out += float(c) * np.transpose(eye, axes).reshape(size, size)
        return out

    def trace(self, n: int) -> Fraction:
        """Exact trace on ``(C^n)^{x k}``; a permutation with ``c`` cycles has trace ``n^c``."""
        return sum((c * n ** _cycle_count(p) for p, c in self.terms.items()), Fraction(0))

    def __repr__(self):
        return f"SymmetrizerOperator(k={self.k}, terms={len(self.terms)})"


def _subgroup(k: int, blocks: Iterable[Sequence[int]]) -> list[Permutation]:
    """Permutations of ``0..k-1`` preserving each block of 1-based labels."""
    blocks = [tuple(b - 1 for b in block) for block in blocks]
    out = []
    for choice in itertools.product(*(itertools.permutations(b) for b in blocks)):
        images = list(range(k))
        for block, image in zip(blocks, choice):
            for src, dst in zip(block, image):
                images[src] = dst
        out.append(Permutation(tuple(images)))
    return out


def row_group(alpha: YoungTableau) -> list[Permutation]:
    return _subgroup(alpha.k, alpha.numbering)


def column_group(alpha: YoungTableau) -> list[Permutation]:
    return _subgroup(alpha.k, alpha.columns())


def row_symmetrizer(alpha: YoungTableau) -> SymmetrizerOperator:
    return SymmetrizerOperator(alpha.k, {p: Fraction(1) for p in row_group(alpha)})


def column_antisymmetrizer(alpha: YoungTableau) -> SymmetrizerOperator:
    return SymmetrizerOperator(alpha.k, {p: Fraction(p.sign) for p in column_group(alpha)})


@lru_cache(maxsize=None)
def young_symmetrizer(alpha: YoungTableau) -> SymmetrizerOperator:
    """``c = sum_{tau in P, sigma in Q} sign(sigma) (tau o sigma)``."""
    terms = {}
    for tau in row_group(alpha):
        for sigma in column_group(alpha):
            terms[tau * sigma] = Fraction(sigma.sign)
    return SymmetrizerOperator(alpha.k, terms)


@lru_cache(maxsize=None)
def mu_constant(alpha: YoungTableau) -> Fraction:
    """The rational ``mu`` with ``c o c = mu c``."""
    c = young_symmetrizer(alpha)
    square = c @ c
    ident = Permutation.identity(alpha.k)
    mu = square.terms.get(ident, Fraction(0)) / c.terms[ident]
    if mu == 0 or square != c * mu:
        raise DegenerateProbe("Young symmetrizer is not quasi-idempotent")
    return mu


@lru_cache(maxsize=None)
def young_projector(alpha: YoungTableau) -> SymmetrizerOperator:
    return young_symmetrizer(alpha) * (1 / mu_constant(alpha))


def central_symmetrizer(shape: Partition | Sequence[int]) -> SymmetrizerOperator:
    """``(1/mu^2) sum_alpha c_alpha`` over all tableaux of the diagram."""
    shape = shape if isinstance(shape, Partition) else Partition(tuple(shape))
    if shape.k > MAX_CENTRAL_ORDER:
        raise SizeGuardExceeded(f"central symmetrizer capped at k <= {MAX_CENTRAL_ORDER}")
    tableaux = enumerate_tableaux(shape)
    mu = mu_constant(tableaux[0])
    total = SymmetrizerOperator(shape.k)
    for alpha in tableaux:
        total = total + young_symmetrizer(alpha)
    return total * (1 / mu**2)


def insert_vectors(alpha: YoungTableau, xs: Sequence[Sequence[complex]]) -> Tensor:
    """``x_{row(1)} x ... x x_{row(k)}``: put ``x_j`` in the slots numbered in row ``j``."""
    vecs = [np.asarray(x, dtype=complex) for x in xs]
    arr = np.asarray(1.0 + 0j)
    for r in alpha.row_of():
        arr = np.multiply.outer(arr, vecs[r - 1])
    return Tensor.from_array(arr)


def alpha_simple(alpha: YoungTableau, xs: Sequence[Sequence[complex]], eps: float | None = None) -> Tensor:
    """Simple tensor of the parastatistics ``alpha`` built from ``r`` independent vectors."""
    if len(xs) != alpha.rows:
        raise DependentVectors(f"need {alpha.rows} vectors, got {len(xs)}")
    if numerical_rank(np.array(xs, dtype=complex), eps) != alpha.rows:
        raise DependentVectors("vectors are linearly dependent")
    u = young_projector(alpha).apply(insert_vectors(alpha, xs))
    return Tensor(u.n, u.k, u.coeffs, "young", alpha)


def project(alpha: YoungTableau, u: Tensor) -> Tensor:
    out = young_projector(alpha).apply(u.as_general())
    return Tensor(out.n, out.k, out.coeffs, "young", alpha)


def alpha_is_simple(u: Tensor, alpha: YoungTableau, eps: float | None = None) -> Verdict:
    eps = config.resolve(eps)
    if u.max_abs() == 0.0:
        raise ZeroTensor("zero tensor")
    if u.k != alpha.k:
        raise NotInIrreducible(f"order {u.k} does not match a tableau with {alpha.k} boxes")
    projected = young_projector(alpha).apply(u.as_general())
    if np.linalg.norm((projected.coeffs - u.coeffs).ravel()) > eps * u.norm():
        raise NotInIrreducible("tensor is not fixed by the Young projector")
    tagged = Tensor(u.n, u.k, u.coeffs, "young", alpha)
    rank = s_rank(tagged, eps)
    return Verdict("young", rank, alpha.rows, rank == alpha.rows)


def multiplicity(shape: Partition | Sequence[int]) -> Fraction:
    """``k! / mu``: how many copies of the irreducible block appear in ``H^{x k}``."""
    shape = shape if isinstance(shape, Partition) else Partition(tuple(shape))
    return Fraction(math.factorial(shape.k)) / mu_constant(enumerate_tableaux(shape)[0])
