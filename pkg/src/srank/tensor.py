"""Dense complex tensors over a single-particle space of dimension ``n``.

A :class:`Tensor` of order ``k`` stores all ``n**k`` coefficients
``u^{i1...ik}`` in a numpy array of shape ``(n,) * k``.  Indices are 0-based
inside the code; the JSON exchange format and every user-facing index tuple
are 1-based.

The symmetric group acts by

    (sigma u)^{i1...ik} = u^{i_{sigma^-1(1)} ... i_{sigma^-1(k)}},

which on elementary tensors reads ``sigma(f1 x ... x fk) = f_sigma(1) x ... x
f_sigma(k)``.  With this action ``permute(permute(u, s), t) == permute(u, s * t)``
where ``s * t`` is the composition ``s o t``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Any, Iterable, Sequence

import numpy as np

from . import config
from .errors import (
    DimensionMismatch,
    DuplicateEntry,
    IndexOutOfRange,
    OrderMismatch,
    SymmetryViolation,
)

SYMMETRY_CLASSES = ("general", "symmetric", "antisymmetric", "young")


@dataclass(frozen=True)
class Permutation:
    """A bijection of ``{0, ..., k-1}`` stored by its images."""

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(i) for i in self.images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation: {self.images!r}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, k: int) -> Permutation:
        return cls(tuple(range(k)))

    @classmethod
    def transposition(cls, k: int, i: int, j: int) -> Permutation:
        images = list(range(k))
        images[i], images[j] = images[j], images[i]
        return cls(tuple(images))

    @classmethod
    def from_one_based(cls, images: Iterable[int]) -> Permutation:
        return cls(tuple(i - 1 for i in images))

    @classmethod
    def all(cls, k: int) -> list[Permutation]:
        return [cls(p) for p in itertools.permutations(range(k))]

    @property
    def k(self) -> int:
        return len(self.images)

    @property
    def sign(self) -> int:
        inversions = sum(
            1
            for a in range(self.k)
            for b in range(a + 1, self.k)
            if self.images[a] > self.images[b]
        )
        return -1 if inversions % 2 else 1

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: Permutation) -> Permutation:
        """Composition ``self o other`` (apply ``other`` first)."""
        if self.k != other.k:
            raise OrderMismatch("cannot compose permutations of different degree")
        return Permutation(tuple(self.images[j] for j in other.images))

    def inverse(self) -> Permutation:
        inv = [0] * self.k
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return self.images == tuple(range(self.k))

    def __repr__(self):
        return f"Permutation({list(self.images)})"


@dataclass(frozen=True, eq=False)
class Tensor:
    """Order-``k`` tensor on ``C^n`` with a declared symmetry class.

    ``tableau`` is only set for the ``young`` class and names the Young
    tableau whose projector fixes the tensor.
    """

    n: int
    k: int
    coeffs: np.ndarray
    symmetry: str = "general"
    tableau: Any = field(default=None, repr=False)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("single-particle dimension must be positive")
        if self.k < 0:
            raise ValueError("order must be non-negative")
        if self.symmetry not in SYMMETRY_CLASSES:
            raise ValueError(f"unknown symmetry class {self.symmetry!r}")
        if self.symmetry == "young" and self.tableau is None:
            raise ValueError("young tensors need a tableau")
        arr = np.array(self.coeffs, dtype=complex)
        if arr.shape != (self.n,) * self.k:
            raise ValueError(
                f"coefficient array has shape {arr.shape}, expected {(self.n,) * self.k}"
            )
        if not np.all(np.isfinite(arr)):
            raise ValueError("tensor coefficients must be finite")
        arr.setflags(write=False)
        object.__setattr__(self, "coeffs", arr)

    # construction helpers

    @classmethod
    def from_array(cls, arr, symmetry: str = "general", tableau=None) -> Tensor:
        arr = np.asarray(arr, dtype=complex)
        n = arr.shape[0] if arr.ndim else 1
        return cls(n, arr.ndim, arr, symmetry, tableau)

    @classmethod
    def scalar(cls, value: complex, n: int = 1) -> Tensor:
        return cls(n, 0, np.asarray(value, dtype=complex))

    @classmethod
    def vector(cls, values: Sequence[complex]) -> Tensor:
        return cls.from_array(np.asarray(values, dtype=complex))

    @classmethod
    def basis(cls, n: int, *indices: int) -> Tensor:
        """``e_{i1} x ... x e_{ik}`` for 1-based indices."""
        arr = np.zeros((n,) * len(indices), dtype=complex)
        arr[tuple(i - 1 for i in indices)] = 1.0
        return cls(n, len(indices), arr)

    # arithmetic

    def _combine_tag(self, other: Tensor) -> tuple[str, Any]:
        if self.symmetry == other.symmetry and self.tableau == other.tableau:
            return self.symmetry, self.tableau
        return "general", None

    def _check_compatible(self, other: Tensor) -> None:
        if self.n != other.n:
            raise DimensionMismatch(f"dimensions differ: {self.n} vs {other.n}")
        if self.k != other.k:
            raise OrderMismatch(f"orders differ: {self.k} vs {other.k}")

    def __add__(self, other: Tensor) -> Tensor:
        self._check_compatible(other)
        tag, tab = self._combine_tag(other)
        return Tensor(self.n, self.k, self.coeffs + other.coeffs, tag, tab)

    def __sub__(self, other: Tensor) -> Tensor:
        self._check_compatible(other)
        tag, tab = self._combine_tag(other)
        return Tensor(self.n, self.k, self.coeffs - other.coeffs, tag, tab)

    def __neg__(self) -> Tensor:
        return Tensor(self.n, self.k, -self.coeffs, self.symmetry, self.tableau)

    def __mul__(self, c: complex) -> Tensor:
        return Tensor(self.n, self.k, complex(c) * self.coeffs, self.symmetry, self.tableau)

    __rmul__ = __mul__

    def __truediv__(self, c: complex) -> Tensor:
        return self * (1.0 / complex(c))

    def norm(self) -> float:
        return float(np.linalg.norm(self.coeffs.ravel()))

    def max_abs(self) -> float:
        return float(np.max(np.abs(self.coeffs))) if self.coeffs.size else 0.0

    def normalized(self) -> Tensor:
        return self / self.norm()

    def with_symmetry(self, symmetry: str, tableau=None, eps: float | None = None) -> Tensor:
        """Re-tag the tensor, verifying the class invariant."""
        out = Tensor(self.n, self.k, self.coeffs, symmetry, tableau)
        check_symmetry(out, eps)
        return out

    def as_general(self) -> Tensor:
        return Tensor(self.n, self.k, self.coeffs)

    def entry(self, *indices: int) -> complex:
        """Coefficient at a 1-based multi-index."""
        return complex(self.coeffs[tuple(i - 1 for i in indices)])

    def allclose(self, other: Tensor, atol: float = 1e-12) -> bool:
        self._check_compatible(other)
        return bool(np.max(np.abs(self.coeffs - other.coeffs), initial=0.0) <= atol)

    def __repr__(self):
        return f"Tensor(n={self.n}, k={self.k}, symmetry={self.symmetry!r}, nnz={np.count_nonzero(self.coeffs)})"


def symmetry_defect(u: Tensor, symmetry: str, tableau=None) -> float:
    """Largest coefficient deviation from the invariant of ``symmetry``."""
    if symmetry == "general" or u.k < 2:
        if symmetry == "young":
            return _young_defect(u, tableau)
        return 0.0
    if symmetry == "young":
        return _young_defect(u, tableau)
    sign = 1.0 if symmetry == "symmetric" else -1.0
    worst = 0.0
    # adjacent transpositions generate S_k
    for i in range(u.k - 1):
        swapped = np.swapaxes(u.coeffs, i, i + 1)
        worst = max(worst, float(np.max(np.abs(swapped - sign * u.coeffs))))
    return worst


def _young_defect(u: Tensor, tableau) -> float:
    from .young import young_projector

    projected = young_projector(tableau).apply(u.as_general())
    return float(np.max(np.abs(projected.coeffs - u.coeffs)))


def check_symmetry(u: Tensor, eps: float | None = None) -> None:
    eps = config.resolve(eps)
    defect = symmetry_defect(u, u.symmetry, u.tableau)
    if defect > eps * u.max_abs():
        raise SymmetryViolation(
            f"tensor is not {u.symmetry}: invariant violated by {defect:.3g}"
        )


def make_tensor(
    n: int,
    k: int,
    entries: Iterable[tuple[Sequence[int], complex]],
    symmetry: str = "general",
    tableau=None,
    eps: float | None = None,
) -> Tensor:
    """Build a tensor from ``(multi_index, value)`` pairs with 1-based indices.

    Unlisted coefficients are zero.  When ``symmetry`` is not ``general`` the
    class invariant is checked to the relative tolerance ``eps``.
    """
    arr = np.zeros((n,) * k, dtype=complex)
    seen = set()
    for idx, value in entries:
        idx = tuple(int(i) for i in idx)
        if len(idx) != k:
            raise IndexOutOfRange(f"multi-index {idx} does not have length {k}")
        if any(i < 1 or i > n for i in idx):
            raise IndexOutOfRange(f"multi-index {idx} has a component outside 1..{n}")
        if idx in seen:
            raise DuplicateEntry(f"multi-index {idx} listed twice")
        seen.add(idx)
        arr[tuple(i - 1 for i in idx)] = complex(value)
    u = Tensor(n, k, arr, symmetry, tableau)
    if symmetry != "general":
        check_symmetry(u, eps)
    return u


def tensor_product(a: Tensor, b: Tensor) -> Tensor:
    if a.n != b.n:
        raise DimensionMismatch(f"dimensions differ: {a.n} vs {b.n}")
    return Tensor(a.n, a.k + b.k, np.multiply.outer(a.coeffs, b.coeffs))


def tensor_power(f: Tensor, k: int) -> Tensor:
    out = Tensor.scalar(1.0, f.n)
    for _ in range(k):
        out = tensor_product(out, f)
    return out


def product_of_vectors(vectors: Sequence[Sequence[complex]]) -> Tensor:
    """``f1 x f2 x ... x fk`` for plain coefficient vectors."""
    vecs = [np.asarray(v, dtype=complex) for v in vectors]
    out = np.asarray(1.0 + 0j)
    for v in vecs:
        out = np.multiply.outer(out, v)
    return Tensor.from_array(out) if vecs else Tensor.scalar(1.0)


def permute_array(arr: np.ndarray, sigma: Permutation) -> np.ndarray:
    # result[i_1..i_k] = arr[i_{sigma^-1(1)}..i_{sigma^-1(k)}]
    return np.transpose(arr, sigma.images)


def permute(u: Tensor, sigma: Permutation) -> Tensor:
    """``(sigma u)^{i_1..i_k} = u^{i_{sigma^-1(1)}..i_{sigma^-1(k)}}``.

    On products ``sigma(f_1 x ... x f_k) = f_{sigma(1)} x ... x f_{sigma(k)}``,
    so ``permute(permute(u, s), t) == permute(u, s * t)``.
    """
    if sigma.k != u.k:
        raise OrderMismatch(f"permutation of degree {sigma.k} acting on order-{u.k} tensor")
    coeffs = permute_array(u.coeffs, sigma)
    if u.symmetry == "symmetric":
        return Tensor(u.n, u.k, coeffs, "symmetric")
    if u.symmetry == "antisymmetric":
        return Tensor(u.n, u.k, coeffs, "antisymmetric")
    return Tensor(u.n, u.k, coeffs)


def inner_product(a: Tensor, b: Tensor) -> complex:
    """Hermitian product, conjugate-linear in ``a``."""
    a._check_compatible(b)
    return complex(np.vdot(a.coeffs.ravel(), b.coeffs.ravel()))


def conjugate(u: Tensor) -> Tensor:
    return Tensor(u.n, u.k, np.conj(u.coeffs), u.symmetry, u.tableau)


def multinomial(counts: Sequence[int]) -> int:
    total = math.factorial(sum(counts))
    for c in counts:
        total //= math.factorial(c)
    return total


# JSON exchange format


def _complex_to_json(z: complex) -> dict:
    return {"re": float(z.real), "im": float(z.imag)}


def tensor_to_dict(u: Tensor, atol: float = 0.0) -> dict:
    entries = []
    for idx in itertools.product(range(u.n), repeat=u.k):
        z = complex(u.coeffs[idx])
        if abs(z) > atol:
            entries.append({"idx": [i + 1 for i in idx], **_complex_to_json(z)})
    symmetry = u.symmetry if u.symmetry != "young" else "general"
    return {"n": u.n, "k": u.k, "symmetry": symmetry, "entries": entries}


def tensor_from_dict(data: dict, eps: float | None = None) -> Tensor:
    try:
        n = int(data["n"])
        k = int(data["k"])
        symmetry = data.get("symmetry", "general")
        raw = data.get("entries", [])
        entries = [
            (e["idx"], complex(float(e.get("re", 0.0)), float(e.get("im", 0.0))))
            for e in raw
        ]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed tensor JSON: {exc}") from exc
    if symmetry not in ("general", "symmetric", "antisymmetric"):
        raise ValueError(f"unknown symmetry {symmetry!r} in tensor JSON")
    if n < 1 or k < 0:
        raise ValueError("tensor JSON needs n >= 1 and k >= 0")
    return make_tensor(n, k, entries, symmetry, eps=eps)
