"""S-rank and the simplicity (non-entanglement) tests.

Four independent routes decide whether a pure state is simple:

* :func:`s_rank` compared with the minimal S-rank of the symmetry class;
* :func:`tensor_square_test`, an identity on ``u x u``;
* :func:`overlap_score`, which equals 1 exactly for simple unit tensors;
* :func:`quadratic_witness`, a search for a violated quadratic relation
  among the coefficients.

All share the relative tolerance from :mod:`srank.config`: ranks count
singular values above ``eps * sigma_max`` and quadratic expressions are
nonzero when they exceed ``eps * max|u|**2``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from . import config
from .contraction import contraction_matrix
from .decompositions import numerical_rank
from .errors import NotNormalized, UnsupportedClass, ZeroTensor
from .tensor import Permutation, Tensor, permute_array


@dataclass(frozen=True)
class QuadraticWitness:
    """A violated quadratic relation, with 1-based indices.

    For general and symmetric tensors ``lhs = u^I u^J`` and ``rhs`` is the
    same product after exchanging ``I[slot]`` and ``J[slot]``.  For
    antisymmetric tensors ``i`` has ``k+1`` entries, ``j`` has ``k-1`` and
    ``lhs`` is the antisymmetrized product (``rhs`` is 0).
    """

    i: tuple[int, ...]
    j: tuple[int, ...]
    slot: int | None
    lhs: complex
    rhs: complex

    @property
    def value(self) -> complex:
        return self.lhs - self.rhs

    def to_dict(self) -> dict:
        return {
            "i": list(self.i),
            "j": list(self.j),
            "slot": self.slot,
            "lhs": {"re": self.lhs.real, "im": self.lhs.imag},
            "rhs": {"re": self.rhs.real, "im": self.rhs.imag},
        }

    def __str__(self):
        return f"({','.join(map(str, self.i))}|{','.join(map(str, self.j))})"


@dataclass(frozen=True)
class Verdict:
    symmetry: str
    s_rank: int
    minimal_rank: int
    simple: bool
    witness: QuadraticWitness | None = None
    score: float | None = None

    def to_dict(self) -> dict:
        return {
            "symmetry": self.symmetry,
            "s_rank": self.s_rank,
            "minimal_rank": self.minimal_rank,
            "simple": self.simple,
            "witness": None if self.witness is None else self.witness.to_dict(),
            "score": self.score,
        }


def _require_nonzero(u: Tensor) -> None:
    if u.max_abs() == 0.0:
        raise ZeroTensor("zero tensor has no S-rank")
    if u.k < 1:
        raise ZeroTensor("order-0 tensors have no S-rank")


def flattening_ranks(u: Tensor, eps: float | None = None) -> list[int]:
    """Rank of the single-slot contraction image for every slot."""
    return [numerical_rank(contraction_matrix(u, s), eps) for s in range(1, u.k + 1)]


def s_rank(u: Tensor, eps: float | None = None) -> int:
    _require_nonzero(u)
    if u.symmetry in ("symmetric", "antisymmetric"):
        # all slots are equivalent up to sign
        return numerical_rank(contraction_matrix(u, 1), eps)
    return max(flattening_ranks(u, eps))


def minimal_rank(u: Tensor) -> int:
    if u.symmetry == "antisymmetric":
        return u.k
    if u.symmetry == "young":
        return u.tableau.rows
    return 1


def is_simple(u: Tensor, eps: float | None = None) -> Verdict:
    rank = s_rank(u, eps)
    low = minimal_rank(u)
    witness = score = None
    if u.symmetry != "young":
        witness = quadratic_witness(u, eps)
    if u.symmetry in ("general", "symmetric"):
        score = overlap_score(u.normalized(), eps)
    return Verdict(u.symmetry, rank, low, rank == low, witness, score)


def _swap_slots(t: np.ndarray, a: int, b: int) -> np.ndarray:
    return np.swapaxes(t, a, b)


def tensor_square_test(u: Tensor, eps: float | None = None) -> bool:
    """Class-specific identity on ``u x u`` that holds exactly for simple tensors."""
    eps = config.resolve(eps)
    _require_nonzero(u)
    k = u.k
    t = np.multiply.outer(u.coeffs, u.coeffs)
    tol = eps * u.max_abs() ** 2
    if u.symmetry == "general":
        return all(
            np.max(np.abs(_swap_slots(t, i, k + i) - t)) <= tol for i in range(k)
        )
    if u.symmetry == "symmetric":
        return bool(np.max(np.abs(_swap_slots(t, k - 1, 2 * k - 1) - t)) <= tol)
    if u.symmetry == "antisymmetric":
        # cycle the last factor to the front, then antisymmetrize the first k+1
        cycled = np.moveaxis(t, 2 * k - 1, 0)
        acc = np.zeros_like(cycled)
        for sigma in Permutation.all(k + 1):
            full = Permutation(sigma.images + tuple(range(k + 1, 2 * k)))
            acc += sigma.sign * permute_array(cycled, full)
        acc /= math.factorial(k + 1)
        return bool(np.max(np.abs(acc)) <= tol)
    raise UnsupportedClass(f"no tensor-square criterion for class {u.symmetry!r}")


def overlap_score(u: Tensor, eps: float | None = None) -> float:
    """``<u x u | sigma_bar (u x u)>`` for a unit tensor; 1 iff simple."""
    eps = config.resolve(eps)
    _require_nonzero(u)
    if abs(u.norm() - 1.0) > max(eps, 1e-12) * 10:
        raise NotNormalized(f"overlap score needs a unit tensor, norm is {u.norm():.12g}")
    k = u.k
    t = np.multiply.outer(u.coeffs, u.coeffs)
    if u.symmetry == "general":
        slots = range(k)
    elif u.symmetry == "symmetric":
        slots = [k - 1]
    else:
        raise UnsupportedClass(f"no overlap score for class {u.symmetry!r}")
    total = sum(np.vdot(t, _swap_slots(t, i, k + i)) for i in slots) / len(slots)
    # each sigma_i is a self-adjoint unitary, so the overlap is real
    return float(total.real)


def _first_violation(diff: np.ndarray, tol: float):
    hits = np.argwhere(np.abs(diff) > tol)
    if hits.size == 0:
        return None
    # argwhere walks in C order, so the first hit is lexicographically smallest
    return tuple(int(x) for x in hits[0])


def quadratic_witness(u: Tensor, eps: float | None = None) -> QuadraticWitness | None:
    """First violated quadratic relation in lexicographic order, or ``None``."""
    eps = config.resolve(eps)
    _require_nonzero(u)
    k = u.k
    t = np.multiply.outer(u.coeffs, u.coeffs)
    tol = eps * u.max_abs() ** 2

    if u.symmetry in ("general", "symmetric"):
        slots = range(k) if u.symmetry == "general" else [k - 1]
        for s in slots:
            swapped = _swap_slots(t, s, k + s)
            hit = _first_violation(t - swapped, tol)
            if hit is not None:
                return QuadraticWitness(
                    tuple(i + 1 for i in hit[:k]),
                    tuple(j + 1 for j in hit[k:]),
                    s + 1,
                    complex(t[hit]),
                    complex(swapped[hit]),
                )
        return None

    if u.symmetry == "antisymmetric":
        # t[i1..ik, i_{k+1}, j1..j_{k-1}] = w^{i1..ik} w^{i_{k+1} j1..j_{k-1}}
        acc = np.zeros_like(t)
        for sigma in Permutation.all(k + 1):
            full = Permutation(sigma.images + tuple(range(k + 1, 2 * k)))
            acc += sigma.sign * permute_array(t, full)
        acc /= math.factorial(k + 1)
        hit = _first_violation(acc, tol)
        if hit is None:
            return None
        return QuadraticWitness(
            tuple(i + 1 for i in hit[: k + 1]),
            tuple(j + 1 for j in hit[k + 1 :]),
            None,
            complex(acc[hit]),
            0j,
        )

    raise UnsupportedClass(f"no quadratic criterion for class {u.symmetry!r}")


def lexicographic_witness_search(u: Tensor, eps: float | None = None) -> QuadraticWitness | None:
    """Entry-by-entry loop version of :func:`quadratic_witness` for tests and tiny inputs."""
    eps = config.resolve(eps)
    _require_nonzero(u)
    n, k, c = u.n, u.k, u.coeffs
    tol = eps * u.max_abs() ** 2
    if u.symmetry in ("general", "symmetric"):
        slots = range(k) if u.symmetry == "general" else [k - 1]
        for s in slots:
            for idx in itertools.product(range(n), repeat=2 * k):
                i, j = list(idx[:k]), list(idx[k:])
                lhs = c[tuple(i)] * c[tuple(j)]
                i[s], j[s] = j[s], i[s]
                rhs = c[tuple(i)] * c[tuple(j)]
                if abs(lhs - rhs) > tol:
                    return QuadraticWitness(
                        tuple(x + 1 for x in idx[:k]),
                        tuple(x + 1 for x in idx[k:]),
                        s + 1,
                        complex(lhs),
                        complex(rhs),
                    )
        return None
    perms = Permutation.all(k + 1)
    for idx in itertools.product(range(n), repeat=2 * k):
        head, tail = idx[: k + 1], idx[k + 1 :]
        val = 0j
        for sigma in perms:
            p = [head[sigma.images[m]] for m in range(k + 1)]
            val += sigma.sign * c[tuple(p[:k])] * c[(p[k],) + tuple(tail)]
        val /= math.factorial(k + 1)
        if abs(val) > tol:
            return QuadraticWitness(
                tuple(x + 1 for x in head), tuple(x + 1 for x in tail), None, val, 0j
            )
    return None
