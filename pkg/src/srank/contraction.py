"""Contractions of tensors against dual-side tensors.

A dual-side tensor ``mu`` is supplied as an ordinary :class:`Tensor`; it is
mapped to ``(H*)^{x l}`` by the anti-linear identification ``|x> -> <x|``,
so its coefficients enter conjugated:

    (iota_mu u)^{j1..j_{k-l}} = sum_I conj(mu^I) u^{I j1..j_{k-l}}.

The first ``l`` slots of ``u`` are consumed.
"""

from __future__ import annotations

import itertools
import math

import numpy as np

from .errors import DimensionMismatch, OrderMismatch
from .symmetry import determinant, permanent, vee_vectors, wedge_vectors
from .tensor import Tensor


def contract(u: Tensor, mu: Tensor) -> Tensor:
    if u.n != mu.n:
        raise DimensionMismatch(f"dimensions differ: {u.n} vs {mu.n}")
    if mu.k > u.k:
        return Tensor.scalar(0.0, u.n)
    l = mu.k
    mat = u.coeffs.reshape(u.n**l, u.n ** (u.k - l))
    out = (np.conj(mu.coeffs).reshape(-1) @ mat).reshape((u.n,) * (u.k - l))
    if u.symmetry in ("symmetric", "antisymmetric"):
        return Tensor(u.n, u.k - l, out, u.symmetry)
    return Tensor(u.n, u.k - l, out)


def contraction_matrix(u: Tensor, slot: int) -> np.ndarray:
    """Flattening of ``u`` whose column space is the single-slot contraction image.

    ``slot`` is 1-based.  Row ``r`` lists the coefficients of ``iota_{e_R}``
    applied to ``u`` with ``slot`` moved to the last position, where ``e_R``
    runs over the basis of ``(H*)^{x (k-1)}`` in row-major order.
    """
    if u.k < 1 or not 1 <= slot <= u.k:
        raise OrderMismatch(f"slot {slot} is not a slot of an order-{u.k} tensor")
    moved = np.moveaxis(u.coeffs, slot - 1, -1)
    return moved.reshape(u.n ** (u.k - 1), u.n)


def _shuffles(l: int, k: int):
    """(l, k-l) shuffles as (first block, rest, parity)."""
    for first in itertools.combinations(range(k), l):
        rest = tuple(i for i in range(k) if i not in first)
        order = first + rest
        inversions = sum(1 for a in range(k) for b in range(a + 1, k) if order[a] > order[b])
        yield first, rest, (-1) ** inversions


def contract_products(fs, gs, kind: str) -> Tensor:
    """``iota_{g1 v..v gl}(f1 v..v fk)`` (or the wedge version) by the shuffle formula.

    Independent of :func:`contract`: only pairings of the factor vectors,
    permanents or determinants, and products of the surviving vectors are
    formed.
    """
    fs = [np.asarray(f, dtype=complex) for f in fs]
    gs = [np.asarray(g, dtype=complex) for g in gs]
    k, l = len(fs), len(gs)
    n = fs[0].shape[0]
    if l > k:
        return Tensor.scalar(0.0, n)
    pair = np.array([[np.vdot(g, f) for g in gs] for f in fs]).reshape(k, l)
    prod = vee_vectors if kind == "symmetric" else wedge_vectors
    total = np.zeros((n,) * (k - l), dtype=complex)
    for first, rest, parity in _shuffles(l, k):
        block = pair[list(first), :]
        if kind == "symmetric":
            weight = permanent(block)
        else:
            weight = parity * determinant(block)
        if weight == 0:
            continue
        survivor = prod([fs[i] for i in rest]).coeffs if rest else np.asarray(1.0 + 0j)
        total = total + weight * survivor
    total *= math.factorial(k - l) / math.factorial(k)
    return Tensor(n, k - l, total, kind)
