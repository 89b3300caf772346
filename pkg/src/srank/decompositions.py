"""Numerical rank, Schmidt decomposition and the two Slater decompositions.

Slater decompositions of 2-tensors:

* symmetric ``v = sum_i lambda_i e_i v e_i`` from a Takagi factorization
  ``A = U diag(lambda) U^T`` of the complex symmetric coefficient matrix;
* antisymmetric ``w = sum_i lambda_i f_i ^ g_i`` from a unitary congruence of
  the complex antisymmetric coefficient matrix to 2x2 blocks
  ``[[0, lambda_i/2], [-lambda_i/2, 0]]`` (the factor 1/2 comes from
  ``f ^ g = (f x g - g x f) / 2``).

Both are built on numpy's SVD.  Singular values closer than
``CLUSTER_TOLERANCE`` (relative to the largest one) are treated as one
degenerate cluster and handled jointly.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from . import config
from .errors import NotAntisymmetric, NotSymmetric, NumericalFailure, WrongOrder, ZeroTensor
from .tensor import Tensor

CLUSTER_TOLERANCE = 1e-7


def singular_values(m) -> np.ndarray:
    m = np.asarray(m, dtype=complex)
    if m.size == 0:
        return np.zeros(0)
    return np.linalg.svd(m, compute_uv=False)


def numerical_rank(m, eps: float | None = None) -> int:
    """Number of singular values above ``eps`` times the largest one."""
    eps = config.resolve(eps)
    s = singular_values(m)
    if s.size == 0 or s[0] == 0.0:
        return 0
    return int(np.count_nonzero(s > eps * s[0]))


def random_unitary(n: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-distributed unitary from the QR factorization of a Ginibre matrix."""
    z = (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    phases = np.diagonal(r) / np.abs(np.diagonal(r))
    return q * phases


def _leading_phase(vec: np.ndarray, tol: float = 1e-10) -> complex:
    """Unit phase of the first component whose modulus exceeds ``tol``."""
    for z in vec:
        if abs(z) > tol:
            return z / abs(z)
    return 1.0 + 0j


def _clusters(s: np.ndarray, cutoff: float) -> list[list[int]]:
    """Group indices of descending ``s`` above ``cutoff`` into near-equal runs."""
    groups: list[list[int]] = []
    scale = s[0] if s.size else 0.0
    for i, value in enumerate(s):
        if value <= cutoff:
            break
        if groups and s[groups[-1][-1]] - value <= CLUSTER_TOLERANCE * scale:
            groups[-1].append(i)
        else:
            groups.append([i])
    return groups


def _check_order2(u: Tensor) -> np.ndarray:
    if u.k != 2:
        raise WrongOrder(f"expected an order-2 tensor, got order {u.k}")
    if u.max_abs() == 0.0:
        raise ZeroTensor("zero tensor has no decomposition")
    return np.asarray(u.coeffs)


def _vectors_json(vectors: np.ndarray) -> list:
    return [[{"re": float(z.real), "im": float(z.imag)} for z in col] for col in vectors.T]


@dataclass(frozen=True)
class SchmidtDecomposition:
    """``u = sum_i lambdas[i] left[:, i] x right[:, i]``."""

    lambdas: np.ndarray
    left: np.ndarray
    right: np.ndarray
    residual: float

    @property
    def rank(self) -> int:
        return len(self.lambdas)

    def reconstruct(self) -> np.ndarray:
        return (self.left * self.lambdas) @ self.right.T

    def to_dict(self) -> dict:
        return {
            "kind": "schmidt",
            "lambdas": [float(x) for x in self.lambdas],
            "vectors": _vectors_json(self.left) + _vectors_json(self.right),
            "residual": float(self.residual),
        }


@dataclass(frozen=True)
class SlaterDecomposition:
    """Slater decomposition of a symmetric or antisymmetric 2-tensor.

    ``vectors[:, i]`` are the ``e_i`` (symmetric) or ``f_i`` (antisymmetric);
    ``partners[:, i]`` are the ``g_i`` paired with ``f_i``.  ``unitary`` is the
    full change of basis (columns ``e_1..e_n``, or ``f_1, g_1, f_2, g_2, ...``
    followed by a basis of the kernel).
    """

    kind: str
    lambdas: np.ndarray
    vectors: np.ndarray
    partners: np.ndarray | None
    unitary: np.ndarray
    residual: float

    @property
    def rank(self) -> int:
        return len(self.lambdas)

    def reconstruct(self) -> np.ndarray:
        if self.kind == "symmetric":
            return (self.vectors * self.lambdas) @ self.vectors.T
        f, g = self.vectors * self.lambdas, self.partners
        return 0.5 * (f @ g.T - g @ f.T)

    def to_dict(self) -> dict:
        vectors = _vectors_json(self.vectors)
        if self.partners is not None:
            vectors += _vectors_json(self.partners)
        return {
            "kind": self.kind,
            "lambdas": [float(x) for x in self.lambdas],
            "vectors": vectors,
            "residual": float(self.residual),
        }


def schmidt(u: Tensor, eps: float | None = None) -> SchmidtDecomposition:
    eps = config.resolve(eps)
    a = _check_order2(u)
    left, s, vh = np.linalg.svd(a)
    r = int(np.count_nonzero(s > eps * s[0]))
    left, right, lambdas = left[:, :r].copy(), vh[:r, :].T.copy(), s[:r]
    for i in range(r):
        ph = _leading_phase(left[:, i])
        left[:, i] /= ph
        right[:, i] *= ph
    out = SchmidtDecomposition(lambdas, left, right, 0.0)
    residual = float(np.linalg.norm(out.reconstruct() - a))
    return SchmidtDecomposition(lambdas, left, right, residual)


def _residual_guard(residual: float, a: np.ndarray, what: str) -> None:
    if residual > 1e-6 * max(1.0, float(np.linalg.norm(a))):
        raise NumericalFailure(f"{what} reconstruction residual {residual:.3g} too large")


def takagi(v: Tensor, eps: float | None = None) -> SlaterDecomposition:
    """Takagi factorization ``A = U diag(lambda) U^T`` of a symmetric 2-tensor."""
    eps = config.resolve(eps)
    a = _check_order2(v)
    if np.max(np.abs(a - a.T)) > eps * np.max(np.abs(a)):
        raise NotSymmetric("coefficient matrix is not symmetric")
    a = 0.5 * (a + a.T)
    left, s, vh = np.linalg.svd(a)
    right = vh.conj().T
    cutoff = eps * s[0]
    groups = _clusters(s, cutoff)
    cols = []
    for idx in groups:
        vc, wc = left[:, idx], right[:, idx]
        # A = A^T makes W_c^H conj(V_c) symmetric unitary; with D its (symmetric)
        # square root, (V_c D)(V_c D)^T = V_c W_c^H
        m = wc.conj().T @ vc.conj()
        m = 0.5 * (m + m.T)
        d = scipy.linalg.sqrtm(m)
        cols.append(vc @ d)
    r = sum(len(idx) for idx in groups)
    u = np.concatenate(cols + [left[:, r:]], axis=1) if cols else left.copy()
    for i in range(r):
        ph = _leading_phase(u[:, i])
        # e -> -e is the only freedom left in e v e
        if ph.real < 0 or (abs(ph.real) < 1e-12 and ph.imag < 0):
            u[:, i] = -u[:, i]
    lambdas = s[:r].copy()
    out = SlaterDecomposition("symmetric", lambdas, u[:, :r], None, u, 0.0)
    residual = float(np.linalg.norm(out.reconstruct() - a))
    _residual_guard(residual, a, "Takagi")
    return SlaterDecomposition("symmetric", lambdas, u[:, :r], None, u, residual)


def youla(w: Tensor, eps: float | None = None) -> SlaterDecomposition:
    """Block form ``w = sum_i lambda_i f_i ^ g_i`` of an antisymmetric 2-tensor."""
    eps = config.resolve(eps)
    a = _check_order2(w)
    if np.max(np.abs(a + a.T)) > eps * np.max(np.abs(a)):
        raise NotAntisymmetric("coefficient matrix is not antisymmetric")
    a = 0.5 * (a - a.T)
    left, s, _ = np.linalg.svd(a)
    cutoff = eps * s[0]
    groups = _clusters(s, cutoff)
    fs, gs, sigmas = [], [], []
    for idx in groups:
        rest = left[:, idx]
        while rest.shape[1] >= 2:
            f = rest[:, 0]
            g = -a @ f.conj()
            sigma = float(np.linalg.norm(g))
            g = g / sigma
            # x^T A x = 0 keeps g orthogonal to f; deflate the pair and re-orthonormalize
            rest = rest - np.outer(f, f.conj() @ rest) - np.outer(g, g.conj() @ rest)
            q, sv, _ = np.linalg.svd(rest, full_matrices=False)
            rest = q[:, sv > 0.5]
            fs.append(f)
            gs.append(g)
            sigmas.append(sigma)
        if rest.shape[1]:
            raise NumericalFailure("odd-dimensional singular cluster in antisymmetric matrix")
    f = np.array(fs).T.reshape(a.shape[0], -1)
    g = np.array(gs).T.reshape(a.shape[0], -1)
    for i in range(f.shape[1]):
        ph = _leading_phase(f[:, i])
        f[:, i] /= ph
        g[:, i] *= ph
    r = f.shape[1]
    paired = np.empty((a.shape[0], 2 * r), dtype=complex)
    paired[:, 0::2], paired[:, 1::2] = f, g
    u = np.concatenate([paired, left[:, 2 * r :]], axis=1)
    lambdas = 2.0 * np.array(sigmas)
    out = SlaterDecomposition("antisymmetric", lambdas, f, g, u, 0.0)
    residual = float(np.linalg.norm(out.reconstruct() - a))
    _residual_guard(residual, a, "Youla")
    return SlaterDecomposition("antisymmetric", lambdas, f, g, u, residual)


def slater(u: Tensor, eps: float | None = None) -> SlaterDecomposition:
    """Dispatch on the symmetry tag of ``u``."""
    if u.symmetry == "symmetric":
        return takagi(u, eps)
    if u.symmetry == "antisymmetric":
        return youla(u, eps)
    raise NotSymmetric("Slater decomposition needs a symmetric or antisymmetric tensor")
