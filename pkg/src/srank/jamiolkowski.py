"""Jamiolkowski maps for two bosons or two fermions as leg permutations.

A :class:`FourLegTensor` stores ``lam[i, j, k, l]`` for

    Phi = lam_ijkl |e_i> x <e_j| x |e_k> x <e_l|

with legs in the order ``(out1, in1, out2, in2)``.  Coefficients are matrix
elements with respect to kets and bras, so an operator ``|a><b|`` contributes
``a_i * conj(b_j)``.

Leg table (positions of the source legs in the target):

    ====  ===========================  ==============================
    map   source legs                  target legs
    ====  ===========================  ==============================
    J     (out1, in1, out2, in2)       (out1, in2, out2, in1)
    J1    (out1, in1, out2, in2)       (out1, out2, in2, in1)
    J2    (out1, in2, out2, in1)       (out1, out2, in2, in1)
    ====  ===========================  ==============================

so ``J2 o J == J1``.  The target of ``J1`` is an operator on ``H x H`` with
row legs ``(out1, out2)`` and column legs ``(in1, in2)`` read in the order
``(in2, in1)`` as printed above.

``Phi`` acts on ``L(H)`` through the trace pairing:
``Phi(B)_ij = sum_kl lam_ijkl B_lk``.  Its rank is the rank of the
``n^2 x n^2`` matrix with rows ``(i, j)`` and columns ``(k, l)``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import config
from .decompositions import numerical_rank, takagi, youla
from .errors import WrongClass, WrongOrder, ZeroTensor
from .tensor import Tensor

LEGS = ("out1", "in1", "out2", "in2")


@dataclass(frozen=True, eq=False)
class FourLegTensor:
    coeffs: np.ndarray

    def __post_init__(self):
        arr = np.array(self.coeffs, dtype=complex)
        if arr.ndim != 4 or len(set(arr.shape)) != 1:
            raise ValueError(f"four-leg tensor needs shape (n, n, n, n), got {arr.shape}")
        if not np.all(np.isfinite(arr)):
            raise ValueError("four-leg tensor coefficients must be finite")
        arr.setflags(write=False)
        object.__setattr__(self, "coeffs", arr)

    @property
    def n(self) -> int:
        return self.coeffs.shape[0]

    def norm(self) -> float:
        return float(np.linalg.norm(self.coeffs.ravel()))

    def allclose(self, other: FourLegTensor, atol: float = 1e-12) -> bool:
        return bool(np.max(np.abs(self.coeffs - other.coeffs)) <= atol)

    def operator_matrix(self) -> np.ndarray:
        """Matrix of ``B -> Phi(B)`` on vectorized operators."""
        n = self.n
        return self.coeffs.reshape(n * n, n * n)

    def to_dict(self) -> dict:
        t = Tensor(self.n, 4, self.coeffs)
        from .tensor import tensor_to_dict

        out = tensor_to_dict(t)
        out["legs"] = list(LEGS)
        return out

    @classmethod
    def from_dict(cls, data: dict) -> FourLegTensor:
        from .tensor import tensor_from_dict

        t = tensor_from_dict({k: v for k, v in data.items() if k != "legs"})
        if t.k != 4:
            raise WrongOrder("four-leg tensor JSON needs k = 4")
        return cls(t.coeffs)


def jam_J(phi: FourLegTensor) -> FourLegTensor:
    """Exchange the two bra legs: ``|e_i><e_j| x |e_k><e_l| -> |e_i><e_l| x |e_k><e_j|``."""
    return FourLegTensor(np.transpose(phi.coeffs, (0, 3, 2, 1)))


def jam_J1(phi: FourLegTensor) -> FourLegTensor:
    # target[i, k, l, j] = phi[i, j, k, l]
    return FourLegTensor(np.transpose(phi.coeffs, (0, 2, 3, 1)))


def jam_J2(phi: FourLegTensor) -> FourLegTensor:
    # legs 2 and 3 exchange places
    return FourLegTensor(np.transpose(phi.coeffs, (0, 2, 1, 3)))


def jam_J1_inverse(rho: FourLegTensor) -> FourLegTensor:
    return FourLegTensor(np.transpose(rho.coeffs, (0, 3, 1, 2)))


def jam_J2_inverse(psi: FourLegTensor) -> FourLegTensor:
    return jam_J2(psi)


def classify_sa(phi: FourLegTensor, eps: float | None = None) -> str:
    """``sa_plus``, ``sa_minus`` or ``none``."""
    eps = config.resolve(eps)
    lam = phi.coeffs
    tol = eps * max(float(np.max(np.abs(lam))), np.finfo(float).tiny)
    if np.max(np.abs(lam - np.transpose(lam, (2, 3, 0, 1)))) > tol:
        return "none"
    swapped = jam_J(phi).coeffs
    if np.max(np.abs(swapped - lam)) <= tol:
        return "sa_plus"
    if np.max(np.abs(swapped + lam)) <= tol:
        return "sa_minus"
    return "none"


def pure_state(v: Tensor) -> FourLegTensor:
    """``|v><v| / ||v||^2`` with legs ``(out1, out2, in2, in1)``."""
    if v.k != 2:
        raise WrongOrder("pure two-particle state needs an order-2 tensor")
    a = np.asarray(v.coeffs)
    # rho[i, k, l, j] = v^{ik} conj(v^{jl})
    rho = np.einsum("ik,jl->iklj", a, a.conj()) / v.norm() ** 2
    return FourLegTensor(rho)


def state_to_map(v: Tensor, eps: float | None = None) -> FourLegTensor:
    """Map ``Phi`` with ``J1(Phi) = rho_v``, assembled from the Slater decomposition.

    Bosons, ``v = sum_i lam_i e_i v e_i``:
        ``Phi = sum_ij lam_i lam_j |e_i><e_j| x |e_i><e_j|``.
    Fermions, ``w = sum_i lam_i f_i ^ g_i``:
        ``Phi = 1/4 sum_ij lam_i lam_j (|f_i><f_j| x |g_i><g_j| - |g_i><f_j| x |f_i><g_j|
                                        - |f_i><g_j| x |g_i><f_j| + |g_i><g_j| x |f_i><f_j|)``.
    Both are divided by ``||v||^2``.
    """
    if v.k != 2:
        raise WrongOrder("Jamiolkowski maps are defined for two particles")
    if v.max_abs() == 0.0:
        raise ZeroTensor("zero tensor is not a state")
    if v.symmetry == "symmetric":
        dec = takagi(v, eps)
        e, we = dec.vectors, dec.vectors * dec.lambdas
        phi = np.einsum("ai,bj,ci,dj->abcd", we, we.conj(), e, e.conj())
    elif v.symmetry == "antisymmetric":
        dec = youla(v, eps)
        f, g = dec.vectors * dec.lambdas, dec.partners
        fc, gc = f.conj(), g.conj()

        def term(a, b, c, d):
            return np.einsum("ai,bj,ci,dj->abcd", a, b, c, d)

        phi = 0.25 * (term(f, fc, g, gc) - term(f, gc, g, fc) - term(g, fc, f, gc) + term(g, gc, f, fc))
    else:
        raise WrongClass("state_to_map needs a symmetric or antisymmetric 2-tensor")
    return FourLegTensor(phi / v.norm() ** 2)


def map_rank(phi: FourLegTensor, eps: float | None = None) -> int:
    return numerical_rank(phi.operator_matrix(), eps)


def expected_map_rank(symmetry: str, slater_rank: int) -> int:
    return slater_rank**2 if symmetry == "symmetric" else 4 * slater_rank**2
