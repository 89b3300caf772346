import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from srank import (
    Tensor,
    antisymmetrize,
    contract,
    contract_products,
    contraction_matrix,
    determinant,
    numerical_rank,
    permanent,
    symmetrize,
    vee_vectors,
    wedge_vectors,
)
from srank.errors import DimensionMismatch, OrderMismatch

from goldens import e, example3, example4, quartic, quartic_factor, vee_e1_e2
from oracles import loop_contract, random_complex


def vec(values):
    return Tensor.vector(values)


def test_contract_vee_example():
    u = vee_e1_e2()
    assert contract(u, vec(e(1, 2))).allclose(vec([0, 0.5]))
    x = np.array([0.3 - 1j, 2 + 0.5j])
    expected = 0.5 * (np.vdot(x, e(1, 2)) * e(2, 2) + np.vdot(x, e(2, 2)) * e(1, 2))
    assert contract(u, vec(x)).allclose(vec(expected), 1e-15)


def test_contract_quartic_goldens():
    u = quartic()
    f = quartic_factor()
    assert np.allclose(contract(u, vee_vectors([e(2, 3)] * 3)).coeffs, f, atol=1e-10)
    mu = vee_vectors([e(1, 3), e(1, 3), e(3, 3)])
    assert np.allclose(contract(u, mu).coeffs, 2 * f, atol=1e-10)


def test_contract_example3_single_vectors():
    w = example3()
    assert np.allclose(contract(w, vec(e(1, 3))).coeffs, 0.5 * e(2, 3), atol=0)
    assert np.allclose(contract(w, vec(e(2, 3))).coeffs, 0.5 * (e(3, 3) - e(1, 3)), atol=0)
    assert np.allclose(contract(w, vec(e(3, 3))).coeffs, -0.5 * e(2, 3), atol=0)


def test_contract_example4_single_vectors():
    w = example4()
    expected = [0.5 * e(2), -0.5 * e(1), 0.5 * e(4), -0.5 * e(3)]
    for i, exp in enumerate(expected, start=1):
        assert np.allclose(contract(w, vec(e(i))).coeffs, exp, atol=0)


def test_contract_longer_than_tensor_is_zero():
    out = contract(Tensor.basis(3, 1), Tensor.basis(3, 1, 1))
    assert out.k == 0 and complex(out.coeffs) == 0


def test_contract_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        contract(Tensor.basis(3, 1, 2), Tensor.basis(2, 1))


def test_contract_matches_loop_oracle():
    rng = np.random.default_rng(7)
    u = Tensor(3, 4, random_complex(rng, (3,) * 4))
    for l in range(0, 5):
        mu = Tensor(3, l, random_complex(rng, (3,) * l))
        assert np.allclose(contract(u, mu).coeffs, loop_contract(u.coeffs, mu.coeffs), atol=1e-12)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_contract_sesquilinear(seed):
    rng = np.random.default_rng(seed)
    u1, u2 = (Tensor(3, 3, random_complex(rng, (3,) * 3)) for _ in range(2))
    m1, m2 = (Tensor(3, 2, random_complex(rng, (3, 3))) for _ in range(2))
    a, b = complex(*rng.standard_normal(2)), complex(*rng.standard_normal(2))
    lhs = contract(a * u1 + b * u2, m1)
    assert lhs.allclose(a * contract(u1, m1) + b * contract(u2, m1), 1e-12)
    lhs = contract(u1, a * m1 + b * m2)
    rhs = np.conj(a) * contract(u1, m1) + np.conj(b) * contract(u1, m2)
    assert lhs.allclose(rhs, 1e-12)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2**32 - 1), st.integers(1, 3))
def test_symmetry_descent(seed, l):
    rng = np.random.default_rng(seed)
    raw = Tensor(3, 4, random_complex(rng, (3,) * 4))
    mu = Tensor(3, l, random_complex(rng, (3,) * l))
    v, w = symmetrize(raw), antisymmetrize(raw)
    assert contract(v, mu).allclose(contract(v, symmetrize(mu)), 1e-12)
    assert contract(w, mu).allclose(contract(w, antisymmetrize(mu)), 1e-12)
    assert contract(v, mu).symmetry == "symmetric"
    assert contract(w, mu).symmetry == "antisymmetric"


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 2**32 - 1), st.integers(1, 4))
def test_full_contraction_is_per_and_det(seed, k):
    rng = np.random.default_rng(seed)
    fs, gs = random_complex(rng, (k, 4)), random_complex(rng, (k, 4))
    # entry (i, j) pairs g_i against f_j
    pair = np.array([[np.vdot(g, f) for f in fs] for g in gs])
    per = complex(contract(vee_vectors(fs), vee_vectors(gs)).coeffs)
    assert abs(per - permanent(pair) / math.factorial(k)) <= 1e-9 * max(1.0, abs(per))
    det = complex(contract(wedge_vectors(fs), wedge_vectors(gs)).coeffs)
    assert abs(det - determinant(pair) / math.factorial(k)) <= 1e-9 * max(1.0, abs(det))


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2**32 - 1), st.integers(1, 4), st.sampled_from(["symmetric", "antisymmetric"]))
def test_shuffle_formula_agrees(seed, k, kind):
    rng = np.random.default_rng(seed)
    l = int(rng.integers(0, k + 1))
    fs, gs = random_complex(rng, (k, 4)), random_complex(rng, (l, 4))
    prod = vee_vectors if kind == "symmetric" else wedge_vectors
    direct = contract(prod(fs), prod(gs) if l else Tensor.scalar(1.0, 4))
    shuffled = contract_products(fs, gs, kind)
    scale = max(1.0, direct.max_abs())
    assert np.max(np.abs(direct.coeffs - shuffled.coeffs), initial=0.0) <= 1e-9 * scale


def test_single_vector_wedge_contraction_signs():
    # i_g (f1 ^ f2 ^ f3) = 1/3 sum_j (-1)^(j-1) <g|f_j> (wedge of the others)
    rng = np.random.default_rng(8)
    fs, g = random_complex(rng, (3, 4)), random_complex(rng, 4)
    expected = sum(
        (-1) ** j * np.vdot(g, fs[j]) * wedge_vectors([fs[i] for i in range(3) if i != j]).coeffs
        for j in range(3)
    ) / 3
    assert np.allclose(contract(wedge_vectors(fs), vec(g)).coeffs, expected, atol=1e-12)


def test_contraction_matrix_examples():
    m = contraction_matrix(Tensor.basis(2, 1, 2), 2)
    assert np.count_nonzero(m) == 1 and m[0, 1] == 1
    m = contraction_matrix(quartic(), 1)
    assert numerical_rank(m) == 1
    _, _, vh = np.linalg.svd(m)
    f = quartic_factor() / np.linalg.norm(quartic_factor())
    assert abs(abs(np.vdot(vh[0].conj(), f)) - 1) < 1e-12
    assert numerical_rank(contraction_matrix(example4(), 1)) == 4


def test_contraction_matrix_slot_bounds():
    with pytest.raises(OrderMismatch):
        contraction_matrix(Tensor.basis(2, 1, 2), 3)
    with pytest.raises(OrderMismatch):
        contraction_matrix(Tensor.scalar(1.0, 2), 1)
