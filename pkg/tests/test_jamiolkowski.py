import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from srank import (
    FourLegTensor,
    Tensor,
    WrongClass,
    ZeroTensor,
    classify_sa,
    jam_J,
    jam_J1,
    jam_J2,
    map_rank,
    pure_state,
    random_unitary,
    slater,
    state_to_map,
    vee_vectors,
)
from srank.jamiolkowski import expected_map_rank, jam_J1_inverse, jam_J2_inverse

from goldens import e, example4, wedge_sum
from oracles import random_complex
from sampling import slater_state


def random_phi(rng, n=3):
    return FourLegTensor(random_complex(rng, (n,) * 4))


def test_J_on_basis_element():
    arr = np.zeros((4,) * 4)
    arr[0, 1, 2, 3] = 1.0
    out = jam_J(FourLegTensor(arr)).coeffs
    assert out[0, 3, 2, 1] == 1.0
    assert np.count_nonzero(out) == 1


def test_leg_permutations():
    rng = np.random.default_rng(0)
    phi = random_phi(rng)
    assert jam_J(jam_J(phi)).allclose(phi, 0)
    assert jam_J2(jam_J(phi)).allclose(jam_J1(phi), 0)
    assert jam_J2_inverse(jam_J1(phi)).allclose(jam_J(phi), 0)
    assert jam_J1_inverse(jam_J1(phi)).allclose(phi, 0)
    lam = phi.coeffs
    assert jam_J1(phi).coeffs[1, 2, 0, 2] == lam[1, 2, 2, 0]


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 2**32 - 1), st.integers(1, 4))
def test_maps_are_norm_preserving(seed, n):
    rng = np.random.default_rng(seed)
    phi = random_phi(rng, n)
    for m in (jam_J, jam_J1, jam_J2):
        assert m(phi).norm() == pytest.approx(phi.norm(), rel=1e-12)
    assert jam_J2(jam_J(phi)).allclose(jam_J1(phi), 1e-12)


def test_classify_sa():
    rng = np.random.default_rng(1)
    assert classify_sa(random_phi(rng)) == "none"
    phi = random_phi(rng).coeffs
    sa = phi + np.transpose(phi, (2, 3, 0, 1))
    plus = FourLegTensor(sa + np.transpose(sa, (0, 3, 2, 1)))
    minus = FourLegTensor(sa - np.transpose(sa, (0, 3, 2, 1)))
    assert classify_sa(plus) == "sa_plus"
    assert classify_sa(minus) == "sa_minus"
    assert classify_sa(FourLegTensor(sa)) == "none"


def test_bosonic_and_fermionic_maps_are_classified():
    rng = np.random.default_rng(2)
    assert classify_sa(state_to_map(slater_state(rng, 4, 2, "symmetric"))) == "sa_plus"
    assert classify_sa(state_to_map(slater_state(rng, 4, 2, "antisymmetric"))) == "sa_minus"


def test_rank_goldens():
    assert map_rank(state_to_map(vee_vectors([e(1), e(1)]))) == 1
    assert map_rank(state_to_map(wedge_sum([(1, 2)], 4))) == 4
    v = Tensor(4, 2, (np.outer(e(1), e(1)) + np.outer(e(2), e(2))) / np.sqrt(2), "symmetric")
    assert slater(v).rank == 2
    assert map_rank(state_to_map(v)) == 4
    assert map_rank(state_to_map(example4().normalized())) == 16


@pytest.mark.parametrize("kind", ["symmetric", "antisymmetric"])
@pytest.mark.parametrize("r", [1, 2, 3])
def test_rank_law(kind, r):
    rng = np.random.default_rng(10 * r + len(kind))
    for n in range(2 * r if kind == "antisymmetric" else r, 9):
        v = slater_state(rng, n, r, kind)
        assert map_rank(state_to_map(v)) == expected_map_rank(kind, r)


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 2**32 - 1), st.integers(2, 6), st.sampled_from(["symmetric", "antisymmetric"]))
def test_round_trip_to_pure_state(seed, n, kind):
    rng = np.random.default_rng(seed)
    a = random_complex(rng, (n, n))
    a = a + a.T if kind == "symmetric" else a - a.T
    v = Tensor(n, 2, a, kind)
    phi = state_to_map(v)
    assert jam_J1(phi).allclose(pure_state(v), 1e-10)
    # the direct coefficient formula: Phi[i, j, k, l] = v^{ik} conj(v^{jl}) / |v|^2
    direct = np.einsum("ik,jl->ijkl", a, a.conj()) / np.linalg.norm(a) ** 2
    assert np.allclose(phi.coeffs, direct, atol=1e-10)


def test_state_to_map_errors():
    with pytest.raises(WrongClass):
        state_to_map(Tensor.basis(2, 1, 2))
    with pytest.raises(ZeroTensor):
        state_to_map(Tensor(2, 2, np.zeros((2, 2)), "symmetric"))


def test_json_has_legs():
    phi = state_to_map(wedge_sum([(1, 2)], 2))
    data = json.loads(json.dumps(phi.to_dict()))
    assert data["legs"] == ["out1", "in1", "out2", "in2"]
    assert data["k"] == 4
    assert FourLegTensor.from_dict(data).allclose(phi, 1e-15)


def test_out_out_layout_is_the_state_itself():
    # grouping (out1, out2) against (in1, in2) gives |v><v|, rank 1 for every state,
    # so the operator rank must be read with rows (out1, in1)
    rng = np.random.default_rng(3)
    v = slater_state(rng, 5, 2, "antisymmetric")
    lam = state_to_map(v).coeffs
    rho = np.transpose(lam, (0, 2, 1, 3)).reshape(25, 25)
    assert np.linalg.matrix_rank(rho, tol=1e-9) == 1
    assert map_rank(state_to_map(v)) == 16
