import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from srank import (
    NotNormalized,
    Tensor,
    UnsupportedClass,
    ZeroTensor,
    antisymmetrize,
    epsilon_context,
    is_simple,
    overlap_score,
    quadratic_witness,
    random_unitary,
    s_rank,
    schmidt,
    symmetrize,
    tensor_square_test,
    wedge_vectors,
)
from srank.entanglement import lexicographic_witness_search

from goldens import ALPHA1, e, example3, example4, quartic, vee_e1_e2
from oracles import brute_force_s_rank, outer, random_complex
from sampling import random_state


def apply_local_unitary(u: Tensor, U: np.ndarray) -> Tensor:
    arr = u.coeffs
    for axis in range(u.k):
        arr = np.moveaxis(np.tensordot(U, arr, axes=([1], [axis])), 0, axis)
    return Tensor(u.n, u.k, arr, u.symmetry, u.tableau)


def test_s_rank_goldens():
    assert s_rank(vee_e1_e2()) == 2
    assert s_rank(quartic()) == 1
    assert s_rank(example3()) == 2
    assert s_rank(example4()) == 4


def test_s_rank_goldens_agree_with_brute_force():
    for u in (vee_e1_e2(), quartic(), example3(), example4()):
        assert brute_force_s_rank(u.coeffs) == s_rank(u)


def test_s_rank_zero_tensor():
    with pytest.raises(ZeroTensor):
        s_rank(Tensor(3, 2, np.zeros((3, 3))))


def test_is_simple_examples():
    f = np.array([1.0, 2j, -1])
    v = is_simple(Tensor.from_array(outer(f, f, f)))
    assert v.simple and v.s_rank == 1 and v.witness is None
    assert v.score == pytest.approx(1.0)
    v = is_simple(example3())
    assert v.simple and v.minimal_rank == 2 and v.witness is None
    assert example3().allclose(wedge_vectors([e(2, 3), e(3, 3) - e(1, 3)]), 1e-15)
    v = is_simple(example4())
    assert not v.simple and v.s_rank == 4 and v.witness is not None


def test_general_tensor_takes_max_over_slots():
    # e1 x (e1 x e1 + e2 x e2): slot 1 has rank 1, slots 2 and 3 have rank 2
    arr = outer(e(1, 2), e(1, 2), e(1, 2)) + outer(e(1, 2), e(2, 2), e(2, 2))
    u = Tensor(2, 3, arr)
    assert s_rank(u) == 2
    assert brute_force_s_rank(arr) == 2
    assert not is_simple(u).simple


def test_tensor_square_examples():
    rng = np.random.default_rng(0)
    assert tensor_square_test(Tensor.from_array(outer(*random_complex(rng, (2, 3)))))
    assert not tensor_square_test(vee_e1_e2())
    assert tensor_square_test(example3())
    assert not tensor_square_test(example4())


def test_tensor_square_rejects_young():
    from srank import alpha_simple

    u = alpha_simple(ALPHA1, [e(1, 2), e(2, 2)])
    with pytest.raises(UnsupportedClass):
        tensor_square_test(u)


def test_overlap_score_examples():
    rng = np.random.default_rng(1)
    p = Tensor.from_array(outer(*random_complex(rng, (3, 2)))).normalized()
    assert overlap_score(p) == pytest.approx(1.0, abs=1e-12)
    assert overlap_score(vee_e1_e2() * np.sqrt(2)) == pytest.approx(0.5, abs=1e-15)
    bell = (Tensor.basis(2, 1, 1) + Tensor.basis(2, 2, 2)) / np.sqrt(2)
    assert overlap_score(bell) == pytest.approx(0.5, abs=1e-15)


def test_overlap_score_errors():
    with pytest.raises(NotNormalized):
        overlap_score(vee_e1_e2())
    with pytest.raises(UnsupportedClass):
        overlap_score(example3().normalized())


def test_quadratic_witness_goldens():
    w = quadratic_witness(vee_e1_e2())
    assert w.i == (1, 1) and w.j == (2, 2)
    assert w.lhs == 0 and w.rhs == pytest.approx(0.25)
    assert quadratic_witness(quartic()) is None
    assert quadratic_witness(example3()) is None
    w = quadratic_witness(example4())
    assert (w.i, w.j) == ((1, 2, 3), (4,))
    assert str(w) == "(1,2,3|4)"
    assert w.value == pytest.approx(1 / 12, abs=1e-12)


def test_quartic_products_depend_only_on_count_of_threes():
    c = quartic().coeffs
    for i in np.ndindex(*c.shape):
        threes = sum(1 for x in i if x == 2)
        assert c[i] == pytest.approx(2.0**threes)


def test_witness_search_matches_loop_oracle():
    rng = np.random.default_rng(2)
    cases = [vee_e1_e2(), example3(), example4(), quartic()]
    for _ in range(5):
        cases.append(symmetrize(Tensor(2, 3, random_complex(rng, (2, 2, 2)))))
        cases.append(Tensor(2, 2, random_complex(rng, (2, 2))))
        cases.append(antisymmetrize(Tensor(3, 2, random_complex(rng, (3, 3)))))
    for u in cases:
        fast, slow = quadratic_witness(u), lexicographic_witness_search(u)
        if slow is None:
            assert fast is None
        else:
            assert (fast.i, fast.j, fast.slot) == (slow.i, slow.j, slow.slot)
            assert fast.value == pytest.approx(slow.value, abs=1e-12)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32 - 1), st.sampled_from(["general", "symmetric", "antisymmetric"]))
def test_simplicity_tests_agree(seed, klass):
    rng = np.random.default_rng(seed)
    u, built_simple = random_state(rng, klass)
    verdict = is_simple(u)
    square = tensor_square_test(u)
    no_witness = quadratic_witness(u) is None
    results = {verdict.simple, square, no_witness}
    if klass != "antisymmetric":
        results.add(abs(overlap_score(u.normalized()) - 1) <= 1e-7)
    assert len(results) == 1
    if built_simple:
        assert verdict.simple


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 2**32 - 1), st.sampled_from(["general", "symmetric", "antisymmetric"]))
def test_s_rank_matches_brute_force(seed, klass):
    rng = np.random.default_rng(seed)
    u, _ = random_state(rng, klass)
    assert s_rank(u) == brute_force_s_rank(u.coeffs)


def test_constructive_soundness():
    rng = np.random.default_rng(3)
    for k in range(1, 5):
        f = random_complex(rng, 3)
        assert s_rank(Tensor.from_array(outer(*([f] * k)))) == 1
        assert s_rank(symmetrize(Tensor.from_array(outer(*([f] * k))))) == 1
        if k <= 4:
            fs = random_complex(rng, (k, 4))
            assert s_rank(antisymmetrize(Tensor.from_array(outer(*fs)))) == k


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2**32 - 1), st.integers(2, 8))
def test_schmidt_rank_equals_s_rank(seed, n):
    rng = np.random.default_rng(seed)
    r = int(rng.integers(1, n + 1))
    a = random_complex(rng, (n, r)) @ random_complex(rng, (r, n))
    u = Tensor(n, 2, a)
    assert schmidt(u).rank == s_rank(u) == r


def test_witness_survives_small_perturbation():
    rng = np.random.default_rng(4)
    for u in (example4(), vee_e1_e2()):
        noise = 1e-7 * random_complex(rng, u.coeffs.shape)
        if u.symmetry == "antisymmetric":
            noise = antisymmetrize(Tensor(u.n, u.k, noise)).coeffs
        else:
            noise = symmetrize(Tensor(u.n, u.k, noise)).coeffs
        perturbed = Tensor(u.n, u.k, u.coeffs + noise, u.symmetry)
        assert quadratic_witness(perturbed) is not None


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2**32 - 1), st.sampled_from(["general", "symmetric", "antisymmetric"]))
def test_s_rank_invariances(seed, klass):
    rng = np.random.default_rng(seed)
    u, _ = random_state(rng, klass)
    c = complex(*rng.standard_normal(2))
    assert s_rank(c * u) == s_rank(u)
    U = random_unitary(u.n, rng)
    assert s_rank(apply_local_unitary(u, U)) == s_rank(u)


def test_epsilon_controls_rank_decisions():
    u = Tensor(2, 2, np.diag([1.0, 1e-8]))
    assert s_rank(u) == 2
    with epsilon_context(1e-6):
        assert s_rank(u) == 1
        assert is_simple(u).simple
        assert quadratic_witness(u) is None
        assert tensor_square_test(u)
