import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from iopsim import linalg
from iopsim.errors import (
    NotPositive,
    ResultNotIOperator,
    SupportViolation,
    TraceNotOne,
)
from iopsim.iop import (
    Contraction,
    Mixture,
    contract,
    contraction_from_max,
    contraction_from_mixture,
    decompose,
    entropy,
    is_pure,
    max_iop,
    pure_iop,
    validate,
)

from conftest import random_iop, random_pure, random_unitary


class TestValidate:
    def test_accepts_maximum_operator(self):
        rho = validate(np.eye(2) / 2)
        assert rho.dim == 2

    def test_rejects_bad_trace(self):
        with pytest.raises(TraceNotOne):
            validate(np.diag([0.7, 0.4]))

    def test_rejects_indefinite(self):
        # eigenvalues 1.1 and -0.1
        with pytest.raises(NotPositive):
            validate(np.array([[0.5, 0.6], [0.6, 0.5]]))

    def test_clamps_tiny_negative_eigenvalue(self):
        eps = 5e-11
        rho = validate(np.diag([1.0 + eps, -eps]))
        w = np.linalg.eigvalsh(rho.matrix)
        assert w[0] >= 0
        assert np.isclose(np.trace(rho.matrix).real, 1.0)
        # clamping moves no eigenvalue by more than the tolerance
        assert np.all(np.abs(w - np.array([0.0, 1.0 + eps])) <= 1e-10)


class TestMaxIop:
    @pytest.mark.parametrize("d", [1, 2, 3, 7])
    def test_is_uniform(self, d):
        rho = max_iop(d)
        np.testing.assert_allclose(rho.matrix, np.eye(d) / d)

    def test_equals_uniform_projector_mixture(self):
        # (1/3)(sum of the three s_z eigenprojectors) is the same operator
        parts = [pure_iop(e) for e in np.eye(3)]
        total = sum(p.matrix for p in parts) / 3
        np.testing.assert_allclose(total, max_iop(3).matrix, atol=1e-15)


class TestEntropy:
    def test_pure_is_zero(self, rng):
        assert entropy(random_pure(rng, 5)) <= 1e-12

    @pytest.mark.parametrize("d", [2, 3, 8])
    def test_max_is_log_d(self, d):
        assert np.isclose(entropy(max_iop(d)), math.log(d))

    def test_two_level_mixture(self):
        assert np.isclose(entropy(validate(np.diag([0.5, 0.5, 0.0]))),
                          math.log(2))

    @given(seed=st.integers(0, 2**32 - 1), d=st.integers(2, 8))
    @settings(max_examples=60, deadline=None)
    def test_range_and_unitary_invariance(self, seed, d):
        rng = np.random.default_rng(seed)
        rho = random_iop(rng, d)
        e = entropy(rho)
        assert -1e-12 <= e <= math.log(d) + 1e-9
        u = random_unitary(rng, d)
        rotated = validate(u.matrix @ rho.matrix @ u.matrix.conj().T)
        assert abs(entropy(rotated) - e) <= 1e-9


class TestIsPure:
    def test_random_projector(self, rng):
        assert is_pure(random_pure(rng, 4))

    def test_max_is_not(self):
        assert not is_pure(max_iop(2))

    def test_near_pure_mixture(self):
        # tr rho^2 = 0.998002, outside the tolerance
        assert not is_pure(validate(np.diag([0.999, 0.001])))


class TestContract:
    def test_unitary_is_contracting(self, rng):
        rho = random_iop(rng, 4)
        u = random_unitary(rng, 4)
        out = contract(rho, Contraction(k=u.matrix, source_dim=4, target_dim=4))
        assert np.isclose(np.trace(out.matrix).real, 1.0)

    def test_identity_fixes(self, rng):
        rho = random_iop(rng, 3)
        out = contract(rho, Contraction(k=np.eye(3), source_dim=3, target_dim=3))
        np.testing.assert_allclose(out.matrix, rho.matrix, atol=1e-12)

    def test_diagonal_rescale(self):
        k = Contraction(k=np.diag([math.sqrt(1.4), math.sqrt(0.6)]),
                        source_dim=2, target_dim=2)
        out = contract(max_iop(2), k)
        np.testing.assert_allclose(out.matrix, np.diag([0.7, 0.3]), atol=1e-12)

    def test_non_contracting_operator_rejected(self, rng):
        rho = random_iop(rng, 2)
        k = Contraction(k=2 * np.eye(2), source_dim=2, target_dim=2)
        with pytest.raises(ResultNotIOperator):
            contract(rho, k)


class TestContractionFromMax:
    def test_self_contraction(self):
        k = contraction_from_max(max_iop(3))
        np.testing.assert_allclose(k.k @ k.k.conj().T, np.eye(3), atol=1e-12)

    def test_diagonal_target(self):
        k = contraction_from_max(validate(np.diag([0.7, 0.3])))
        np.testing.assert_allclose(k.k, np.diag([math.sqrt(1.4), math.sqrt(0.6)]),
                                   atol=1e-12)

    def test_pure_target(self):
        k = contraction_from_max(pure_iop([1, 0]))
        np.testing.assert_allclose(k.k, np.diag([math.sqrt(2), 0.0]), atol=1e-12)

    @given(seed=st.integers(0, 2**32 - 1), d=st.integers(2, 8))
    @settings(max_examples=100, deadline=None)
    def test_round_trip(self, seed, d):
        target = random_iop(np.random.default_rng(seed), d)
        k = contraction_from_max(target)
        out = contract(max_iop(d), k)
        assert linalg.frobenius_dist(out.matrix, target.matrix) <= 1e-9


class TestContractionFromMixture:
    def test_component_recovery(self):
        plus = pure_iop([1, 0, 0])
        minus = pure_iop([0, 0, 1])
        whole = validate((plus.matrix + minus.matrix) / 2)
        for part in (plus, minus):
            k = contraction_from_mixture(whole, part)
            out = contract(whole, k)
            assert linalg.frobenius_dist(out.matrix, part.matrix) <= 1e-10

    def test_whole_equals_part(self, rng):
        rho = random_iop(rng, 4)
        k = contraction_from_mixture(rho, rho)
        out = contract(rho, k)
        assert linalg.frobenius_dist(out.matrix, rho.matrix) <= 1e-10

    def test_disjoint_support_rejected(self):
        whole = validate(np.diag([0.5, 0.5, 0.0]))
        part = pure_iop([0, 0, 1])
        with pytest.raises(SupportViolation):
            contraction_from_mixture(whole, part)

    @given(seed=st.integers(0, 2**32 - 1), d=st.integers(2, 6))
    @settings(max_examples=80, deadline=None)
    def test_random_mixture_round_trip(self, seed, d):
        rng = np.random.default_rng(seed)
        comps = [random_iop(rng, d) for _ in range(3)]
        weights = rng.dirichlet(np.ones(3))
        whole = validate(sum(w * c.matrix for w, c in zip(weights, comps)))
        for part in comps:
            k = contraction_from_mixture(whole, part)
            out = contract(whole, k)
            assert linalg.frobenius_dist(out.matrix, part.matrix) <= 1e-8


class TestMixture:
    def test_decompose_returns_pairs(self):
        plus = pure_iop([1, 0, 0])
        minus = pure_iop([0, 0, 1])
        mix = Mixture(weights=(0.5, 0.5), components=(plus, minus))
        pairs = decompose(mix)
        assert [w for w, _ in pairs] == [0.5, 0.5]

    def test_single_component(self, rng):
        rho = random_iop(rng, 3)
        pairs = decompose(Mixture(weights=(1.0,), components=(rho,)))
        assert pairs == [(1.0, rho)]

    def test_weights_from_unnormalized_traces(self, rng):
        a = 0.25 * random_iop(rng, 2).matrix
        b = 0.75 * random_iop(rng, 2).matrix
        mix = Mixture.from_unnormalized([a, b])
        assert np.allclose(mix.weights, [0.25, 0.75])

    def test_remix_is_identity(self, rng):
        comps = tuple(random_iop(rng, 3) for _ in range(4))
        weights = (0.1, 0.2, 0.3, 0.4)
        mix = Mixture(weights=weights, components=comps)
        remixed = sum(w * c.matrix for w, c in decompose(mix))
        assert linalg.frobenius_dist(remixed, mix.combined().matrix) <= 1e-10

    def test_rejects_zero_weight(self, rng):
        with pytest.raises(ValueError):
            Mixture(weights=(1.0, 0.0),
                    components=(random_iop(rng, 2), random_iop(rng, 2)))
