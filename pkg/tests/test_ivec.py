import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from iopsim import linalg
from iopsim.errors import DimensionMismatch, NotPure, ZeroVector
from iopsim.ivec import InfoVector, from_iop, gauge_fix, superpose, to_iop
from iopsim.iop import is_pure, max_iop, pure_iop

from conftest import random_pure


class TestGaugeFix:
    def test_normalizes(self):
        v = gauge_fix([3.0, 4.0])
        assert np.isclose(np.linalg.norm(v.amplitudes), 1.0)

    def test_first_component_real_positive(self):
        v = gauge_fix([1j, 1.0])
        assert v.amplitudes[0].real > 0
        assert abs(v.amplitudes[0].imag) <= 1e-15

    def test_leading_zeros_skipped(self):
        v = gauge_fix([0.0, -1.0, 1.0])
        assert v.amplitudes[1].real > 0

    def test_phase_families_collapse(self):
        base = np.array([1.0, 1j]) / math.sqrt(2)
        for phase in np.exp(1j * np.linspace(0, 2 * math.pi, 7)):
            v = gauge_fix(phase * base)
            np.testing.assert_allclose(v.amplitudes, gauge_fix(base).amplitudes,
                                       atol=1e-12)

    def test_zero_vector_rejected(self):
        with pytest.raises(ZeroVector):
            gauge_fix([0.0, 0.0])


class TestRoundTrip:
    def test_to_iop_is_pure(self):
        assert is_pure(to_iop(gauge_fix([1.0, 1j, 0.5])))

    def test_phase_drops_out(self):
        a = to_iop(gauge_fix([1.0, 1j]))
        b = to_iop(InfoVector(dim=2, amplitudes=np.array([1.0, 1j]) * np.exp(0.3j)
                              / math.sqrt(2)))
        assert linalg.frobenius_dist(a.matrix, b.matrix) <= 1e-12

    @given(seed=st.integers(0, 2**32 - 1), d=st.integers(2, 8))
    @settings(max_examples=60, deadline=None)
    def test_operator_vector_operator(self, seed, d):
        rho = random_pure(np.random.default_rng(seed), d)
        again = to_iop(from_iop(rho))
        assert linalg.frobenius_dist(again.matrix, rho.matrix) <= 1e-9

    @given(seed=st.integers(0, 2**32 - 1), d=st.integers(2, 8))
    @settings(max_examples=60, deadline=None)
    def test_vector_operator_vector(self, seed, d):
        rng = np.random.default_rng(seed)
        v = gauge_fix(rng.normal(size=d) + 1j * rng.normal(size=d))
        again = from_iop(to_iop(v))
        assert np.linalg.norm(again.amplitudes - v.amplitudes) <= 1e-8

    def test_mixed_operator_rejected(self):
        with pytest.raises(NotPure):
            from_iop(max_iop(2))


class TestSuperpose:
    def test_equal_weights(self):
        up = gauge_fix([1.0, 0.0])
        down = gauge_fix([0.0, 1.0])
        v = superpose([(1.0, up), (1.0, down)])
        np.testing.assert_allclose(np.abs(v.amplitudes),
                                   [1 / math.sqrt(2)] * 2, atol=1e-12)

    def test_relative_phase_matters(self):
        up = gauge_fix([1.0, 0.0])
        down = gauge_fix([0.0, 1.0])
        plus = to_iop(superpose([(1.0, up), (1.0, down)]))
        minus = to_iop(superpose([(1.0, up), (-1.0, down)]))
        assert linalg.frobenius_dist(plus.matrix, minus.matrix) > 0.5

    def test_superposition_differs_from_mixture(self):
        up, down = pure_iop([1, 0]), pure_iop([0, 1])
        mix = 0.5 * up.matrix + 0.5 * down.matrix
        sup = to_iop(superpose([(1.0, from_iop(up)), (1.0, from_iop(down))]))
        assert linalg.frobenius_dist(sup.matrix, mix) > 0.5

    def test_cancellation_rejected(self):
        up = gauge_fix([1.0, 0.0])
        with pytest.raises(ZeroVector):
            superpose([(1.0, up), (-1.0, up)])

    def test_mixed_dims_rejected(self):
        with pytest.raises(DimensionMismatch):
            superpose([(1.0, gauge_fix([1.0, 0.0])),
                       (1.0, gauge_fix([1.0, 0.0, 0.0]))])
