"""General measurement sets, sampling, and initialization-by-measurement."""

import numpy as np
import pytest

import aqmkit as aq
from oracles import random_measurement_set, random_state

P0 = np.array([[1, 0], [0, 0]], dtype=complex)
P1 = np.array([[0, 0], [0, 1]], dtype=complex)
HALF_I = np.eye(2, dtype=complex) / np.sqrt(2)


def trine_set() -> aq.MeasurementOperatorSet:
    # Three states at polar angles 0, 120, 240 degrees in the X-Z plane.
    ops = []
    for theta in (0.0, 2 * np.pi / 3, 4 * np.pi / 3):
        ket = np.array([np.cos(theta / 2), np.sin(theta / 2)], dtype=complex)
        ops.append(np.sqrt(2 / 3) * np.outer(ket, ket.conj()))
    return aq.MeasurementOperatorSet(1, tuple(ops))


class TestValidation:
    def test_projective_passes(self):
        result = aq.validate_measurement_set(aq.MeasurementOperatorSet(1, (P0, P1)))
        assert result.ok and result.max_deviation < 1e-12

    def test_missing_outcome_fails(self):
        result = aq.validate_measurement_set(aq.MeasurementOperatorSet(1, (P0,)))
        assert not result.ok
        assert abs(result.max_deviation - 1.0) < 1e-12

    def test_identity_halves_pass(self):
        result = aq.validate_measurement_set(aq.MeasurementOperatorSet(1, (HALF_I, HALF_I)))
        assert result.ok

    def test_trine_passes(self):
        assert aq.validate_measurement_set(trine_set()).ok


class TestApplication:
    def test_z_basis_on_plus(self):
        mset = aq.MeasurementOperatorSet(1, (P0, P1))
        branches = aq.measurement_branches(mset, aq.plus_state(1))
        assert [round(p, 12) for p, _ in branches] == [0.5, 0.5]
        assert np.allclose(branches[0][1].amplitudes, [1, 0])
        assert np.allclose(branches[1][1].amplitudes, [0, 1])

    def test_identity_proportional_leaves_state(self):
        rng = np.random.default_rng(0)
        psi = aq.StateVector(random_state(rng, 1))
        mset = aq.MeasurementOperatorSet(1, (HALF_I, HALF_I))
        record = aq.apply_measurement(mset, psi, seed=0)
        assert abs(record.probability - 0.5) < 1e-10
        assert aq.fidelity(record.post_state, psi) >= 1 - 1e-12

    def test_trine_on_zero(self):
        branches = aq.measurement_branches(trine_set(), aq.basis_state(1, 0))
        probs = [p for p, _ in branches]
        assert abs(probs[0] - 2 / 3) < 1e-10
        assert abs(probs[1] - 1 / 6) < 1e-10
        assert abs(probs[2] - 1 / 6) < 1e-10

    def test_probabilities_sum_to_one_random_sets(self):
        rng = np.random.default_rng(1)
        for _ in range(25):
            n = int(rng.integers(1, 3))
            k = int(rng.integers(1, 6))
            mset = aq.MeasurementOperatorSet(n, tuple(random_measurement_set(rng, n, k)))
            assert aq.validate_measurement_set(mset).ok
            psi = aq.StateVector(random_state(rng, n))
            branches = aq.measurement_branches(mset, psi)
            assert abs(sum(p for p, _ in branches) - 1.0) <= 1e-9
            for prob, post in branches:
                if post is not None:
                    assert abs(np.linalg.norm(post.amplitudes) - 1) < 1e-10

    def test_zero_probability_never_sampled(self):
        mset = aq.MeasurementOperatorSet(1, (P0, P1))
        for seed in range(20):
            record = aq.apply_measurement(mset, aq.basis_state(1, 1), seed=seed)
            assert record.outcome_index == 1

    def test_invalid_set_rejected(self):
        with pytest.raises(ValueError, match="complete"):
            aq.apply_measurement(aq.MeasurementOperatorSet(1, (P0,)), aq.basis_state(1, 0))

    def test_sampling_matches_branch_probabilities(self):
        rng = np.random.default_rng(2)
        mset = aq.MeasurementOperatorSet(1, tuple(random_measurement_set(rng, 1, 3)))
        psi = aq.StateVector(random_state(rng, 1))
        expected = [p for p, _ in aq.measurement_branches(mset, psi)]
        stream = np.random.Generator(np.random.PCG64(123))
        counts = np.zeros(3)
        for _ in range(20000):
            counts[aq.apply_measurement(mset, psi, rng=stream).outcome_index] += 1
        assert np.max(np.abs(counts / 20000 - expected)) < 0.02


class TestInitializeViaMeasurement:
    def test_zero_from_one(self):
        out = aq.initialize_via_measurement(aq.basis_state(1, 0), aq.basis_state(1, 1))
        assert aq.fidelity(out, aq.basis_state(1, 0)) >= 1 - 1e-12

    def test_plus_from_zero(self):
        out = aq.initialize_via_measurement(aq.plus_state(1), aq.basis_state(1, 0))
        assert aq.fidelity(out, aq.plus_state(1)) >= 1 - 1e-12

    def test_constructed_set_is_complete_two_qubits(self):
        rng = np.random.default_rng(3)
        target = aq.StateVector(random_state(rng, 2))
        from aqmkit.measure import initialization_set
        assert aq.validate_measurement_set(initialization_set(target)).ok

    def test_every_branch_prepares_target(self):
        rng = np.random.default_rng(4)
        target = aq.StateVector(random_state(rng, 1))
        source = aq.StateVector(random_state(rng, 1))
        for seed in range(10):
            out = aq.initialize_via_measurement(target, source, seed=seed)
            assert aq.fidelity(out, target) >= 1 - 1e-12
