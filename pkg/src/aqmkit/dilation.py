"""Realizing general measurements with ancilla qubits.

A K-outcome measurement {m_k} on n qubits becomes one unitary on the system
plus ceil(log2 K) ancillas followed by a projective computational-basis
readout of the ancillas: the isometry V|psi> = sum_k (m_k|psi>) (x) |k> is
completed to a unitary by Gram-Schmidt over the standard basis (deterministic
column order), and ancilla outcome k reproduces outcome k of the direct
measurement exactly, post-state included.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .measure import MeasurementOperatorSet, validate_measurement_set
from .simulate import MeasurementRecord, ZERO_PROB
from .state import StateVector

_GS_TOL = 1e-9


def _complete_columns(columns: np.ndarray) -> np.ndarray:
    """Extend orthonormal columns to a full unitary via Gram-Schmidt."""
    dim = columns.shape[0]
    cols = [columns[:, j] for j in range(columns.shape[1])]
    for i in range(dim):
        if len(cols) == dim:
            break
        vec = np.zeros(dim, dtype=complex)
        vec[i] = 1.0
        for _ in range(2):  # re-orthogonalize for numerical stability
            for existing in cols:
                vec = vec - np.vdot(existing, vec) * existing
        norm = np.linalg.norm(vec)
        if norm > _GS_TOL:
            cols.append(vec / norm)
    if len(cols) != dim:
        raise RuntimeError("column completion failed to span the space")
    return np.column_stack(cols)


@dataclass(frozen=True)
class DilatedMeasurement:
    """Unitary-plus-ancilla realization of a general measurement.

    The joint register places the ancillas in the high-significance qubits,
    so joint amplitudes index as k * 2**n + s for ancilla value k and system
    basis state s.
    """

    mset: MeasurementOperatorSet
    unitary: np.ndarray
    num_system_qubits: int
    num_ancillas: int
    outcome_map: dict[int, int]

    def _joint_branches(self, state: StateVector) -> np.ndarray:
        if state.num_qubits != self.num_system_qubits:
            raise ValueError("state qubit count does not match the measurement")
        dim = 2 ** self.num_system_qubits
        joint = np.zeros(self.unitary.shape[0], dtype=complex)
        joint[:dim] = state.amplitudes  # ancillas initialized to |0...0>
        joint = self.unitary @ joint
        return joint.reshape(-1, dim)  # row k = unnormalized branch of ancilla value k

    def branches(self, state: StateVector) -> list[tuple[float, StateVector | None]]:
        """All K outcome probabilities and post-states, deterministically."""
        rows = self._joint_branches(state)
        result: list[tuple[float, StateVector | None]] = []
        for k in sorted(self.outcome_map):
            branch = rows[k]
            prob = float(np.real(np.vdot(branch, branch)))
            if prob < ZERO_PROB:
                result.append((prob, None))
            else:
                result.append((prob, StateVector(branch / np.sqrt(prob))))
        return result

    def run(self, state: StateVector, seed: int = 0,
            rng: np.random.Generator | None = None) -> MeasurementRecord:
        """Apply the dilation unitary and read the ancillas projectively."""
        branch_list = self.branches(state)
        probs = np.array([p for p, _ in branch_list])
        live = np.flatnonzero(probs >= ZERO_PROB)
        if rng is None:
            rng = np.random.Generator(np.random.PCG64(seed))
        r = rng.random() * float(np.sum(probs[live]))
        cumulative = 0.0
        choice = int(live[-1])
        for k in live:
            cumulative += probs[k]
            if r < cumulative:
                choice = int(k)
                break
        prob, post = branch_list[choice]
        assert post is not None
        return MeasurementRecord(self.outcome_map[choice], prob, post)


def synthesize_measurement(mset: MeasurementOperatorSet) -> DilatedMeasurement:
    """Dilate a general measurement into unitary + projective ancilla readout."""
    check = validate_measurement_set(mset)
    if not check.ok:
        raise ValueError(f"measurement set is not complete (deviation {check.max_deviation:.3e})")
    k_outcomes = mset.num_outcomes
    num_ancillas = max(1, int(np.ceil(np.log2(k_outcomes)))) if k_outcomes > 1 else 0
    dim = 2 ** mset.num_qubits
    total = dim * 2 ** num_ancillas
    isometry = np.zeros((total, dim), dtype=complex)
    for k, op in enumerate(mset.operators):
        isometry[k * dim:(k + 1) * dim, :] = op
    unitary = _complete_columns(isometry)
    outcome_map = {k: k for k in range(k_outcomes)}
    return DilatedMeasurement(mset, unitary, mset.num_qubits, num_ancillas, outcome_map)
