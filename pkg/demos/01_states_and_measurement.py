"""States, circuits, and general measurements
=============================================

Build a Bell pair, sample it, then apply a three-outcome measurement that a
plain projective readout cannot express directly.
"""

import numpy as np

import aqmkit as aq
from aqmkit import gates

# A state is a unit vector over 2^n amplitudes; qubit q owns bit 2^q.
zero = aq.basis_state(1, 0)
plus = aq.plus_state(1)
print("|0> =", zero.amplitudes.real)
print("|+> =", np.round(plus.amplitudes.real, 4))
print("|+> (x) |1> =", np.round(aq.tensor_product(plus, aq.basis_state(1, 1)).amplitudes, 4))

# Circuits are instruction lists; apply_circuit threads a state through them.
bell = aq.Circuit(2).add("H", 0).add("CNOT", 0, 1)
state, _ = aq.apply_circuit(bell)
print("\nBell state:", np.round(state.amplitudes, 4))

# Sampling: MEASURE collapses one qubit; identical seeds replay identically.
bell.add("MEASURE", 0).add("MEASURE", 1)
rng = np.random.Generator(np.random.PCG64(0))
counts = {}
for _ in range(2000):
    _, records = aq.apply_circuit(bell, rng=rng)
    bits = "".join(str(r.outcome_index) for r in records)
    counts[bits] = counts.get(bits, 0) + 1
print("2000 shots:", dict(sorted(counts.items())), "(only correlated outcomes)")

# A general measurement: three symmetric states in the X-Z plane.
ops = []
for theta in (0.0, 2 * np.pi / 3, 4 * np.pi / 3):
    ket = np.array([np.cos(theta / 2), np.sin(theta / 2)], dtype=complex)
    ops.append(np.sqrt(2 / 3) * np.outer(ket, ket.conj()))
trine = aq.MeasurementOperatorSet(1, tuple(ops))
print("\ntrine completeness:", aq.validate_measurement_set(trine))
print("trine on |0>:", [round(p, 4) for p, _ in aq.measurement_branches(trine, zero)])

# Initialization is itself a measurement whose every branch lands on the target.
prepared = aq.initialize_via_measurement(plus, aq.basis_state(1, 1))
print("\nprepare |+> from |1> by measurement, fidelity:",
      round(aq.fidelity(prepared, plus), 12))

# Phase-blind operator comparison: T equals RZ(pi/4) up to global phase.
print("distance(T, RZ(pi/4)) =", aq.phase_invariant_distance(gates.T, gates.rz(np.pi / 4)))
