"""General measurements from projective hardware
=================================================

Devices that only read the computational basis can still realize any
complete measurement: attach ancillas, apply one joint unitary, read the
ancillas projectively. The synthesized form reproduces the direct
measurement outcome for outcome.
"""

import numpy as np

import aqmkit as aq

# The three-outcome trine measurement on one qubit.
ops = []
for theta in (0.0, 2 * np.pi / 3, 4 * np.pi / 3):
    ket = np.array([np.cos(theta / 2), np.sin(theta / 2)], dtype=complex)
    ops.append(np.sqrt(2 / 3) * np.outer(ket, ket.conj()))
trine = aq.MeasurementOperatorSet(1, tuple(ops))

dilated = aq.synthesize_measurement(trine)
print(f"three outcomes -> {dilated.num_ancillas} ancilla(s), joint unitary "
      f"{dilated.unitary.shape[0]}x{dilated.unitary.shape[1]}")

state = aq.basis_state(1, 0)
direct = aq.measurement_branches(trine, state)
synth = dilated.branches(state)
print("\noutcome   direct p   synthesized p   post-state fidelity")
for k, ((p, post), (q, post2)) in enumerate(zip(direct, synth)):
    fid = aq.fidelity(post, post2) if post is not None else float("nan")
    print(f"   {k}      {p:.6f}     {q:.6f}        {fid:.12f}")

# Sampling through the dilation follows the same seeded stream.
print("\nsampled outcomes, seeds 0..9:",
      [dilated.run(state, seed=s).outcome_index for s in range(10)])
