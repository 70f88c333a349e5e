"""Approximating rotations over a discrete gate set
====================================================

When a device offers only a finite single-qubit alphabet, generic rotations
are approximated by gate words. The search enumerates words breadth-first,
so the result is the shortest word within tolerance and the best achievable
distance never worsens with depth.
"""

import numpy as np

import aqmkit as aq
from aqmkit import gates

# RZ(pi/4) is the T gate up to global phase: a one-letter word suffices.
request = aq.ApproximationRequest(gates.rz(np.pi / 4), ("H", "T"), 1e-12, 4)
print("RZ(pi/4) over {H, T}:", aq.approximate_single_qubit(request))

# A generic target needs depth. Watch the best distance shrink.
rng = np.random.default_rng(1)
z = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
q, r = np.linalg.qr(z)
target = q * (np.diag(r) / np.abs(np.diag(r)))
print("\nrandom target, alphabet {H, T, TDG}:")
for depth in (0, 2, 4, 6, 8, 10, 12):
    result = aq.approximate_single_qubit(
        aq.ApproximationRequest(target, ("H", "T", "TDG"), 1e-13, depth))
    print(f"  depth {depth:>2}: best distance {result.distance:.5f} "
          f"word length {len(result.word)}")

# Close-to-identity targets are a known blind spot of short words: for
# RZ(0.2) the empty word (identity) stays optimal through depth 12.
result = aq.approximate_single_qubit(
    aq.ApproximationRequest(gates.rz(0.2), ("H", "T"), 1e-13, 12))
print(f"\nRZ(0.2) over {{H, T}} at depth 12: best word {result.word!r}, "
      f"distance {result.distance:.5f} (identity remains closest)")
