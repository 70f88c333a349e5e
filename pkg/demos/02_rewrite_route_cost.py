"""Compiling around missing gates and missing couplings
========================================================

A device with a limited gate set still runs any circuit after exact
rewriting; a device with a sparse coupling graph still runs it after SWAP
routing. Both cost extra gates and time, which the cost model accounts for.
"""

import aqmkit as aq
from aqmkit.simulate import circuit_unitary

basis = {"H", "T", "TDG", "S", "SDG", "CNOT"}

# SWAP is three CNOTs; CZ is a Hadamard-sandwiched CNOT; CCX expands to the
# standard 15-instruction form. All rewrites are exact up to global phase.
for demo in (aq.Circuit(2).add("SWAP", 0, 1),
             aq.Circuit(2).add("CZ", 0, 1),
             aq.Circuit(3).add("CCX", 0, 1, 2)):
    out = aq.rewrite_to_basis(demo, basis)
    dist = aq.phase_invariant_distance(circuit_unitary(out), circuit_unitary(demo))
    print(f"{demo.instructions[0].gate:<5} -> {len(out.instructions):>2} gates, "
          f"distance {dist:.2e}, counts {out.gate_counts()}")

# Routing: CNOT between the ends of a line gets wrapped in SWAP chains.
line = aq.ConnectivityGraph.line(4)
far = aq.Circuit(4).add("CNOT", 0, 3)
routed = aq.route_circuit(far, line)
print("\nrouted CNOT 0 3 on a line:",
      [(i.gate, i.qubits) for i in routed.instructions])
expanded = aq.rewrite_to_basis(routed, basis)
hops = 3
print(f"after SWAP expansion: {expanded.gate_counts()['CNOT']} CNOTs "
      f"(= 6(h-1)+1 with h = {hops})")

# Cost on the transmon profile: serial duration, fidelity product, decay.
transmon = aq.builtin_profile("superconducting-transmon")
bell = aq.Circuit(2).add("H", 0).add("CNOT", 0, 1)
result = aq.compile_for_device(bell, transmon)
print("\nBell on transmon ->", [(i.gate, i.qubits) for i in result.circuit.instructions])
print("cost:", result.cost)
print("coherence budget ratio:", f"{result.budget.ratio:.2e}",
      "(pass)" if result.budget.ok else "(fail)")
