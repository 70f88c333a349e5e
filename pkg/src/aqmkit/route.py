"""Connectivity routing by SWAP chains.

A two-qubit gate on non-adjacent qubits is wrapped in SWAPs along the
(lexicographically smallest) shortest path: swap the first operand next to
the second, apply the gate on that edge, then undo the swaps so the
logical-to-physical map returns to identity after every gate. Correctness
over cleverness; emitted SWAPs are expanded by a later rewrite pass.
"""

from __future__ import annotations

from .circuit import Circuit
from .graphs import ConnectivityGraph, DisconnectedError, shortest_path

__all__ = ["route_circuit", "DisconnectedError"]


def route_circuit(circuit: Circuit, graph: ConnectivityGraph) -> Circuit:
    """Make every two-qubit gate act on an edge of the graph.

    Expects single- and two-qubit instructions only (rewrite CCX first).
    Raises DisconnectedError when a gate's operands have no connecting path.
    """
    if circuit.num_qubits > graph.num_qubits:
        raise ValueError(
            f"circuit uses {circuit.num_qubits} qubit(s) but the graph has {graph.num_qubits}")
    routed = Circuit(graph.num_qubits)
    for inst in circuit.instructions:
        if len(inst.qubits) == 1:
            routed.instructions.append(inst)
            continue
        if len(inst.qubits) > 2:
            raise ValueError(f"route_circuit cannot handle {inst.gate}; rewrite it first")
        a, b = inst.qubits
        if graph.has_edge(a, b):
            routed.instructions.append(inst)
            continue
        path = shortest_path(graph, a, b)
        swaps = [("SWAP", (path[i], path[i + 1])) for i in range(len(path) - 2)]
        for gate, qubits in swaps:
            routed.add(gate, *qubits)
        routed.add(inst.gate, path[-2], path[-1], angle=inst.angle)
        for gate, qubits in reversed(swaps):
            routed.add(gate, *qubits)
    return routed
