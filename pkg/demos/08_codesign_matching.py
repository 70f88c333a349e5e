"""Matching device support against application demand
======================================================

Every builtin device grades the five capability rules (states, operations,
connectivity, coherence, readout); every application class grades what it
needs. The matcher reconciles the two, attaching a compensation technique
where the compiler can bridge the gap.
"""

import aqmkit as aq
from aqmkit.demand import BUILTIN_DEMAND_NAMES, builtin_demand
from aqmkit.devices import BUILTIN_PROFILE_NAMES, builtin_profile

marks = {"supported": "S", "supported_with_compensation": "C", "unsupported": "U"}
print(" " * 25 + "  ".join(f"{name[:10]:>10}" for name in BUILTIN_PROFILE_NAMES))
for demand_name in BUILTIN_DEMAND_NAMES:
    cells = []
    for device_name in BUILTIN_PROFILE_NAMES:
        report = aq.match_profiles(builtin_profile(device_name),
                                   builtin_demand(demand_name))
        cells.append(marks[report.overall])
    print(f"{demand_name:<25}" + "  ".join(f"{c:>10}" for c in cells))
print("\nS supported / C supported with compensation / U unsupported\n")

# One cell in detail: nearest-neighbour superconducting chip vs full demand.
report = aq.match_profiles(builtin_profile("superconducting-transmon"),
                           builtin_demand("circuit-model-universal"))
print(aq.render_report(report, "text"))

# The concrete counterpart: compile an actual circuit and price it.
bell = aq.Circuit(2).add("H", 0).add("CNOT", 0, 1)
for name in ("superconducting-transmon", "trapped-ion", "quantum-memory-ensemble"):
    outcome = aq.plan_compensation(builtin_profile(name), bell)
    if outcome.ok:
        cost = outcome.result.cost
        print(f"{name}: ok, {sum(cost.gate_counts.values())} native gates, "
              f"{cost.total_duration_ns:g} ns, fidelity ~{cost.fidelity_estimate:.4f}")
    else:
        print(f"{name}: fails on the {outcome.failed_rule} rule ({outcome.reason})")
