"""Device capability profiles.

A profile records, per capability rule (states, operations, connectivity,
coherence, readout), how well a device supports it, together with the
concrete gate set, connectivity graph, and timing/fidelity/coherence
constants used by the compiler passes. Profiles are immutable after parse.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum

from .gates import GATE_ARITY, MARKERS
from .graphs import ConnectivityGraph

RULES = ("states", "operations", "connectivity", "coherence", "readout")


class Level(str, Enum):
    """Three-level support/demand grade for one rule."""

    NONE = "none"
    PARTIAL = "partial"
    FULL = "full"

    @property
    def rank(self) -> int:
        return ("none", "partial", "full").index(self.value)

    def __ge__(self, other: "Level") -> bool:  # type: ignore[override]
        return self.rank >= other.rank

    def __gt__(self, other: "Level") -> bool:  # type: ignore[override]
        return self.rank > other.rank

    def __le__(self, other: "Level") -> bool:  # type: ignore[override]
        return self.rank <= other.rank

    def __lt__(self, other: "Level") -> bool:  # type: ignore[override]
        return self.rank < other.rank


class ProfileError(ValueError):
    """Schema or invariant violation; message names the field path."""


@dataclass(frozen=True)
class GateSpec:
    gate: str
    arity: int
    duration_ns: float
    fidelity: float


@dataclass(frozen=True)
class MeasurementSpec:
    computational_only: bool
    fidelity: float
    duration_ns: float
    mid_circuit: bool


@dataclass(frozen=True)
class DeviceProfile:
    name: str
    num_qubits: int
    connectivity: ConnectivityGraph
    native_gates: tuple[GateSpec, ...]
    t1_us: float
    t2_us: float
    measurement: MeasurementSpec
    rule_support: dict[str, Level]
    qec_capable: bool
    t2_dd_us: float | None = None
    notes: dict[str, str] = field(default_factory=dict)

    def native_names(self) -> frozenset[str]:
        return frozenset(spec.gate for spec in self.native_gates)

    def gate_spec(self, name: str) -> GateSpec:
        for spec in self.native_gates:
            if spec.gate == name.upper():
                return spec
        raise KeyError(f"gate {name!r} is not native to device {self.name!r}")

    def has_native_entangler(self) -> bool:
        return any(spec.arity >= 2 for spec in self.native_gates)

    def effective_t2_us(self) -> float:
        """Coherence constant used for budgeting (decoupling-enhanced if known)."""
        return self.t2_dd_us if self.t2_dd_us is not None else self.t2_us

    def support(self, rule: str) -> Level:
        return self.rule_support[rule]


def validate_profile(profile: DeviceProfile) -> list[str]:
    """Check all invariants; returns violation strings (empty = pass)."""
    violations: list[str] = []
    if profile.num_qubits < 1:
        violations.append("num_qubits: must be >= 1")
    if profile.connectivity.num_qubits != profile.num_qubits:
        violations.append("connectivity: graph qubit count differs from num_qubits")
    for i, spec in enumerate(profile.native_gates):
        path = f"native_gates[{i}]"
        if spec.gate not in GATE_ARITY or spec.gate in MARKERS:
            violations.append(f"{path}.gate: {spec.gate!r} is not in the circuit alphabet")
        elif spec.arity != GATE_ARITY[spec.gate]:
            violations.append(
                f"{path}.arity: {spec.arity} but {spec.gate} takes {GATE_ARITY[spec.gate]}")
        if not spec.duration_ns > 0:
            violations.append(f"{path}.duration_ns: must be > 0")
        if not 0 < spec.fidelity <= 1:
            violations.append(f"{path}.fidelity: must be in (0, 1]")
    names = [spec.gate for spec in profile.native_gates]
    if len(names) != len(set(names)):
        violations.append("native_gates: duplicate gate entries")
    if profile.t1_us <= 0:
        violations.append("t1_us: must be > 0")
    if profile.t2_us <= 0:
        violations.append("t2_us: must be > 0")
    if profile.t2_dd_us is not None and profile.t2_dd_us <= 0:
        violations.append("t2_dd_us: must be > 0")
    if not 0 < profile.measurement.fidelity <= 1:
        violations.append("measurement.fidelity: must be in (0, 1]")
    if profile.measurement.duration_ns <= 0:
        violations.append("measurement.duration_ns: must be > 0")
    if set(profile.rule_support) != set(RULES):
        violations.append("rule_support: must cover exactly the five rules")
    has_multi = any(spec.arity >= 2 for spec in profile.native_gates)
    if has_multi and not profile.connectivity.edges:
        violations.append("connectivity: multi-qubit native gate but no edges")
    if has_multi and profile.rule_support.get("operations") == Level.NONE:
        violations.append(
            "rule_support.operations: 'none' is inconsistent with native two-qubit gates")
    return violations


# --- JSON schema ------------------------------------------------------------

_TOP_FIELDS = {"name", "num_qubits", "connectivity", "native_gates", "t1_us", "t2_us",
               "t2_dd_us", "measurement", "rule_support", "qec_capable", "notes"}
_REQUIRED = _TOP_FIELDS - {"t2_dd_us"}
_GATE_FIELDS = {"gate", "arity", "duration_ns", "fidelity"}
_MEAS_FIELDS = {"computational_only", "fidelity", "duration_ns", "mid_circuit"}


def _expect(condition: bool, path: str, message: str):
    if not condition:
        raise ProfileError(f"{path}: {message}")


def _number(value, path: str) -> float:
    _expect(isinstance(value, (int, float)) and not isinstance(value, bool),
            path, "expected a number")
    return float(value)


def _level(value, path: str) -> Level:
    _expect(value in ("full", "partial", "none"), path, f"bad level {value!r}")
    return Level(value)


def profile_from_dict(data: dict) -> DeviceProfile:
    """Build and validate a DeviceProfile from schema-shaped data."""
    _expect(isinstance(data, dict), "$", "expected an object")
    unknown = set(data) - _TOP_FIELDS
    _expect(not unknown, "$", f"unknown field(s) {sorted(unknown)}")
    missing = _REQUIRED - set(data)
    _expect(not missing, "$", f"missing field(s) {sorted(missing)}")

    _expect(isinstance(data["name"], str), "name", "expected a string")
    _expect(isinstance(data["num_qubits"], int) and not isinstance(data["num_qubits"], bool),
            "num_qubits", "expected an integer")
    num_qubits = data["num_qubits"]

    _expect(isinstance(data["connectivity"], list), "connectivity", "expected a list of pairs")
    edges = []
    for i, pair in enumerate(data["connectivity"]):
        path = f"connectivity[{i}]"
        _expect(isinstance(pair, list) and len(pair) == 2, path, "expected [int, int]")
        _expect(all(isinstance(q, int) and not isinstance(q, bool) for q in pair),
                path, "expected integer qubit indices")
        edges.append((pair[0], pair[1]))
    try:
        connectivity = ConnectivityGraph.from_edges(num_qubits, edges)
    except ValueError as exc:
        raise ProfileError(f"connectivity: {exc}") from None

    _expect(isinstance(data["native_gates"], list), "native_gates", "expected a list")
    specs = []
    for i, raw in enumerate(data["native_gates"]):
        path = f"native_gates[{i}]"
        _expect(isinstance(raw, dict), path, "expected an object")
        unknown = set(raw) - _GATE_FIELDS
        _expect(not unknown, path, f"unknown field(s) {sorted(unknown)}")
        missing = _GATE_FIELDS - set(raw)
        _expect(not missing, path, f"missing field(s) {sorted(missing)}")
        _expect(isinstance(raw["gate"], str), f"{path}.gate", "expected a string")
        _expect(isinstance(raw["arity"], int) and not isinstance(raw["arity"], bool),
                f"{path}.arity", "expected an integer")
        specs.append(GateSpec(raw["gate"].upper(), raw["arity"],
                              _number(raw["duration_ns"], f"{path}.duration_ns"),
                              _number(raw["fidelity"], f"{path}.fidelity")))

    raw_meas = data["measurement"]
    _expect(isinstance(raw_meas, dict), "measurement", "expected an object")
    unknown = set(raw_meas) - _MEAS_FIELDS
    _expect(not unknown, "measurement", f"unknown field(s) {sorted(unknown)}")
    missing = _MEAS_FIELDS - set(raw_meas)
    _expect(not missing, "measurement", f"missing field(s) {sorted(missing)}")
    _expect(isinstance(raw_meas["computational_only"], bool),
            "measurement.computational_only", "expected a boolean")
    _expect(isinstance(raw_meas["mid_circuit"], bool),
            "measurement.mid_circuit", "expected a boolean")
    measurement = MeasurementSpec(
        raw_meas["computational_only"],
        _number(raw_meas["fidelity"], "measurement.fidelity"),
        _number(raw_meas["duration_ns"], "measurement.duration_ns"),
        raw_meas["mid_circuit"])

    raw_rules = data["rule_support"]
    _expect(isinstance(raw_rules, dict), "rule_support", "expected an object")
    unknown = set(raw_rules) - set(RULES)
    _expect(not unknown, "rule_support", f"unknown rule(s) {sorted(unknown)}")
    missing = set(RULES) - set(raw_rules)
    _expect(not missing, "rule_support", f"missing rule(s) {sorted(missing)}")
    rule_support = {rule: _level(raw_rules[rule], f"rule_support.{rule}") for rule in RULES}

    _expect(isinstance(data["qec_capable"], bool), "qec_capable", "expected a boolean")
    notes = data["notes"]
    _expect(isinstance(notes, dict), "notes", "expected an object")
    for key, value in notes.items():
        _expect(isinstance(key, str) and isinstance(value, str),
                f"notes.{key}", "expected string keys and values")

    t2_dd = _number(data["t2_dd_us"], "t2_dd_us") if "t2_dd_us" in data else None
    profile = DeviceProfile(
        name=data["name"],
        num_qubits=num_qubits,
        connectivity=connectivity,
        native_gates=tuple(specs),
        t1_us=_number(data["t1_us"], "t1_us"),
        t2_us=_number(data["t2_us"], "t2_us"),
        t2_dd_us=t2_dd,
        measurement=measurement,
        rule_support=rule_support,
        qec_capable=data["qec_capable"],
        notes=dict(notes))
    violations = validate_profile(profile)
    if violations:
        raise ProfileError("; ".join(violations))
    return profile


def parse_device_profile(text: str) -> DeviceProfile:
    """Parse profile JSON; rejects unknown fields and invariant violations."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ProfileError(f"syntax error: {exc}") from None
    return profile_from_dict(data)


def profile_to_dict(profile: DeviceProfile) -> dict:
    data = {
        "name": profile.name,
        "num_qubits": profile.num_qubits,
        "connectivity": [[a, b] for a, b in sorted(profile.connectivity.edges)],
        "native_gates": [
            {"gate": s.gate, "arity": s.arity, "duration_ns": s.duration_ns,
             "fidelity": s.fidelity}
            for s in profile.native_gates],
        "t1_us": profile.t1_us,
        "t2_us": profile.t2_us,
        "measurement": {
            "computational_only": profile.measurement.computational_only,
            "fidelity": profile.measurement.fidelity,
            "duration_ns": profile.measurement.duration_ns,
            "mid_circuit": profile.measurement.mid_circuit},
        "rule_support": {rule: profile.rule_support[rule].value for rule in RULES},
        "qec_capable": profile.qec_capable,
        "notes": dict(profile.notes),
    }
    if profile.t2_dd_us is not None:
        data["t2_dd_us"] = profile.t2_dd_us
    return data


def serialize_device_profile(profile: DeviceProfile, indent: int = 2) -> str:
    return json.dumps(profile_to_dict(profile), indent=indent) + "\n"
