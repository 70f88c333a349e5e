"""Circuit construction and the plain-text format."""

import numpy as np
import pytest

import aqmkit as aq
from aqmkit.circuit import CircuitParseError


class TestInstructionValidation:
    def test_unknown_gate(self):
        with pytest.raises(aq.CircuitError, match="unknown gate"):
            aq.Circuit(1).add("FOO", 0)

    def test_wrong_arity(self):
        with pytest.raises(aq.CircuitError, match="operand"):
            aq.Circuit(2).add("CNOT", 0)

    def test_duplicate_operands(self):
        with pytest.raises(aq.CircuitError, match="distinct"):
            aq.Circuit(2).add("CNOT", 1, 1)

    def test_rotation_needs_angle(self):
        with pytest.raises(aq.CircuitError, match="angle"):
            aq.Circuit(1).add("RZ", 0)

    def test_fixed_gate_rejects_angle(self):
        with pytest.raises(aq.CircuitError, match="no angle"):
            aq.Circuit(1).add("H", 0, angle=0.5)

    def test_operand_out_of_range(self):
        with pytest.raises(aq.CircuitError, match="out of range"):
            aq.Circuit(2).add("H", 2)

    def test_names_case_insensitive(self):
        c = aq.Circuit(1).add("h", 0).add("rz", 0, angle=0.25)
        assert [i.gate for i in c.instructions] == ["H", "RZ"]


class TestTextFormat:
    def test_parse_basic(self):
        text = "# bell pair\nqubits 2\nH 0\ncnot 0 1  # entangle\nMEASURE 0\nMEASURE 1\n"
        c = aq.parse_circuit(text)
        assert c.num_qubits == 2
        assert [i.gate for i in c.instructions] == ["H", "CNOT", "MEASURE", "MEASURE"]

    def test_parse_rotation_angle(self):
        c = aq.parse_circuit("qubits 1\nRZ 0 0.2\n")
        assert c.instructions[0].angle == pytest.approx(0.2)

    def test_round_trip(self):
        rng = np.random.default_rng(0)
        from oracles import random_circuit
        c = random_circuit(rng, 3, 15)
        c.add("MEASURE", 0).add("RESET", 2)
        again = aq.parse_circuit(aq.format_circuit(c))
        assert again.num_qubits == c.num_qubits
        assert again.instructions == c.instructions

    def test_missing_header(self):
        with pytest.raises(CircuitParseError, match="line 1"):
            aq.parse_circuit("H 0\n")

    def test_error_carries_line_number(self):
        with pytest.raises(CircuitParseError, match="line 3"):
            aq.parse_circuit("qubits 2\nH 0\nH 5\n")

    def test_bad_angle(self):
        with pytest.raises(CircuitParseError, match="angle"):
            aq.parse_circuit("qubits 1\nRX 0 abc\n")

    def test_empty_file(self):
        with pytest.raises(CircuitParseError, match="empty"):
            aq.parse_circuit("# nothing here\n")
