"""Adiabatic evolution of Ising problems, plus the fixed-Hamiltonian engine.

The interpolating Hamiltonian is H(t) = lam0(t) * H0 + lam1(t) * H1 with the
mixer H0 = -sum_i X_i (whose ground state is the uniform superposition) and
H1 the diagonal Ising cost. Evolution is first-order product stepping with a
dense matrix exponential of the instantaneous Hamiltonian at each step
midpoint; accuracy is controlled by num_steps.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import gates
from .simulate import embed_gate, expectation
from .state import StateVector, plus_state

MAX_SPINS = 12


@dataclass(frozen=True)
class IsingProblem:
    """Fields h_i on sites and couplings J_ij on site pairs (Z basis)."""

    num_spins: int
    fields: tuple[float, ...]
    couplings: tuple[tuple[int, int, float], ...] = ()

    def __post_init__(self):
        if not 1 <= self.num_spins <= MAX_SPINS:
            raise ValueError(f"num_spins must be in [1, {MAX_SPINS}]")
        fields = tuple(float(h) for h in self.fields)
        if len(fields) != self.num_spins:
            raise ValueError("one field coefficient per spin required")
        if not all(np.isfinite(fields)):
            raise ValueError("field coefficients must be finite")
        couplings = []
        for i, j, strength in self.couplings:
            i, j, strength = int(i), int(j), float(strength)
            if not (0 <= i < self.num_spins and 0 <= j < self.num_spins) or i == j:
                raise ValueError(f"bad coupling pair ({i}, {j})")
            if not np.isfinite(strength):
                raise ValueError("coupling strengths must be finite")
            couplings.append((i, j, strength))
        object.__setattr__(self, "fields", fields)
        object.__setattr__(self, "couplings", tuple(couplings))

    @classmethod
    def from_dict(cls, data: dict) -> "IsingProblem":
        unknown = set(data) - {"n", "h", "J"}
        if unknown:
            raise ValueError(f"unknown field(s) {sorted(unknown)}")
        couplings = tuple((int(i), int(j), float(v)) for i, j, v in data.get("J", []))
        return cls(int(data["n"]), tuple(float(h) for h in data.get("h", [])), couplings)

    @classmethod
    def from_json(cls, text: str) -> "IsingProblem":
        return cls.from_dict(json.loads(text))

    def cost_diagonal(self) -> np.ndarray:
        """Diagonal of H1 over computational basis states (Z|0> = +|0>)."""
        dim = 2 ** self.num_spins
        index = np.arange(dim)
        z = 1.0 - 2.0 * ((index[:, None] >> np.arange(self.num_spins)) & 1)
        diagonal = z @ np.array(self.fields)
        for i, j, strength in self.couplings:
            diagonal = diagonal + strength * z[:, i] * z[:, j]
        return diagonal


def build_annealing_hamiltonian(problem: IsingProblem, lam0: float, lam1: float) -> np.ndarray:
    """Dense lam0 * H0 + lam1 * H1 with H0 = -sum_i X_i."""
    if not (np.isfinite(lam0) and np.isfinite(lam1)):
        raise ValueError("schedule values must be finite")
    n = problem.num_spins
    dim = 2 ** n
    h = np.diag(lam1 * problem.cost_diagonal()).astype(complex)
    if lam0 != 0.0:
        mixer = np.zeros((dim, dim), dtype=complex)
        for i in range(n):
            mixer -= embed_gate(gates.X, [i], n)
        h = h + lam0 * mixer
    return h


@dataclass(frozen=True)
class AnnealSchedule:
    """Ramps lam0: 1 -> 0 and lam1: 0 -> 1 over [0, t_final], both monotone.

    t_final = 0 is the quench limit: no evolution happens and the endpoint
    conditions are vacuous.
    """

    t_final: float
    num_steps: int
    lambda0: Callable[[float], float] | None = None
    lambda1: Callable[[float], float] | None = None

    def __post_init__(self):
        if self.t_final < 0:
            raise ValueError("t_final must be >= 0")
        if self.num_steps < 1:
            raise ValueError("num_steps must be >= 1")
        if self.lambda0 is None:
            object.__setattr__(self, "lambda0", lambda t: 1.0 - t / self.t_final)
        if self.lambda1 is None:
            object.__setattr__(self, "lambda1", lambda t: t / self.t_final)
        if self.t_final == 0:
            return
        lam0, lam1 = self.lambda0, self.lambda1
        if not (lam0(0.0) == 1.0 and lam1(0.0) == 0.0
                and lam0(self.t_final) == 0.0 and lam1(self.t_final) == 1.0):
            raise ValueError("schedule endpoints must satisfy lam0: 1->0, lam1: 0->1")
        grid = np.linspace(0.0, self.t_final, self.num_steps + 1)
        values0 = [lam0(t) for t in grid]
        values1 = [lam1(t) for t in grid]
        if any(b > a + 1e-12 for a, b in zip(values0, values0[1:])):
            raise ValueError("lambda0 must be non-increasing")
        if any(b < a - 1e-12 for a, b in zip(values1, values1[1:])):
            raise ValueError("lambda1 must be non-decreasing")


@dataclass(frozen=True)
class AnnealResult:
    final_state: StateVector
    times: np.ndarray
    energies: np.ndarray
    success_probability: float


def _step_unitary(hamiltonian: np.ndarray, dt: float) -> np.ndarray:
    eigenvalues, eigenvectors = np.linalg.eigh(hamiltonian)
    return (eigenvectors * np.exp(-1j * eigenvalues * dt)) @ eigenvectors.conj().T


def anneal(problem: IsingProblem, schedule: AnnealSchedule) -> AnnealResult:
    """Evolve from the mixer ground state |+>^n along the schedule.

    The energy trace records <H(t)> at t = 0 and after every step; its final
    entry is the expectation of H(t_final) in the returned state.
    """
    state = plus_state(problem.num_spins)
    times = [0.0]
    energies = [expectation(state, build_annealing_hamiltonian(
        problem, schedule.lambda0(0.0) if schedule.t_final > 0 else 1.0,
        schedule.lambda1(0.0) if schedule.t_final > 0 else 0.0))]
    if schedule.t_final > 0:
        dt = schedule.t_final / schedule.num_steps
        amps = np.array(state.amplitudes)
        for k in range(schedule.num_steps):
            midpoint = (k + 0.5) * dt
            h_mid = build_annealing_hamiltonian(
                problem, schedule.lambda0(midpoint), schedule.lambda1(midpoint))
            amps = _step_unitary(h_mid, dt) @ amps
            amps = amps / np.linalg.norm(amps)
            t_next = (k + 1) * dt
            state = StateVector(amps)
            times.append(t_next)
            energies.append(expectation(state, build_annealing_hamiltonian(
                problem, schedule.lambda0(t_next), schedule.lambda1(t_next))))
    return AnnealResult(state, np.array(times), np.array(energies),
                        anneal_success(state, problem))


def anneal_success(state: StateVector, problem: IsingProblem) -> float:
    """Total probability on the computational basis minima of the cost."""
    diagonal = problem.cost_diagonal()
    ground = diagonal <= np.min(diagonal) + 1e-12
    return float(np.sum(state.probabilities()[ground]))


def evolve(state: StateVector, hamiltonian: np.ndarray, duration: float,
           num_steps: int = 1) -> StateVector:
    """Fixed-Hamiltonian dynamics: the analogue-simulation use of the engine."""
    hamiltonian = np.asarray(hamiltonian, dtype=complex)
    dim = state.amplitudes.size
    if hamiltonian.shape != (dim, dim):
        raise ValueError(f"Hamiltonian shape {hamiltonian.shape} does not match state")
    if np.max(np.abs(hamiltonian - hamiltonian.conj().T)) > 1e-10:
        raise ValueError("Hamiltonian must be Hermitian")
    if num_steps < 1:
        raise ValueError("num_steps must be >= 1")
    step = _step_unitary(hamiltonian, duration / num_steps)
    amps = np.array(state.amplitudes)
    for _ in range(num_steps):
        amps = step @ amps
    return StateVector(amps / np.linalg.norm(amps))
