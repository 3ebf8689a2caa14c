"""Brute-force state-vector reference for small qubit counts.

Two representations back every symbolic rule:

* :class:`PhaseVector` stores the 2**n phases of an equally-weighted
  state (diagonal checks, up to 20 qubits). With dyadic weights all
  arithmetic here is exact, because dyadic rationals and their sums are
  representable in binary floating point at these scales.
* :class:`DenseState` stores complex amplitudes (non-diagonal gates,
  capped at 14 qubits).

Qubit ``i`` corresponds to bit ``i`` of the basis index.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatchError, SizeLimitError, VertexRangeError
from .hypergraph import WeightedHypergraph
from .transforms import GateApplication, apply_gate

MAX_PHASE_QUBITS = 20
MAX_DENSE_QUBITS = 14

_UNITARY_TOL = 1e-10


@dataclass(frozen=True, eq=False)
class PhaseVector:
    """Phases f(x) in [0, 2) of (1/sqrt(2^n)) sum_x exp(i pi f(x)) |x>."""

    n: int
    phases: np.ndarray

    def __post_init__(self) -> None:
        if self.phases.shape != (1 << self.n,):
            raise ValueError("phase array length must be 2**n")

    def to_dense(self) -> "DenseState":
        if self.n > MAX_DENSE_QUBITS:
            raise SizeLimitError(f"dense form capped at {MAX_DENSE_QUBITS} qubits")
        amps = np.exp(1j * np.pi * self.phases) / np.sqrt(1 << self.n)
        return DenseState(self.n, amps)


@dataclass(frozen=True, eq=False)
class DenseState:
    n: int
    amplitudes: np.ndarray

    def __post_init__(self) -> None:
        if self.amplitudes.shape != (1 << self.n,):
            raise ValueError("amplitude array length must be 2**n")
        norm = float(np.linalg.norm(self.amplitudes))
        if abs(norm - 1.0) > 1e-12:
            raise ValueError(f"state norm {norm} deviates from 1")


def synthesize(h: WeightedHypergraph) -> PhaseVector:
    """Phase vector of a weighted hypergraph state.

    Each edge adds its weight to exactly the basis states that are all
    ones on the edge; the global phase adds everywhere.
    """
    if h.n > MAX_PHASE_QUBITS:
        raise SizeLimitError(f"phase synthesis capped at {MAX_PHASE_QUBITS} qubits")
    size = 1 << h.n
    idx = np.arange(size)
    phases = np.full(size, float(h.phase))
    for e, w in h.edges:
        mask = sum(1 << v for v in e)
        phases[(idx & mask) == mask] += float(w)
    return PhaseVector(h.n, np.mod(phases, 2.0))


def dense_state(h: WeightedHypergraph) -> DenseState:
    if h.n > MAX_DENSE_QUBITS:
        raise SizeLimitError(f"dense synthesis capped at {MAX_DENSE_QUBITS} qubits")
    return synthesize(h).to_dense()


def x_power_matrix(alpha: float) -> np.ndarray:
    """((1+e^{i pi a})*I + (1-e^{i pi a})*X) / 2."""
    p = np.exp(1j * np.pi * alpha)
    return 0.5 * np.array([[1 + p, 1 - p], [1 - p, 1 + p]])


def z_power_matrix(alpha: float) -> np.ndarray:
    return np.array([[1, 0], [0, np.exp(1j * np.pi * alpha)]], dtype=complex)


PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)


def apply_unitary_1q(s: DenseState, i: int, u: np.ndarray) -> DenseState:
    """Apply a single-qubit unitary to qubit ``i``."""
    if not (0 <= i < s.n):
        raise VertexRangeError(f"qubit {i} out of range for n={s.n}")
    u = np.asarray(u, dtype=complex)
    if u.shape != (2, 2):
        raise ValueError("unitary must be 2x2")
    if np.max(np.abs(u @ u.conj().T - np.eye(2))) > _UNITARY_TOL:
        raise ValueError("matrix is not unitary")
    view = s.amplitudes.reshape(1 << (s.n - 1 - i), 2, 1 << i)
    out = np.einsum("pq,aqc->apc", u, view).reshape(-1)
    return DenseState(s.n, out)


def global_phase_deviation(a: DenseState, b: DenseState) -> float:
    """Max amplitude deviation after aligning on the largest entry of ``a``."""
    if a.n != b.n:
        raise DimensionMismatchError(f"qubit counts differ: {a.n} != {b.n}")
    ref = int(np.argmax(np.abs(a.amplitudes)))
    if abs(b.amplitudes[ref]) == 0.0:
        return float("inf")
    phase = b.amplitudes[ref] / a.amplitudes[ref]
    phase /= abs(phase)
    return float(np.max(np.abs(a.amplitudes * phase - b.amplitudes)))


def equal_up_to_global_phase(a: DenseState, b: DenseState, tol: float = 1e-10) -> bool:
    """Max-norm equality after aligning on the largest amplitude of ``a``."""
    return global_phase_deviation(a, b) <= tol


def phase_vectors_equal(a: PhaseVector, b: PhaseVector, tol: float = 1e-10) -> bool:
    """Equality of the represented states up to a global phase."""
    if a.n != b.n:
        raise DimensionMismatchError(f"qubit counts differ: {a.n} != {b.n}")
    za = np.exp(1j * np.pi * a.phases)
    zb = np.exp(1j * np.pi * b.phases)
    rel = zb / za
    return float(np.max(np.abs(rel - rel[0]))) <= tol


def gate_unitaries(h: WeightedHypergraph, gate: GateApplication) -> list[tuple[int, np.ndarray]]:
    """Single-qubit unitaries realizing one gate on the current state.

    LC entries expand into their gate composite, whose targets depend on
    the neighborhood in the state at application time.
    """
    if gate.kind == "X":
        return [(gate.qubit, PAULI_X)]
    if gate.kind == "Xp":
        assert gate.exponent is not None
        return [(gate.qubit, x_power_matrix(float(gate.exponent)))]
    if gate.kind == "Zp":
        assert gate.exponent is not None
        return [(gate.qubit, z_power_matrix(float(gate.exponent)))]
    if gate.kind == "LC":
        partners = sorted(
            e[0] if e[1] == gate.qubit else e[1]
            for e, _ in h.edges_containing(gate.qubit)
            if len(e) == 2
        )
        ops = [(gate.qubit, x_power_matrix(0.5))]
        ops += [(u, z_power_matrix(1.5)) for u in partners]
        return ops
    raise ValueError(f"unknown gate kind {gate.kind!r}")


def replay_dense(h: WeightedHypergraph, seq: list[GateApplication]) -> DenseState:
    """Apply a gate sequence with dense matrices, independent of rewriting.

    A symbolic shadow is kept only to resolve LC neighborhoods; all
    state evolution happens on the amplitude vector.
    """
    state = dense_state(h)
    shadow = h
    for gate in seq:
        for qubit, u in gate_unitaries(shadow, gate):
            state = apply_unitary_1q(state, qubit, u)
        shadow = apply_gate(shadow, gate)
    return state
