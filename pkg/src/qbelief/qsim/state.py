"""Dense state vectors and bit-masked gate application.

Basis-state index bit j corresponds to qubit j (qubit 0 is the least
significant bit), so an n-qubit register prepared from an n-element
frame makes the basis index and the focal-set bitmask the same integer.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from ..errors import (
    ImpossibleOutcome,
    IndexOutOfRange,
    IndexOverlap,
    NotUnitary,
    QubitCountMismatch,
    ValidationError,
)
from .gates import Gate

ControlSpec = Sequence[tuple[int, int]]  # (qubit, polarity in {0, 1}) pairs

_MIN_POSTSELECT_PROB = 1e-12


@dataclass
class MeasurementRecord:
    """Counts of computational-basis outcomes from a seeded sampler."""

    shots: int
    seed: int
    counts: dict[int, int]

    def frequency(self, index: int) -> float:
        return self.counts.get(index, 0) / self.shots


class StateVector:
    """Mutable amplitude vector over 2^k basis states, unit L2 norm."""

    __slots__ = ("k", "amps")

    def __init__(self, k: int, amps: np.ndarray | None = None):
        if k < 1:
            raise ValidationError("need at least one qubit")
        self.k = k
        if amps is None:
            amps = np.zeros(1 << k, dtype=np.complex128)
            amps[0] = 1.0
        else:
            amps = np.asarray(amps, dtype=np.complex128)
            if amps.shape != (1 << k,):
                raise QubitCountMismatch(
                    f"amplitude vector of shape {amps.shape} does not fit {k} qubits"
                )
            amps = amps.copy()
        self.amps = amps

    # --- constructors ---

    @classmethod
    def from_amplitudes(cls, amps: np.ndarray) -> "StateVector":
        amps = np.asarray(amps, dtype=np.complex128)
        k = int(amps.size).bit_length() - 1
        if 1 << k != amps.size:
            raise QubitCountMismatch("amplitude count must be a power of two")
        norm = np.linalg.norm(amps)
        if abs(norm - 1.0) > 1e-9:
            raise ValidationError(f"amplitudes have norm {norm}, expected 1")
        return cls(k, amps)

    def copy(self) -> "StateVector":
        return StateVector(self.k, self.amps)

    def norm(self) -> float:
        return float(np.linalg.norm(self.amps))

    def probabilities(self) -> np.ndarray:
        return np.abs(self.amps) ** 2

    # --- gate application ---

    def _control_masks(self, controls: ControlSpec, busy: set[int]) -> tuple[int, int]:
        cmask = 0
        cval = 0
        for q, pol in controls:
            self._check_qubit(q)
            if q in busy or (cmask >> q) & 1:
                raise IndexOverlap(f"qubit {q} used twice in one operation")
            if pol not in (0, 1):
                raise ValidationError(f"control polarity must be 0 or 1, got {pol}")
            cmask |= 1 << q
            cval |= pol << q
        return cmask, cval

    def _check_qubit(self, q: int) -> None:
        if not 0 <= q < self.k:
            raise IndexOutOfRange(f"qubit {q} out of range for k={self.k}")

    def apply(self, gate: Gate, target: int | Sequence[int], controls: ControlSpec = ()) -> "StateVector":
        """Apply a gate in place, restricted to control-matching amplitudes."""
        targets = (target,) if isinstance(target, (int, np.integer)) else tuple(target)
        if len(targets) != gate.num_qubits:
            raise QubitCountMismatch(
                f"{gate.kind} acts on {gate.num_qubits} qubit(s), got targets {targets}"
            )
        return self._apply_matrix(gate.matrix(), targets, controls)

    def apply_dense_unitary(
        self, u: np.ndarray, targets: Sequence[int], controls: ControlSpec = ()
    ) -> "StateVector":
        """Apply an explicit unitary on a listed qubit subset.

        targets[j] carries bit j of the unitary's row/column index.
        """
        u = np.asarray(u, dtype=np.complex128)
        s = len(targets)
        if u.shape != (1 << s, 1 << s):
            raise QubitCountMismatch(f"matrix shape {u.shape} does not fit {s} target qubit(s)")
        err = np.abs(u @ u.conj().T - np.eye(1 << s)).max()
        if err > 1e-9:
            raise NotUnitary(f"matrix deviates from unitarity by {err:.3g}")
        return self._apply_matrix(u, tuple(targets), controls)

    def _apply_matrix(self, u: np.ndarray, targets: tuple[int, ...], controls: ControlSpec) -> "StateVector":
        for q in targets:
            self._check_qubit(q)
        if len(set(targets)) != len(targets):
            raise IndexOverlap(f"duplicate target qubits {targets}")
        cmask, cval = self._control_masks(controls, set(targets))

        idx = np.arange(self.amps.size)
        tmask = 0
        for q in targets:
            tmask |= 1 << q
        base = idx[((idx & cmask) == cval) & ((idx & tmask) == 0)]

        if u.shape == (2, 2):
            i0 = base
            i1 = base | (1 << targets[0])
            a0 = self.amps[i0]
            a1 = self.amps[i1]
            self.amps[i0] = u[0, 0] * a0 + u[0, 1] * a1
            self.amps[i1] = u[1, 0] * a0 + u[1, 1] * a1
            return self

        offsets = np.zeros(u.shape[0], dtype=np.int64)
        for local in range(u.shape[0]):
            o = 0
            for j, q in enumerate(targets):
                if local >> j & 1:
                    o |= 1 << q
            offsets[local] = o
        group = base[:, None] | offsets[None, :]
        self.amps[group] = self.amps[group] @ u.T
        return self

    # --- measurement ---

    def probability(self, qubit: int, outcome: int) -> float:
        self._check_qubit(qubit)
        idx = np.arange(self.amps.size)
        sel = ((idx >> qubit) & 1) == outcome
        return float(np.sum(np.abs(self.amps[sel]) ** 2))

    def postselect(self, qubit: int, outcome: int) -> tuple["StateVector", float]:
        """Project one qubit onto an outcome and renormalize, in place.

        Returns the state and the pre-renormalization probability mass.
        Raises :class:`ImpossibleOutcome` below probability 1e-12.
        """
        p = self.probability(qubit, outcome)
        if p < _MIN_POSTSELECT_PROB:
            raise ImpossibleOutcome(
                f"outcome {outcome} on qubit {qubit} has probability {p:.3g}"
            )
        idx = np.arange(self.amps.size)
        self.amps[((idx >> qubit) & 1) != outcome] = 0.0
        self.amps /= np.sqrt(p)
        return self, p

    def extract_register(self, qubits: Sequence[int], fixed: dict[int, int]) -> "StateVector":
        """Pull out the sub-state on ``qubits`` given every other qubit is
        fixed to a basis value (after postselection)."""
        qubits = list(qubits)
        base = 0
        for q, v in fixed.items():
            base |= v << q
        sub = np.zeros(1 << len(qubits), dtype=np.complex128)
        for local in range(sub.size):
            g = base
            for j, q in enumerate(qubits):
                if local >> j & 1:
                    g |= 1 << q
            sub[local] = self.amps[g]
        norm = np.linalg.norm(sub)
        return StateVector(len(qubits), sub / norm)

    def sample(self, shots: int, seed: int) -> MeasurementRecord:
        """Seeded inverse-CDF sampling of the basis-state distribution.

        Identical (state, shots, seed) gives identical counts; the draw is
        a single deterministic PCG64 stream folded through searchsorted.
        """
        if shots < 1:
            raise ValidationError("shots must be positive")
        probs = self.probabilities()
        cdf = np.cumsum(probs)
        cdf[-1] = 1.0
        rng = np.random.Generator(np.random.PCG64(seed))
        draws = rng.random(shots)
        outcomes = np.searchsorted(cdf, draws, side="right")
        values, freq = np.unique(outcomes, return_counts=True)
        return MeasurementRecord(
            shots=shots, seed=seed, counts={int(v): int(c) for v, c in zip(values, freq)}
        )


def new_state(k: int, basis_index: int = 0) -> StateVector:
    """Computational-basis state |basis_index> on k qubits."""
    if not 0 <= basis_index < (1 << k):
        raise IndexOutOfRange(f"basis index {basis_index} out of range for k={k}")
    amps = np.zeros(1 << k, dtype=np.complex128)
    amps[basis_index] = 1.0
    return StateVector(k, amps)


def product_state(parts: Iterable[StateVector]) -> StateVector:
    """Join independent registers; the first part occupies the low bits."""
    amps = np.array([1.0], dtype=np.complex128)
    k = 0
    for part in parts:
        amps = np.kron(part.amps, amps)
        k += part.k
    return StateVector(k, amps)


__all__ = [
    "ControlSpec",
    "MeasurementRecord",
    "StateVector",
    "new_state",
    "product_state",
]
