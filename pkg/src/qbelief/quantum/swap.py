"""Swap-test overlap estimation.

Hadamard on an ancilla, one controlled SWAP per qubit pair, Hadamard
again: Pr(ancilla = 0) = 1/2 + 1/2 |<s1|s2>|^2, so 2 Pr(0) - 1 estimates
the squared overlap.  The informative outcome is ancilla 0; the |1>
branch carries the antisymmetrized remainder.
"""

from __future__ import annotations

from ..errors import QubitCountMismatch, ValidationError
from ..qsim.circuit import Circuit
from ..qsim.gates import SWAP, H
from ..qsim.state import StateVector, new_state, product_state


def swap_test_circuit(k: int) -> Circuit:
    """Circuit on 2k + 1 qubits: registers [0, k) and [k, 2k), ancilla 2k."""
    anc = 2 * k
    circ = Circuit(2 * k + 1)
    circ.append(H(), anc)
    for j in range(k):
        circ.append(SWAP(), (j, k + j), [(anc, 1)])
    circ.append(H(), anc)
    return circ


def swap_test(
    s1: StateVector,
    s2: StateVector,
    mode: str = "statevector",
    shots: int | None = None,
    seed: int | None = None,
) -> float:
    """Squared-overlap estimate 2 Pr(ancilla=0) - 1 of two equal-size states."""
    if s1.k != s2.k:
        raise QubitCountMismatch(f"register sizes differ: {s1.k} vs {s2.k}")
    k = s1.k
    joint = product_state([s1, s2, new_state(1, 0)])
    swap_test_circuit(k).run(joint)
    anc = 2 * k
    if mode == "statevector":
        p0 = joint.probability(anc, 0)
    elif mode == "shots":
        if shots is None or seed is None:
            raise ValidationError("shots mode needs explicit shots and seed")
        record = joint.sample(shots, seed)
        zeros = sum(c for idx, c in record.counts.items() if not idx >> anc & 1)
        p0 = zeros / shots
    else:
        raise ValidationError(f"unknown mode {mode!r}")
    return 2.0 * p0 - 1.0


__all__ = ["swap_test", "swap_test_circuit"]
