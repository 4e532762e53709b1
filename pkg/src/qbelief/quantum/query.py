"""Belief extraction from an amplitude-encoded mass function.

One ancilla and one multi-controlled NOT per query.  Which amplitudes the
flip selects is everything:

- ``b``:  open controls on every qubit outside F -> flips exactly the
  basis states of subsets of F, so Pr(ancilla=1) = b(F) = Bel(F) + m({}).
- ``q``:  closed controls on every qubit inside F -> supersets of F,
  Pr(ancilla=1) = q(F).
- ``pl``: open controls on every qubit inside F, then X on the ancilla
  -> complements the F-avoiding mass, Pr(ancilla=1) = Pl(F).
- ``bel``: no single control pattern selects "non-empty subset of F";
  evaluated as the b-query minus the empty-set query (b with F = {}),
  combined classically.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..dst.mass import MassFunction
from ..errors import EmptyFocal, IndexOutOfRange, ValidationError
from ..qsim.circuit import Circuit
from ..qsim.gates import X
from ..qsim.state import StateVector
from .prepare import prepare_bba_state

KINDS = ("bel", "pl", "q", "b")


@dataclass(frozen=True)
class BeliefQuery:
    kind: str
    focal: int

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValidationError(f"query kind must be one of {KINDS}, got {self.kind!r}")
        if self.focal < 0:
            raise IndexOutOfRange("focal bitmask must be non-negative")
        if self.kind in ("bel", "pl", "q") and self.focal == 0:
            raise EmptyFocal(f"{self.kind} query needs a non-empty focal set")


def belief_query_circuit(query: BeliefQuery, n: int) -> Circuit:
    """Extraction circuit on n register qubits plus the ancilla (qubit n).

    Supports kinds ``b``, ``q`` and ``pl``; a ``bel`` query is two ``b``
    circuits and lives in :func:`estimate_belief`.
    """
    if query.focal >= (1 << n):
        raise IndexOutOfRange(f"focal {query.focal} out of range for n={n}")
    circ = Circuit(n + 1)
    member = [j for j in range(n) if query.focal >> j & 1]
    outside = [j for j in range(n) if not query.focal >> j & 1]
    if query.kind == "b":
        circ.append(X(), n, [(j, 0) for j in outside])
    elif query.kind == "q":
        circ.append(X(), n, [(j, 1) for j in member])
    elif query.kind == "pl":
        circ.append(X(), n, [(j, 0) for j in member])
        circ.append(X(), n)
    else:
        raise ValidationError("bel queries have no single-circuit form; use estimate_belief")
    return circ


def _queried_state(m: MassFunction, query: BeliefQuery) -> StateVector:
    """Prepared register widened by the |0> ancilla, query applied."""
    n = m.frame.n
    prepared = prepare_bba_state(m)
    widened = np.zeros(1 << (n + 1), dtype=np.complex128)
    widened[: 1 << n] = prepared.amps
    full = StateVector(n + 1, widened)
    return belief_query_circuit(query, n).run(full)


def estimate_belief(
    m: MassFunction,
    query: BeliefQuery,
    mode: str = "statevector",
    shots: int | None = None,
    seed: int | None = None,
) -> float:
    """Evaluate one belief query against a prepared state.

    ``statevector`` mode reads the exact ancilla-1 probability; ``shots``
    mode samples the ancilla with a seeded generator and returns the
    count ratio.  A ``bel`` query runs the b-circuit and the empty-set
    circuit and subtracts.
    """
    if query.kind == "bel":
        b_val = estimate_belief(m, BeliefQuery("b", query.focal), mode, shots, seed)
        seed2 = None if seed is None else seed + 1
        empty = estimate_belief(m, BeliefQuery("b", 0), mode, shots, seed2)
        return b_val - empty

    n = m.frame.n
    full = _queried_state(m, query)
    if mode == "statevector":
        return full.probability(n, 1)
    if mode == "shots":
        if shots is None or seed is None:
            raise ValidationError("shots mode needs explicit shots and seed")
        record = full.sample(shots, seed)
        ones = sum(c for idx, c in record.counts.items() if idx >> n & 1)
        return ones / shots
    raise ValidationError(f"unknown mode {mode!r}")


__all__ = ["KINDS", "BeliefQuery", "belief_query_circuit", "estimate_belief"]
