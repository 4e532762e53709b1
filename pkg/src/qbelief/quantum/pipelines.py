"""End-to-end quantum pipelines, each validated against the classical engine.

Every pipeline is a chain of matrix evolutions on an amplitude-encoded
mass function.  A leading diag(sqrt(m)) step turns the sqrt-amplitude
encoding into the mass vector itself (normalized), after which transform
matrices act on masses exactly as in the classical engine.  Outputs are
normalized states; where the classical target has a known total (mass
vectors and pignistic spreads sum to one) the scale is recovered from
measured magnitudes.
"""

from __future__ import annotations

import numpy as np

from ..dst.frame import singleton_indices
from ..dst.mass import MassFunction, require_same_frame
from ..dst.matrices import transform_matrix
from ..dst.transforms import b_from_mass, q_from_mass
from ..errors import (
    DegenerateEmptyMass,
    TotalConflict,
    ValidationError,
    ZeroPlausibility,
)
from ..qsim.state import StateVector
from .meob import MEoBConfig, meob_apply
from .prepare import encode_state
from .query import BeliefQuery, estimate_belief
from .swap import swap_test


def _chain(
    m: MassFunction, matrices, config: MEoBConfig
) -> tuple[StateVector, float]:
    """Run consecutive evolutions starting from the encoded state.

    Returns the final state and the product of all postselection
    probabilities down the chain.
    """
    state = encode_state(m)
    success = 1.0
    for matrix in matrices:
        state, p = meob_apply(matrix, state, config)
        success *= p
    return state, success


def evolve_mass(
    m: MassFunction, matrix: np.ndarray, config: MEoBConfig
) -> tuple[StateVector, float]:
    """Apply a transform matrix to the mass *vector*: diag(sqrt(m)), then the matrix.

    Output amplitudes are matrix @ masses, normalized.
    """
    n = m.frame.n
    diag = transform_matrix("diag", n, np.sqrt(m.masses))
    return _chain(m, [diag, matrix], config)


def belief_functions_qc(m: MassFunction, kind: str, config: MEoBConfig) -> StateVector:
    """Normalized belief/plausibility/commonality vector as a quantum state.

    The result is meant for further quantum processing only: the vector's
    total is not an observable, so the classical scale cannot be
    recovered from measurements.
    """
    if kind not in ("bel", "pl", "q"):
        raise ValidationError(f"kind must be bel, pl or q, got {kind!r}")
    state, _ = evolve_mass(m, transform_matrix(kind, m.frame.n), config)
    return state


def ccr_qc(m1: MassFunction, m2: MassFunction, config: MEoBConfig) -> MassFunction:
    """Conjunctive combination by matrix evolution.

    Chain diag(sqrt(m1)) -> q-transform -> diag(q2) -> inverse q-transform;
    the surviving magnitudes are proportional to the combined masses,
    whose true total is 1, so dividing by the measured sum recovers the
    combination (possibly with conflict mass on the empty set).
    """
    require_same_frame(m1, m2)
    n = m1.frame.n
    mats = [
        transform_matrix("diag", n, np.sqrt(m1.masses)),
        transform_matrix("q", n),
        transform_matrix("diag", n, q_from_mass(m2).values),
        transform_matrix("q_inv", n),
    ]
    state, _ = _chain(m1, mats, config)
    mags = np.abs(state.amps)
    mags[mags < 1e-9] = 0.0  # measurement floor: drop numerically dark states
    return MassFunction(m1.frame, mags / mags.sum())


def dcr_qc(m1: MassFunction, m2: MassFunction, config: MEoBConfig) -> MassFunction:
    """Disjunctive combination by the mirrored chain over the b-transform."""
    require_same_frame(m1, m2)
    n = m1.frame.n
    mb = transform_matrix("b", n)
    mb_inv = np.linalg.inv(mb)
    mats = [
        transform_matrix("diag", n, np.sqrt(m1.masses)),
        mb,
        transform_matrix("diag", n, b_from_mass(m2).values),
        mb_inv,
    ]
    state, _ = _chain(m1, mats, config)
    mags = np.abs(state.amps)
    mags[mags < 1e-9] = 0.0
    return MassFunction(m1.frame, mags / mags.sum())


def dempster_qc(m1: MassFunction, m2: MassFunction, config: MEoBConfig) -> MassFunction:
    """Dempster's rule: quantum conjunctive combination, then the classical
    renormalization step (the normalization itself has no unitary form)."""
    cap = ccr_qc(m1, m2, config)
    conflict = float(cap.masses[0])
    if conflict >= 1.0 - 1e-9:
        raise TotalConflict("recovered conjunctive combination is all conflict")
    masses = cap.masses / (1.0 - conflict)
    masses = masses.copy()
    masses[0] = 0.0
    return MassFunction(m1.frame, masses / masses.sum())


def ppt_qc(m: MassFunction, config: MEoBConfig) -> np.ndarray:
    """Pignistic probabilities via the cardinality-spread matrix.

    Requires a normal input (no empty-set mass): the spread matrix has no
    empty-set handling, and the 1/(1 - m({})) factor would otherwise be a
    classical correction.
    """
    if float(m.masses[0]) > 1e-12:
        raise DegenerateEmptyMass("pignistic evolution needs m({}) = 0")
    state, _ = evolve_mass(m, transform_matrix("bet", m.frame.n), config)
    mags = np.abs(state.amps)[singleton_indices(m.frame.n)]
    return mags / mags.sum()


def ptm_qc(
    m: MassFunction,
    mode: str = "statevector",
    shots: int | None = None,
    seed: int | None = None,
) -> np.ndarray:
    """Normalized singleton plausibilities from n extraction circuits."""
    n = m.frame.n
    values = np.empty(n)
    for j in range(n):
        shot_seed = None if seed is None else seed + 2 * j
        values[j] = estimate_belief(m, BeliefQuery("pl", 1 << j), mode, shots, shot_seed)
    total = values.sum()
    if total <= 1e-12:
        raise ZeroPlausibility("every singleton has zero plausibility")
    return values / total


def fb_inner_product_qc(m1: MassFunction, m2: MassFunction, config: MEoBConfig) -> float:
    """Fractal-reallocation similarity via the swap test.

    Each input runs diag(sqrt(m_i)) then the fractal matrix, with all four
    evolution ancillas postselected before the swap test; the test yields
    the squared cosine, and the square root is the similarity (both
    vectors are non-negative).
    """
    require_same_frame(m1, m2)
    n = m1.frame.n
    mf = transform_matrix("fractal", n)
    s1, _ = evolve_mass(m1, mf, config)
    s2, _ = evolve_mass(m2, mf, config)
    estimate = swap_test(s1, s2, mode="statevector")
    return float(np.sqrt(max(estimate, 0.0)))


__all__ = [
    "evolve_mass",
    "belief_functions_qc",
    "ccr_qc",
    "dcr_qc",
    "dempster_qc",
    "ppt_qc",
    "ptm_qc",
    "fb_inner_product_qc",
]
