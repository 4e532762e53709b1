"""Deterministic dense state-vector simulator."""

from .circuit import Circuit, CircuitOp
from .decompose import MAX_CONTROLS, decompose_circuit, decompose_multicontrolled
from .gates import RY, RZ, SWAP, U3, Gate, H, X, gate_matrix
from .linalg import hermiticity_defect, matrix_exponential
from .qft import inverse_qft_circuit, qft_circuit
from .state import (
    ControlSpec,
    MeasurementRecord,
    StateVector,
    new_state,
    product_state,
)

__all__ = [
    "Gate",
    "X",
    "H",
    "RY",
    "RZ",
    "U3",
    "SWAP",
    "gate_matrix",
    "StateVector",
    "new_state",
    "product_state",
    "ControlSpec",
    "MeasurementRecord",
    "Circuit",
    "CircuitOp",
    "qft_circuit",
    "inverse_qft_circuit",
    "matrix_exponential",
    "hermiticity_defect",
    "decompose_multicontrolled",
    "decompose_circuit",
    "MAX_CONTROLS",
]
