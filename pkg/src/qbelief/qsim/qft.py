"""Quantum Fourier transform circuits.

Convention: QFT|x> = 2^{-t/2} sum_y exp(2 pi i x y / 2^t) |y> with qubit
j holding bit j of x.  Built from Hadamards and controlled phase
rotations, with a final swap layer restoring bit order.
"""

from __future__ import annotations

import numpy as np

from .circuit import Circuit
from .gates import RZ, SWAP, H


def qft_circuit(k: int) -> Circuit:
    circ = Circuit(k)
    for i in range(k - 1, -1, -1):
        circ.append(H(), i)
        for j in range(i - 1, -1, -1):
            circ.append(RZ(2.0 * np.pi / (1 << (i - j + 1))), i, [(j, 1)])
    for i in range(k // 2):
        circ.append(SWAP(), (i, k - 1 - i))
    return circ


def inverse_qft_circuit(k: int) -> Circuit:
    return qft_circuit(k).inverse()


__all__ = ["qft_circuit", "inverse_qft_circuit"]
