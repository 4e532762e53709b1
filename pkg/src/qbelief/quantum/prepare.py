"""Amplitude encoding of mass functions.

The target state puts amplitude +sqrt(m(F_i)) on basis state |i> with
the focal-set bitmask as basis index.  A binary tree of mass sums drives
one multi-controlled Y-rotation per node: level l (0-based from the
root) splits on qubit n-1-l, the |0> branch is the "left" child, and
leaf order therefore equals focal-index order.  The whole circuit uses
exactly 2^n - 1 controlled rotations, 2^{l} of them at level l.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..dst.mass import MassFunction
from ..qsim.circuit import Circuit
from ..qsim.gates import RY
from ..qsim.state import StateVector, new_state


@dataclass(frozen=True)
class PreparationTree:
    """Subtree mass sums and branch angles, leaves in focal-index order.

    ``values[l][p]`` is the total mass of the focal sets whose top ``l``
    index bits equal ``p``; ``angles[l][p]`` is arctan(sqrt(left/right))
    for the split below that node, with angle 0 where both children are
    empty.
    """

    n: int
    values: tuple[np.ndarray, ...]
    angles: tuple[np.ndarray, ...]

    @property
    def root_value(self) -> float:
        return float(self.values[0][0])

    def node_value(self, level: int, path: int) -> float:
        return float(self.values[level][path])

    def node_angle(self, level: int, path: int) -> float:
        return float(self.angles[level][path])


def build_preparation_tree(m: MassFunction) -> PreparationTree:
    """Aggregate masses bottom-up and derive one branch angle per node."""
    n = m.frame.n
    values = [np.empty(0)] * (n + 1)
    values[n] = m.masses.copy()
    for level in range(n - 1, -1, -1):
        child = values[level + 1]
        values[level] = child[0::2] + child[1::2]

    angles = []
    for level in range(n):
        child = values[level + 1]
        left = child[0::2]
        right = child[1::2]
        angles.append(np.arctan2(np.sqrt(left), np.sqrt(right)))
    return PreparationTree(n, tuple(values), tuple(angles))


def synthesize_preparation_circuit(tree: PreparationTree) -> Circuit:
    """One multi-controlled RY per tree node.

    The rotation angle is chosen so that, starting from |0...0>, the
    |0>/|1> split of qubit n-1-l reproduces the left/right mass ratio of
    the node; controls pin the already-prepared higher qubits to the
    node's path.  Empty subtrees still emit their (identity-angle) gates
    so the gate count stays exactly 2^n - 1.
    """
    n = tree.n
    circ = Circuit(n)
    for level in range(n):
        child = tree.values[level + 1]
        left = child[0::2]
        right = child[1::2]
        for path in range(1 << level):
            # amplitude split: cos(a/2) on |0>, sin(a/2) on |1>
            alpha = 2.0 * np.arctan2(np.sqrt(right[path]), np.sqrt(left[path]))
            controls = [
                (n - 1 - j, (path >> (level - 1 - j)) & 1) for j in range(level)
            ]
            circ.append(RY(alpha), n - 1 - level, controls)
    return circ


def prepare_bba_state(m: MassFunction) -> StateVector:
    """Run the synthesized circuit; amplitudes come out as +sqrt(mass)."""
    circ = synthesize_preparation_circuit(build_preparation_tree(m))
    return circ.run(new_state(m.frame.n, 0))


def encode_state(m: MassFunction) -> StateVector:
    """Direct amplitude write-down of sqrt(m), bypassing the circuit.

    Used by oracle backends; the circuit route must agree with this
    exactly and tests enforce it.
    """
    return StateVector(m.frame.n, np.sqrt(m.masses).astype(np.complex128))


__all__ = [
    "PreparationTree",
    "build_preparation_tree",
    "synthesize_preparation_circuit",
    "prepare_bba_state",
    "encode_state",
]
