"""Matrix exponentials for Hamiltonian-style evolution."""

from __future__ import annotations

import numpy as np

from ..errors import NotHermitian

_HERMITIAN_TOL = 1e-9


def hermiticity_defect(h: np.ndarray) -> float:
    h = np.asarray(h)
    return float(np.abs(h - h.conj().T).max())


def matrix_exponential(h: np.ndarray, t: float) -> np.ndarray:
    """exp(i h t) for Hermitian h, via eigendecomposition.

    Diagonalizing once keeps repeated powers exp(i h t 2^j) free of the
    error accumulation a squared-product scheme would introduce.
    """
    h = np.asarray(h, dtype=np.complex128)
    defect = hermiticity_defect(h)
    if defect > _HERMITIAN_TOL:
        raise NotHermitian(f"matrix deviates from Hermiticity by {defect:.3g}")
    evals, evecs = np.linalg.eigh(h)
    return (evecs * np.exp(1j * evals * t)) @ evecs.conj().T


__all__ = ["matrix_exponential", "hermiticity_defect"]
