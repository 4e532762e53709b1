"""Similarity and distance measures between mass functions."""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from ..errors import ZeroVector
from .mass import MassFunction, require_same_frame
from .matrices import transform_matrix
from .transforms import fbba


@lru_cache(maxsize=8)
def _jaccard(n: int) -> np.ndarray:
    return transform_matrix("jaccard", n)


def jousselme_distance(m1: MassFunction, m2: MassFunction) -> float:
    """Jaccard-kernel quadratic distance, in [0, 1] with d(m, m) = 0."""
    require_same_frame(m1, m2)
    d = m1.masses - m2.masses
    quad = float(d @ _jaccard(m1.frame.n) @ d)
    return float(np.sqrt(max(0.5 * quad, 0.0)))


def inner_bba(m1: MassFunction, m2: MassFunction) -> float:
    """Jaccard-kernel inner product of the raw mass vectors."""
    require_same_frame(m1, m2)
    return float(m1.masses @ _jaccard(m1.frame.n) @ m2.masses)


def euclidean_distance(m1: MassFunction, m2: MassFunction) -> float:
    """L2 distance scaled by 1/sqrt(2) so two disjoint certainties are 1 apart."""
    require_same_frame(m1, m2)
    return float(np.linalg.norm(m1.masses - m2.masses) / np.sqrt(2.0))


def classical_fidelity(m1: MassFunction, m2: MassFunction) -> float:
    """Bhattacharyya overlap of the two mass vectors: sum of sqrt(m1 * m2)."""
    require_same_frame(m1, m2)
    return float(np.sqrt(m1.masses * m2.masses).sum())


def fb_inner_product(m1: MassFunction, m2: MassFunction) -> float:
    """Cosine of the angle between the two fractal reallocations, in [0, 1]."""
    require_same_frame(m1, m2)
    f1 = fbba(m1).masses
    f2 = fbba(m2).masses
    n1 = float(np.linalg.norm(f1))
    n2 = float(np.linalg.norm(f2))
    if n1 == 0.0 or n2 == 0.0:
        # unreachable for valid mass functions, whose reallocations sum to 1
        raise ZeroVector("fractal reallocation is the zero vector")
    return float(np.clip(f1 @ f2 / (n1 * n2), 0.0, 1.0))


__all__ = [
    "jousselme_distance",
    "inner_bba",
    "euclidean_distance",
    "classical_fidelity",
    "fb_inner_product",
]
