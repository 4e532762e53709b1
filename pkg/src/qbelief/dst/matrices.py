"""Explicit transform matrices over the power-set basis.

Dense 2^n x 2^n matrices with rows indexed by F and columns by G.  These
are the reference implementations the fast lattice transforms are tested
against, and the evolution operators fed to the quantum pipelines.
"""

from __future__ import annotations

import numpy as np
import scipy.linalg

from ..errors import DimensionMismatch
from .frame import Frame, popcounts
from .mass import MassFunction
from .transforms import b_from_mass, q_from_mass

KINDS = (
    "bel", "pl", "q", "q_inv", "fractal", "b", "bet", "jaccard", "cred", "card_inv", "diag",
)


def _subset_masks(n: int):
    idx = np.arange(1 << n)
    F = idx[:, None]
    G = idx[None, :]
    return F, G


def transform_matrix(kind: str, frame_or_n: Frame | int, v: np.ndarray | None = None) -> np.ndarray:
    """Build the named transform matrix for an n-element frame.

    kind:
      - ``bel``: 1 iff G is a non-empty subset of F (maps masses to Bel)
      - ``b``:   1 iff G is a subset of F (maps masses to b)
      - ``pl``:  1 iff F and G intersect (maps masses to Pl)
      - ``q``:   1 iff F is a subset of G (maps masses to q)
      - ``q_inv``: inverse of ``q``, by back-substitution on the
        unit-triangular ``q`` matrix
      - ``fractal``: fractal reallocation; identity on the empty set,
        1/(2^|G| - 1) on non-empty F <= G
      - ``bet``: pignistic spread ``cred @ card_inv``, |F & G| / |G| with a
        zero column on the empty set
      - ``cred``: |F & G|
      - ``card_inv``: diagonal 1/|F| (zero on the empty set)
      - ``jaccard``: |F & G| / |F | G| with the empty/empty entry set to 1
        so the matrix stays positive semidefinite
      - ``diag``: diagonal of the supplied vector ``v``
    """
    n = frame_or_n.n if isinstance(frame_or_n, Frame) else int(frame_or_n)
    size = 1 << n
    if kind == "diag":
        if v is None:
            raise DimensionMismatch("diag kind needs a vector")
        v = np.asarray(v, dtype=np.float64)
        if v.shape != (size,):
            raise DimensionMismatch(f"diag vector has shape {v.shape}, expected ({size},)")
        return np.diag(v)

    F, G = _subset_masks(n)
    if kind == "bel":
        return (((G & F) == G) & (G != 0)).astype(np.float64)
    if kind == "b":
        return ((G & F) == G).astype(np.float64)
    if kind == "pl":
        return ((F & G) != 0).astype(np.float64)
    if kind == "q":
        return ((F & G) == F).astype(np.float64)
    if kind == "q_inv":
        mq = ((F & G) == F).astype(np.float64)
        return scipy.linalg.solve_triangular(mq, np.eye(size), lower=False, unit_diagonal=True)
    if kind == "fractal":
        pc = popcounts(n)
        out = np.zeros((size, size))
        sub = ((F & G) == F) & (F != 0) & (G != 0)
        weights = np.ones(size)
        weights[1:] = 1.0 / (np.exp2(pc[1:]) - 1.0)
        out[sub] = np.broadcast_to(weights[None, :], (size, size))[sub]
        out[0, 0] = 1.0
        return out
    if kind == "cred":
        return np.bitwise_count((F & G).astype(np.uint32)).astype(np.float64)
    if kind == "card_inv":
        pc = popcounts(n).astype(np.float64)
        d = np.zeros(size)
        d[1:] = 1.0 / pc[1:]
        return np.diag(d)
    if kind == "bet":
        return transform_matrix("cred", n) @ transform_matrix("card_inv", n)
    if kind == "jaccard":
        inter = np.bitwise_count((F & G).astype(np.uint32)).astype(np.float64)
        union = np.bitwise_count((F | G).astype(np.uint32)).astype(np.float64)
        union[0, 0] = 1.0
        out = inter / union
        out[0, 0] = 1.0
        return out
    raise DimensionMismatch(f"unknown matrix kind {kind!r}; known kinds: {KINDS}")


def conjunctive_matrix(m: MassFunction) -> np.ndarray:
    """Matrix S with S @ m2 = conjunctive combination of m and m2.

    S = Mq^-1 @ diag(q) @ Mq, the commonality-product rule written as a
    single operator.
    """
    n = m.frame.n
    mq = transform_matrix("q", n)
    mq_inv = transform_matrix("q_inv", n)
    return mq_inv @ np.diag(q_from_mass(m).values) @ mq


def disjunctive_matrix(m: MassFunction) -> np.ndarray:
    """Matrix G with G @ m2 = disjunctive combination of m and m2.

    G = Mb^-1 @ diag(b) @ Mb, the implicability-product rule.
    """
    n = m.frame.n
    mb = transform_matrix("b", n)
    mb_inv = scipy.linalg.solve_triangular(
        mb, np.eye(mb.shape[0]), lower=True, unit_diagonal=True
    )
    return mb_inv @ np.diag(b_from_mass(m).values) @ mb


__all__ = ["KINDS", "transform_matrix", "conjunctive_matrix", "disjunctive_matrix"]
