"""Total-uncertainty measures, in bits (all logarithms base 2)."""

from __future__ import annotations

import numpy as np

from .frame import popcounts
from .mass import MassFunction
from .probability import pl_p
from .transforms import fbba


def _shannon(p: np.ndarray) -> float:
    """Shannon entropy with the 0 * log 0 = 0 convention."""
    nz = p > 0
    return float(-(p[nz] * np.log2(p[nz])).sum())


def fb_entropy(m: MassFunction) -> float:
    """Shannon entropy of the fractal reallocation of ``m``.

    For a vacuous input over n elements this is log2(2^n - 1), strictly
    above the log2(n) of a uniform distribution for n >= 2.
    """
    return _shannon(fbba(m).masses)


def js_entropy(m: MassFunction) -> float:
    """Discord plus non-specificity: entropy of the normalized singleton
    plausibilities plus the mass-weighted log-cardinality term."""
    discord = _shannon(pl_p(m))
    pc = popcounts(m.frame.n).astype(np.float64)
    nz = (m.masses > 0) & (pc > 0)
    non_specificity = float((m.masses[nz] * np.log2(pc[nz])).sum())
    return discord + non_specificity


__all__ = ["fb_entropy", "js_entropy"]
