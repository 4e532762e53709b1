"""Mass functions (basic belief assignments) over a frame's power set.

A mass function assigns each subset a weight in [0, 1] with the weights
summing to one.  Dense storage over all 2^n subsets, indexed by bitmask.
Sparse focal-set maps are accepted only at the ingestion boundary
(:func:`validate_bba`).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

import numpy as np

from ..errors import (
    DuplicateFocalSet,
    FrameMismatch,
    MassSumViolation,
    NegativeMass,
    ValidationError,
)
from .frame import Frame, popcounts, singleton_indices

#: ingestion tolerance for user-supplied masses; internal identities are
#: held to 1e-10..1e-12 by the test suite
MASS_SUM_TOL = 1e-9


@dataclass(frozen=True)
class MassFunction:
    """Dense vector of subset masses over a frame.

    The vector is validated at construction and then immutable; every
    operation on mass functions is a pure function returning new values.
    """

    frame: Frame
    masses: np.ndarray = field(repr=False)

    def __init__(self, frame: Frame, masses: np.ndarray):
        masses = np.asarray(masses, dtype=np.float64)
        if masses.shape != (frame.size,):
            raise ValidationError(
                f"expected {frame.size} masses for n={frame.n}, got shape {masses.shape}"
            )
        if not np.all(np.isfinite(masses)):
            raise ValidationError("masses must be finite")
        if masses.min() < -MASS_SUM_TOL:
            bad = int(masses.argmin())
            raise NegativeMass(f"mass of subset {bad} is negative ({masses.min():.3g})")
        if masses.max() > 1.0 + MASS_SUM_TOL:
            raise ValidationError(f"mass exceeds 1 ({masses.max():.3g})")
        total = float(masses.sum())
        if abs(total - 1.0) > MASS_SUM_TOL:
            raise MassSumViolation(f"masses sum to {total!r}, expected 1")
        masses = masses.copy()
        masses.flags.writeable = False
        object.__setattr__(self, "frame", frame)
        object.__setattr__(self, "masses", masses)

    # --- special-shape flags (testable, derived) ---

    @property
    def subnormal(self) -> bool:
        """True iff some mass sits on the empty set."""
        return float(self.masses[0]) > 0.0

    @property
    def bayesian(self) -> bool:
        """True iff all focal sets are singletons."""
        support = np.flatnonzero(self.masses)
        return bool(np.all(np.bitwise_count(support.astype(np.uint32)) == 1))

    @property
    def vacuous(self) -> bool:
        """True iff the whole frame carries mass one."""
        return float(self.masses[-1]) == 1.0

    @property
    def consonant(self) -> bool:
        """True iff the focal sets form a chain under inclusion."""
        support = [int(i) for i in np.flatnonzero(self.masses)]
        support.sort(key=lambda f: bin(f).count("1"))
        return all(a & b == a for a, b in zip(support, support[1:]))

    @property
    def focal_sets(self) -> list[int]:
        return [int(i) for i in np.flatnonzero(self.masses)]

    def mass_of(self, focal: Iterable[str] | str | int) -> float:
        idx = focal if isinstance(focal, int) else self.frame.index_of(focal)
        return float(self.masses[idx])

    def as_dict(self) -> dict[tuple[str, ...], float]:
        """Sparse focal-set map, for display and serialization."""
        return {self.frame.labels_of(i): float(self.masses[i]) for i in self.focal_sets}

    def __repr__(self) -> str:
        parts = ", ".join(
            f"{self.frame.format_subset(i)}: {self.masses[i]:.6g}" for i in self.focal_sets
        )
        return f"MassFunction({parts})"


@dataclass(frozen=True)
class BeliefVector:
    """A derived set function (Bel, Pl, q, b, BetM or a fractal reallocation)."""

    frame: Frame
    kind: str
    values: np.ndarray = field(repr=False)

    def __init__(self, frame: Frame, kind: str, values: np.ndarray):
        values = np.asarray(values, dtype=np.float64)
        if values.shape != (frame.size,):
            raise ValidationError("belief vector has wrong length for frame")
        values = values.copy()
        values.flags.writeable = False
        object.__setattr__(self, "frame", frame)
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "values", values)

    def value_of(self, focal: Iterable[str] | str | int) -> float:
        idx = focal if isinstance(focal, int) else self.frame.index_of(focal)
        return float(self.values[idx])


def validate_bba(frame: Frame, focal_masses: Mapping) -> MassFunction:
    """Build a dense :class:`MassFunction` from a sparse focal-set map.

    Keys are subsets given as iterables of element labels (a bare string
    counts as one label); values are masses.  Unlisted subsets get mass
    zero.  Raises :class:`UnknownElement`, :class:`DuplicateFocalSet`,
    :class:`NegativeMass` or :class:`MassSumViolation` on bad input.
    """
    dense = np.zeros(frame.size)
    seen: set[int] = set()
    for focal, value in focal_masses.items():
        idx = focal if isinstance(focal, int) else frame.index_of(focal)
        if not 0 <= idx < frame.size:
            raise ValidationError(f"subset index {idx} out of range")
        if idx in seen:
            raise DuplicateFocalSet(f"subset {frame.format_subset(idx)} listed twice")
        seen.add(idx)
        if value < 0:
            raise NegativeMass(f"mass of {frame.format_subset(idx)} is negative ({value})")
        dense[idx] = value
    return MassFunction(frame, dense)


def require_same_frame(m1: MassFunction, m2: MassFunction) -> None:
    if m1.frame != m2.frame:
        raise FrameMismatch(
            f"operands live on different frames: {m1.frame.elements} vs {m2.frame.elements}"
        )


def random_mass_function(
    frame: Frame,
    rng: np.random.Generator,
    allow_empty: bool = False,
    max_focal: int | None = None,
) -> MassFunction:
    """Random mass function, for tests and fixtures.

    Draws a random support (optionally excluding the empty set) and
    exponential weights normalized to one.
    """
    lo = 0 if allow_empty else 1
    candidates = np.arange(lo, frame.size)
    k = int(rng.integers(1, len(candidates) + 1))
    if max_focal is not None:
        k = min(k, max_focal)
    support = rng.choice(candidates, size=k, replace=False)
    weights = rng.exponential(size=k)
    dense = np.zeros(frame.size)
    dense[support] = weights / weights.sum()
    return MassFunction(frame, dense)


__all__ = [
    "MASS_SUM_TOL",
    "MassFunction",
    "BeliefVector",
    "validate_bba",
    "require_same_frame",
    "random_mass_function",
    "popcounts",
    "singleton_indices",
]
