"""Belief-function computation on simulated quantum circuits.

Three layers: :mod:`qbelief.dst` is a classical Dempster-Shafer engine,
:mod:`qbelief.qsim` a deterministic dense state-vector simulator, and
:mod:`qbelief.quantum` the circuit constructions (amplitude encoding,
belief extraction, matrix evolution, swap-test similarity, combination
and probability-transform pipelines), every one of which is checked
against the classical engine.
"""

from . import dst, qsim, quantum
from .dst import Frame, MassFunction, validate_bba

__version__ = "0.1.0"

__all__ = ["dst", "qsim", "quantum", "Frame", "MassFunction", "validate_bba", "__version__"]
