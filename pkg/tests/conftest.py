import sys
from fractions import Fraction
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from qbelief.dst import Frame, MassFunction, random_mass_function, validate_bba


@pytest.fixture
def frame3() -> Frame:
    return Frame(["A", "B", "C"])


@pytest.fixture
def frame2() -> Frame:
    return Frame(["A", "B"])


@pytest.fixture
def showcase(frame3) -> MassFunction:
    """Seven-focal assignment over {A, B, C} with Pl(C) = 2/3, q(BC) = 4/9."""
    return validate_bba(
        frame3,
        {
            ("A",): 1 / 18,
            ("B",): 1 / 6,
            ("C",): 1 / 6,
            ("A", "B"): 1 / 9,
            ("A", "C"): 1 / 18,
            ("B", "C"): 2 / 9,
            ("A", "B", "C"): 2 / 9,
        },
    )


SHOWCASE_DENSE = np.array(
    [
        0,
        Fraction(1, 18),
        Fraction(1, 6),
        Fraction(1, 9),
        Fraction(1, 6),
        Fraction(1, 18),
        Fraction(2, 9),
        Fraction(2, 9),
    ],
    dtype=np.float64,
)


def make_frame(n: int) -> Frame:
    return Frame([f"e{i}" for i in range(n)])


def random_bbas(count: int, n: int, seed: int, allow_empty: bool = False):
    frame = make_frame(n)
    rng = np.random.default_rng(seed)
    return [random_mass_function(frame, rng, allow_empty=allow_empty) for _ in range(count)]


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240817)
