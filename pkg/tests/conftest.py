from fractions import Fraction

import pytest
from hypothesis import strategies as st

from evicalc import BeliefStructure, Frame

ATOMS = "abcdef"


@pytest.fixture
def frame4() -> Frame:
    return Frame(["a", "b", "c", "d"])


@pytest.fixture
def frame5() -> Frame:
    return Frame(["a", "b", "c", "d", "e"])


@st.composite
def structures(draw, min_atoms=2, max_atoms=5, max_focals=4):
    """A random normal belief structure on a small frame."""
    n = draw(st.integers(min_atoms, max_atoms))
    frame = Frame(ATOMS[:n])
    count = draw(st.integers(1, min(max_focals, (1 << n) - 1)))
    masks = draw(st.lists(st.integers(1, (1 << n) - 1), min_size=count,
                          max_size=count, unique=True))
    weights = draw(st.lists(st.integers(1, 9), min_size=count,
                            max_size=count))
    total = sum(weights)
    return BeliefStructure(
        frame, [(frame.from_bits(bits), Fraction(w, total))
                for bits, w in zip(masks, weights)])


@st.composite
def structure_pairs(draw, min_atoms=2, max_atoms=5, max_focals=4):
    """Two random structures sharing one frame."""
    n = draw(st.integers(min_atoms, max_atoms))
    frame = Frame(ATOMS[:n])

    def one():
        count = draw(st.integers(1, min(max_focals, (1 << n) - 1)))
        masks = draw(st.lists(st.integers(1, (1 << n) - 1), min_size=count,
                              max_size=count, unique=True))
        weights = draw(st.lists(st.integers(1, 9), min_size=count,
                                max_size=count))
        total = sum(weights)
        return BeliefStructure(
            frame, [(frame.from_bits(bits), Fraction(w, total))
                    for bits, w in zip(masks, weights)])

    return one(), one()
