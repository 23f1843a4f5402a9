import sys
from pathlib import Path

import pytest

TESTS_DIR = Path(__file__).parent
DATA_DIR = TESTS_DIR / "data"

# makes porter_oracle / oracles importable from test modules
sys.path.insert(0, str(TESTS_DIR))


@pytest.fixture
def toy_shapes():
    """Two-feature color/shape dataset: 7 positive and 5 negative samples.

    Marginals: P(+)=7/12, P(blue|+)=3/7, P(square|+)=5/7, P(blue|-)=3/5,
    P(square|-)=3/5.
    """
    positive = [
        ("blue", "square"),
        ("blue", "square"),
        ("blue", "circle"),
        ("green", "square"),
        ("green", "square"),
        ("red", "square"),
        ("red", "circle"),
    ]
    negative = [
        ("blue", "square"),
        ("blue", "square"),
        ("blue", "circle"),
        ("green", "square"),
        ("red", "circle"),
    ]
    samples = positive + negative
    labels = ["+"] * len(positive) + ["-"] * len(negative)
    return samples, labels


@pytest.fixture
def data_dir():
    return DATA_DIR
