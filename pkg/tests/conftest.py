import os
import random
from fractions import Fraction as F

import pytest

from ohmgraph import graph

os.environ.setdefault("OHMGRAPH_NO_PARALLEL", "1")


def fm(rows):
    """Matrix of Fractions from ints or 'p/q' strings."""
    return [[F(x) for x in row] for row in rows]


# four-leaf tree, unit conductances; leaves 1..4 clockwise, inner vertices 5 (near 1, 4) and 6 (near 2, 3)
TREE_EDGES = [(1, 5, 1), (4, 5, 1), (5, 6, 1), (2, 6, 1), (3, 6, 1)]
TREE_EMBEDDING = {1: (0,), 2: (3,), 3: (4,), 4: (1,), 5: (0, 2, 1), 6: (3, 4, 2)}

TREE_D = fm([[0, 3, 3, 2], [3, 0, 2, 3], [3, 2, 0, 3], [2, 3, 3, 0]])
TREE_RESPONSE = fm(
    [
        ["5/8", "-1/8", "-1/8", "-3/8"],
        ["-1/8", "5/8", "-3/8", "-1/8"],
        ["-1/8", "-3/8", "5/8", "-1/8"],
        ["-3/8", "-1/8", "-1/8", "5/8"],
    ]
)
# dual-network response times -1, as printed for the four-leaf example
TREE_DUAL_NEG = fm([[-3, 1, 1, 1], [1, -2, 1, 0], [1, 1, -3, 1], [1, 0, 1, -2]])
TREE_OMEGA = fm(
    [
        ["5/8", 1, "1/8", 0, "-1/8", 0, "3/8", 1],
        ["1/8", 1, "5/8", 1, "3/8", 0, "-1/8", 0],
        ["-1/8", 0, "3/8", 1, "5/8", 1, "1/8", 0],
        ["3/8", 0, "-1/8", 0, "1/8", 1, "5/8", 1],
    ]
)
TREE_OMEGA_R_REDUCED = fm(
    [
        [1, 3, 1, 1, 0, -1, 0, 1],
        [0, 1, 1, 2, 1, 1, 0, 0],
        [0, -1, 0, 1, 1, 3, 1, 1],
    ]
)


@pytest.fixture
def tree():
    return graph(6, [1, 2, 3, 4], TREE_EDGES, TREE_EMBEDDING)


@pytest.fixture
def star():
    return graph(4, [1, 2, 3], [(1, 4, 1), (2, 4, 1), (3, 4, 1)], {1: (0,), 2: (1,), 3: (2,), 4: (0, 1, 2)})


@pytest.fixture
def rng():
    return random.Random(20240611)
