import numpy as np
import pytest

from grlsim.network import HopTable


def make_hop_table(matrix) -> HopTable:
    """Synthetic hop table from a [node][anchor] matrix (-1 = unreachable)."""
    hops = np.asarray(matrix, dtype=np.int32)
    return HopTable(hops, np.arange(hops.shape[1], dtype=np.int32))


@pytest.fixture
def hop_table_345():
    """Anchors (0,0), (30,0), (0,40) with pairwise hops 3/4/5 and one
    unknown node at hops (5, 4, 3), matching true position (30, 40)."""
    return make_hop_table([
        [0, 3, 4],
        [3, 0, 5],
        [4, 5, 0],
        [5, 4, 3],
    ])
