import sys
from pathlib import Path

import pytest

from graphcenter.graph import (
    Graph,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    path_graph,
    petersen_graph,
)

sys.path.insert(0, str(Path(__file__).parent))

from oracles import random_edges, seeded_rng  # noqa: E402

RANDOM_H_SEED = 20240611


def random_h8() -> Graph:
    rng = seeded_rng(RANDOM_H_SEED)
    return Graph(8, random_edges(8, 0.5, rng))


def h_corpus() -> dict[str, Graph]:
    return {
        "K1": complete_graph(1),
        "K2": complete_graph(2),
        "coK2": empty_graph(2),
        "P4": path_graph(4),
        "C5": cycle_graph(5),
        "K4": complete_graph(4),
        "Petersen": petersen_graph(),
        "K3+K2": disjoint_union(complete_graph(3), complete_graph(2)),
        "random8": random_h8(),
    }


SELF_CENTERED = {
    "K2": complete_graph(2),
    "K5": complete_graph(5),
    "C5": cycle_graph(5),
    "C6": cycle_graph(6),
    "Petersen": petersen_graph(),
}


@pytest.fixture(scope="session")
def corpus():
    return h_corpus()
