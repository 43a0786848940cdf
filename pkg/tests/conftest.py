import pytest

from genpos import build_graph, random_connected


@pytest.fixture(scope="session")
def petersen():
    outer = [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]
    spokes = [(0, 5), (1, 6), (2, 7), (3, 8), (4, 9)]
    inner = [(5, 7), (7, 9), (6, 9), (6, 8), (5, 8)]
    return build_graph(10, outer + spokes + inner)


@pytest.fixture(scope="session")
def corpus():
    # 300 seeded connected graphs, orders 4..10, three densities
    graphs = []
    for seed in range(300):
        n = 4 + seed % 7
        p = (0.3, 0.45, 0.6)[seed % 3]
        graphs.append(random_connected(n, p, seed))
    return graphs
