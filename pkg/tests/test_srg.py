import pytest

from genpos import (
    FamilySpec,
    all_pairs_distances,
    build_graph,
    clique_number,
    generate,
    is_mmd,
    product,
    strong_resolving_graph,
)
from genpos.errors import DegeneratePairError, DisconnectedError


def _family(text):
    G, _ = generate(FamilySpec.parse(text))
    return G


@pytest.mark.parametrize(
    "spec,edges",
    [
        ("path:4", [(0, 3)]),
        ("path:2", [(0, 1)]),
        ("cycle:4", [(0, 2), (1, 3)]),
        ("cycle:6", [(0, 3), (1, 4), (2, 5)]),
        ("cycle:5", [(0, 2), (0, 3), (1, 3), (1, 4), (2, 4)]),
        ("star:3", [(1, 2), (1, 3), (2, 3)]),
    ],
)
def test_known_strong_resolving_graphs(spec, edges):
    R = strong_resolving_graph(_family(spec))
    assert sorted(R.edges()) == edges


def test_complete_graph_is_its_own_srg():
    K5 = _family("complete:5")
    R = strong_resolving_graph(K5)
    assert set(R.edges()) == set(K5.edges())


def test_srg_keeps_vertex_set_and_may_disconnect():
    # even-cycle SRG is a perfect matching: same order, no connectivity
    R = strong_resolving_graph(_family("cycle:8"))
    assert R.n == 8 and R.m == 4
    assert all(R.degree(v) == 1 for v in range(8))


def test_srg_requires_connected_input():
    with pytest.raises(DisconnectedError):
        strong_resolving_graph(build_graph(4, [(0, 1), (2, 3)]))


def test_mmd_pairs_on_path():
    P = _family("path:5")
    D = all_pairs_distances(P)
    assert is_mmd(P, D, 0, 4)
    assert not is_mmd(P, D, 0, 3)  # 3 can still walk away to 4
    assert not is_mmd(P, D, 1, 3)
    with pytest.raises(DegeneratePairError):
        is_mmd(P, D, 2, 2)


def test_mmd_is_symmetric():
    G = _family("theta:2,3,3")
    D = all_pairs_distances(G)
    for u in range(G.n):
        for v in range(u + 1, G.n):
            assert is_mmd(G, D, u, v) == is_mmd(G, D, v, u)


def test_srg_edges_from_first_principles(petersen):
    # recompute mutual maximal distance straight from the distance table
    D = all_pairs_distances(petersen)
    R = strong_resolving_graph(petersen)

    def max_distant(u, v):
        return D.d[u][v] == max(D.d[w][v] for w in petersen.adj[u] + (u,))

    expected = {
        (u, v)
        for u in range(10)
        for v in range(u + 1, 10)
        if max_distant(u, v) and max_distant(v, u)
    }
    assert set(R.edges()) == expected
    # Petersen: exactly the non-adjacent pairs end up mutually maximally
    # distant, so its SRG is the complement
    assert R.m == 45 - 15
    assert all(not petersen.has_edge(u, v) for u, v in R.edges())


def test_direct_product_clique_number_is_min_of_factors():
    for a, b in [(2, 3), (3, 3), (3, 5), (4, 4)]:
        A = _family(f"complete:{a}")
        B = _family(f"complete:{b}")
        assert clique_number(product(A, B, "direct")) == min(a, b)
