import itertools
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from genpos import (
    VertexSet,
    all_pairs_distances,
    build_graph,
    generate,
    FamilySpec,
    girth,
    interval_masks,
    is_convex,
    is_p4_inner_isometric,
    lies_between,
    random_connected,
    simplicial_set,
)
from genpos.errors import (
    DegeneratePairError,
    DisconnectedError,
    EmptySetError,
    NotAnEdgeError,
)


def _family(text):
    G, _ = generate(FamilySpec.parse(text))
    return G


def test_path_distances():
    D = all_pairs_distances(_family("path:4"))
    assert D.d == (
        (0, 1, 2, 3),
        (1, 0, 1, 2),
        (2, 1, 0, 1),
        (3, 2, 1, 0),
    )
    assert D.diameter == 3


def test_cycle_distances_wrap():
    D = all_pairs_distances(_family("cycle:6"))
    assert D.d[0][3] == 3 and D.d[0][4] == 2 and D.d[0][5] == 1
    assert D.diameter == 3


def test_single_vertex():
    D = all_pairs_distances(build_graph(1, []))
    assert D.d == ((0,),) and D.diameter == 0


def test_distances_reject_bad_input():
    with pytest.raises(EmptySetError):
        all_pairs_distances(build_graph(0, []))
    with pytest.raises(DisconnectedError):
        all_pairs_distances(build_graph(4, [(0, 1), (2, 3)]))


@pytest.mark.parametrize(
    "spec,expected",
    [
        ("complete:4", 3),
        ("cycle:5", 5),
        ("cycle:9", 9),
        ("path:6", math.inf),
        ("path:2", math.inf),
        ("star:5", math.inf),
        ("complete_bipartite:2,3", 4),
        ("theta:2,2,3", 4),
    ],
)
def test_girth_examples(spec, expected):
    G = _family(spec)
    assert girth(G, all_pairs_distances(G)) == expected


def test_girth_petersen(petersen):
    assert girth(petersen, all_pairs_distances(petersen)) == 5


def test_girth_rejects_mismatched_matrix():
    G = _family("path:3")
    D = all_pairs_distances(_family("path:4"))
    with pytest.raises(ValueError):
        girth(G, D)


def test_lies_between_on_path():
    D = all_pairs_distances(_family("path:5"))
    assert lies_between(D, 0, 2, 4)
    assert lies_between(D, 0, 0, 4)  # endpoints sit on the path
    assert not lies_between(D, 0, 4, 2)
    with pytest.raises(DegeneratePairError):
        lies_between(D, 3, 1, 3)


def test_interval_masks_match_strict_betweenness():
    G = _family("cycle:6")
    D = all_pairs_distances(G)
    bet = interval_masks(D)
    for u in range(6):
        assert bet[u][u] == 0
        for v in range(6):
            if u == v:
                continue
            assert bet[u][v] == bet[v][u]
            for w in range(6):
                expect = w not in (u, v) and lies_between(D, u, w, v)
                assert bool(bet[u][v] >> w & 1) == expect


def test_antipodal_interval_in_even_cycle():
    D = all_pairs_distances(_family("cycle:6"))
    bet = interval_masks(D)
    # both arcs between antipodes are geodesics
    assert bet[0][3] == (1 << 1) | (1 << 2) | (1 << 4) | (1 << 5)


def test_convexity_cases():
    P = _family("path:6")
    DP = all_pairs_distances(P)
    assert is_convex(P, DP, VertexSet(6, [2, 3, 4]))
    assert not is_convex(P, DP, VertexSet(6, [1, 4]))
    assert is_convex(P, DP, VertexSet(6, []))
    assert is_convex(P, DP, VertexSet(6, [3]))
    assert is_convex(P, DP, VertexSet(6, range(6)))

    C = _family("cycle:4")
    DC = all_pairs_distances(C)
    assert not is_convex(C, DC, VertexSet(4, [0, 2]))
    assert is_convex(C, DC, VertexSet(4, [0, 1]))


def test_convexity_validates_sizes():
    G = _family("path:3")
    D = all_pairs_distances(G)
    with pytest.raises(ValueError):
        is_convex(G, D, VertexSet(4, [0]))


def test_convexity_agrees_with_interval_formula():
    for seed in range(25):
        G = random_connected(7, 0.4, seed)
        D = all_pairs_distances(G)
        bet = interval_masks(D)
        for mask in range(1 << 7):
            members = [v for v in range(7) if mask >> v & 1]
            closed = all(
                bet[u][v] & ~mask == 0
                for u, v in itertools.combinations(members, 2)
            )
            assert is_convex(G, D, VertexSet.from_mask(7, mask)) == closed


@pytest.mark.parametrize(
    "spec,expected",
    [
        ("path:5", [0, 4]),
        ("cycle:4", []),
        ("cycle:7", []),
        ("complete:5", [0, 1, 2, 3, 4]),
        ("star:4", [1, 2, 3, 4]),
        ("complete_bipartite:2,2", []),
        ("complete_bipartite:1,3", [1, 2, 3]),
    ],
)
def test_simplicial_vertices(spec, expected):
    assert sorted(simplicial_set(_family(spec))) == expected


def test_simplicial_by_pairwise_definition():
    for seed in range(30):
        G = random_connected(8, 0.35, seed)
        simp = set(simplicial_set(G))
        for v in range(8):
            nbrs = G.adj[v]
            complete = all(
                G.has_edge(a, b) for a, b in itertools.combinations(nbrs, 2)
            )
            assert (v in simp) == complete


def test_inner_edges_of_cycles():
    for n in (6, 7, 9):
        C = _family(f"cycle:{n}")
        D = all_pairs_distances(C)
        assert all(is_p4_inner_isometric(C, D, x, y) for x, y in C.edges())
    C5 = _family("cycle:5")
    D5 = all_pairs_distances(C5)
    assert not any(is_p4_inner_isometric(C5, D5, x, y) for x, y in C5.edges())


def test_inner_edge_on_path_middle_only():
    P = _family("path:4")
    D = all_pairs_distances(P)
    assert is_p4_inner_isometric(P, D, 1, 2)
    assert not is_p4_inner_isometric(P, D, 0, 1)
    with pytest.raises(NotAnEdgeError):
        is_p4_inner_isometric(P, D, 0, 2)


@settings(max_examples=60, deadline=None)
@given(
    n=st.integers(min_value=2, max_value=9),
    p=st.floats(min_value=0.2, max_value=0.9),
    seed=st.integers(min_value=0, max_value=10**6),
)
def test_metric_axioms_hold(n, p, seed):
    G = random_connected(n, p, seed)
    D = all_pairs_distances(G)
    for u in range(n):
        assert D.d[u][u] == 0
        for v in range(n):
            assert D.d[u][v] == D.d[v][u]
            assert (D.d[u][v] == 1) == G.has_edge(u, v) if u != v else True
            for w in range(n):
                assert D.d[u][v] <= D.d[u][w] + D.d[w][v]
