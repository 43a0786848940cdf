"""Mutual maximal distance and the strong resolving graph."""

from __future__ import annotations

from .errors import DegeneratePairError
from .graphs import Graph, build_graph
from .metric import DistMatrix, all_pairs_distances


def is_mmd(G: Graph, D: DistMatrix, u: int, v: int) -> bool:
    """True iff u and v are mutually maximally distant.

    u is maximally distant from v when no neighbor of u is farther from v
    than u itself; the relation must hold in both directions.
    """
    if u == v:
        raise DegeneratePairError("mutual maximal distance needs distinct vertices")
    duv = D.d[u][v]
    dv = D.d[v]
    for w in G.adj[u]:
        if dv[w] > duv:
            return False
    du = D.d[u]
    for w in G.adj[v]:
        if du[w] > duv:
            return False
    return True


def strong_resolving_graph(G: Graph) -> Graph:
    """Graph on the same vertices whose edges are the mutually maximally
    distant pairs of G.

    The input must be connected; the result often is not, and may have
    isolated vertices.
    """
    D = all_pairs_distances(G)
    edges = [
        (u, v)
        for u in range(G.n)
        for v in range(u + 1, G.n)
        if is_mmd(G, D, u, v)
    ]
    return build_graph(G.n, edges)
