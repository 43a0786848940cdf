"""Shortest-path metric machinery.

All-pairs BFS distances, geodesic betweenness, convexity of vertex sets,
girth, simplicial vertices, and the inner-edge test used by the
sufficient conditions for a vanishing dual invariant.
"""

from __future__ import annotations

import math
from collections import deque

from .errors import (
    DegeneratePairError,
    DisconnectedError,
    EmptySetError,
    NotAnEdgeError,
)
from .graphs import Graph, VertexSet, is_connected


class DistMatrix:
    """Immutable all-pairs distance table with its diameter."""

    __slots__ = ("n", "d", "diameter")

    def __init__(self, n: int, d, diameter: int):
        self.n = n
        self.d = d
        self.diameter = diameter

    def __repr__(self):
        return f"DistMatrix(n={self.n}, diameter={self.diameter})"


def all_pairs_distances(G: Graph) -> DistMatrix:
    """BFS from every vertex.  Requires a connected graph on >= 1 vertices."""
    if G.n == 0:
        raise EmptySetError("distance matrix needs at least one vertex")
    if not is_connected(G):
        raise DisconnectedError("all-pairs distances need a connected graph")
    n, adj = G.n, G.adj
    rows = []
    for s in range(n):
        dist = [-1] * n
        dist[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            du = dist[u]
            for w in adj[u]:
                if dist[w] < 0:
                    dist[w] = du + 1
                    queue.append(w)
        rows.append(tuple(dist))
    diameter = max(max(row) for row in rows)
    return DistMatrix(n, tuple(rows), diameter)


def girth(G: Graph, D: DistMatrix):
    """Length of a shortest cycle, or math.inf when the graph is a forest.

    BFS from each vertex; every non-tree edge closes a walk of length
    dist(u) + dist(w) + 1 through the source, and the minimum of those
    candidates over all sources is exactly the girth.
    """
    if D.n != G.n:
        raise ValueError("distance matrix does not match the graph")
    best = math.inf
    n, adj = G.n, G.adj
    for s in range(n):
        dist = [-1] * n
        parent = [-1] * n
        dist[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w and parent[w] != u:
                    cand = dist[u] + dist[w] + 1
                    if cand < best:
                        best = cand
    return best


def lies_between(D: DistMatrix, u: int, w: int, v: int) -> bool:
    """True iff w sits on some shortest u,v-path: d(u,w) + d(w,v) = d(u,v)."""
    if u == v:
        raise DegeneratePairError(f"betweenness needs distinct endpoints, got {u}")
    return D.d[u][w] + D.d[w][v] == D.d[u][v]


def interval_masks(D: DistMatrix):
    """Strict geodesic interiors as bitmasks.

    interval_masks(D)[u][v] holds w iff w != u, w != v and w lies on a
    shortest u,v-path.  Symmetric; the diagonal rows are zero.
    """
    n, d = D.n, D.d
    out = [[0] * n for _ in range(n)]
    for u in range(n):
        du = d[u]
        for v in range(u + 1, n):
            dv = d[v]
            duv = du[v]
            mask = 0
            for w in range(n):
                if w != u and w != v and du[w] + dv[w] == duv:
                    mask |= 1 << w
            out[u][v] = mask
            out[v][u] = mask
    return out


def is_convex(G: Graph, D: DistMatrix, W: VertexSet) -> bool:
    """True iff every shortest path between vertices of W stays inside W.

    Empty and singleton sets are convex.
    """
    if W.n != G.n or D.n != G.n:
        raise ValueError("vertex set or distance matrix does not match the graph")
    members = list(W)
    d = D.d
    for i, u in enumerate(members):
        du = d[u]
        for v in members[i + 1 :]:
            dv = d[v]
            duv = du[v]
            for w in range(G.n):
                if w not in W and du[w] + dv[w] == duv:
                    return False
    return True


def simplicial_set(G: Graph) -> VertexSet:
    """Vertices whose open neighborhood induces a complete graph."""
    mask = 0
    nbr = G.neighbor_masks
    for v in range(G.n):
        ok = True
        for u in G.adj[v]:
            # u must be adjacent to every other neighbor of v
            if nbr[v] & ~nbr[u] & ~(1 << u):
                ok = False
                break
        if ok:
            mask |= 1 << v
    return VertexSet.from_mask(G.n, mask)


def is_p4_inner_isometric(G: Graph, D: DistMatrix, x: int, y: int) -> bool:
    """True iff edge xy is the middle edge of an isometric 4-vertex path.

    That is, there are neighbors x' of x and y' of y, avoiding the edge,
    with d(x',y) = 2, d(x,y') = 2 and d(x',y') = 3.
    """
    if not G.has_edge(x, y):
        raise NotAnEdgeError(f"({x},{y}) is not an edge")
    d = D.d
    xs = [a for a in G.adj[x] if a != y and d[a][y] == 2]
    ys = [b for b in G.adj[y] if b != x and d[x][b] == 2]
    for a in xs:
        da = d[a]
        for b in ys:
            if da[b] == 3:
                return True
    return False
