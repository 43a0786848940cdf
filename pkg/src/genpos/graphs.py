"""Immutable simple graphs, vertex subsets, and exact maximum clique search.

Vertices are always 0..n-1.  Graphs and vertex sets are value objects:
equality and hashing work, and nothing mutates after construction.
Adjacency is kept both as sorted tuples and as bitmasks; the bitmasks are
what the exact solvers in the rest of the package run on.
"""

from __future__ import annotations

from .errors import DuplicateEdgeError, EmptySetError, LoopError


def bits(mask: int):
    """Yield the set bit positions of mask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Simple undirected graph with sorted adjacency lists.

    No loops, no duplicate edges, adjacency symmetric by construction.
    """

    __slots__ = ("n", "m", "adj", "neighbor_masks")

    def __init__(self, n: int, edges=()):
        if n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {n}")
        masks = [0] * n
        count = 0
        for u, v in edges:
            if not (0 <= u < n) or not (0 <= v < n):
                raise IndexError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise LoopError(f"loop at vertex {u}")
            if (masks[u] >> v) & 1:
                raise DuplicateEdgeError(f"edge ({u},{v}) given twice")
            masks[u] |= 1 << v
            masks[v] |= 1 << u
            count += 1
        self.n = n
        self.m = count
        self.neighbor_masks = tuple(masks)
        self.adj = tuple(tuple(bits(mk)) for mk in masks)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and (self.neighbor_masks[u] >> v) & 1 == 1

    def edges(self):
        """Iterate edges as (u, v) with u < v, in lexicographic order."""
        for u in range(self.n):
            for v in self.adj[u]:
                if v > u:
                    yield (u, v)

    def __eq__(self, other):
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.neighbor_masks == other.neighbor_masks
        )

    def __hash__(self):
        return hash((self.n, self.neighbor_masks))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edges=()) -> Graph:
    """Validate and build a simple graph on vertices 0..n-1.

    Raises IndexError for out-of-range endpoints, LoopError for loops,
    DuplicateEdgeError when an unordered edge repeats (in either
    orientation).  n = 0 is accepted here; higher layers reject it.
    """
    return Graph(n, edges)


class VertexSet:
    """Subset of the vertices of a graph of known order, bitmask backed."""

    __slots__ = ("n", "mask")

    def __init__(self, n: int, members=()):
        mask = 0
        for v in members:
            if not 0 <= v < n:
                raise IndexError(f"vertex {v} out of range for n={n}")
            mask |= 1 << v
        self.n = n
        self.mask = mask

    @classmethod
    def from_mask(cls, n: int, mask: int) -> "VertexSet":
        if mask < 0 or mask >> n:
            raise IndexError(f"mask {mask:#x} out of range for n={n}")
        out = cls.__new__(cls)
        out.n = n
        out.mask = mask
        return out

    def complement(self) -> "VertexSet":
        return VertexSet.from_mask(self.n, ((1 << self.n) - 1) & ~self.mask)

    def __contains__(self, v) -> bool:
        return 0 <= v < self.n and (self.mask >> v) & 1 == 1

    def __iter__(self):
        return bits(self.mask)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __eq__(self, other):
        return (
            isinstance(other, VertexSet)
            and self.n == other.n
            and self.mask == other.mask
        )

    def __hash__(self):
        return hash((self.n, self.mask))

    def __repr__(self):
        return f"VertexSet(n={self.n}, members={tuple(self)})"


def induced_subgraph(G: Graph, W: VertexSet):
    """Induced subgraph on W plus the relabeling map old -> new.

    W must be nonempty; vertices are relabeled 0..|W|-1 in ascending order.
    """
    if len(W) == 0:
        raise EmptySetError("induced subgraph needs a nonempty vertex set")
    old = list(W)
    relabel = {v: i for i, v in enumerate(old)}
    edges = [
        (relabel[u], relabel[v])
        for u in old
        for v in G.adj[u]
        if v > u and v in W
    ]
    return Graph(len(old), edges), relabel


def is_connected(G: Graph) -> bool:
    """BFS reachability from vertex 0; graphs with n <= 1 count as connected."""
    if G.n <= 1:
        return True
    seen = 1
    frontier = 1
    nbr = G.neighbor_masks
    while frontier:
        reach = 0
        for v in bits(frontier):
            reach |= nbr[v]
        frontier = reach & ~seen
        seen |= frontier
    return seen == (1 << G.n) - 1


def maximum_clique(G: Graph):
    """Exact maximum clique: (size, lexicographically least witness tuple).

    Size comes from Bron-Kerbosch with pivoting, pruned against the best
    clique found so far.  The witness is then recovered by a separate
    lexicographic depth-first search at the known size, so ties always
    resolve to the least vertex tuple.
    """
    n = G.n
    if n == 0:
        return 0, ()
    nbr = G.neighbor_masks
    best = 1

    def expand(rsize: int, P: int, X: int):
        nonlocal best
        if P == 0:
            if X == 0 and rsize > best:
                best = rsize
            return
        if rsize + P.bit_count() <= best:
            return
        pool = P | X
        pivot = max(bits(pool), key=lambda u: (P & nbr[u]).bit_count())
        for v in bits(P & ~nbr[pivot]):
            bit = 1 << v
            expand(rsize + 1, P & nbr[v], X & nbr[v])
            P &= ~bit
            X |= bit

    expand(0, (1 << n) - 1, 0)
    return best, _lex_clique(nbr, n, best)


def _lex_clique(nbr, n: int, k: int):
    """First k-clique in lexicographic order of sorted vertex tuples."""
    if k == 0:
        return ()
    chosen: list[int] = []

    def rec(cand: int, need: int) -> bool:
        if need == 0:
            return True
        for v in bits(cand):
            rest = cand & nbr[v] & ~((1 << (v + 1)) - 1)
            if 1 + rest.bit_count() >= need:
                chosen.append(v)
                if rec(rest, need - 1):
                    return True
                chosen.pop()
        return False

    found = rec((1 << n) - 1, k)
    assert found, "witness search must succeed at the computed clique size"
    return tuple(chosen)


def clique_number(G: Graph) -> int:
    """Exact clique number; 0 for the empty graph, 1 for edgeless graphs."""
    return maximum_clique(G)[0]
