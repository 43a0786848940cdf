"""General position variants: predicates, exact solvers, exhaustive oracles.

A pair u, v is X-positionable when no member of X other than u, v lies on
a shortest u,v-path.  The four variants quantify that condition over
different pair sets:

    gp     pairs inside X
    total  all pairs of the graph
    outer  pairs meeting X
    dual   pairs inside X and pairs inside the complement of X

``solve`` produces certificates by the cheapest exact route per variant;
``brute_force`` is the independent definition-level oracle that simply
tries every subset.  Diagonal pairs u = u are excluded throughout, the
empty set satisfies every variant, and a value of 0 for the dual variant
means no nonempty dual set exists.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegeneratePairError, DisconnectedError, EmptySetError, SizeError
from .graphs import Graph, VertexSet, bits, is_connected, maximum_clique
from .metric import DistMatrix, all_pairs_distances, interval_masks, simplicial_set
from .srg import strong_resolving_graph

VARIANTS = ("gp", "total", "outer", "dual")

_FEASIBILITY_CAP = 20  # 2**20 masks; beyond this the table does not fit sanely


def _check_variant(variant: str):
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}; expected one of {VARIANTS}")


@dataclass(frozen=True)
class Certificate:
    """Solver answer: variant, optimal value, witness set, method tag."""

    variant: str
    value: int
    witness: VertexSet
    method: str

    def __post_init__(self):
        _check_variant(self.variant)
        if len(self.witness) != self.value:
            raise ValueError("witness cardinality must equal the value")


def is_positionable(D: DistMatrix, X: VertexSet, u: int, v: int) -> bool:
    """True iff no member of X besides u, v lies strictly between u and v.

    Adjacent pairs are always positionable because their unique shortest
    path has no internal vertex.
    """
    if u == v:
        raise DegeneratePairError(
            f"positionability needs distinct endpoints, got {u} twice"
        )
    d = D.d
    duv = d[u][v]
    for x in X:
        if x != u and x != v and d[u][x] + d[x][v] == duv:
            return False
    return True


def is_variant_set(G: Graph, D: DistMatrix, X: VertexSet, variant: str) -> bool:
    """Definition-level check that X satisfies the given variant.

    X may be empty; every variant holds vacuously then (for dual the
    complement pairs still get checked, and pass because X blocks
    nothing).
    """
    _check_variant(variant)
    if X.n != G.n or D.n != G.n:
        raise ValueError("vertex set or distance matrix does not match the graph")
    n = G.n
    for u in range(n):
        in_u = u in X
        for v in range(u + 1, n):
            in_v = v in X
            if variant == "gp":
                relevant = in_u and in_v
            elif variant == "total":
                relevant = True
            elif variant == "outer":
                relevant = in_u or in_v
            else:
                relevant = in_u == in_v
            if relevant and not is_positionable(D, X, u, v):
                return False
    return True


class _GpSearch:
    """Branch and bound over the downward-closed family of gp sets.

    Feasibility is a 3-uniform conflict system: the triples (u, x, v)
    with x strictly between u and v.  A set is feasible iff it contains
    no full triple, so the search can prune on the first violation.
    Vertices are tried in descending eccentricity order and the bound is
    the number of remaining candidate vertices.
    """

    def __init__(self, D: DistMatrix):
        self.n = D.n
        self.bet = interval_masks(D)
        ecc = [max(row) for row in D.d]
        self.order = sorted(range(self.n), key=lambda v: (-ecc[v], v))
        suffix = [0] * (self.n + 1)
        for i in range(self.n - 1, -1, -1):
            suffix[i] = suffix[i + 1] | (1 << self.order[i])
        self.suffix = suffix
        self.full = (1 << self.n) - 1

    def _complement_is_convex(self, xmask: int) -> bool:
        comp = list(bits(self.full & ~xmask))
        bet = self.bet
        for i, u in enumerate(comp):
            bu = bet[u]
            for v in comp[i + 1 :]:
                if bu[v] & xmask:
                    return False
        return True

    def max_gp(self) -> int:
        n, order, bet, suffix = self.n, self.order, self.bet, self.suffix
        best = 0

        def rec(i: int, xmask: int, xs: list, forb: int, size: int):
            nonlocal best
            if size > best:
                best = size
            while i < n:
                if size + (suffix[i] & ~forb).bit_count() <= best:
                    return
                v = order[i]
                i += 1
                bit = 1 << v
                if forb & bit:
                    continue
                newmask = xmask | bit
                bv = bet[v]
                grown = forb
                ok = True
                for u in xs:
                    b = bv[u]
                    if b & newmask:
                        ok = False
                        break
                    grown |= b
                if ok:
                    xs.append(v)
                    rec(i, newmask, xs, grown, size + 1)
                    xs.pop()
                # falling through the loop excludes v

        rec(0, 0, [], 0, 0)
        return best

    def max_dual(self) -> int:
        """Maximum gp set whose complement is convex (0 when only the
        empty set qualifies)."""
        n, order, bet, suffix = self.n, self.order, self.bet, self.suffix
        best = 0

        def rec(i: int, xmask: int, xs: list, forb: int, size: int):
            nonlocal best
            while i < n:
                if size + (suffix[i] & ~forb).bit_count() <= best:
                    return
                v = order[i]
                i += 1
                bit = 1 << v
                if forb & bit:
                    continue
                newmask = xmask | bit
                bv = bet[v]
                grown = forb
                ok = True
                for u in xs:
                    b = bv[u]
                    if b & newmask:
                        ok = False
                        break
                    grown |= b
                if ok:
                    if size + 1 > best and self._complement_is_convex(newmask):
                        best = size + 1
                    xs.append(v)
                    rec(i, newmask, xs, grown, size + 1)
                    xs.pop()

        rec(0, 0, [], 0, 0)
        return best

    def lex_witness(self, target: int, require_convex: bool):
        """Lexicographically least feasible set of the given cardinality.

        Plain index-order depth-first search, so the first hit is the
        least sorted tuple.  With require_convex the complement convexity
        filter runs at full cardinality only.
        """
        if target == 0:
            return ()
        n, bet = self.n, self.bet
        chosen: list[int] = []

        def rec(start: int, xmask: int, forb: int, size: int) -> bool:
            if size == target:
                return not require_convex or self._complement_is_convex(xmask)
            for v in range(start, n):
                if size + (n - v) < target:
                    return False
                bit = 1 << v
                if forb & bit:
                    continue
                newmask = xmask | bit
                bv = bet[v]
                grown = forb
                ok = True
                for u in chosen:
                    b = bv[u]
                    if b & newmask:
                        ok = False
                        break
                    grown |= b
                if ok:
                    chosen.append(v)
                    if rec(v + 1, newmask, grown, size + 1):
                        return True
                    chosen.pop()
            return False

        found = rec(0, 0, 0, 0)
        assert found, "witness search must succeed at the computed value"
        return tuple(chosen)


def solve(G: Graph, variant: str) -> Certificate:
    """Exact certificate for one variant of a connected graph.

    total uses the simplicial set directly, outer takes a maximum clique
    of the strong resolving graph, gp runs branch and bound over the
    betweenness conflicts, and dual filters the same search by complement
    convexity.  Witnesses are lexicographically least among the optima.
    """
    _check_variant(variant)
    if G.n == 0:
        raise EmptySetError("solve needs at least one vertex")
    if not is_connected(G):
        raise DisconnectedError("solve needs a connected graph")
    if variant == "total":
        simp = simplicial_set(G)
        return Certificate("total", len(simp), simp, "closed_form")
    if variant == "outer":
        size, witness = maximum_clique(strong_resolving_graph(G))
        return Certificate("outer", size, VertexSet(G.n, witness), "clique")
    D = all_pairs_distances(G)
    search = _GpSearch(D)
    if variant == "gp":
        value = search.max_gp()
        witness = search.lex_witness(value, require_convex=False)
    else:
        value = search.max_dual()
        witness = search.lex_witness(value, require_convex=True)
    return Certificate(variant, value, VertexSet(G.n, witness), "branch_and_bound")


def variant_feasibility(D: DistMatrix, variant: str) -> np.ndarray:
    """Boolean table over all 2**n subsets: table[mask] iff the subset
    with that bitmask satisfies the variant.

    Pure quantifier evaluation over the betweenness structure, no
    characterizations involved; this is the engine behind brute_force.
    """
    _check_variant(variant)
    n = D.n
    if n > _FEASIBILITY_CAP:
        raise SizeError(f"feasibility table limited to n <= {_FEASIBILITY_CAP}")
    size = 1 << n
    masks = np.arange(size, dtype=np.int64)
    ok = np.ones(size, dtype=bool)
    bet = interval_masks(D)
    for u in range(n):
        row = bet[u]
        for v in range(u + 1, n):
            b = row[v]
            if b == 0:
                continue
            blocked = (masks & b) != 0
            if variant == "total":
                relevant = blocked
            else:
                in_u = (masks >> u & 1).astype(bool)
                in_v = (masks >> v & 1).astype(bool)
                if variant == "gp":
                    relevant = in_u & in_v & blocked
                elif variant == "outer":
                    relevant = (in_u | in_v) & blocked
                else:
                    relevant = (in_u == in_v) & blocked
            ok &= ~relevant
    return ok


def popcount_table(n: int) -> np.ndarray:
    """Bit counts of 0..2**n-1."""
    size = 1 << n
    out = np.zeros(size, dtype=np.int16)
    block = 1
    while block < size:
        out[block : 2 * block] = out[:block] + 1
        block *= 2
    return out


def brute_force(G: Graph, variant: str, max_n: int = 18) -> Certificate:
    """Exhaustive oracle: try every subset, straight from the definitions.

    Returns the maximum cardinality subset satisfying the variant, with
    the lexicographically least witness among ties.
    """
    _check_variant(variant)
    if G.n == 0:
        raise EmptySetError("brute force needs at least one vertex")
    if G.n > max_n:
        raise SizeError(f"brute force capped at n <= {max_n}, got n = {G.n}")
    if not is_connected(G):
        raise DisconnectedError("brute force needs a connected graph")
    D = all_pairs_distances(G)
    feasible = variant_feasibility(D, variant)
    pops = popcount_table(G.n)
    value = int(pops[feasible].max())
    ties = np.flatnonzero(feasible & (pops == value))
    witness = min(tuple(bits(int(mask))) for mask in ties)
    return Certificate(variant, value, VertexSet(G.n, witness), "exhaustive")
