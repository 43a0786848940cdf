"""Machine-checkable laws tying the four invariants together.

Each check evaluates one statement on one instance and returns a
LawReport.  Structural laws compare whole set families exhaustively on
small graphs; sufficient-condition and family laws compare solver output
against closed-form expectations; product laws exercise the cartesian
product identities.  Failing reports carry a replayable payload (vertex
count, edge list, offending sets).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

import numpy as np

from .errors import DisconnectedError, SizeError, SpecError
from .families import FamilySpec, generate, product, random_tree
from .graphs import Graph, VertexSet, bits, clique_number, is_connected
from .metric import (
    DistMatrix,
    all_pairs_distances,
    girth,
    interval_masks,
    is_convex,
    is_p4_inner_isometric,
    simplicial_set,
)
from .position import (
    VARIANTS,
    is_variant_set,
    popcount_table,
    solve,
    variant_feasibility,
)
from .srg import strong_resolving_graph


@dataclass
class LawReport:
    """Outcome of one law on one instance."""

    law: str
    instance: str
    passed: bool
    expected: str
    actual: str
    counterexample: dict | None = field(default=None)

    def to_dict(self) -> dict:
        out = {
            "law": self.law,
            "instance": self.instance,
            "passed": self.passed,
            "expected": self.expected,
            "actual": self.actual,
        }
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        return out


def _payload(G: Graph, **sets) -> dict:
    data = {"n": G.n, "edges": [list(e) for e in G.edges()]}
    for name, value in sets.items():
        data[name] = sorted(value)
    return data


def _set_bits(mask: int) -> list:
    return list(bits(mask))


def _is_complete(G: Graph) -> bool:
    return G.m == G.n * (G.n - 1) // 2


# ---------------------------------------------------------------- structural


def check_structural(G: Graph, name: str | None = None) -> list[LawReport]:
    """Exhaustive per-subset laws on one connected graph with n <= 12.

    Covers: total sets are exactly the subsets of the simplicial set;
    outer sets of size >= 2 are exactly the cliques of the strong
    resolving graph; dual sets are exactly the gp sets with convex
    complement; the three-way equivalence for adjacent pairs; the
    simplicial characterization for nonadjacent pairs; and value 1 of the
    dual invariant forcing a unique simplicial vertex.
    """
    if G.n > 12:
        raise SizeError(f"structural checks capped at n <= 12, got {G.n}")
    D = all_pairs_distances(G)
    n = G.n
    name = name or f"graph(n={G.n},m={G.m})"
    full = (1 << n) - 1
    masks = np.arange(1 << n, dtype=np.int64)
    pops = popcount_table(n)
    fam = {v: variant_feasibility(D, v) for v in VARIANTS}
    reports = []

    simp = simplicial_set(G)
    subset_of_simp = (masks & ~simp.mask) == 0
    ok = bool(np.array_equal(fam["total"], subset_of_simp))
    ce = None
    if not ok:
        bad = int(masks[fam["total"] != subset_of_simp][0])
        ce = _payload(G, offending_set=_set_bits(bad), simplicial=list(simp))
    reports.append(
        LawReport(
            "total-sets-simplicial-subsets",
            name,
            ok,
            "total sets == subsets of the simplicial set",
            "families equal" if ok else "families differ",
            ce,
        )
    )

    R = strong_resolving_graph(G)
    mmd_clique = np.ones(1 << n, dtype=bool)
    for u in range(n):
        for v in range(u + 1, n):
            if not R.has_edge(u, v):
                both = ((masks >> u) & 1).astype(bool) & ((masks >> v) & 1).astype(bool)
                mmd_clique &= ~both
    multi = pops >= 2
    ok = bool(np.array_equal(fam["outer"][multi], mmd_clique[multi]))
    ce = None
    if not ok:
        where = np.flatnonzero(multi & (fam["outer"] != mmd_clique))
        ce = _payload(G, offending_set=_set_bits(int(masks[where[0]])))
    reports.append(
        LawReport(
            "outer-sets-mmd-cliques",
            name,
            ok,
            "outer sets of size >= 2 == mutually-maximally-distant cliques",
            "families equal" if ok else "families differ",
            ce,
        )
    )

    bet = interval_masks(D)
    convex_complement = np.ones(1 << n, dtype=bool)
    for u in range(n):
        for v in range(u + 1, n):
            b = bet[u][v]
            if b == 0:
                continue
            out_u = ((masks >> u) & 1) == 0
            out_v = ((masks >> v) & 1) == 0
            convex_complement &= ~(out_u & out_v & ((masks & b) != 0))
    rhs = fam["gp"] & convex_complement
    ok = bool(np.array_equal(fam["dual"], rhs))
    ce = None
    if not ok:
        bad = int(masks[fam["dual"] != rhs][0])
        ce = _payload(G, offending_set=_set_bits(bad))
    reports.append(
        LawReport(
            "dual-iff-gp-convex-complement",
            name,
            ok,
            "dual sets == gp sets with convex complement",
            "families equal" if ok else "families differ",
            ce,
        )
    )

    bad_edge = None
    for x, y in G.edges():
        pair = VertexSet(n, (x, y))
        as_dual = is_variant_set(G, D, pair, "dual")
        complement_convex = is_convex(G, D, VertexSet.from_mask(n, full & ~pair.mask))
        literal = _adjacent_pair_literal(G, D, x, y)
        if not (as_dual == complement_convex == literal):
            bad_edge = (x, y, as_dual, complement_convex, literal)
            break
    ok = bad_edge is None
    ce = None
    if not ok:
        x, y, a, b, c = bad_edge
        ce = _payload(G, pair=[x, y])
        ce["branches"] = {"dual": a, "convex_complement": b, "neighborhood_condition": c}
    reports.append(
        LawReport(
            "adjacent-pair-three-way",
            name,
            ok,
            "adjacent {x,y}: dual iff complement convex iff neighborhood condition",
            "all edges agree" if ok else "disagreement found",
            ce,
        )
    )

    bad_pair = None
    for x in range(n):
        for y in range(x + 1, n):
            if G.has_edge(x, y):
                continue
            as_dual = is_variant_set(G, D, VertexSet(n, (x, y)), "dual")
            both_simplicial = x in simp and y in simp
            if as_dual != both_simplicial:
                bad_pair = (x, y)
                break
        if bad_pair:
            break
    ok = bad_pair is None
    reports.append(
        LawReport(
            "nonadjacent-pair-simplicial",
            name,
            ok,
            "nonadjacent {x,y} dual iff both vertices simplicial",
            "all pairs agree" if ok else "disagreement found",
            None if ok else _payload(G, pair=list(bad_pair)),
        )
    )

    dual_value = solve(G, "dual").value
    ok = dual_value != 1 or len(simp) == 1
    reports.append(
        LawReport(
            "dual-one-forces-single-simplicial",
            name,
            ok,
            "dual value 1 implies exactly one simplicial vertex",
            f"dual={dual_value}, simplicial={len(simp)}",
            None if ok else _payload(G, simplicial=list(simp)),
        )
    )
    return reports


def _adjacent_pair_literal(G: Graph, D: DistMatrix, x: int, y: int) -> bool:
    """Neighborhood condition for an adjacent pair {x,y}:

    every two vertices of N(x) united with N(y) are at distance <= 2, and
    both N(x) minus y and N(y) minus x induce complete graphs.
    """
    union = sorted(set(G.adj[x]) | set(G.adj[y]))
    d = D.d
    for i, u in enumerate(union):
        du = d[u]
        for v in union[i + 1 :]:
            if du[v] > 2:
                return False
    for center, other in ((x, y), (y, x)):
        rest = [u for u in G.adj[center] if u != other]
        for i, u in enumerate(rest):
            for v in rest[i + 1 :]:
                if not G.has_edge(u, v):
                    return False
    return True


# ---------------------------------------------------------------- sufficient


def check_sufficient(G: Graph, name: str | None = None) -> list[LawReport]:
    """Sufficient conditions for a vanishing dual invariant, n <= 18.

    If every edge is the middle edge of an isometric 4-vertex path the
    dual invariant is 0; and for girth >= 6 (a forest counts) the dual
    invariant is 0 exactly when the minimum degree is at least 2.
    """
    if G.n > 18:
        raise SizeError(f"sufficient-condition checks capped at n <= 18, got {G.n}")
    D = all_pairs_distances(G)
    name = name or f"graph(n={G.n},m={G.m})"
    reports = []

    all_inner = G.m > 0 and all(
        is_p4_inner_isometric(G, D, x, y) for x, y in G.edges()
    )
    if all_inner:
        value = solve(G, "dual").value
        ok = value == 0
        actual = f"dual={value}"
    else:
        ok = True
        actual = "not all edges inner, vacuous"
    reports.append(
        LawReport(
            "all-edges-p4-inner-dual-zero",
            name,
            ok,
            "every edge on an isometric P4 middle implies dual 0",
            actual,
            None if ok else _payload(G),
        )
    )

    g = girth(G, D)
    if g >= 6:
        min_deg = min((G.degree(v) for v in range(G.n)), default=0)
        value = solve(G, "dual").value
        ok = (value == 0) == (min_deg >= 2)
        actual = f"girth={g}, min_degree={min_deg}, dual={value}"
    else:
        ok = True
        actual = f"girth={g} < 6, vacuous"
    reports.append(
        LawReport(
            "girth6-dual-zero-iff-mindeg2",
            name,
            ok,
            "girth >= 6: dual 0 iff minimum degree >= 2",
            actual,
            None if ok else _payload(G),
        )
    )
    return reports


# ------------------------------------------------------------------ products


def _box_of_convex(P, DG, DH, G, H, W_mask: int) -> bool:
    """Is W a product A x B of convex factor sets (empty W counts)?"""
    if W_mask == 0:
        return True
    nh = H.n
    A = set()
    B = set()
    cells = set()
    for idx in bits(W_mask):
        g, h = divmod(idx, nh)
        A.add(g)
        B.add(h)
        cells.add((g, h))
    if len(cells) != len(A) * len(B):
        return False
    return is_convex(G, DG, VertexSet(G.n, A)) and is_convex(H, DH, VertexSet(H.n, B))


def check_products(G: Graph, H: Graph, name: str | None = None) -> list[LawReport]:
    """Cartesian product laws for connected factors of order >= 2.

    Total invariant vanishes; outer invariant is the minimum over the
    factors; the dual invariant is positive exactly when one factor is
    complete and the other has a simplicial vertex (with the known
    values); the strong resolving graph of the product is the direct
    product of the factor strong resolving graphs, as an edge-set
    identity; and convex sets of the product are exactly boxes of convex
    factor sets (checked on sampled subsets).
    """
    if G.n < 2 or H.n < 2:
        raise SpecError("product laws need both factors of order >= 2")
    if not is_connected(G) or not is_connected(H):
        raise DisconnectedError("product laws need connected factors")
    if G.n * H.n > 36:
        raise SizeError(f"product checks capped at order 36, got {G.n * H.n}")
    name = name or f"product({G.n} x {H.n})"
    P = product(G, H, "cartesian")
    reports = []

    total = solve(P, "total").value
    reports.append(
        LawReport(
            "cartesian-total-zero",
            name,
            total == 0,
            "total invariant of a product is 0",
            f"total={total}",
            None if total == 0 else _payload(P),
        )
    )

    outer = solve(P, "outer").value
    expected_outer = min(solve(G, "outer").value, solve(H, "outer").value)
    reports.append(
        LawReport(
            "cartesian-outer-min",
            name,
            outer == expected_outer,
            f"outer == min over factors == {expected_outer}",
            f"outer={outer}",
            None if outer == expected_outer else _payload(P),
        )
    )

    dual = solve(P, "dual").value
    g_complete, h_complete = _is_complete(G), _is_complete(H)
    g_simp = len(simplicial_set(G)) > 0
    h_simp = len(simplicial_set(H)) > 0
    if g_complete and h_complete:
        expected_dual = max(G.n, H.n)
    elif g_complete and h_simp:
        expected_dual = G.n
    elif h_complete and g_simp:
        expected_dual = H.n
    else:
        expected_dual = 0
    reports.append(
        LawReport(
            "cartesian-dual-characterization",
            name,
            dual == expected_dual,
            f"dual positive iff complete factor with simplicial partner; value {expected_dual}",
            f"dual={dual}",
            None if dual == expected_dual else _payload(P),
        )
    )

    srg_product = strong_resolving_graph(P)
    srg_direct = product(strong_resolving_graph(G), strong_resolving_graph(H), "direct")
    ok = set(srg_product.edges()) == set(srg_direct.edges())
    reports.append(
        LawReport(
            "cartesian-srg-direct-identity",
            name,
            ok,
            "SRG of product == direct product of factor SRGs (edge sets)",
            "edge sets equal" if ok else "edge sets differ",
            None
            if ok
            else {
                "only_in_product_srg": sorted(
                    set(srg_product.edges()) - set(srg_direct.edges())
                ),
                "only_in_direct": sorted(
                    set(srg_direct.edges()) - set(srg_product.edges())
                ),
            },
        )
    )

    DP = all_pairs_distances(P)
    DG = all_pairs_distances(G)
    DH = all_pairs_distances(H)
    samples = set()
    if G.n <= 12 and H.n <= 12:
        convex_g = [
            mask
            for mask in range(1 << G.n)
            if is_convex(G, DG, VertexSet.from_mask(G.n, mask))
        ]
        convex_h = [
            mask
            for mask in range(1 << H.n)
            if is_convex(H, DH, VertexSet.from_mask(H.n, mask))
        ]
        rng = random.Random(G.n * 1009 + H.n)
        boxes = [(a, b) for a in convex_g for b in convex_h]
        if len(boxes) > 300:
            boxes = rng.sample(boxes, 300)
        for a, b in boxes:
            mask = 0
            for g in bits(a):
                for h in bits(b):
                    mask |= 1 << (g * H.n + h)
            samples.add(mask)
    rng = random.Random(G.n * 7919 + H.n)
    for _ in range(200):
        samples.add(rng.randrange(1 << P.n))
    bad = None
    for mask in samples:
        lhs = is_convex(P, DP, VertexSet.from_mask(P.n, mask))
        rhs = _box_of_convex(P, DG, DH, G, H, mask)
        if lhs != rhs:
            bad = mask
            break
    reports.append(
        LawReport(
            "cartesian-convex-boxes",
            name,
            bad is None,
            "convex in product iff box of convex factor sets (sampled)",
            f"{len(samples)} subsets agree" if bad is None else "disagreement",
            None if bad is None else _payload(P, offending_set=_set_bits(bad)),
        )
    )
    return reports


# ------------------------------------------------------------------ families


def _theta_length_vectors(max_order: int):
    """All valid theta length vectors with total order <= max_order."""
    budget = max_order - 2
    out = []

    def rec(prefix: list, used: int):
        if len(prefix) >= 2:
            out.append(tuple(prefix))
        start = prefix[-1] if prefix else 1
        for length in range(start, budget + 2):
            if len(prefix) == 1 and length < 2:
                continue
            if used + (length - 1) > budget:
                break
            prefix.append(length)
            rec(prefix, used + (length - 1))
            prefix.pop()

    rec([], 0)
    return out


def theta_dual_vanishes(lengths) -> bool:
    """Case analysis: which theta graphs have dual invariant 0."""
    k = len(lengths)
    if k == 2:
        return lengths[0] + lengths[1] >= 6
    if lengths[0] == 1:
        return lengths[1] >= 5
    if lengths[0] == 2:
        return all(length != 3 for length in lengths[1:])
    return True


def chain_cycles_dual_value(length: int) -> int:
    """Expected dual invariant of a chain of cycles with a pendant."""
    if length == 4:
        return 2
    if length == 5:
        return 3
    return 1


def check_families(tree_count: int = 50, tree_seed: int = 0) -> list[LawReport]:
    """Closed-form expectations on the named families.

    Paths, cycles, theta graphs, joins of a path with two isolated
    vertices, chains of cycles, block graphs (trees and complete graphs),
    and outer values of strong products of complete bipartite graphs.
    """
    reports = []

    for n in range(2, 13):
        P, _ = generate(FamilySpec("path", (n,)))
        values = {v: solve(P, v).value for v in VARIANTS}
        ok = all(value == 2 for value in values.values())
        reports.append(
            LawReport(
                "path-invariants-two",
                f"path:{n}",
                ok,
                "gp = total = outer = dual = 2",
                str(values),
                None if ok else _payload(P),
            )
        )
        D = all_pairs_distances(P)
        pops = popcount_table(n)
        expected_families = {
            "gp": {frozenset((u, v)) for u in range(n) for v in range(u + 1, n)},
            "total": {frozenset((0, n - 1))},
            "outer": {frozenset((0, n - 1))},
            "dual": {
                frozenset((0, 1)),
                frozenset((0, n - 1)),
                frozenset((n - 2, n - 1)),
            },
        }
        actual_families = {}
        for variant in VARIANTS:
            feas = variant_feasibility(D, variant)
            best = int(pops[feas].max())
            found = {
                frozenset(bits(int(mask)))
                for mask in np.flatnonzero(feas & (pops == best))
            }
            actual_families[variant] = (best, found)
        ok = all(
            actual_families[v] == (2, expected_families[v]) for v in VARIANTS
        )
        reports.append(
            LawReport(
                "path-variant-set-families",
                f"path:{n}",
                ok,
                "maximum sets: all pairs / both ends / both ends / two ends or an end edge",
                "families as expected" if ok else str(actual_families),
                None if ok else _payload(P),
            )
        )

    for n in range(4, 13):
        C, _ = generate(FamilySpec("cycle", (n,)))
        value = solve(C, "dual").value
        expected = 2 if n in (4, 5) else 0
        reports.append(
            LawReport(
                "cycle-dual-values",
                f"cycle:{n}",
                value == expected,
                f"dual = {expected}",
                f"dual={value}",
                None if value == expected else _payload(C),
            )
        )

    for lengths in _theta_length_vectors(14):
        T, _ = generate(FamilySpec("theta", lengths))
        value = solve(T, "dual").value
        expected_zero = theta_dual_vanishes(lengths)
        ok = (value == 0) == expected_zero
        reports.append(
            LawReport(
                "theta-dual-zero-cases",
                f"theta:{','.join(map(str, lengths))}",
                ok,
                "dual vanishes exactly in the four listed cases"
                + (" (expected 0)" if expected_zero else " (expected > 0)"),
                f"dual={value}",
                None if ok else _payload(T),
            )
        )

    for m in range(5, 10):
        Gm, _ = generate(FamilySpec("gm_join", (m,)))
        D = all_pairs_distances(Gm)
        value = solve(Gm, "dual").value
        diam_two = D.diameter == 2
        no_inner = not any(
            is_p4_inner_isometric(Gm, D, x, y) for x, y in Gm.edges()
        )
        ok = value == 0 and diam_two and no_inner
        reports.append(
            LawReport(
                "join-two-isolated-dual-zero",
                f"gm_join:{m}",
                ok,
                "diameter 2, no edge on an isometric P4 middle, dual = 0",
                f"dual={value}, diameter={D.diameter}, inner_edge={not no_inner}",
                None if ok else _payload(Gm),
            )
        )

    for k in (1, 2, 3):
        for length in (4, 5, 6, 7):
            CC, _ = generate(FamilySpec("chain_cycles", (k, length)))
            value = solve(CC, "dual").value
            expected = chain_cycles_dual_value(length)
            reports.append(
                LawReport(
                    "cycle-chain-dual-values",
                    f"chain_cycles:{k},{length}",
                    value == expected,
                    f"dual = {expected}",
                    f"dual={value}",
                    None if value == expected else _payload(CC),
                )
            )

    for i in range(tree_count):
        n = 2 + (i % 11)
        T = random_tree(n, tree_seed + i)
        leaves = sum(1 for v in range(n) if T.degree(v) == 1)
        values = {v: solve(T, v).value for v in VARIANTS}
        ok = all(value == leaves for value in values.values())
        reports.append(
            LawReport(
                "block-graph-four-equal",
                f"tree(seed={tree_seed + i},n={n})",
                ok,
                f"all four equal leaf count {leaves}",
                str(values),
                None if ok else _payload(T),
            )
        )
    for n in range(2, 9):
        K, _ = generate(FamilySpec("complete", (n,)))
        values = {v: solve(K, v).value for v in VARIANTS}
        ok = all(value == n for value in values.values())
        reports.append(
            LawReport(
                "block-graph-four-equal",
                f"complete:{n}",
                ok,
                f"all four equal {n}",
                str(values),
                None if ok else _payload(K),
            )
        )

    # sides r >= t >= 1 and order >= 3; a K2 factor makes the product
    # complete-ish and the clique formula below does not apply
    for r1, t1, r2, t2 in (
        (2, 1, 2, 1),
        (2, 2, 2, 1),
        (3, 2, 2, 1),
        (3, 1, 3, 2),
        (3, 3, 2, 1),
        (4, 1, 2, 1),
        (4, 2, 2, 2),
    ):
        A, _ = generate(FamilySpec("complete_bipartite", (r1, t1)))
        B, _ = generate(FamilySpec("complete_bipartite", (r2, t2)))
        S = product(A, B, "strong")
        value = solve(S, "outer").value
        expected = r1 * r2
        ok = value == expected
        extras = ""
        if S.n <= 15:
            gp_value = solve(S, "gp").value
            ok = ok and gp_value == expected
            extras = f", gp={gp_value}"
        reports.append(
            LawReport(
                "bipartite-strong-product-outer",
                f"K({r1},{t1}) strong K({r2},{t2})",
                ok,
                f"outer = {expected}",
                f"outer={value}{extras}",
                None if ok else _payload(S),
            )
        )

    reports.append(check_dual_not_hereditary())
    return reports


def check_dual_not_hereditary() -> LawReport:
    """The five-cycle exhibit: a dual pair whose singletons are not dual."""
    C5, _ = generate(FamilySpec("cycle", (5,)))
    cert = solve(C5, "dual")
    D5 = all_pairs_distances(C5)
    pair = tuple(cert.witness)
    singles_not_dual = all(
        not is_variant_set(C5, D5, VertexSet(5, (x,)), "dual") for x in pair
    )
    ok = (
        cert.value == 2
        and len(pair) == 2
        and C5.has_edge(*pair)
        and singles_not_dual
    )
    return LawReport(
        "dual-not-hereditary-on-c5",
        "cycle:5",
        ok,
        "an adjacent dual pair whose singletons are not dual",
        f"dual={cert.value}, witness={sorted(pair)}, singleton dual: {not singles_not_dual}",
        None if ok else _payload(C5, dual_pair=sorted(pair)),
    )


# -------------------------------------------------------------------- suites


def _named_structural_instances():
    specs = [
        ("path", (5,)),
        ("cycle", (4,)),
        ("cycle", (5,)),
        ("cycle", (6,)),
        ("complete", (4,)),
        ("complete_bipartite", (2, 3)),
        ("star", (4,)),
        ("gm_join", (5,)),
        ("theta", (2, 2, 3)),
        ("chain_cycles", (2, 4)),
    ]
    for family, params in specs:
        G, _ = generate(FamilySpec(family, params))
        yield str(FamilySpec(family, params)), G


def run_suite(suite: str, seed: int = 0) -> list[LawReport]:
    """Assemble the default instance grid for one suite and run it.

    Suites: structural, sufficient, products, families, all.  The seed
    offsets the random instances of the structural and sufficient grids;
    family grids are fixed.
    """
    from .families import random_connected

    if suite == "all":
        reports = []
        for name in ("structural", "sufficient", "products", "families"):
            reports += run_suite(name, seed)
        return reports
    if suite == "structural":
        reports = []
        for name, G in _named_structural_instances():
            reports += check_structural(G, name)
        for i in range(60):
            G = random_connected(8, 0.35, seed * 1000 + i)
            reports += check_structural(G, f"random(n=8,p=0.35,seed={seed * 1000 + i})")
        return reports
    if suite == "sufficient":
        reports = []
        for n in range(6, 13):
            C, _ = generate(FamilySpec("cycle", (n,)))
            reports += check_sufficient(C, f"cycle:{n}")
        for m in range(5, 10):
            Gm, _ = generate(FamilySpec("gm_join", (m,)))
            reports += check_sufficient(Gm, f"gm_join:{m}")
        for k, length in ((1, 6), (2, 6), (1, 7), (2, 7)):
            CC, _ = generate(FamilySpec("chain_cycles", (k, length)))
            reports += check_sufficient(CC, f"chain_cycles:{k},{length}")
        for lengths in ((3, 3, 3), (2, 4, 4), (3, 4, 5)):
            T, _ = generate(FamilySpec("theta", lengths))
            reports += check_sufficient(T, f"theta:{','.join(map(str, lengths))}")
        for i in range(10):
            T = random_tree(3 + (i % 9), seed * 500 + i)
            reports += check_sufficient(T, f"tree(seed={seed * 500 + i})")
        return reports
    if suite == "products":
        reports = []
        pairs = []
        for a in range(2, 6):
            for b in range(a, 6):
                pairs.append(((f"complete:{a}"), (f"complete:{b}")))
        pairs += [
            ("complete:3", "path:3"),
            ("path:3", "path:3"),
            ("complete:3", "complete:6"),
            ("complete:2", "path:4"),
            ("complete:3", "cycle:4"),
            ("path:3", "cycle:5"),
        ]
        for left, right in pairs:
            G, _ = generate(FamilySpec.parse(left))
            H, _ = generate(FamilySpec.parse(right))
            reports += check_products(G, H, f"{left} x {right}")
        return reports
    if suite == "families":
        return check_families()
    raise SpecError(f"unknown suite {suite!r}")
