"""Constructors for named graph families, products, joins, and random graphs.

Every family has a FamilySpec with a textual form ``family:p1,p2,...``
so the command line can name instances, e.g. ``theta:2,3,3``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import GenerationError, SpecError
from .graphs import Graph, build_graph, is_connected

FAMILIES = (
    "path",
    "cycle",
    "complete",
    "complete_bipartite",
    "edgeless",
    "star",
    "theta",
    "gm_join",
    "chain_cycles",
)

PRODUCT_KINDS = ("cartesian", "direct", "strong")


@dataclass(frozen=True)
class FamilySpec:
    """A family tag plus its integer parameters."""

    family: str
    params: tuple[int, ...]

    @classmethod
    def parse(cls, text: str) -> "FamilySpec":
        name, _, rest = text.partition(":")
        name = name.strip()
        if name not in FAMILIES:
            raise SpecError(f"unknown family {name!r}")
        try:
            params = tuple(int(tok) for tok in rest.split(",") if tok.strip())
        except ValueError as exc:
            raise SpecError(f"bad parameters in {text!r}") from exc
        return cls(name, params)

    def __str__(self):
        return f"{self.family}:{','.join(str(p) for p in self.params)}"


def _need(spec: FamilySpec, arity: int):
    if len(spec.params) != arity:
        raise SpecError(f"{spec.family} takes {arity} parameter(s), got {len(spec.params)}")


def generate(spec: FamilySpec):
    """Build the graph for spec.  Returns (Graph, label map).

    The label map names construction-specific vertices: the two branch
    vertices a, b of a theta graph, the pendant u and its neighbor v of a
    chain of cycles, and x, x', p1, pm for the join of a path with two
    isolated vertices.
    """
    fam = spec.family
    if fam == "path":
        _need(spec, 1)
        (n,) = spec.params
        if n < 1:
            raise SpecError("path needs n >= 1")
        return build_graph(n, [(i, i + 1) for i in range(n - 1)]), {}
    if fam == "cycle":
        _need(spec, 1)
        (n,) = spec.params
        if n < 3:
            raise SpecError("cycle needs n >= 3")
        return build_graph(n, [(i, (i + 1) % n) for i in range(n)]), {}
    if fam == "complete":
        _need(spec, 1)
        (n,) = spec.params
        if n < 1:
            raise SpecError("complete needs n >= 1")
        return build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)]), {}
    if fam == "complete_bipartite":
        _need(spec, 2)
        r, t = spec.params
        if r < 1 or t < 1:
            raise SpecError("complete_bipartite needs both sides >= 1")
        edges = [(u, r + w) for u in range(r) for w in range(t)]
        return build_graph(r + t, edges), {}
    if fam == "edgeless":
        _need(spec, 1)
        (n,) = spec.params
        if n < 1:
            raise SpecError("edgeless needs n >= 1")
        return build_graph(n, []), {}
    if fam == "star":
        _need(spec, 1)
        (k,) = spec.params
        if k < 1:
            raise SpecError("star needs >= 1 leaves")
        return build_graph(k + 1, [(0, i) for i in range(1, k + 1)]), {"center": 0}
    if fam == "theta":
        return _theta(spec.params)
    if fam == "gm_join":
        _need(spec, 1)
        (m,) = spec.params
        if m < 1:
            raise SpecError("gm_join needs m >= 1")
        path, _ = generate(FamilySpec("path", (m,)))
        iso, _ = generate(FamilySpec("edgeless", (2,)))
        labels = {"p1": 0, "pm": m - 1, "x": m, "x'": m + 1}
        return join(path, iso), labels
    if fam == "chain_cycles":
        _need(spec, 2)
        return _chain_cycles(*spec.params)
    raise SpecError(f"unknown family {fam!r}")


def _theta(lengths):
    """Two branch vertices a, b joined by internally disjoint paths.

    Path lengths must be sorted ascending with the second one >= 2, so at
    most one direct a-b edge exists and the graph stays simple.
    """
    if len(lengths) < 2:
        raise SpecError("theta needs at least two path lengths")
    if list(lengths) != sorted(lengths):
        raise SpecError("theta lengths must be sorted ascending")
    if lengths[0] < 1:
        raise SpecError("theta lengths must be >= 1")
    if lengths[1] < 2:
        raise SpecError("theta allows at most one length-1 path")
    a, b = 0, 1
    nxt = 2
    edges = []
    for length in lengths:
        if length == 1:
            edges.append((a, b))
            continue
        prev = a
        for _ in range(length - 1):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, b))
    return build_graph(nxt, edges), {"a": a, "b": b}


def _chain_cycles(k: int, length: int):
    """Chain of k cycles of length ``length`` plus one pendant vertex.

    Consecutive cycles share a single vertex; on every intermediate cycle
    the two shared vertices sit floor(length/2) apart along the ring.  The
    pendant hangs from the vertex of the last cycle floor(length/2) steps
    from that cycle's entry, the same diametral position the chain itself
    uses.
    """
    if k < 1:
        raise SpecError("chain_cycles needs k >= 1")
    if length < 4:
        raise SpecError("chain_cycles needs cycle length >= 4")
    half = length // 2
    ring = list(range(length))
    edges = [(ring[i], ring[(i + 1) % length]) for i in range(length)]
    nxt = length
    exit_vertex = ring[half]
    for _ in range(1, k):
        ring = [exit_vertex] + list(range(nxt, nxt + length - 1))
        nxt += length - 1
        edges += [(ring[i], ring[(i + 1) % length]) for i in range(length)]
        exit_vertex = ring[half]
    attach = exit_vertex
    pendant = nxt
    edges.append((attach, pendant))
    labels = {"u": pendant, "v": attach}
    return build_graph(nxt + 1, edges), labels


def product(G: Graph, H: Graph, kind: str) -> Graph:
    """Cartesian, direct, or strong product with row-major vertex order.

    Vertex (g, h) becomes g * n(H) + h.  The result may be disconnected
    (e.g. direct products of bipartite graphs).
    """
    if kind not in PRODUCT_KINDS:
        raise SpecError(f"unknown product kind {kind!r}")
    if G.n < 1 or H.n < 1:
        raise SpecError("product factors need at least one vertex")
    nh = H.n
    edges = []
    if kind in ("cartesian", "strong"):
        for g, g2 in G.edges():
            for h in range(nh):
                edges.append((g * nh + h, g2 * nh + h))
        for g in range(G.n):
            for h, h2 in H.edges():
                edges.append((g * nh + h, g * nh + h2))
    if kind in ("direct", "strong"):
        for g, g2 in G.edges():
            for h, h2 in H.edges():
                edges.append((g * nh + h, g2 * nh + h2))
                edges.append((g * nh + h2, g2 * nh + h))
    return build_graph(G.n * nh, edges)


def join(G: Graph, H: Graph) -> Graph:
    """Disjoint union of G and H plus all edges between them."""
    off = G.n
    edges = list(G.edges())
    edges += [(u + off, v + off) for u, v in H.edges()]
    edges += [(g, off + h) for g in range(G.n) for h in range(H.n)]
    return build_graph(G.n + H.n, edges)


def random_connected(n: int, p: float, seed: int, max_tries: int = 200) -> Graph:
    """Erdos-Renyi G(n, p) resampled until connected.

    Deterministic for a fixed (n, p, seed).  Raises GenerationError once
    the retry budget runs out.
    """
    if n < 1:
        raise SpecError("random_connected needs n >= 1")
    if not 0.0 < p <= 1.0:
        raise SpecError("random_connected needs 0 < p <= 1")
    rng = random.Random(seed)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    for _ in range(max_tries):
        edges = [e for e in pairs if rng.random() < p]
        candidate = build_graph(n, edges)
        if is_connected(candidate):
            return candidate
    raise GenerationError(
        f"no connected graph in {max_tries} draws for n={n}, p={p}, seed={seed}"
    )


def random_tree(n: int, seed: int) -> Graph:
    """Uniform random labeled tree via a Pruefer sequence."""
    if n < 1:
        raise SpecError("random_tree needs n >= 1")
    if n == 1:
        return build_graph(1, [])
    if n == 2:
        return build_graph(2, [(0, 1)])
    rng = random.Random(seed)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    for v in seq:
        for leaf in range(n):
            if degree[leaf] == 1:
                edges.append((min(leaf, v), max(leaf, v)))
                degree[leaf] -= 1
                degree[v] -= 1
                break
    last = [v for v in range(n) if degree[v] == 1]
    edges.append((min(last), max(last)))
    return build_graph(n, edges)
