"""Random instances for tests, demos and the ``verify`` command.

Networks are drawn geometrically: boundary nodes sit clockwise on the unit
circle, interior vertices inside it, and edges are straight segments added
greedily without crossings.  The rotation system is read off the angles, so
every generated network carries a valid circular planar embedding.
"""

from __future__ import annotations

import itertools
import math
import random
from fractions import Fraction

from .metrics import Split, WeightedSplitSystem, chord_split
from .netcore import MOVES, BadSite, Edge, WeightedGraph, find_triangle, graph, transform

__all__ = [
    "random_conductance",
    "random_network",
    "random_minimal_network",
    "random_split_system",
    "random_tree_system",
    "random_site",
    "applicable_sites",
    "decorate",
    "reweight",
]


def random_conductance(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(1, 9), rng.randint(1, 9))


def _segments_cross(p, q, r, s) -> bool:
    def orient(a, b, c):
        return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])

    if len({p, q, r, s}) < 4:
        return False
    d1, d2 = orient(p, q, r), orient(p, q, s)
    d3, d4 = orient(r, s, p), orient(r, s, q)
    return d1 * d2 < 0 and d3 * d4 < 0


def random_network(
    rng: random.Random,
    n: int | None = None,
    interior: int | None = None,
    max_edges: int = 12,
    weights: bool = True,
) -> WeightedGraph:
    """Connected circular planar network with an embedding.

    ``n`` boundary nodes (default 2..5) and ``interior`` inner vertices
    (default 0..3).  Edge count stays at or below ``max_edges`` whenever a
    spanning tree fits.
    """
    n = rng.randint(2, 5) if n is None else n
    interior = rng.randint(0, 3) if interior is None else interior
    pts = []
    for k in range(n):
        theta = math.pi / 2 - 2 * math.pi * (k + rng.uniform(0.1, 0.9)) / n
        pts.append((math.cos(theta), math.sin(theta)))
    while len(pts) < n + interior:
        x, y = rng.uniform(-0.8, 0.8), rng.uniform(-0.8, 0.8)
        if x * x + y * y < 0.64:
            pts.append((x, y))
    nv = len(pts)

    candidates = list(itertools.combinations(range(nv), 2))
    rng.shuffle(candidates)
    chosen: list[tuple[int, int]] = []
    for a, b in candidates:
        if not any(_segments_cross(pts[a], pts[b], pts[c], pts[d]) for c, d in chosen):
            chosen.append((a, b))

    # thin out while staying connected
    target = rng.randint(nv - 1, max(nv - 1, min(max_edges, len(chosen))))
    order = list(range(len(chosen)))
    rng.shuffle(order)
    keep = set(range(len(chosen)))
    for t in order:
        if len(keep) <= target:
            break
        trial = keep - {t}
        if _connected(nv, [chosen[s] for s in trial]):
            keep = trial
    pairs = [chosen[t] for t in sorted(keep)]

    edges = []
    for a, b in pairs:
        c = random_conductance(rng) if weights else Fraction(1)
        edges.append((a + 1, b + 1, c))
    embedding = {}
    for v in range(nv):
        inc = [(t, b if a == v else a) for t, (a, b) in enumerate(pairs) if v in (a, b)]

        def angle(item, v=v):
            w = item[1]
            return math.atan2(pts[w][1] - pts[v][1], pts[w][0] - pts[v][0])

        if v < n:
            out = math.atan2(pts[v][1], pts[v][0])
            key = lambda item, out=out: (out - angle(item)) % (2 * math.pi)  # noqa: E731
        else:
            key = lambda item: -angle(item)  # noqa: E731
        embedding[v + 1] = tuple(t for t, _ in sorted(inc, key=key))
    return graph(nv, range(1, n + 1), edges, embedding)


def _connected(nv: int, pairs) -> bool:
    parent = list(range(nv))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in pairs:
        parent[find(a)] = find(b)
    return len({find(v) for v in range(nv)}) == 1


def random_minimal_network(rng: random.Random, n: int | None = None, tries: int = 2000, **kw) -> WeightedGraph:
    """Rejection-sample :func:`random_network` until it is minimal.

    A network is minimal exactly when its edge count equals the number of
    crossing strand pairs, and the strands are traced from the embedding,
    independently of any matrix computation.
    """
    from .reconstruct import crossing_count, medial_strands, tau_from_pairs

    for _ in range(tries):
        g = random_network(rng, n=n, **kw)
        tau = medial_strands(g)
        if any(tau[t] == t + 1 or tau[tau[t] - 1] != t + 1 for t in range(len(tau))):
            continue
        pairs = [(i, t) for i, t in enumerate(tau, start=1) if i < t]
        if len(g.edges) == crossing_count(tau_from_pairs(pairs)):
            return g
    raise RuntimeError("no minimal network found")


def reweight(g: WeightedGraph, rng: random.Random) -> WeightedGraph:
    return g.with_conductances([random_conductance(rng) for _ in g.edges])


def random_split_system(rng: random.Random, n: int | None = None, k: int | None = None) -> WeightedSplitSystem:
    """Positive weights on random circular splits in the identity order."""
    n = rng.randint(3, 6) if n is None else n
    order = tuple(range(1, n + 1))
    chords = list(itertools.combinations(range(1, n + 1), 2))
    k = rng.randint(1, len(chords)) if k is None else k
    splits = tuple((chord_split(i, j, order), random_conductance(rng)) for i, j in rng.sample(chords, min(k, len(chords))))
    return WeightedSplitSystem(n, order, splits)


def random_tree_system(rng: random.Random, n: int | None = None) -> WeightedSplitSystem:
    """Pairwise compatible circular splits, trivial ones included: the split
    system of a random weighted tree whose leaves sit in the identity order."""
    n = rng.randint(2, 7) if n is None else n
    order = tuple(range(1, n + 1))
    chosen = [Split.of({k}, n) for k in order] if n > 2 else [Split.of({2}, 2)]
    candidates = list(itertools.combinations(range(1, n + 1), 2))
    rng.shuffle(candidates)
    for i, j in candidates:
        s = chord_split(i, j, order)
        if s in chosen or rng.random() < 0.3:
            continue
        if all(_compatible(s, t) for t in chosen):
            chosen.append(s)
    return WeightedSplitSystem(n, order, tuple((s, random_conductance(rng)) for s in chosen))


def _compatible(s, t) -> bool:
    return any(not (x & y) for x in (s.A, s.B) for y in (t.A, t.B))


def random_site(g: WeightedGraph, move: str, rng: random.Random):
    """A uniformly chosen applicable site for ``move``, or None."""
    sites = list(applicable_sites(g, move))
    return rng.choice(sites) if sites else None


def applicable_sites(g: WeightedGraph, move: str):
    """Every site at which ``move`` applies."""
    if move not in MOVES:
        raise BadSite(f"unknown move {move!r}")
    if move == "remove_loop":
        yield from (k for k, e in enumerate(g.edges) if e.is_loop)
    elif move == "remove_pendant":
        for v in g.interior:
            inc = g.incident(v)
            if len(inc) == 1:
                yield v
    elif move == "series":
        for v in g.interior:
            inc = g.incident(v)
            if len(inc) == 2 and inc[0] != inc[1]:
                yield v
    elif move == "parallel":
        for a, b in itertools.combinations(range(len(g.edges)), 2):
            ea, eb = g.edges[a], g.edges[b]
            if not ea.is_loop and {ea.u, ea.v} == {eb.u, eb.v}:
                yield (a, b)
    elif move == "star_to_triangle":
        for v in g.interior:
            inc = g.incident(v)
            ends = [g.edges[k].other(v) for k in inc]
            if len(inc) == 3 and len(set(ends)) == 3 and v not in ends:
                yield v
    elif move == "triangle_to_star":
        for a, b, c in itertools.combinations(range(len(g.edges)), 3):
            es = [g.edges[a], g.edges[b], g.edges[c]]
            if any(e.is_loop for e in es):
                continue
            verts = {x for e in es for x in (e.u, e.v)}
            pairs = {frozenset((e.u, e.v)) for e in es}
            if len(verts) == 3 and len(pairs) == 3:
                yield (a, b, c)


def decorate(g: WeightedGraph, move: str, rng: random.Random) -> WeightedGraph:
    """Grow ``g`` by the inverse of ``move`` so that ``move`` has a site.

    Loops, pendants, subdivisions and doubled edges are inserted with the
    rotation system kept consistent.  Star and triangle sites are made by
    the opposite Y-Delta move when none exist yet.
    """
    emb = {v: list(g.embedding[v]) for v in g.embedding} if g.embedding is not None else None
    edges = list(g.edges)
    nv = g.n_vertices
    c = random_conductance(rng)
    if move == "remove_loop":
        v = rng.randint(1, nv)
        edges.append(Edge(v, v, c))
        if emb is not None:
            t = rng.randint(0, len(emb[v]))
            emb[v][t:t] = [len(edges) - 1] * 2
    elif move == "remove_pendant":
        v = rng.randint(1, nv)
        nv += 1
        edges.append(Edge(v, nv, c))
        if emb is not None:
            t = rng.randint(0, len(emb[v]))
            emb[v].insert(t, len(edges) - 1)
            emb[nv] = [len(edges) - 1]
    elif move in ("series", "parallel"):
        plain = [k for k, e in enumerate(edges) if not e.is_loop]
        if not plain:
            return decorate(decorate(g, "remove_pendant", rng), move, rng)
        k = rng.choice(plain)
        e = edges[k]
        new = len(edges)
        if move == "series":
            nv += 1
            edges[k] = Edge(e.u, nv, e.c)
            edges.append(Edge(nv, e.v, c))
            if emb is not None:
                emb[e.v] = [new if x == k else x for x in emb[e.v]]
                emb[nv] = [k, new]
        else:
            edges.append(Edge(e.u, e.v, c))
            if emb is not None:
                emb[e.u].insert(emb[e.u].index(k) + 1, new)
                emb[e.v].insert(emb[e.v].index(k), new)
    elif move == "star_to_triangle":
        tri = find_triangle(g)
        if tri is None:
            return g
        return transform(g, "triangle_to_star", tri)
    elif move == "triangle_to_star":
        centres = list(applicable_sites(g, "star_to_triangle"))
        if not centres:
            return g
        return transform(g, "star_to_triangle", rng.choice(centres))
    else:
        raise BadSite(f"unknown move {move!r}")
    return graph(nv, g.boundary, edges, emb)
