"""Network topology from a resistance matrix.

Pipeline: distance matrix -> Omega_R -> column permutation ``g`` -> strand
permutation ``tau = g + 1`` -> chord arrangement (the medial graph of a
minimal network) -> unit-conductance network.  Trees are then recovered by
turning triangles into stars and fitting edge resistances to path sums.

Medial boundary points ``2i-1`` and ``2i`` flank node ``i``; the arc between
them belongs to the face of node ``i``.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import exact
from .errors import (
    ColoringFailure,
    Degenerate,
    Inconsistent,
    NonPositiveWeight,
    NotInvolution,
    NotTerminated,
)
from .exact import Matrix
from .grassmann import OmegaMatrix, build_omega_resistance
from .metrics import circular_order
from .netcore import Edge, WeightedGraph, components, find_triangle, simplify, trace_faces, transform

# --------------------------------------------------------------------------
# strand permutation


@dataclass(frozen=True)
class StrandPermutation:
    g: tuple[int, ...]
    tau: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.tau)

    def cycles(self) -> list[tuple[int, int]]:
        return [(i, t) for i, t in enumerate(self.tau, start=1) if i < t]

    def __str__(self):
        return "".join(f"({a}{b})" for a, b in self.cycles())


def column_permutation_g(omega: OmegaMatrix) -> tuple[int, ...]:
    """For each column ``A_i``, the first ``j`` (cyclically after ``i``) with
    ``A_i`` in ``span(A_{i+1}, ..., A_j)``.  Values are reduced to ``1..2n``."""
    size = 2 * omega.n
    cols = [omega.column(c) for c in range(1, size + 1)]
    out = []
    for i in range(size):
        for step in range(1, size):
            span = [cols[(i + t) % size] for t in range(1, step + 1)]
            if exact.in_column_span(cols[i], span):
                out.append((i + step) % size + 1)
                break
        else:
            raise Degenerate(f"column {i + 1} is not in the span of the other columns")
    return tuple(out)


def strand_permutation(g: Sequence[int]) -> StrandPermutation:
    """``tau(i) = g(i) + 1`` modulo ``2n``; must be a fixed-point-free involution."""
    size = len(g)
    tau = tuple(x % size + 1 for x in g)
    for i, t in enumerate(tau, start=1):
        if t == i or tau[t - 1] != i:
            raise NotInvolution(
                f"tau={list(tau)} is not a fixed-point-free involution at {i}; "
                "the input is degenerate (check whether Delta_{24..2n-2} vanishes)"
            )
    return StrandPermutation(tuple(g), tau)


def tau_from_pairs(pairs: Sequence[tuple[int, int]]) -> StrandPermutation:
    """Strand permutation given as transpositions, e.g. ``[(1, 4), (2, 5), (3, 6)]``."""
    size = 2 * len(pairs)
    tau = [0] * size
    for a, b in pairs:
        tau[a - 1], tau[b - 1] = b, a
    g = tuple((t - 2) % size + 1 for t in tau)
    return strand_permutation(g)


def strands_of_matrix(d: Matrix, order: Sequence[int] | None = None) -> StrandPermutation:
    return strand_permutation(column_permutation_g(build_omega_resistance(d, order)))


def crossing_count(tau: StrandPermutation) -> int:
    """Number of interleaving chord pairs, i.e. edges of a minimal network with this ``tau``."""
    return sum(1 for (a, b), (c, e) in itertools.combinations(tau.cycles(), 2) if _interleave(a, b, c, e))


def medial_strands(g: WeightedGraph) -> tuple[int, ...]:
    """Strand permutation traced through the medial graph of an embedded network.

    Works purely from the rotation system, so it is independent of the
    matrix route.  Returns ``tau`` as a tuple; degenerate networks may give
    fixed points.
    """
    from .netcore import NotEmbedded, outgoing_darts

    if g.embedding is None:
        raise NotEmbedded("medial strands need a rotation system")
    n, m = g.n, len(g.edges)
    bnd = g.boundary
    edges = list(g.edges) + [Edge(bnd[k], bnd[(k + 1) % n], Fraction(1)) for k in range(n)]
    pos = {b: k for k, b in enumerate(bnd)}
    rotation = {}
    for v in range(1, g.n_vertices + 1):
        darts = outgoing_darts(g, g.embedding, v)
        if v in pos:
            k = pos[v]
            darts = [(m + k, 0)] + darts + [(m + (k - 1) % n, 1)]
        rotation[v] = darts
    succ = {}
    for darts in rotation.values():
        for t, d in enumerate(darts):
            succ[d] = darts[(t + 1) % len(darts)]

    def rev(d):
        return (d[0], 1 - d[1])

    def nxt(d):
        return succ[rev(d)]

    prv = {nxt(d): d for k in range(len(edges)) for d in ((k, 0), (k, 1))}

    def arc_index(d):
        return d[0] - m if d[0] >= m and d[1] == 1 else None

    size = 2 * n
    tau = [0] * size
    for k in range(n):
        arc = (m + k, 1)  # runs from node k+1 back to node k (0-based), interior on its left
        starts = [(2 * k + 2, (arc, nxt(arc), True)), (2 * k + 3, (prv[arc], arc, False))]
        for point, state in starts:
            p, q, forward = state
            for _ in range(4 * len(edges) + 4):
                dest = q if forward else p
                a = arc_index(dest)
                if a is not None:
                    end = 2 * a + 3 if forward else 2 * a + 2
                    break
                if forward:
                    p, q, forward = prv[rev(q)], rev(q), False
                else:
                    p, q, forward = rev(p), nxt(rev(p)), True
            else:
                raise Degenerate("strand does not reach the boundary")
            tau[(point - 1) % size] = (end - 1) % size + 1
    return tuple(tau)


# --------------------------------------------------------------------------
# chord arrangement


def _interleave(a: int, b: int, c: int, e: int) -> bool:
    lo, hi = min(a, b), max(a, b)
    return (lo < c < hi) != (lo < e < hi)


def _circle_points(size: int, jitter: float, rng: random.Random) -> list[tuple[Fraction, Fraction]]:
    """Exact rational points on the unit circle, clockwise for increasing index."""
    ts = []
    for k in range(size):
        theta = math.pi - (k + 0.5 + jitter * (rng.random() - 0.5)) * 2 * math.pi / size
        ts.append(Fraction(math.tan(theta / 2)).limit_denominator(10**6))
    pts = []
    for t in ts:
        den = 1 + t * t
        pts.append(((1 - t * t) / den, 2 * t / den))
    return pts


def _cross(ax, ay, bx, by):
    return ax * by - ay * bx


@dataclass
class ChordArrangement:
    size: int
    chords: list[tuple[int, int]]
    points: list[tuple[Fraction, Fraction]]
    crossings: dict  # (chord index, chord index) -> arrangement vertex id
    along: list[list[int]]  # per chord, crossing vertex ids from the smaller endpoint
    edges: list[Edge] = field(default_factory=list)
    rotation: dict = field(default_factory=dict)
    faces: list = field(default_factory=list)
    face_of: dict = field(default_factory=dict)
    colour: dict = field(default_factory=dict)  # face -> "black" / "white"
    exterior: int = -1

    @property
    def n(self) -> int:
        return self.size // 2

    def crossing_chords(self) -> dict[int, tuple[int, int]]:
        return {v: pair for pair, v in self.crossings.items()}


def build_chord_arrangement(tau: StrandPermutation, seed: int = 0) -> ChordArrangement:
    """Straight chords between exact rational points on the circle.

    Two chords cross iff their endpoints interleave, exactly once, so the
    arrangement has no lenses.  Point positions are jittered until no three
    chords are concurrent.
    """
    size = tau.size
    chords = [(a, b) for a, b in tau.cycles()]
    rng = random.Random(seed)
    jitter = 0.0
    for _ in range(50):
        pts = _circle_points(size, jitter, rng)
        arr = _try_arrangement(size, chords, pts)
        if arr is not None:
            _close_arrangement(arr)
            return arr
        jitter = 0.5
    raise Degenerate("could not place chords in general position")


def _try_arrangement(size, chords, pts):
    m = len(chords)
    params: dict[tuple[int, int], tuple[Fraction, Fraction]] = {}
    point_at: dict[tuple[Fraction, Fraction], tuple[int, int]] = {}
    for p, q in itertools.combinations(range(m), 2):
        a, b = chords[p]
        c, e = chords[q]
        if not _interleave(a, b, c, e):
            continue
        (x1, y1), (x2, y2) = pts[a - 1], pts[b - 1]
        (x3, y3), (x4, y4) = pts[c - 1], pts[e - 1]
        denom = _cross(x2 - x1, y2 - y1, x4 - x3, y4 - y3)
        s = _cross(x3 - x1, y3 - y1, x4 - x3, y4 - y3) / denom
        t = _cross(x3 - x1, y3 - y1, x2 - x1, y2 - y1) / denom
        where = (x1 + s * (x2 - x1), y1 + s * (y2 - y1))
        if where in point_at:
            return None
        point_at[where] = (p, q)
        params[(p, q)] = (s, t)
    crossings = {}
    vid = size + 1
    for pair in sorted(params):
        crossings[pair] = vid
        vid += 1
    along: list[list[int]] = []
    for p in range(m):
        seq = []
        for (u, w), (s, t) in params.items():
            if u == p:
                seq.append((s, crossings[(u, w)]))
            elif w == p:
                seq.append((t, crossings[(u, w)]))
        along.append([v for _, v in sorted(seq)])
    return ChordArrangement(size, chords, pts, crossings, along)


def _close_arrangement(arr: ChordArrangement) -> None:
    """Build the planar graph, trace faces and 2-colour them."""
    size = arr.size
    edges: list[Edge] = []
    # arc k (0-based) joins point k+1 -> k+2
    for k in range(size):
        edges.append(Edge(k + 1, (k + 1) % size + 1, Fraction(1)))
    out: dict[int, list[tuple[int, int]]] = {}
    chord_dart_at_point: dict[int, tuple[int, int]] = {}
    crossing_darts: dict[int, dict[str, tuple[int, int]]] = {}
    for p, (a, b) in enumerate(arr.chords):
        seq = [a] + arr.along[p] + [b]
        for t in range(len(seq) - 1):
            k = len(edges)
            edges.append(Edge(seq[t], seq[t + 1], Fraction(1)))
            for endpoint, dart, tag in ((seq[t], (k, 0), "f"), (seq[t + 1], (k, 1), "b")):
                if endpoint <= size:
                    chord_dart_at_point[endpoint] = dart
                else:
                    crossing_darts.setdefault(endpoint, {})[f"{tag}{p}"] = dart
    for k in range(1, size + 1):
        nxt = (k - 1, 0)
        prv = ((k - 2) % size, 1)
        out[k] = [nxt, chord_dart_at_point[k], prv]
    cross_chords = arr.crossing_chords()
    for v, (p, q) in cross_chords.items():
        darts = crossing_darts[v]
        a1, b1 = arr.chords[p]
        a2, b2 = arr.chords[q]
        (x1, y1), (x2, y2) = arr.points[a1 - 1], arr.points[b1 - 1]
        (x3, y3), (x4, y4) = arr.points[a2 - 1], arr.points[b2 - 1]
        turn = _cross(x2 - x1, y2 - y1, x4 - x3, y4 - y3)
        f1, r1 = darts[f"f{p}"], darts[f"b{p}"]
        f2, r2 = darts[f"f{q}"], darts[f"b{q}"]
        out[v] = [f1, f2, r1, r2] if turn < 0 else [f1, r2, r1, f2]
    faces, face_of = trace_faces(edges, out)
    nverts = size + len(cross_chords)
    if nverts - len(edges) + len(faces) != 2:
        raise ColoringFailure("arrangement is not planar")
    arr.edges, arr.rotation, arr.faces, arr.face_of = edges, out, faces, face_of
    arr.exterior = face_of[(0, 0)]
    colour: dict[int, str] = {}
    for k in range(size):
        f = face_of[(k, 1)]
        want = "black" if k % 2 == 0 else "white"
        if colour.setdefault(f, want) != want:
            raise Degenerate("one face touches boundary arcs of both colours")
    stack = list(colour)
    while stack:
        f = stack.pop()
        for dart in faces[f]:
            if dart[0] < size:
                continue
            other = face_of[(dart[0], 1 - dart[1])]
            want = "white" if colour[f] == "black" else "black"
            if other not in colour:
                colour[other] = want
                stack.append(other)
            elif colour[other] != want:
                raise ColoringFailure("faces on both sides of a strand share a colour (lens)")
    if len(colour) != len(faces) - 1:
        raise ColoringFailure("some faces were not reached while colouring")
    arr.colour = colour


def arrangement_to_network(arr: ChordArrangement, labels: Sequence[int] | None = None) -> WeightedGraph:
    """Black faces become vertices and every crossing an edge, all of conductance 1.

    ``labels[i-1]`` is the vertex id given to node ``i`` (default ``i``);
    the boundary list is ``labels`` in clockwise order.
    """
    n = arr.n
    labels = tuple(range(1, n + 1)) if labels is None else tuple(labels)
    node_face = [arr.face_of[(2 * i, 1)] for i in range(n)]
    if len(set(node_face)) != n:
        raise Degenerate("two nodes share a face; the strand permutation describes a cactus network")
    white_arcs = [arr.face_of[(2 * i + 1, 1)] for i in range(n)]
    if len(set(white_arcs)) != n:
        raise Degenerate("two boundary gaps share a face; the network would be disconnected")
    ids = {f: labels[i] for i, f in enumerate(node_face)}
    nxt = n + 1
    for f in range(len(arr.faces)):
        if f != arr.exterior and arr.colour.get(f) == "black" and f not in ids:
            ids[f] = nxt
            nxt += 1
    edge_of_crossing: dict[int, int] = {}
    edges: list[Edge] = []
    for v in sorted(arr.crossing_chords()):
        corners = [arr.face_of[d] for d in arr.rotation[v]]
        black = [f for f in corners if arr.colour.get(f) == "black"]
        if len(black) != 2:
            raise ColoringFailure(f"crossing {v} does not have two black corners")
        edge_of_crossing[v] = len(edges)
        edges.append(Edge(ids[black[0]], ids[black[1]], Fraction(1)))
    emb: dict[int, tuple[int, ...]] = {}
    for f, vid in ids.items():
        walk = arr.faces[f]
        if f in node_face:
            i = node_face.index(f)
            cut = walk.index((2 * i, 1))
            walk = walk[cut + 1 :] + walk[:cut]
        heads = [_head(arr.edges, d) for d in walk]
        emb[vid] = tuple(edge_of_crossing[h] for h in reversed(heads) if h in edge_of_crossing)
    net = WeightedGraph(nxt - 1, labels, tuple(edges), emb)
    if len(components(net)) != 1:
        raise Degenerate("reconstructed network is disconnected")
    return net


def _head(edges, dart):
    e = edges[dart[0]]
    return e.v if dart[1] == 0 else e.u


# --------------------------------------------------------------------------
# pipeline


def reconstruct_topology(d: Matrix, order: Sequence[int] | None = None) -> WeightedGraph:
    """Unit-conductance minimal network with the strand permutation of ``d``.

    Boundary vertices carry the labels of ``order`` in clockwise order.
    """
    order = circular_order(order, len(d))
    tau = strands_of_matrix(d, order)
    return arrangement_to_network(build_chord_arrangement(tau), labels=order)


def triangles_to_stars(g: WeightedGraph, max_iterations: int | None = None) -> WeightedGraph:
    """Greedy: turn the lexicographically least triangle into a star and
    simplify, until no triangle is left.  Heuristic; gives up loudly."""
    cap = max_iterations if max_iterations is not None else 10 * max(g.n, g.n_vertices) ** 2
    g = simplify(g)
    for _ in range(cap):
        tri = find_triangle(g)
        if tri is None:
            return g
        g = simplify(transform(g, "triangle_to_star", tri))
    if find_triangle(g) is None:
        return g
    raise NotTerminated(f"triangles remain after {cap} star-triangle moves")


def is_tree(g: WeightedGraph) -> bool:
    return len(g.edges) == g.n_vertices - 1 and len(components(g)) == 1 and not any(e.is_loop for e in g.edges)


def _tree_path(g: WeightedGraph, start: int, goal: int) -> list[int]:
    """Edge indices on the unique path between two tree vertices."""
    prev: dict[int, tuple[int, int] | None] = {start: None}
    stack = [start]
    while stack:
        v = stack.pop()
        for k in g.incident(v):
            w = g.edges[k].other(v)
            if w not in prev:
                prev[w] = (v, k)
                stack.append(w)
    path = []
    v = goal
    while prev[v] is not None:
        v, k = prev[v]
        path.append(k)
    return path


def fit_tree_weights(tree: WeightedGraph, d: Matrix) -> WeightedGraph:
    """Edge conductances making boundary-to-boundary resistances equal ``d``.

    Resistances along a tree add, so each entry of ``d`` is a path sum of
    edge resistances; the system is solved exactly and must be consistent
    with a unique, strictly positive solution.
    """
    if not is_tree(tree):
        raise ValueError("topology is not a tree")
    bset = set(tree.boundary)
    for v in range(1, tree.n_vertices + 1):
        deg = tree.degree(v)
        if deg == 1 and v not in bset:
            raise ValueError(f"leaf {v} is not a boundary node")
        if deg == 2 and v not in bset:
            raise ValueError(f"interior vertex {v} has degree 2")
    m = len(tree.edges)
    n = tree.n
    rows = []
    for p, q in itertools.combinations(range(n), 2):
        row = [Fraction(0)] * m
        for k in _tree_path(tree, tree.boundary[p], tree.boundary[q]):
            row[k] = Fraction(1)
        rows.append(row + [Fraction(d[p][q])])
    red, pivots = exact.row_echelon(rows)
    if m in pivots:
        raise Inconsistent("distances are not path sums on this tree")
    if pivots != list(range(m)):
        raise Inconsistent("edge resistances are not determined by the distances")
    resist = [red[k][m] for k in range(m)]
    for k, r in enumerate(resist):
        if r <= 0:
            raise NonPositiveWeight(f"edge {k} would need resistance {r}")
    return tree.with_conductances([1 / r for r in resist])


def verify_round_trip(d: Matrix, order: Sequence[int] | None = None) -> bool:
    """Does the unit-weight reconstruction have the same strand permutation as ``d``?"""
    from .netcore import resistance_matrix

    order = circular_order(order, len(d))
    tau = strands_of_matrix(d, order)
    net = arrangement_to_network(build_chord_arrangement(tau), labels=order)
    return strands_of_matrix(resistance_matrix(net)).tau == tau.tau


def tree_splits(tree: WeightedGraph) -> set:
    """Splits of the boundary positions (1-based) cut by each tree edge, with weights (resistances)."""
    from .metrics import Split

    out = set()
    pos = {b: t + 1 for t, b in enumerate(tree.boundary)}
    for k, e in enumerate(tree.edges):
        side = {e.u}
        stack = [e.u]
        while stack:
            v = stack.pop()
            for j in tree.incident(v):
                if j == k:
                    continue
                w = tree.edges[j].other(v)
                if w not in side:
                    side.add(w)
                    stack.append(w)
        block = {pos[v] for v in side if v in pos}
        if block and len(block) < tree.n:
            out.add((Split.of(block, tree.n), 1 / e.c))
    return out


def recover_tree(d: Matrix, order: Sequence[int] | None = None) -> WeightedGraph:
    """Reconstruct, turn triangles into stars, and fit tree weights."""
    topo = triangles_to_stars(reconstruct_topology(d, order))
    if not is_tree(topo):
        raise Inconsistent("reconstruction did not reduce to a tree")
    order = circular_order(order, len(d))
    reordered = [[d[a - 1][b - 1] for b in order] for a in order]
    return fit_tree_weights(topo, reordered)
