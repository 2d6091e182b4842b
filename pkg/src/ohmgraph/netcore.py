"""Weighted graphs with boundary nodes, their Laplacians, response matrices and
effective resistances, electrical transformations, and planar duals.

Vertices are the integers ``1..n_vertices``.  ``boundary`` lists the boundary
vertices in clockwise order around the disk; every other vertex is interior.
Matrices returned here are indexed by position in ``boundary``.

An embedding is a rotation system: for every vertex, the clockwise cyclic
order of incident edge indices.  For a boundary vertex the list starts at the
first edge met when sweeping clockwise from the boundary circle (the outer
gap sits between the last and the first entry).  A loop is listed twice; its
first occurrence is taken as the end ``u``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from . import exact
from .errors import (
    BadSite,
    Disconnected,
    InteriorSingular,
    NotEmbedded,
    NotPlanar,
    TooLarge,
)
from .exact import Matrix

SPANNING_TREE_EDGE_CAP = 20

MOVES = (
    "remove_loop",
    "remove_pendant",
    "series",
    "parallel",
    "star_to_triangle",
    "triangle_to_star",
)


@dataclass(frozen=True)
class Edge:
    u: int
    v: int
    c: Fraction

    @property
    def is_loop(self) -> bool:
        return self.u == self.v

    def other(self, w: int) -> int:
        return self.v if w == self.u else self.u


@dataclass(frozen=True)
class WeightedGraph:
    n_vertices: int
    boundary: tuple[int, ...]
    edges: tuple[Edge, ...] = ()
    embedding: Mapping[int, tuple[int, ...]] | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "boundary", tuple(self.boundary))
        object.__setattr__(
            self,
            "edges",
            tuple(e if isinstance(e, Edge) else Edge(e[0], e[1], exact.to_fraction(e[2])) for e in self.edges),
        )
        n = self.n_vertices
        if len(self.boundary) < 2:
            raise ValueError("need at least two boundary nodes")
        if len(set(self.boundary)) != len(self.boundary):
            raise ValueError("boundary ids must be distinct")
        for b in self.boundary:
            if not 1 <= b <= n:
                raise ValueError(f"boundary id {b} out of range 1..{n}")
        for k, e in enumerate(self.edges):
            if not (1 <= e.u <= n and 1 <= e.v <= n):
                raise ValueError(f"edge {k} has an endpoint outside 1..{n}")
            if e.c <= 0:
                raise ValueError(f"edge {k} has non-positive conductance {e.c}")
        if self.embedding is not None:
            emb = {int(v): tuple(int(i) for i in rot) for v, rot in self.embedding.items()}
            _check_rotation_system(n, self.edges, emb)
            object.__setattr__(self, "embedding", emb)

    @property
    def interior(self) -> tuple[int, ...]:
        bset = set(self.boundary)
        return tuple(v for v in range(1, self.n_vertices + 1) if v not in bset)

    @property
    def n(self) -> int:
        """Number of boundary nodes."""
        return len(self.boundary)

    def incident(self, v: int) -> list[int]:
        """Edge indices at ``v``; a loop is listed twice."""
        out = []
        for k, e in enumerate(self.edges):
            if e.u == v:
                out.append(k)
            if e.v == v:
                out.append(k)
        return out

    def degree(self, v: int) -> int:
        return len(self.incident(v))

    def with_conductances(self, values: Sequence) -> "WeightedGraph":
        edges = tuple(Edge(e.u, e.v, exact.to_fraction(c)) for e, c in zip(self.edges, values, strict=True))
        return WeightedGraph(self.n_vertices, self.boundary, edges, self.embedding)


def _check_rotation_system(n: int, edges: Sequence[Edge], emb: Mapping[int, Sequence[int]]) -> None:
    expected: dict[int, list[int]] = {v: [] for v in range(1, n + 1)}
    for k, e in enumerate(edges):
        expected[e.u].append(k)
        expected[e.v].append(k)
    for v in emb:
        if v not in expected:
            raise ValueError(f"embedding names unknown vertex {v}")
    for v, inc in expected.items():
        rot = list(emb.get(v, ()))
        if sorted(rot) != sorted(inc):
            raise ValueError(f"rotation at vertex {v} must list each incident edge once (loops twice)")


def graph(n_vertices: int, boundary: Iterable[int], edges: Iterable, embedding=None) -> WeightedGraph:
    """Convenience constructor; edges are ``(u, v, c)`` triples with ``c`` exact-parsable."""
    return WeightedGraph(n_vertices, tuple(boundary), tuple(edges), embedding)


# --------------------------------------------------------------------------
# connectivity


def components(g: WeightedGraph) -> list[set[int]]:
    parent = list(range(g.n_vertices + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in g.edges:
        ru, rv = find(e.u), find(e.v)
        if ru != rv:
            parent[ru] = rv
    groups: dict[int, set[int]] = {}
    for v in range(1, g.n_vertices + 1):
        groups.setdefault(find(v), set()).add(v)
    return sorted(groups.values(), key=min)


def is_connected(g: WeightedGraph) -> bool:
    return len(components(g)) == 1


# --------------------------------------------------------------------------
# matrices


def laplacian(g: WeightedGraph) -> Matrix:
    """Weighted Laplacian over all vertices, row ``v-1`` for vertex ``v``.  Loops contribute nothing."""
    size = g.n_vertices
    lap = exact.zeros(size)
    for e in g.edges:
        if e.is_loop:
            continue
        a, b = e.u - 1, e.v - 1
        lap[a][a] += e.c
        lap[b][b] += e.c
        lap[a][b] -= e.c
        lap[b][a] -= e.c
    return lap


def response_matrix(g: WeightedGraph) -> Matrix:
    """Dirichlet-to-Neumann map: the Schur complement of the interior block of the Laplacian."""
    lap = laplacian(g)
    bnd = [b - 1 for b in g.boundary]
    inner = [v - 1 for v in g.interior]
    a = exact.submatrix(lap, bnd, bnd)
    if not inner:
        return a
    b = exact.submatrix(lap, bnd, inner)
    c = exact.submatrix(lap, inner, bnd)
    d = exact.submatrix(lap, inner, inner)
    try:
        dinv_c = exact.solve(d, c)
    except ZeroDivisionError:
        raise InteriorSingular("an interior component has no boundary node") from None
    b_dinv_c = exact.matmul(b, dinv_c)
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b_dinv_c)]


def resistance_matrix(g: WeightedGraph) -> Matrix:
    """Effective resistances between boundary nodes.

    For each pair the boundary potentials solve ``M U = -e_i + e_j`` with the
    last potential grounded, and ``R_ij = |U_i - U_j|``.
    """
    if not is_connected(g):
        raise Disconnected("resistance is infinite between components")
    m = response_matrix(g)
    n = len(m)
    reduced = [row[: n - 1] for row in m[: n - 1]]
    rhs = exact.zeros(n - 1, n * (n - 1) // 2)
    pairs = list(itertools.combinations(range(n), 2))
    for col, (i, j) in enumerate(pairs):
        if i < n - 1:
            rhs[i][col] -= 1
        if j < n - 1:
            rhs[j][col] += 1
    sol = exact.solve(reduced, rhs)
    out = exact.zeros(n)
    for col, (i, j) in enumerate(pairs):
        ui = sol[i][col] if i < n - 1 else Fraction(0)
        uj = sol[j][col] if j < n - 1 else Fraction(0)
        out[i][j] = out[j][i] = abs(ui - uj)
    return out


# --------------------------------------------------------------------------
# spanning trees


def _tree_sum(n_vertices: int, edges: Sequence[Edge], edge_cap: int) -> Fraction:
    proper = [e for e in edges if not e.is_loop]
    if len(proper) > edge_cap:
        raise TooLarge(f"{len(proper)} edges exceeds the spanning-tree enumeration cap {edge_cap}")
    need = n_vertices - 1
    total = Fraction(0)
    for subset in itertools.combinations(proper, need):
        parent = list(range(n_vertices + 1))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        weight = Fraction(1)
        for e in subset:
            ru, rv = find(e.u), find(e.v)
            if ru == rv:
                break
            parent[ru] = rv
            weight *= e.c
        else:
            total += weight
    return total


def _contract(g: WeightedGraph, i: int, j: int) -> tuple[int, list[Edge]]:
    """Merge vertex ``j`` into ``i``; vertices above ``j`` shift down by one."""

    def relabel(v):
        if v == j:
            v = i
        return v - 1 if v > j else v

    return g.n_vertices - 1, [Edge(relabel(e.u), relabel(e.v), e.c) for e in g.edges]


def spanning_tree_polynomial(g: WeightedGraph, edge_cap: int = SPANNING_TREE_EDGE_CAP) -> Fraction:
    """Sum over spanning trees of the product of conductances.

    Enumerated exhaustively, then checked against a cofactor of the
    Laplacian (matrix-tree theorem); a mismatch is an internal error.
    """
    enumerated = _tree_sum(g.n_vertices, g.edges, edge_cap)
    lap = laplacian(g)
    rest = list(range(1, g.n_vertices))
    cofactor = exact.det(exact.submatrix(lap, rest, rest))
    if cofactor != enumerated:
        raise AssertionError(f"matrix-tree mismatch: {enumerated} != {cofactor}")
    return enumerated


def resistance_oracle(g: WeightedGraph, i: int, j: int, edge_cap: int = SPANNING_TREE_EDGE_CAP) -> Fraction:
    """Kirchhoff's formula ``T(G/ij) / T(G)`` between vertices ``i`` and ``j`` by enumeration."""
    if i == j:
        return Fraction(0)
    total = _tree_sum(g.n_vertices, g.edges, edge_cap)
    if total == 0:
        raise Disconnected("graph has no spanning tree")
    nv, merged = _contract(g, min(i, j), max(i, j))
    return _tree_sum(nv, merged, edge_cap) / total


# --------------------------------------------------------------------------
# electrical transformations


class _Draft:
    """Mutable working copy used while rewriting a graph."""

    def __init__(self, g: WeightedGraph):
        self.boundary = list(g.boundary)
        self.vertices = set(range(1, g.n_vertices + 1))
        self.edges: dict[int, Edge] = dict(enumerate(g.edges))
        self.next_key = len(g.edges)
        self.next_vertex = g.n_vertices + 1
        self.rot = None if g.embedding is None else {v: list(g.embedding.get(v, ())) for v in self.vertices}

    def add_edge(self, u, v, c) -> int:
        k = self.next_key
        self.next_key += 1
        self.edges[k] = Edge(u, v, c)
        return k

    def add_vertex(self) -> int:
        v = self.next_vertex
        self.next_vertex += 1
        self.vertices.add(v)
        if self.rot is not None:
            self.rot[v] = []
        return v

    def drop_edge(self, k):
        e = self.edges.pop(k)
        if self.rot is not None:
            for w in {e.u, e.v}:
                self.rot[w] = [x for x in self.rot[w] if x != k]

    def drop_vertex(self, v):
        self.vertices.discard(v)
        if self.rot is not None:
            self.rot.pop(v, None)

    def finish(self) -> WeightedGraph:
        order = sorted(self.vertices)
        new_id = {v: t + 1 for t, v in enumerate(order)}
        keys = sorted(self.edges)
        new_idx = {k: t for t, k in enumerate(keys)}
        edges = tuple(Edge(new_id[self.edges[k].u], new_id[self.edges[k].v], self.edges[k].c) for k in keys)
        emb = None
        if self.rot is not None:
            emb = {new_id[v]: tuple(new_idx[k] for k in self.rot[v]) for v in order}
        return WeightedGraph(len(order), tuple(new_id[b] for b in self.boundary), edges, emb)


def _ends(g: WeightedGraph, v: int) -> list[int]:
    return [k for k in g.incident(v)]


def _require_interior(g: WeightedGraph, v: int) -> None:
    if not 1 <= v <= g.n_vertices or v in g.boundary:
        raise BadSite(f"vertex {v} is not an interior vertex")


def _replace_in_rotation(rot: list[int], old: int, new: Sequence[int]) -> list[int]:
    pos = rot.index(old)
    return rot[:pos] + list(new) + rot[pos + 1 :]


def _series_value(c1: Fraction, c2: Fraction) -> Fraction:
    return c1 * c2 / (c1 + c2)


def transform(g: WeightedGraph, move: str, site) -> WeightedGraph:
    """Apply one electrical transformation.

    ``site`` is an edge index for ``remove_loop``, a vertex for
    ``remove_pendant``, ``series`` and ``star_to_triangle``, a pair of edge
    indices for ``parallel`` and a triple of edge indices for
    ``triangle_to_star``.  The response matrix is unchanged.
    """
    if move not in MOVES:
        raise BadSite(f"unknown move {move!r}")
    d = _Draft(g)

    if move == "remove_loop":
        k = int(site)
        if not 0 <= k < len(g.edges) or not g.edges[k].is_loop:
            raise BadSite(f"edge {site} is not a loop")
        d.drop_edge(k)
        return d.finish()

    if move == "remove_pendant":
        v = int(site)
        _require_interior(g, v)
        ends = _ends(g, v)
        if len(ends) != 1:
            raise BadSite(f"vertex {v} has degree {len(ends)}, not 1")
        d.drop_edge(ends[0])
        d.drop_vertex(v)
        return d.finish()

    if move == "series":
        v = int(site)
        _require_interior(g, v)
        ends = _ends(g, v)
        if len(ends) != 2 or ends[0] == ends[1]:
            raise BadSite(f"vertex {v} is not a series vertex")
        e1, e2 = (g.edges[k] for k in ends)
        a, b = e1.other(v), e2.other(v)
        new = d.add_edge(a, b, _series_value(e1.c, e2.c))
        if d.rot is not None:
            d.rot[a] = _replace_in_rotation(d.rot[a], ends[0], [new])
            d.rot[b] = _replace_in_rotation(d.rot[b], ends[1], [new])
        for k in ends:
            d.edges.pop(k)
        d.drop_vertex(v)
        return d.finish()

    if move == "parallel":
        k1, k2 = (int(x) for x in site)
        if k1 == k2 or not all(0 <= k < len(g.edges) for k in (k1, k2)):
            raise BadSite("parallel needs two distinct edge indices")
        e1, e2 = g.edges[k1], g.edges[k2]
        if e1.is_loop or {e1.u, e1.v} != {e2.u, e2.v}:
            raise BadSite(f"edges {k1} and {k2} are not parallel")
        d.edges[k1] = Edge(e1.u, e1.v, e1.c + e2.c)
        d.drop_edge(k2)
        return d.finish()

    if move == "star_to_triangle":
        v = int(site)
        _require_interior(g, v)
        legs = g.embedding[v] if g.embedding is not None else tuple(_ends(g, v))
        if len(legs) != 3 or len(set(legs)) != 3:
            raise BadSite(f"vertex {v} is not a star centre of degree 3")
        ends = [g.edges[k].other(v) for k in legs]
        conds = [g.edges[k].c for k in legs]
        total = sum(conds)
        tri = {}
        for x in range(3):
            y = (x + 1) % 3
            tri[(x, y)] = d.add_edge(ends[x], ends[y], conds[x] * conds[y] / total)
        if d.rot is not None:
            for x in range(3):
                nxt, prv = (x + 1) % 3, (x + 2) % 3
                to_next = tri[(x, nxt)]
                to_prev = tri[(prv, x)]
                d.rot[ends[x]] = _replace_in_rotation(d.rot[ends[x]], legs[x], [to_next, to_prev])
        for k in legs:
            d.edges.pop(k)
        d.drop_vertex(v)
        return d.finish()

    # triangle_to_star
    ks = [int(x) for x in site]
    if len(ks) != 3 or len(set(ks)) != 3 or not all(0 <= k < len(g.edges) for k in ks):
        raise BadSite("triangle_to_star needs three distinct edge indices")
    tri_edges = [g.edges[k] for k in ks]
    verts = sorted({w for e in tri_edges for w in (e.u, e.v)})
    if len(verts) != 3 or any(e.is_loop for e in tri_edges):
        raise BadSite("edges do not form a triangle")
    pairs = [frozenset((e.u, e.v)) for e in tri_edges]
    if len(set(pairs)) != 3:
        raise BadSite("edges do not form a triangle")
    a, b, c = verts
    cond = {p: e.c for p, e in zip(pairs, tri_edges)}
    key = {p: k for p, k in zip(pairs, ks)}
    c_ab, c_bc, c_ca = cond[frozenset((a, b))], cond[frozenset((b, c))], cond[frozenset((c, a))]
    prod = c_ab * c_bc + c_bc * c_ca + c_ca * c_ab
    legs = {a: prod / c_bc, b: prod / c_ca, c: prod / c_ab}
    centre = d.add_vertex()
    cyc = _facial_orientation(g, (a, b, c), key) if d.rot is not None else None
    if d.rot is not None and cyc is None:
        d.rot = None
    spoke = {}
    for x in (cyc or (a, b, c)):
        spoke[x] = d.add_edge(centre, x, legs[x])
    if d.rot is not None:
        for x in cyc:
            y, z = _next_prev(cyc, x)
            d.rot[x] = _merge_pair(d.rot[x], key[frozenset((x, y))], key[frozenset((x, z))], spoke[x])
        d.rot[centre] = [spoke[x] for x in cyc]
    for k in ks:
        d.edges.pop(k)
    return d.finish()


def _next_prev(cyc, x):
    i = cyc.index(x)
    return cyc[(i + 1) % 3], cyc[(i + 2) % 3]


def _follows(g: WeightedGraph, w: int, first: int, second: int) -> bool:
    """Does edge ``second`` come right after ``first`` clockwise at ``w``?"""
    rot = g.embedding[w]
    if rot.count(first) != 1 or rot.count(second) != 1:
        return False
    i = rot.index(first)
    if w in g.boundary:
        return i + 1 < len(rot) and rot[i + 1] == second
    return rot[(i + 1) % len(rot)] == second


def _facial_orientation(g: WeightedGraph, verts, key):
    """Clockwise order of the triangle corners if the triangle bounds a face, else None."""
    a, b, c = verts
    for cyc in ((a, b, c), (a, c, b)):
        ok = True
        for x in cyc:
            y, z = _next_prev(cyc, x)
            if not _follows(g, x, key[frozenset((x, y))], key[frozenset((x, z))]):
                ok = False
                break
        if ok:
            return cyc
    return None


def _merge_pair(rot: list[int], first: int, second: int, new: int) -> list[int]:
    i = rot.index(first)
    j = rot.index(second)
    if j == i + 1:
        return rot[:i] + [new] + rot[j + 1 :]
    # wrapped: first is last, second is first
    return rot[1:-1] + [new]


def find_site(g: WeightedGraph, move: str):
    """First site (in index order) where ``move`` applies, or None."""
    if move == "remove_loop":
        return next((k for k, e in enumerate(g.edges) if e.is_loop), None)
    if move in ("remove_pendant", "series", "star_to_triangle"):
        want = {"remove_pendant": 1, "series": 2, "star_to_triangle": 3}[move]
        for v in g.interior:
            ends = g.incident(v)
            if len(ends) == want and len(set(ends)) == want:
                return v
        return None
    if move == "parallel":
        seen: dict[frozenset, int] = {}
        for k, e in enumerate(g.edges):
            if e.is_loop:
                continue
            p = frozenset((e.u, e.v))
            if p in seen:
                return (seen[p], k)
            seen[p] = k
        return None
    if move == "triangle_to_star":
        tri = find_triangle(g)
        return tri
    raise BadSite(f"unknown move {move!r}")


def find_triangle(g: WeightedGraph):
    """Edge indices of the triangle with the lexicographically least vertex triple."""
    adj: dict[frozenset, int] = {}
    for k, e in enumerate(g.edges):
        if not e.is_loop:
            adj.setdefault(frozenset((e.u, e.v)), k)
    for a, b, c in itertools.combinations(range(1, g.n_vertices + 1), 3):
        ab, bc, ca = frozenset((a, b)), frozenset((b, c)), frozenset((c, a))
        if ab in adj and bc in adj and ca in adj:
            return (adj[ab], adj[bc], adj[ca])
    return None


def simplify(g: WeightedGraph) -> WeightedGraph:
    """Remove loops and interior pendants, merge series and parallel edges, to a fixpoint."""
    while True:
        for move in ("remove_loop", "remove_pendant", "series", "parallel"):
            site = find_site(g, move)
            if site is not None:
                g = transform(g, move, site)
                break
        else:
            return g


# --------------------------------------------------------------------------
# planar duality


def outgoing_darts(g: WeightedGraph, emb: Mapping[int, Sequence[int]], v: int) -> list[tuple[int, int]]:
    """Rotation at ``v`` as outgoing darts ``(edge, dir)``; dir 0 runs u -> v."""
    out = []
    seen_loop: set[int] = set()
    for k in emb.get(v, ()):
        e = g.edges[k]
        if e.is_loop:
            out.append((k, 1 if k in seen_loop else 0))
            seen_loop.add(k)
        else:
            out.append((k, 0 if e.u == v else 1))
    return out


def trace_faces(edges: Sequence[Edge], rotation: Mapping[int, Sequence[tuple[int, int]]]):
    """Faces of a rotation system as dart cycles, each face lying left of its darts.

    Returns ``(faces, face_of)`` where ``face_of`` maps a dart to its face index.
    """
    succ: dict[tuple[int, int], tuple[int, int]] = {}
    for v, darts in rotation.items():
        for t, d in enumerate(darts):
            succ[d] = darts[(t + 1) % len(darts)]

    def head(d):
        e = edges[d[0]]
        return e.v if d[1] == 0 else e.u

    face_of: dict[tuple[int, int], int] = {}
    faces: list[list[tuple[int, int]]] = []
    for k in range(len(edges)):
        for start in ((k, 0), (k, 1)):
            if start in face_of:
                continue
            cycle = []
            d = start
            while d not in face_of:
                face_of[d] = len(faces)
                cycle.append(d)
                d = succ[(d[0], 1 - d[1])]
            if d != start:
                raise NotPlanar("rotation system does not close into faces")
            faces.append(cycle)
    return faces, face_of


def dual_network(g: WeightedGraph) -> WeightedGraph:
    """Planar dual with reciprocal conductances.

    Dual boundary node ``k`` sits on the boundary arc between primal nodes
    ``boundary[k-1]`` and ``boundary[k]`` (wrapping), so it lies between the
    k-th and (k+1)-th primal nodes.  The result carries an embedding, so the
    operation can be repeated.
    """
    if g.embedding is None:
        raise NotEmbedded("dual_network needs a rotation system")
    if not is_connected(g):
        raise Disconnected("dual_network needs a connected graph")
    n = g.n
    m = len(g.edges)
    bnd = g.boundary
    # circle arcs: edge m+k joins boundary[k] -> boundary[k+1]
    edges = list(g.edges) + [Edge(bnd[k], bnd[(k + 1) % n], Fraction(1)) for k in range(n)]
    aug = WeightedGraph(g.n_vertices, bnd, tuple(edges), None)
    rotation = {}
    pos = {b: k for k, b in enumerate(bnd)}
    for v in range(1, g.n_vertices + 1):
        inner = outgoing_darts(g, g.embedding, v)
        if v in pos:
            k = pos[v]
            inner = [(m + k, 0)] + inner + [(m + (k - 1) % n, 1)]
        rotation[v] = inner
    faces, face_of = trace_faces(aug.edges, rotation)
    if g.n_vertices - len(edges) + len(faces) != 2:
        raise NotPlanar("Euler characteristic is not 2; the embedding is not planar")
    outer = {face_of[(m + k, 0)] for k in range(n)}
    if len(outer) != 1 or len(faces[outer.pop()]) != n:
        raise NotPlanar("boundary nodes are not on the outer face in clockwise order")
    arc_faces = [face_of[(m + k, 1)] for k in range(n)]
    if len(set(arc_faces)) != n:
        raise NotPlanar("two boundary arcs share a face")
    exterior = face_of[(m, 0)]
    ids = {f: k + 1 for k, f in enumerate(arc_faces)}
    for f in range(len(faces)):
        if f != exterior and f not in ids:
            ids[f] = len(ids) + 1
    dual_edges = []
    for k, e in enumerate(g.edges):
        dual_edges.append(Edge(ids[face_of[(k, 0)]], ids[face_of[(k, 1)]], 1 / e.c))
    emb: dict[int, tuple[int, ...]] = {}
    for f, cycle in enumerate(faces):
        if f == exterior:
            continue
        walk = [d[0] for d in cycle]
        if f in arc_faces:
            k = arc_faces.index(f)
            cut = walk.index(m + k)
            walk = walk[cut + 1 :] + walk[:cut]
        emb[ids[f]] = tuple(x for x in reversed(walk) if x < m)
    dual = WeightedGraph(len(ids), tuple(range(1, n + 1)), tuple(dual_edges), emb)
    return dual
