import random
from fractions import Fraction as F

import pytest
import sympy
from conftest import TREE_D, TREE_DUAL_NEG, TREE_RESPONSE, fm

from ohmgraph import exact, generate, metrics, netcore
from ohmgraph.errors import BadSite, Disconnected, InteriorSingular, NotEmbedded, TooLarge
from ohmgraph.netcore import graph


def sympy_resistance(g, i, j):
    """Effective resistance from two Laplacian cofactors, evaluated by sympy."""
    lap = sympy.Matrix(netcore.laplacian(g))
    keep_i = [k for k in range(g.n_vertices) if k != i - 1]
    keep_ij = [k for k in keep_i if k != j - 1]
    return lap.extract(keep_ij, keep_ij).det() / lap.extract(keep_i, keep_i).det()


# --------------------------------------------------------------------------
# construction


def test_graph_validation():
    with pytest.raises(ValueError):
        graph(2, [1, 1], [(1, 2, 1)])
    with pytest.raises(ValueError):
        graph(2, [1, 2], [(1, 2, 0)])
    with pytest.raises(ValueError):
        graph(2, [1, 2], [(1, 3, 1)])
    with pytest.raises(ValueError):
        graph(2, [1, 2], [(1, 2, 1)], {1: (0,), 2: ()})
    with pytest.raises(ValueError):
        graph(1, [1], [])


def test_conductances_parse_exactly():
    g = graph(2, [1, 2], [(1, 2, "0.25"), (1, 2, "3/4")])
    assert [e.c for e in g.edges] == [F(1, 4), F(3, 4)]


def test_loop_is_listed_twice_in_incidence():
    g = graph(2, [1, 2], [(1, 2, 1), (1, 1, 1)], {1: (0, 1, 1), 2: (0,)})
    assert g.incident(1) == [0, 1, 1]
    assert g.degree(1) == 3


# --------------------------------------------------------------------------
# response and resistance


def test_laplacian_rows_sum_to_zero(rng):
    for _ in range(20):
        g = generate.random_network(rng)
        lap = netcore.laplacian(g)
        assert all(sum(row) == 0 for row in lap)
        assert exact.is_symmetric(lap)


def test_tree_response_matches_printed_example(tree):
    assert netcore.response_matrix(tree) == TREE_RESPONSE


def test_tree_resistance(tree):
    assert netcore.resistance_matrix(tree) == TREE_D


def test_response_matrix_properties(rng):
    for _ in range(40):
        g = generate.random_network(rng, n=rng.randint(2, 5))
        m = netcore.response_matrix(g)
        n = g.n
        assert exact.is_symmetric(m)
        assert all(sum(row) == 0 for row in m)
        assert all(m[i][j] <= 0 for i in range(n) for j in range(n) if i != j)
        assert exact.rank(m) == n - 1


def test_response_without_interior_is_laplacian():
    g = graph(3, [1, 2, 3], [(1, 2, 2), (2, 3, 5)])
    assert netcore.response_matrix(g) == fm([[2, -2, 0], [-2, 7, -5], [0, -5, 5]])


def test_detached_interior_component_is_refused():
    g = graph(5, [1, 2], [(1, 2, 1), (3, 4, 1), (4, 5, 1)])
    with pytest.raises(InteriorSingular):
        netcore.response_matrix(g)


def test_resistance_needs_connected_boundary():
    g = graph(4, [1, 2, 3], [(1, 2, 1), (3, 4, 1)])
    with pytest.raises(Disconnected):
        netcore.resistance_matrix(g)


def test_series_and_parallel_resistance():
    path = graph(3, [1, 2], [(1, 3, 2), (3, 2, 3)])
    assert netcore.resistance_matrix(path)[0][1] == F(1, 2) + F(1, 3)
    par = graph(2, [1, 2], [(1, 2, 2), (1, 2, 3)])
    assert netcore.resistance_matrix(par)[0][1] == F(1, 5)


def test_resistance_matches_sympy_cofactors(rng):
    for _ in range(25):
        g = generate.random_network(rng)
        d = netcore.resistance_matrix(g)
        b = g.boundary
        for i in range(g.n):
            for j in range(i + 1, g.n):
                assert d[i][j] == sympy_resistance(g, b[i], b[j])


def test_oracle_matches_grounded_solve(rng):
    for _ in range(25):
        g = generate.random_network(rng)
        d = netcore.resistance_matrix(g)
        b = g.boundary
        for i in range(g.n):
            for j in range(i + 1, g.n):
                assert netcore.resistance_oracle(g, b[i], b[j]) == d[i][j]


def test_spanning_tree_polynomial_of_a_triangle():
    g = graph(3, [1, 2, 3], [(1, 2, 2), (2, 3, 3), (1, 3, 5)])
    assert netcore.spanning_tree_polynomial(g) == 2 * 3 + 3 * 5 + 2 * 5


def test_spanning_tree_cap():
    edges = [(1, 2, 1)] * 6
    g = graph(2, [1, 2], edges)
    with pytest.raises(TooLarge):
        netcore.spanning_tree_polynomial(g, edge_cap=5)
    assert netcore.spanning_tree_polynomial(g, edge_cap=6) == 6


# --------------------------------------------------------------------------
# electrical transformations


def test_star_to_triangle_values(star):
    g = star.with_conductances([F(1), F(2), F(3)])
    t = netcore.transform(g, "star_to_triangle", 4)
    conds = {frozenset((e.u, e.v)): e.c for e in t.edges}
    assert conds == {frozenset((1, 2)): F(1, 3), frozenset((2, 3)): F(1), frozenset((1, 3)): F(1, 2)}
    assert t.n_vertices == 3


def test_triangle_to_star_inverts(star):
    g = star.with_conductances([F(1), F(2), F(3)])
    t = netcore.transform(g, "star_to_triangle", 4)
    back = netcore.transform(t, "triangle_to_star", (0, 1, 2))
    legs = {e.other(4): e.c for e in back.edges}
    assert legs == {1: F(1), 2: F(2), 3: F(3)}
    assert netcore.response_matrix(back) == netcore.response_matrix(g)


def test_each_move_preserves_response(rng):
    for move in netcore.MOVES:
        done = 0
        while done < 15:
            g = generate.decorate(generate.random_network(rng), move, rng)
            site = generate.random_site(g, move, rng)
            if site is None:
                continue
            h = netcore.transform(g, move, site)
            assert netcore.response_matrix(h) == netcore.response_matrix(g), move
            if h.embedding is not None:
                netcore.dual_network(h)  # rotation system still planar
            done += 1


def test_moves_reject_bad_sites(tree):
    with pytest.raises(BadSite):
        netcore.transform(tree, "remove_loop", 0)
    with pytest.raises(BadSite):
        netcore.transform(tree, "series", 5)
    with pytest.raises(BadSite):
        netcore.transform(tree, "series", 1)  # boundary node
    with pytest.raises(BadSite):
        netcore.transform(tree, "parallel", (0, 1))
    with pytest.raises(BadSite):
        netcore.transform(tree, "triangle_to_star", (0, 1, 2))
    with pytest.raises(BadSite):
        netcore.transform(tree, "no_such_move", 0)


def test_simplify_reaches_fixpoint():
    g = graph(
        5,
        [1, 2],
        [(1, 3, 1), (3, 2, 1), (1, 2, 1), (1, 1, 4), (2, 4, 7), (4, 5, 1)],
    )
    s = netcore.simplify(g)
    assert s.n_vertices == 2
    assert [(e.u, e.v, e.c) for e in s.edges] == [(1, 2, F(3, 2))]
    assert netcore.response_matrix(s) == netcore.response_matrix(g)


def test_find_triangle_is_lexicographic():
    g = graph(4, [1, 2, 3, 4], [(2, 3, 1), (3, 4, 1), (2, 4, 1), (1, 2, 1), (1, 3, 1)])
    assert netcore.find_triangle(g) == (3, 0, 4)


# --------------------------------------------------------------------------
# planar duals


def test_tree_dual_response(tree):
    dual = netcore.dual_network(tree)
    assert netcore.response_matrix(dual) == exact.scale(TREE_DUAL_NEG, -1)


def test_dual_needs_embedding():
    with pytest.raises(NotEmbedded):
        netcore.dual_network(graph(2, [1, 2], [(1, 2, 1)]))


def test_faces_satisfy_euler(rng):
    for _ in range(40):
        g = generate.random_network(rng)
        faces, face_of = netcore.trace_faces(g.edges, {v: netcore.outgoing_darts(g, g.embedding, v) for v in range(1, g.n_vertices + 1)})
        assert g.n_vertices - len(g.edges) + len(faces) == 2
        assert len(face_of) == 2 * len(g.edges)


def test_dual_response_is_m_of_d(rng):
    """The dual network's response equals M(R) computed from resistances alone."""
    for _ in range(40):
        g = generate.random_network(rng, n=rng.randint(2, 5))
        dual = netcore.dual_network(g)
        assert netcore.response_matrix(dual) == metrics.m_of_d(netcore.resistance_matrix(g))


def test_double_dual_shifts_labels(rng):
    """Node i of the double dual is node i+1 of the original."""
    for _ in range(20):
        g = generate.random_network(rng, n=rng.randint(3, 5))
        m = netcore.response_matrix(g)
        mm = netcore.response_matrix(netcore.dual_network(netcore.dual_network(g)))
        n = g.n
        assert mm == [[m[(i + 1) % n][(j + 1) % n] for j in range(n)] for i in range(n)]


def test_dual_resistance_sum_formula(rng):
    for _ in range(20):
        g = generate.random_network(rng, n=rng.randint(2, 5))
        dual = netcore.dual_network(g)
        x = netcore.response_matrix(g)
        assert metrics.resistance_from_dual_response(x) == netcore.resistance_matrix(dual)


def test_random_module_is_reproducible():
    a = generate.random_network(random.Random(3))
    b = generate.random_network(random.Random(3))
    assert a == b
