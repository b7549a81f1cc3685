import random

import pytest

from tokengraphs import (
    Graph,
    NoSuchVertex,
    NotAnEdge,
    SizeLimitExceeded,
    UnsupportedPattern,
    complete_bipartite_graph,
    complete_graph,
    contains_disjoint,
    cycle_graph,
    empty_graph,
    has_cycle_of_length_at_least,
    has_subgraph,
    octahedron_graph,
    path_graph,
    petersen_graph,
    star_graph,
)
from tokengraphs.graphs import circumference, normalize_edge

from util import random_graph, random_tree


def test_basic_accessors():
    g = Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3), (1, 3)])
    assert g.n == 4 and g.m == 5
    assert g.neighbors(1) == [0, 2, 3]
    assert g.degree(1) == 3
    assert g.degrees() == [2, 3, 2, 3]
    assert g.degree_multiset() == (2, 2, 3, 3)
    assert g.max_degree() == 3 and g.min_degree() == 2
    assert g.has_edge(3, 0) and not g.has_edge(0, 2)
    assert g.edges() == [(0, 1), (0, 3), (1, 2), (1, 3), (2, 3)]


def test_duplicate_edges_collapse():
    g = Graph(3, [(0, 1), (1, 0), (0, 1)])
    assert g.m == 1


def test_normalize_edge_rejects_loops():
    assert normalize_edge(5, 2) == (2, 5)
    with pytest.raises(NotAnEdge):
        normalize_edge(3, 3)


def test_vertex_bounds_checked():
    g = complete_graph(3)
    with pytest.raises(NoSuchVertex):
        g.degree(3)
    with pytest.raises(NoSuchVertex):
        g.has_edge(0, -1)
    with pytest.raises(NoSuchVertex):
        Graph(2, [(0, 2)])


def test_with_edge_and_delete_edge():
    g = path_graph(3)
    g2 = g.with_edge(0, 2)
    assert g2.is_cycle_graph()
    assert g.m == 2  # original untouched
    with pytest.raises(NotAnEdge):
        g2.with_edge(2, 0)
    assert g2.delete_edge(0, 2) == g
    with pytest.raises(NotAnEdge):
        g.delete_edge(0, 2)


def test_delete_vertex_relabels_downward():
    g = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (1, 4)])
    h = g.delete_vertex(2)
    # survivors 0,1,3,4 become 0,1,2,3
    assert h.n == 4
    assert h.edges() == [(0, 1), (1, 3), (2, 3)]


def test_contract_edge_against_set_model():
    """contract_edge merges v into u=min and must match a naive set model."""
    rng = random.Random(420)
    for _ in range(120):
        n = rng.randint(2, 8)
        g = random_graph(rng, n, 0.5)
        if g.m == 0:
            continue
        u, v = g.edges()[rng.randrange(g.m)]
        keep = [x for x in range(n) if x != v]
        name = {x: i for i, x in enumerate(keep)}
        image = lambda x: name[u] if x == v else name[x]
        want = {
            tuple(sorted((image(a), image(b))))
            for a, b in g.edges()
            if image(a) != image(b)
        }
        got = g.contract_edge(u, v)
        assert got.n == n - 1
        assert set(got.edges()) == want


def test_contract_requires_edge():
    with pytest.raises(NotAnEdge):
        path_graph(4).contract_edge(0, 3)


def test_complement_involution_and_size():
    rng = random.Random(7)
    for _ in range(40):
        g = random_graph(rng, rng.randint(0, 9), 0.4)
        gc = g.complement()
        assert gc.complement() == g
        assert g.m + gc.m == g.n * (g.n - 1) // 2


def test_induced_subgraph():
    g = cycle_graph(6)
    h = g.induced_subgraph([0, 1, 2, 4])
    assert h.n == 4
    assert h.edges() == [(0, 1), (1, 2)]
    assert g.induced_subgraph([]) == empty_graph(0)


def test_components_and_connectivity():
    g = Graph(7, [(0, 1), (1, 2), (3, 4), (5, 6)])
    comps = g.connected_components()
    assert comps == [0b0000111, 0b0011000, 0b1100000]
    assert not g.is_connected()
    assert g.component_mask(4) == 0b0011000
    assert empty_graph(0).is_connected()
    assert empty_graph(1).is_connected()
    assert complete_graph(5).is_connected()


def test_tree_and_shape_predicates():
    rng = random.Random(99)
    for _ in range(60):
        t = random_tree(rng, rng.randint(1, 10))
        assert t.is_tree() and t.is_forest()
    assert path_graph(1).is_path_graph()
    assert path_graph(6).is_path_graph()
    assert not cycle_graph(6).is_path_graph()
    assert cycle_graph(3).is_cycle_graph()
    assert not path_graph(3).is_cycle_graph()
    assert star_graph(5).is_star_graph()
    assert not path_graph(4).is_star_graph()
    assert star_graph(2).is_path_graph()  # K_{1,1} is also P_2
    assert not Graph(4, [(0, 1), (2, 3)]).is_tree()
    assert Graph(4, [(0, 1), (2, 3)]).is_forest()


def test_circumference_known_values():
    assert circumference(path_graph(6)) == 0
    assert circumference(cycle_graph(7)) == 7
    assert circumference(complete_graph(4)) == 4
    assert circumference(octahedron_graph()) == 6
    # Petersen is hypohamiltonian: longest cycle has 9 of its 10 vertices.
    assert circumference(petersen_graph()) == 9


def test_has_cycle_of_length_at_least():
    assert has_cycle_of_length_at_least(cycle_graph(5), 5)
    assert not has_cycle_of_length_at_least(cycle_graph(5), 6)
    assert has_cycle_of_length_at_least(complete_graph(4), 4)
    assert not has_cycle_of_length_at_least(complete_graph(4), 5)
    assert not has_cycle_of_length_at_least(random_tree(random.Random(1), 30), 3)
    # no size cap: a long cycle with a pendant path
    big = Graph(40, [(i, (i + 1) % 30) for i in range(30)] + [(0, 30)] +
                [(i, i + 1) for i in range(30, 39)])
    assert has_cycle_of_length_at_least(big, 30)
    assert not has_cycle_of_length_at_least(big, 31)


def test_circumference_is_capped():
    with pytest.raises(SizeLimitExceeded):
        circumference(empty_graph(40))


def test_subgraph_patterns():
    p3, k13, p7 = path_graph(3), star_graph(4), path_graph(7)
    assert has_subgraph(cycle_graph(4), p3)
    assert not has_subgraph(Graph(4, [(0, 1), (2, 3)]), p3)
    assert has_subgraph(star_graph(6), k13)
    assert not has_subgraph(cycle_graph(8), k13)
    assert has_subgraph(path_graph(7), p7)
    assert has_subgraph(cycle_graph(7), p7)
    assert not has_subgraph(path_graph(6), p7)
    with pytest.raises(UnsupportedPattern):
        has_subgraph(complete_graph(5), cycle_graph(3))


def test_has_subgraph_respects_banned_mask():
    g = path_graph(6)
    assert has_subgraph(g, path_graph(3), banned=0)
    # banning the middle vertices leaves no path on three vertices
    assert not has_subgraph(g, path_graph(3), banned=0b011110)


def test_contains_disjoint():
    p3, k13 = path_graph(3), star_graph(4)
    # P_3 next to a separate claw
    g = Graph(7, [(0, 1), (1, 2), (3, 4), (3, 5), (3, 6)])
    assert contains_disjoint(g, p3, k13)
    assert contains_disjoint(g, k13, p3)
    # spider with three legs of length two: claw and P_3 always share the hub
    spider = Graph(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])
    assert has_subgraph(spider, p3) and has_subgraph(spider, k13)
    assert not contains_disjoint(spider, p3, k13)


def test_graph_equality_and_hash():
    a = Graph(3, [(0, 1)])
    b = Graph(3, [(1, 0)])
    assert a == b and hash(a) == hash(b)
    assert a != Graph(4, [(0, 1)])
    assert len({a, b}) == 1


def test_complete_bipartite():
    g = complete_bipartite_graph(2, 3)
    assert g.n == 5 and g.m == 6
    assert g.degree_multiset() == (2, 2, 2, 3, 3)
