import random

import pytest

from leakyforce.graph import (
    Graph,
    GraphError,
    GraphFamilySpec,
    GridLabeling,
    build_base_graph,
    cartesian_product,
    complete_graph,
    cycle_graph,
    direct_product,
    hypercube_graph,
    load_graph,
    path_graph,
    popcount,
    save_graph,
)
from oracles import isomorphic, product_edge_count


def random_graph(rng, n, p):
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def assert_well_formed(g):
    for v in range(g.vertex_count):
        assert not g.has_edge(v, v)
        for u in g.neighbors(v):
            assert u < g.vertex_count
            assert g.has_edge(u, v)


@pytest.mark.parametrize(
    "family,param,vertices,edges,degree",
    [
        ("complete", 3, 3, 3, 2),
        ("hypercube", 3, 8, 12, 3),
        ("path", 1, 1, 0, 0),
        ("cycle", 5, 5, 5, 2),
        ("complete", 1, 1, 0, 0),
    ],
)
def test_base_graphs(family, param, vertices, edges, degree):
    g = build_base_graph(GraphFamilySpec(family, param))
    assert g.vertex_count == vertices
    assert g.edge_count == edges
    assert {g.degree(v) for v in range(vertices)} == {degree}
    assert_well_formed(g)


def test_hypercube_labels_differ_in_one_bit():
    g = hypercube_graph(4)
    for u, v in g.edges():
        a, b = g.label(u), g.label(v)
        assert sum(x != y for x, y in zip(a, b)) == 1
    assert g.label(0) == "0000" and g.label(15) == "1111"


@pytest.mark.parametrize("family,param", [("cycle", 2), ("cycle", 1), ("path", 0), ("complete", 0), ("wheel", 4)])
def test_bad_family_specs(family, param):
    with pytest.raises(GraphError):
        GraphFamilySpec(family, param)


def test_graph_rejects_bad_adjacency():
    with pytest.raises(GraphError):
        Graph(2, (0b10, 0b00))  # asymmetric
    with pytest.raises(GraphError):
        Graph(2, (0b01, 0b00))  # self-loop
    with pytest.raises(GraphError):
        Graph(2, (0b100, 0b00))  # neighbor out of range


def test_k2_times_k2_is_two_disjoint_edges():
    g, lab = direct_product(complete_graph(2), complete_graph(2))
    assert g.vertex_count == 4 and g.edge_count == 2
    assert len(g.components()) == 2
    assert g.has_edge(lab.to_index(1, 1), lab.to_index(2, 2))
    assert g.has_edge(lab.to_index(1, 2), lab.to_index(2, 1))


def test_k3_times_k2_is_c6():
    g, _ = direct_product(complete_graph(3), complete_graph(2))
    assert isomorphic(g, cycle_graph(6))


def test_cycle_adds_n_times_n_minus_1_edges():
    kc, _ = direct_product(complete_graph(3), cycle_graph(4))
    kp, _ = direct_product(complete_graph(3), path_graph(4))
    assert (kc.edge_count, kp.edge_count) == (24, 18)
    assert kc.edge_count - kp.edge_count == 3 * 2


def test_direct_product_adjacency_rule():
    g, h = complete_graph(4), path_graph(5)
    prod, lab = direct_product(g, h)
    for r in range(1, 5):
        for c in range(1, 6):
            for r2 in range(1, 5):
                for c2 in range(1, 6):
                    expect = r != r2 and abs(c - c2) == 1
                    assert prod.has_edge(lab.to_index(r, c), lab.to_index(r2, c2)) == expect


def test_cartesian_examples():
    g, _ = cartesian_product(complete_graph(2), complete_graph(2))
    assert isomorphic(g, cycle_graph(4))
    ladder, _ = cartesian_product(complete_graph(2), path_graph(3))
    assert (ladder.vertex_count, ladder.edge_count) == (6, 7)
    q, _ = cartesian_product(g, complete_graph(2))
    assert isomorphic(q, hypercube_graph(3))


def test_product_edge_counts_match_definition():
    rng = random.Random(7)
    for _ in range(20):
        g = random_graph(rng, rng.randint(1, 5), 0.5)
        h = random_graph(rng, rng.randint(1, 5), 0.5)
        prod, _ = direct_product(g, h)
        assert prod.edge_count == 2 * g.edge_count * h.edge_count
        assert prod.edge_count == product_edge_count(g, h)
        cart, _ = cartesian_product(g, h)
        assert cart.edge_count == product_edge_count(g, h, "cartesian")
        assert_well_formed(prod)
        assert_well_formed(cart)


@pytest.mark.parametrize(
    "h",
    [path_graph(t) for t in range(2, 7)] + [cycle_graph(4), cycle_graph(6), hypercube_graph(3)],
    ids=lambda g: f"{g.vertex_count}v{g.edge_count}e",
)
def test_k2_times_bipartite_splits_in_two(h):
    g, _ = direct_product(complete_graph(2), h)
    comps = g.components()
    assert len(comps) == 2
    assert [popcount(c) for c in comps] == [h.vertex_count] * 2


def test_grid_labeling_is_column_major_bijection():
    lab = GridLabeling(4, 6)
    assert lab.to_index(1, 1) == 0
    assert lab.to_index(4, 1) == 3
    assert lab.to_index(1, 2) == 4
    seen = set()
    for r in range(1, 5):
        for c in range(1, 7):
            i = lab.to_index(r, c)
            assert lab.to_coord(i) == (r, c)
            seen.add(i)
    assert seen == set(range(24))
    with pytest.raises(GraphError):
        lab.to_index(5, 1)
    with pytest.raises(GraphError):
        lab.to_coord(24)


def test_load_k3():
    g = load_graph("graph 3\ne 0 1\ne 1 2\ne 0 2\n")
    assert g == complete_graph(3)


def test_save_is_canonical():
    text = "# a comment\ngraph 4\ne 3 0\ne 1 0\ne 1 0\n\ne 2 1\n"
    g = load_graph(text)
    assert save_graph(g) == "graph 4\ne 0 1\ne 0 3\ne 1 2\n"
    assert save_graph(load_graph(save_graph(g))) == save_graph(g)


def test_round_trip_k4_times_p6():
    g, _ = direct_product(complete_graph(4), path_graph(6))
    back = load_graph(save_graph(g))
    assert back.adjacency == g.adjacency
    assert (back.vertex_count, back.edge_count) == (24, product_edge_count(complete_graph(4), path_graph(6)))
    assert back.edge_count == 60


def test_round_trip_random():
    rng = random.Random(3)
    for _ in range(20):
        g = random_graph(rng, rng.randint(0, 12), 0.3)
        assert load_graph(save_graph(g)).adjacency == g.adjacency


@pytest.mark.parametrize(
    "text",
    [
        "",
        "grph 3\n",
        "graph x\n",
        "graph 3\ne 0 3\n",
        "graph 3\ne 1 1\n",
        "graph 3\ne 0\n",
        "graph 3\nv 0 1\n",
        "graph -1\n",
    ],
)
def test_load_errors(text):
    with pytest.raises(GraphError):
        load_graph(text)
