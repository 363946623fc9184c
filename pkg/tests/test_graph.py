import pytest
from hypothesis import given

from betti_forge import graph as G
from betti_forge.graph import (connected_components, induced_subgraph, is_connected, join,
                               make_graph, relabel)

from .conftest import graphs


def test_make_graph_path():
    g = make_graph(3, [(0, 1), (1, 2)])
    assert g.n == 3 and g.sorted_edges() == [(0, 1), (1, 2)]
    assert g == G.path(3)


def test_make_graph_dedups():
    g = make_graph(2, [(0, 1), (1, 0)])
    assert g.m == 1 and g == G.complete(2)


def test_make_graph_rejects_loop_and_range():
    with pytest.raises(ValueError, match="loop"):
        make_graph(1, [(0, 0)])
    with pytest.raises(ValueError, match="out of range"):
        make_graph(2, [(0, 2)])


def test_join_small():
    assert join(G.complete(1), G.complete(1)) == G.complete(2)
    k22 = join(G.empty(2), G.empty(2))
    assert k22.m == 4 and k22 == G.complete_multipartite([2, 2])


def test_join_cycle_hub_is_wheel():
    w = join(G.cycle(5), G.complete(1))
    # 5 rim edges + 5 spokes
    assert w.m == 5 + 5
    assert w == G.wheel(6)
    assert all(w.has_edge(v, 5) for v in range(5))


@given(graphs(max_n=5), graphs(max_n=5))
def test_join_edge_count(g1, g2):
    assert join(g1, g2).m == g1.m + g2.m + g1.n * g2.n


@given(graphs(max_n=5), graphs(max_n=5))
def test_join_commutes_under_block_swap(g1, g2):
    n1, n2 = g1.n, g2.n
    # vertex v of join(g1, g2) goes to its position in join(g2, g1)
    perm = [v + n2 for v in range(n1)] + [v - n1 for v in range(n1, n1 + n2)]
    assert relabel(join(g1, g2), perm).edges == join(g2, g1).edges


@given(graphs(max_n=4), graphs(max_n=4), graphs(max_n=4))
def test_join_associative(g1, g2, g3):
    assert join(join(g1, g2), g3) == join(g1, join(g2, g3))


@pytest.mark.parametrize("a,b", [(0, 3), (1, 1), (2, 4), (5, 0)])
def test_complete_and_multipartite_as_joins(a, b):
    assert G.complete(a + b) == join(G.complete(a), G.complete(b))
    if a and b:
        assert G.complete_multipartite([a, b]) == join(G.empty(a), G.empty(b))


@given(graphs())
def test_induced_on_everything_is_identity(g):
    assert induced_subgraph(g, range(g.n)) == g


def test_induced_subgraph_examples():
    assert induced_subgraph(G.complete(4), [0, 1, 2]) == G.complete(3)
    assert induced_subgraph(G.cycle(5), [0, 1, 3]).sorted_edges() == [(0, 1)]
    assert induced_subgraph(G.cycle(6), [0, 2, 4]) == G.empty(3)
    with pytest.raises(ValueError):
        induced_subgraph(G.cycle(5), [7])


def test_connectivity():
    assert is_connected(G.cycle(5))
    assert not is_connected(G.empty(2))
    assert is_connected(G.complete(1))
    assert is_connected(G.empty(0))


def test_components():
    assert connected_components(G.empty(3)) == [[0], [1], [2]]
    assert connected_components(make_graph(3, [(0, 1)])) == [[0, 1], [2]]
    assert connected_components(G.cycle(4)) == [[0, 1, 2, 3]]


def test_families():
    assert G.complete(4).m == 6
    assert G.complete_multipartite([6, 6]).m == 36
    assert G.wheel(6).m == 10
    s = G.star(4)
    assert s.n == 5 and s.sorted_edges() == [(0, v) for v in range(1, 5)]


@pytest.mark.parametrize("ctor,arg", [(G.cycle, 2), (G.wheel, 3), (G.star, 0), (G.path, 0),
                                      (G.complete_multipartite, []), (G.complete_multipartite, [2, 0])])
def test_family_minimums(ctor, arg):
    with pytest.raises(ValueError):
        ctor(arg)
