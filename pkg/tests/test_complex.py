import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from betti_forge import graph as G
from betti_forge.complex import (Hypergraph, SimplicialComplex, con_r, faces_of_dim, ind_r,
                                 induced_subcomplex, minimal_nonfaces, skeleton)
from betti_forge.graph import induced_subgraph, join, mask_of, vertices_of

from .conftest import graphs, naive_components


def brute_r_independent(g, r):
    """Every subset whose induced components all have at most r vertices."""
    out = set()
    for k in range(g.n + 1):
        for s in itertools.combinations(range(g.n), k):
            if all(len(c) <= r for c in naive_components(g.n, g.edges, s)):
                out.add(frozenset(s))
    return out


def face_sets(c):
    return {frozenset(vertices_of(m)) for m in c.all_faces()}


def test_con_r_cycle5():
    brute = {frozenset(s) for s in itertools.combinations(range(5), 3)
             if len(naive_components(5, G.cycle(5).edges, s)) == 1}
    h = con_r(G.cycle(5), 2)
    assert {frozenset(e) for e in h.edge_list()} == brute
    assert len(brute) == 5
    assert brute == {frozenset({v, (v + 1) % 5, (v + 2) % 5}) for v in range(5)}


def test_con_r_small_examples():
    assert len(con_r(G.complete(6), 3).hyperedges) == 15
    assert con_r(G.empty(4), 1).hyperedges == frozenset()
    assert con_r(G.cycle(6), 1).edge_list() == G.cycle(6).sorted_edges()
    with pytest.raises(ValueError):
        con_r(G.cycle(5), 0)


def test_hypergraph_antichain():
    with pytest.raises(ValueError):
        Hypergraph(3, frozenset([0b011, 0b111]))
    with pytest.raises(ValueError):
        Hypergraph(3, frozenset([0b001]))


def test_ind_r_examples():
    assert ind_r(G.complete(3), 1).facet_list() == [(0,), (1,), (2,)]
    for n in range(5):
        assert ind_r(G.complete(n), 4) == SimplicialComplex.simplex(n)
    with pytest.raises(ValueError):
        ind_r(G.cycle(4), 0)


def test_ind_2_cycle5_facets():
    brute = brute_r_independent(G.cycle(5), 2)
    maximal = {f for f in brute if not any(f < h for h in brute)}
    c = ind_r(G.cycle(5), 2)
    assert {frozenset(f) for f in c.facet_list()} == maximal
    consecutive = {frozenset({v, (v + 1) % 5, (v + 2) % 5}) for v in range(5)}
    triples = {frozenset(s) for s in itertools.combinations(range(5), 3)}
    assert maximal == triples - consecutive


@given(graphs(max_n=7), st.integers(1, 4))
def test_ind_r_matches_brute_force(g, r):
    assert face_sets(ind_r(g, r)) == brute_r_independent(g, r)


@given(graphs(max_n=7), st.integers(1, 3))
def test_minimal_nonfaces_are_con_r(g, r):
    assert minimal_nonfaces(ind_r(g, r)) == set(con_r(g, r).hyperedges)


@given(graphs(max_n=7))
def test_ind_1_is_independence_complex(g):
    assert minimal_nonfaces(ind_r(g, 1)) == {mask_of(e) for e in g.edges}


@given(graphs(min_n=1, max_n=7), st.integers(1, 3), st.randoms(use_true_random=False))
def test_downward_closed(g, r, rnd):
    c = ind_r(g, r)
    faces = c.all_faces()
    for f in rnd.sample(sorted(faces), min(10, len(faces))):
        for v in vertices_of(f):
            assert f & ~(1 << v) in faces


@given(graphs(max_n=7), st.integers(1, 3), st.data())
def test_induced_subcomplex_is_ind_of_induced_subgraph(g, r, data):
    w = data.draw(st.sets(st.integers(0, max(g.n - 1, 0))) if g.n else st.just(set()))
    assert induced_subcomplex(ind_r(g, r), w) == ind_r(induced_subgraph(g, w), r)


def test_induced_subcomplex_examples():
    c = ind_r(G.cycle(5), 2)
    assert induced_subcomplex(c, range(5)) == c
    tri = SimplicialComplex.simplex(3)
    assert induced_subcomplex(tri, [0, 2]) == SimplicialComplex.simplex(2)
    with pytest.raises(ValueError):
        induced_subcomplex(tri, [3])


def test_skeleton_examples():
    tri = SimplicialComplex.simplex(3)
    assert skeleton(tri, 1).facet_list() == [(0, 1), (0, 2), (1, 2)]
    c = ind_r(G.cycle(5), 2)
    assert skeleton(c, c.dim) == c
    assert skeleton(c, -1) == SimplicialComplex(5, frozenset([0]))
    assert not skeleton(c, -1).is_void
    assert SimplicialComplex.void(5).is_void


@pytest.mark.parametrize("a,b,r", [(3, 2, 2), (2, 2, 3), (4, 1, 3), (3, 3, 4)])
def test_skeleton_gives_mixed_generated_complex(a, b, r):
    sk = skeleton(ind_r(G.disjoint_union(G.complete(a), G.complete(b)), r - 1), r - 1)
    # generated by S u T with S, T nonempty on the two sides and |S| + |T| <= r
    gens = [set(s) | {a + t for t in tt}
            for i in range(1, r) for s in itertools.combinations(range(a), i)
            for k in range(1, r - i + 1) for tt in itertools.combinations(range(b), k)]
    assert sk == SimplicialComplex.generated(a + b, gens)


def test_faces_of_dim():
    tri = SimplicialComplex.simplex(3)
    assert faces_of_dim(tri, 1) == [(0, 1), (0, 2), (1, 2)]
    assert faces_of_dim(tri, -1) == [()]
    assert faces_of_dim(tri, 5) == []
    assert len(faces_of_dim(ind_r(G.cycle(5), 2), 2)) == 10 - 5


def test_facets_must_be_antichain():
    with pytest.raises(ValueError):
        SimplicialComplex(3, frozenset([0b011, 0b001]))


@settings(max_examples=60)
@given(graphs(max_n=4), graphs(max_n=4), st.integers(1, 4))
def test_join_decomposition(g1, g2, r):
    n1, n2 = g1.n, g2.n
    expected = {frozenset(f) for f in brute_r_independent(g1, r)}
    expected |= {frozenset(v + n1 for v in f) for f in brute_r_independent(g2, r)}
    for i in range(1, n1 + 1):
        for s in itertools.combinations(range(n1), i):
            for k in range(1, r - i + 1):
                for t in itertools.combinations(range(n1, n1 + n2), k):
                    expected.add(frozenset(s + t))
    assert face_sets(ind_r(join(g1, g2), r)) == expected


@pytest.mark.parametrize("seed", range(15))
def test_induced_subcomplex_union_identities(seed):
    rnd = random.Random(seed)
    n1, n2 = rnd.randint(1, 4), rnd.randint(1, 4)
    g1 = G.make_graph(n1, [e for e in itertools.combinations(range(n1), 2) if rnd.random() < 0.5])
    g2 = G.make_graph(n2, [e for e in itertools.combinations(range(n2), 2) if rnd.random() < 0.5])
    r = rnd.randint(1, 3)
    n = n1 + n2
    v1, v2 = set(range(n1)), set(range(n1, n))
    mixed = {frozenset(s) for s in face_sets(ind_r(join(g1, g2), r)) if s & v1 and s & v2}
    mixed_closed = {frozenset(x) for f in mixed for k in range(len(f) + 1) for x in itertools.combinations(f, k)}
    gamma_11 = face_sets(ind_r(g1, r))
    gamma_22 = {frozenset(v + n1 for v in f) for f in face_sets(ind_r(g2, r))}
    gamma_1 = gamma_11 | mixed_closed
    gamma_2 = gamma_22 | mixed_closed
    gamma = face_sets(ind_r(join(g1, g2), r))
    assert gamma == gamma_1 | gamma_2
    w = {v for v in range(n) if rnd.random() < 0.6}

    def restrict(faces, ws):
        return {f for f in faces if f <= ws}

    assert restrict(gamma, w) == restrict(gamma_11, w & v1) | restrict(gamma_22, w & v2) | restrict(mixed_closed, w)
    assert restrict(gamma_1, w) & restrict(gamma_2, w) == restrict(gamma_1 & gamma_2, w)
    assert restrict(gamma_11, w) == restrict(gamma_11, w & v1)
