from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cliquevalue import (
    Clique,
    GraphError,
    clique_census,
    clique_value,
    enumerate_cliques,
    from_edge_list,
    generate,
    subgraph_count,
    verify_handshaking,
    verify_kelly,
)
from cliquevalue.cliques import degeneracy_order, subgraph_count_by_embeddings
from cliquevalue.graph import Graph
from conftest import graphs
from oracles import brute_cliques, brute_subgraph_count, brute_value

K2 = from_edge_list(2, [(0, 1)])
P3 = from_edge_list(3, [(0, 1), (1, 2)])
K3 = generate("complete", 3)
K4 = generate("complete", 4)
C4 = generate("cycle", 4)


def test_g1_triangle(g1):
    assert [q.vertices for q in enumerate_cliques(g1, 3)] == [(0, 1, 2)]


def test_complete_graph_counts():
    assert len(enumerate_cliques(K4, 2)) == 6
    assert len(enumerate_cliques(K4, 3)) == 4
    assert enumerate_cliques(K4, 5) == []


@given(graphs(), st.integers(min_value=1, max_value=5))
def test_enumeration_matches_brute_force(g, k):
    got = [q.vertices for q in enumerate_cliques(g, k)]
    assert got == brute_cliques(g.n, g.edge_tuples(), k)


def test_enumeration_is_repeatable():
    g = generate("gnp", 14, 0.5, seed=4)
    assert repr(enumerate_cliques(g, 3)) == repr(enumerate_cliques(g, 3))


def test_degeneracy_order_ties_by_id():
    assert degeneracy_order(generate("cycle", 5)) == [0, 1, 2, 3, 4]
    # star: leaves first (degree 1), centre last
    assert degeneracy_order(generate("complete_bipartite", 1, 3))[-1] in (0, 3)


def test_g1_edge_values(g1):
    values = {q.vertices: clique_value(g1, q) for q in enumerate_cliques(g1, 2)}
    assert values == {(0, 1): 1, (0, 2): 1, (1, 2): 1, (2, 3): 0}


def test_vertex_value_is_degree(g1):
    assert clique_value(g1, Clique.of(g1, [2])) == 3


@pytest.mark.parametrize("n, k", [(5, 1), (5, 2), (5, 4), (6, 3)])
def test_complete_graph_values(n, k):
    g = generate("complete", n)
    assert {clique_value(g, q) for q in enumerate_cliques(g, k)} == {n - k}


def test_value_rejects_non_clique(g1):
    with pytest.raises(GraphError):
        clique_value(g1, Clique((0, 3)))
    with pytest.raises(GraphError):
        Clique.of(g1, [])


@given(graphs())
def test_values_match_brute_force(g):
    for k in (1, 2, 3):
        for q in enumerate_cliques(g, k):
            assert clique_value(g, q) == brute_value(g.n, g.edge_tuples(), q.vertices)


def test_census_examples(g1):
    c = clique_census(g1)
    assert c.counts == (4, 4, 1) and c.clique_number == 3
    assert clique_census(generate("complete", 5)).counts == tuple(comb(5, k) for k in range(1, 6))
    c5 = clique_census(generate("cycle", 5))
    assert c5.counts == (5, 5) and c5.clique_number == 2
    assert clique_census(Graph.empty(4)).counts == (4,)
    assert clique_census(Graph.empty(4)).clique_number == 1
    empty = clique_census(Graph.empty(0))
    assert empty.counts == () and empty.clique_number == 0
    assert c.c(7) == 0 and c.c(0) == 0


@given(graphs())
def test_census_matches_enumeration(g):
    census = clique_census(g)
    for k in range(1, census.clique_number + 2):
        assert census.c(k) == len(enumerate_cliques(g, k))
    assert all(c > 0 for c in census.counts)


def test_handshaking_examples(g1):
    r = verify_handshaking(g1, 2)
    assert (r.value_sum, r.rhs, r.equal) == (3, 3, True)
    r = verify_handshaking(generate("turan", 6, 3), 2)
    assert (r.value_sum, r.rhs) == (24, 24)
    with pytest.raises(ValueError):
        verify_handshaking(g1, 0)


@given(graphs(max_n=9), st.integers(min_value=1, max_value=6))
def test_handshaking_identity(g, k):
    r = verify_handshaking(g, k)
    assert r.equal
    if k == 1:
        assert r.value_sum == 2 * g.m
    census = clique_census(g)
    assert r.value_sum % (k + 1) == 0 and r.value_sum // (k + 1) == census.c(k + 1)


def test_subgraph_count_examples():
    assert subgraph_count(K2, P3) == 2
    assert subgraph_count(K3, K4) == 4
    assert subgraph_count(P3, K3) == 3
    assert subgraph_count(C4, K4) == 3
    assert subgraph_count(K4, K3) == 0


def test_subgraph_count_guards():
    with pytest.raises(GraphError):
        subgraph_count(Graph.empty(0), K3)
    with pytest.raises(GraphError):
        subgraph_count(generate("path", 9), K3)


PATTERNS = [K2, P3, K3, C4, generate("complete_bipartite", 1, 3), from_edge_list(3, [(0, 1)])]


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=7), st.sampled_from(PATTERNS))
def test_subgraph_count_routes_agree(g, h):
    s = subgraph_count(h, g)
    assert s == subgraph_count_by_embeddings(h, g)
    assert s == brute_subgraph_count(h.n, h.edge_tuples(), g.n, g.edge_tuples())


def test_kelly_examples():
    r = verify_kelly(K2, P3)
    assert (r.lhs, r.rhs, r.per_vertex, r.equal) == (2, 2, (1, 0, 1), True)
    r = verify_kelly(K3, K4)
    assert (r.lhs, r.rhs, r.per_vertex) == (4, 4, (1, 1, 1, 1))
    r = verify_kelly(K2, K2)
    assert (r.lhs, r.rhs, r.per_vertex) == (0, 0, (0, 0))


def test_kelly_precondition():
    with pytest.raises(GraphError, match="isolated"):
        verify_kelly(K2, from_edge_list(3, [(0, 1)]))
    with pytest.raises(GraphError):
        verify_kelly(K3, K2)


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=8, min_n=4), st.sampled_from(PATTERNS[:4]))
def test_kelly_identity(g, h):
    if g.has_isolated_vertex():
        return
    assert verify_kelly(h, g).equal
