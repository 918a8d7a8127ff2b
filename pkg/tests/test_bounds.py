from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cliquevalue import (
    IneligibleGraph,
    SolverBudget,
    check_clique_mantel,
    generate,
    tightness_gap,
    verify_proof_chain,
)
from conftest import graphs
from oracles import brute_cliques


def test_petersen_vertex_mantel(petersen):
    b = check_clique_mantel(petersen, 1)
    assert b.eligible and b.holds
    assert (b.lhs, b.rhs, b.slack) == (15, Fraction(25), Fraction(10))


def test_balanced_bipartite_is_tight():
    b = check_clique_mantel(generate("turan", 6, 2), 1)
    assert (b.lhs, b.rhs, b.slack, b.holds) == (9, Fraction(9), Fraction(0), True)
    assert tightness_gap(generate("complete_bipartite", 2, 2), 1) == 0


def test_edge_mantel_on_octahedron():
    b = check_clique_mantel(generate("turan", 6, 3), 2)
    assert b.eligible and b.holds and (b.lhs, b.rhs) == (8, Fraction(18))


def test_triangle_is_ineligible_for_k1():
    b = check_clique_mantel(generate("complete", 3), 1)
    assert not b.eligible and b.holds is None and b.slack is None
    with pytest.raises(IneligibleGraph):
        tightness_gap(generate("complete", 3), 1)


def test_k_must_be_positive():
    with pytest.raises(ValueError):
        check_clique_mantel(generate("cycle", 5), 0)
    with pytest.raises(ValueError):
        verify_proof_chain(generate("cycle", 5), 0)


def test_gaps():
    assert tightness_gap(generate("cycle", 5), 1) == Fraction(5, 4)
    assert tightness_gap(generate("turan", 9, 3), 2) == Fraction(513, 8)


def test_small_clique_number_still_eligible():
    # C5 has no triangles: k=2 bound reads 0 <= 25/8
    b = check_clique_mantel(generate("cycle", 5), 2)
    assert b.eligible and b.lhs == 0 and b.rhs == Fraction(25, 8)


def _steps(report):
    return {s.id: (s.lhs, s.rhs, s.holds) for s in report.steps}


def test_chain_on_book3(book3):
    r = verify_proof_chain(book3, 2)
    assert (r.a_size, r.b_size) == (2, 5)
    steps = _steps(r)
    assert steps["S1"] == (3, 2, False)
    assert steps["S2"] == (2, 3, True)
    assert steps["S3"] == (9, 9, True)
    assert steps["S4"] == (6, 7, True)
    assert steps["S5"] == (3, 5, True)
    assert r.final_bound.holds and r.final_bound.rhs == Fraction(49, 8)
    assert r.warning is None


def test_chain_on_c5():
    r = verify_proof_chain(generate("cycle", 5), 1)
    assert (r.a_size, r.b_size) == (2, 3)
    assert all(s.holds for s in r.steps)
    assert _steps(r)["S1"] == (2, 2, True)
    assert r.final_bound.lhs == 5 and r.final_bound.rhs == Fraction(25, 4)


def test_chain_on_k33_is_tight():
    r = verify_proof_chain(generate("turan", 6, 2), 1)
    assert (r.a_size, r.b_size) == (3, 3)
    assert all(s.holds for s in r.steps)
    assert _steps(r)["S5"] == (9, 9, True)
    assert r.final_bound.slack == 0


def test_chain_rejects_ineligible(book3):
    with pytest.raises(IneligibleGraph):
        verify_proof_chain(book3, 1)


def test_chain_s1_unknown_when_budget_runs_out(book3):
    r = verify_proof_chain(book3, 2, SolverBudget(node_limit=1))
    assert r.step("S1").holds is None
    assert r.warning


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=8), st.integers(min_value=1, max_value=3))
def test_chain_identities(g, k):
    if not check_clique_mantel(g, k).eligible:
        return
    r = verify_proof_chain(g, k)
    steps = {s.id: s for s in r.steps}
    assert steps["S3"].holds
    assert r.a_size + r.b_size == len(brute_cliques(g.n, g.edge_tuples(), k))
    if steps["S1"].holds and steps["S2"].holds:
        assert steps["S4"].holds and steps["S5"].holds


@given(graphs(max_n=8))
def test_specialisations(g):
    tri = len(brute_cliques(g.n, g.edge_tuples(), 3))
    b1 = check_clique_mantel(g, 1)
    assert b1.eligible == (tri == 0)
    if b1.eligible:
        assert b1.holds == (4 * g.m <= g.n ** 2)
        assert b1.rhs == Fraction(g.n ** 2, 4)
    b2 = check_clique_mantel(g, 2)
    if b2.eligible:
        assert b2.lhs == tri and b2.holds == (8 * tri <= g.m ** 2)


@given(graphs(max_n=8), st.integers(min_value=1, max_value=4))
def test_slack_is_reproducible(g, k):
    a, b = check_clique_mantel(g, k), check_clique_mantel(g, k)
    assert a == b
    if a.eligible:
        assert isinstance(a.slack, Fraction) and a.slack == a.rhs - a.lhs
