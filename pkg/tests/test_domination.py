from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from paritydom import domination as dom
from paritydom import oracle
from paritydom.domination import InvariantError, PreconditionError
from paritydom.graph import (
    Graph,
    VertexSet,
    complete,
    cycle,
    degree_parity_profile,
    delete_vertex,
    empty,
    join,
    path,
    random_tree,
    star,
)

from conftest import graphs

K1, P2, P3, P4, C4 = complete(1), path(2), path(3), path(4), cycle(4)


def vs(n, *one_based):
    return VertexSet.of(n, (v - 1 for v in one_based))


# --- solving ----------------------------------------------------------------


def test_solve_parity_examples():
    assert dom.solve_parity(K1, vs(1, 1)).solution == vs(1, 1)
    sol = dom.solve_parity(P2, vs(2, 1))
    assert sol.solution is None and not sol.solvable and sol.nullity == 1
    assert dom.solve_parity(P3, vs(3, 1, 3)).solution == vs(3, 1, 3)
    with pytest.raises(ValueError):
        dom.solve_parity(P3, vs(2, 1))


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=8), st.data())
def test_solve_parity_matches_enumeration(g, data):
    target = VertexSet(g.n, data.draw(st.integers(0, (1 << g.n) - 1)))
    sol = dom.solve_parity(g, target)
    brute = oracle.enumerate_parity_sets(g, target)
    if sol.solution is None:
        assert brute == []
    else:
        assert sol.solution in brute
        assert len(brute) == 2**sol.nullity


def test_odd_dominating_set_examples():
    assert dom.odd_dominating_set(K1) == vs(1, 1)
    assert dom.odd_dominating_set(P3) == vs(3, 2)
    assert dom.odd_dominating_set(C4) == vs(4, 1, 2, 3, 4)
    assert dom.odd_dominating_set(P2) == vs(2, 1)
    assert dom.odd_dominating_set(P4) == vs(4, 1, 4)


def test_even_dominating_basis_examples():
    assert dom.even_dominating_basis(K1) == []
    assert dom.even_dominating_basis(P2) == [vs(2, 1, 2)]
    assert dom.even_dominating_basis(P3) == []


def test_nullity_and_rank_examples():
    assert (dom.nullity(K1), dom.rank_of(K1)) == (0, 1)
    assert (dom.nullity(P2), dom.rank_of(P2)) == (1, 1)
    assert dom.nullity(P4) == oracle.brute_nullity(P4) == 0
    assert dom.nullity(complete(3)) == 2
    assert dom.nullity(Graph(0)) == 0


# --- null vertices ------------------------------------------------------------


def test_null_vertices_examples():
    assert dom.null_vertices(P3) == VertexSet(3, 0)
    assert dom.null_vertices(P2) == vs(2, 1, 2)


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=9))
def test_null_vertices_match_union_of_all_even_sets(g):
    union = 0
    for s in oracle.enumerate_even_dominating(g):
        union |= s.members
    assert dom.null_vertices(g) == VertexSet(g.n, union)


def test_null_difference_examples():
    assert dom.null_difference(P2, 0) == -1
    assert dom.null_difference(P3, 1) == 0
    assert dom.null_difference(K1, 0) == 0
    with pytest.raises(IndexError):
        dom.null_difference(P3, 5)


@settings(max_examples=120, deadline=None)
@given(graphs(max_n=10))
def test_null_vertex_iff_null_difference_minus_one(g):
    nulls = dom.null_vertices(g)
    for v in range(g.n):
        nd = dom.null_difference(g, v)
        assert nd in (-1, 0, 1)
        assert (v in nulls) == (nd == -1)
        assert nd == oracle.brute_nullity(delete_vertex(g, v)) - oracle.brute_nullity(g)


# --- avoiding construction -------------------------------------------------


def test_odd_dominating_avoiding_examples():
    assert dom.odd_dominating_avoiding(P2, 0) == vs(2, 2)
    assert dom.odd_dominating_avoiding(P2, 1) == vs(2, 1)
    for v in range(3):
        with pytest.raises(PreconditionError, match="not a null vertex"):
            dom.odd_dominating_avoiding(P3, v)


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=9))
def test_avoiding_returns_oracle_listed_set(g):
    odd = set(oracle.enumerate_odd_dominating(g))
    for v in dom.null_vertices(g):
        s = dom.odd_dominating_avoiding(g, v)
        assert v not in s and s in odd


# --- report and theorem -------------------------------------------------------


def test_report_examples():
    r = dom.parity_theorem_check(K1)
    assert (len(r.odd_dominating), r.rank, r.odd_parity, r.rank_parity) == (1, 1, 1, 1)
    r = dom.parity_theorem_check(C4)
    assert (len(r.odd_dominating), r.rank, r.nullity, r.odd_parity) == (4, 4, 0, 0)
    assert r.always_solvable
    r = dom.parity_theorem_check(P2)
    assert (len(r.odd_dominating), r.rank, r.nullity) == (1, 1, 1)
    assert (r.order - len(r.odd_dominating)) % 2 == r.nullity % 2
    assert r.null_differences == (-1, -1)
    assert not r.always_solvable


def test_report_rejects_false_parity():
    with pytest.raises(InvariantError, match="different parity"):
        dom.DominationReport(
            order=2,
            rank=2,
            nullity=0,
            odd_dominating=vs(2, 1),
            odd_parity=1,
            rank_parity=0,
            null_vertices=VertexSet(2, 0),
            null_differences=(0, 0),
            odd_degree_intersection_parity=0,
            always_solvable=True,
        )


def test_report_requires_vertices():
    with pytest.raises(ValueError):
        dom.parity_theorem_check(Graph(0))


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=10))
def test_every_odd_dominating_set_has_rank_parity(g):
    rho = dom.rank_of(g)
    sizes = {len(s) % 2 for s in oracle.enumerate_odd_dominating(g)}
    assert sizes == {rho % 2}


def test_odd_degree_intersection_examples():
    assert dom.odd_degree_intersection_parity(P2) == 1
    assert dom.odd_degree_intersection_parity(C4) == 0


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=10))
def test_odd_degree_intersection_for_all_odd_sets(g):
    d = degree_parity_profile(g)
    nu = dom.nullity(g)
    for s in oracle.enumerate_odd_dominating(g):
        assert len(d & s) % 2 == len(s.complement()) % 2 == nu % 2
    if nu == 0:
        assert dom.odd_degree_intersection_parity(g) == 0


# --- corollaries --------------------------------------------------------------


def _by_claim(g):
    return {c.claim: c for c in dom.corollary_suite(g)}


def test_corollary_suite_examples():
    c = _by_claim(C4)
    assert c["even_degrees_even_nullity"].applicable and c["even_degrees_even_nullity"].holds
    assert c["tree_odd_size"].marker == "n/a"
    c = _by_claim(P2)
    assert c["tree_odd_size"].applicable and c["tree_odd_size"].holds
    assert c["always_solvable_size_parity"].marker == "n/a"
    c = _by_claim(P3)
    assert c["tree_odd_size"].marker == "ok"
    assert c["always_solvable_size_parity"].marker == "ok"


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=12))
def test_corollaries_hold(g):
    assert all(c.holds for c in dom.corollary_suite(g))


def test_even_degree_graphs_have_even_nullity():
    for g in [cycle(n) for n in range(3, 15)] + [empty(5), complete(5), complete(7)]:
        assert dom.nullity(g) % 2 == 0


# --- joins --------------------------------------------------------------------


def test_join_pairwise_examples():
    assert dom.join_nullity_pairwise(0, 1, 0, 1) == 1 == dom.nullity(complete(2))
    assert dom.join_nullity_pairwise(0, 3, 0, 3) == 1 == dom.nullity(join([P3, P3]))
    assert dom.join_nullity_pairwise(2, 4, 1, 5) == 3


def test_join_mary_examples():
    assert dom.join_nullity_mary([(0, 1), (0, 1)]) == 1
    assert dom.join_nullity_mary([(0, 2)] * 3) == 0
    assert dom.join_nullity_mary([(0, 1)] * 3) == 2 == dom.nullity(complete(3))
    assert dom.join_nullity_mary([(3, 1)]) == dom.join_nullity_mary([(3, 2)]) == 3
    with pytest.raises(ValueError):
        dom.join_nullity_mary([])


@given(st.integers(0, 9), st.integers(0, 9), st.integers(0, 9), st.integers(0, 9))
def test_mary_on_two_parts_equals_pairwise(n1, r1, n2, r2):
    assert dom.join_nullity_mary([(n1, r1), (n2, r2)]) == dom.join_nullity_pairwise(n1, r1, n2, r2)


def test_analyze_join_examples():
    a = dom.analyze_join([K1, K1])
    assert (a.predicted_nullity, a.direct_nullity, a.odd_rank_count) == (1, 1, 2)
    a = dom.analyze_join([P3, P3])
    assert a.predicted_nullity == a.direct_nullity == 1
    a = dom.analyze_join([C4, C4])
    assert a.odd_rank_count == 0 and a.predicted_nullity == a.direct_nullity == 0
    assert dom.analyze_join([star(4), cycle(5), P2]).parts == ((4, dom.rank_of(star(4)), dom.nullity(star(4))), (5, 5, 0), (2, 1, 1))


@settings(max_examples=100, deadline=None)
@given(st.lists(graphs(max_n=6), min_size=1, max_size=4))
def test_join_formula_matches_elimination(parts):
    a = dom.analyze_join(parts)
    assert a.predicted_nullity == a.direct_nullity
    if sum(p.n for p in parts) <= 12:
        assert a.direct_nullity == oracle.brute_nullity(join(parts))


def test_join_analysis_rejects_mismatch():
    with pytest.raises(InvariantError):
        dom.JoinAnalysis(parts=((1, 1, 0),), odd_rank_count=1, predicted_nullity=0, direct_nullity=1)


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 40), st.integers(0, 2**32))
def test_tree_nullity_by_even_degree_count(n, seed):
    t = random_tree(n, seed)
    even = sum(1 for d in t.degrees() if d % 2 == 0)
    if even == 0:
        assert dom.nullity(t) == 1
    elif even == 1:
        assert dom.nullity(t) == 0
    if even <= 1:
        assert len(dom.odd_dominating_set(t)) % 2 == 1


def test_odd_degree_star_has_nullity_one():
    assert dom.nullity(star(4)) == 1 and dom.nullity(star(6)) == 1
    assert len(dom.odd_dominating_set(star(4))) % 2 == 1
