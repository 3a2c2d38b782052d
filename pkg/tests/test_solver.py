import json

import pytest
from hypothesis import given, settings

from tdec.coloring import validate
from tdec.errors import InfeasibleGraph, SizeCapExceeded
from tdec.families import complete, complete_bipartite, cycle, friendship, path, star, wheel
from tdec.graph import Graph, disjoint_union
from tdec.oracles import (
    solve_oracle_enumeration,
    solve_oracle_line_graph,
    total_dominator_vertex_number,
)
from tdec.solver import (
    EXACT,
    INFEASIBLE,
    TIMED_OUT,
    SolverOptions,
    heuristic_upper,
    solve_exact,
    tde_feasible,
)

from .test_graph import graphs

# Exact values computed by the branch and bound solver and confirmed by both
# brute-force oracles up to 10 edges; frozen here as regression data.
PATH_VALUES = {n: v for n, v in zip(range(3, 19), [2, 2, 3, 4, 4, 5, 6, 6, 7, 7, 8, 9, 9, 10, 10, 11])}
CYCLE_VALUES = {n: v for n, v in zip(range(3, 16), [3, 2, 4, 4, 5, 6, 6, 7, 8, 8, 9, 9, 10])}


def check(g, **kw):
    res = solve_exact(g, SolverOptions(**kw))
    assert res.status == EXACT
    assert validate(g, res.witness).valid and res.witness.k == res.value
    assert res.proven_lower == res.proven_upper == res.value
    return res.value


@pytest.mark.parametrize("n", sorted(PATH_VALUES))
def test_paths(n):
    assert check(path(n)) == PATH_VALUES[n]


@pytest.mark.parametrize("n", sorted(CYCLE_VALUES))
def test_cycles(n):
    assert check(cycle(n)) == CYCLE_VALUES[n]


@pytest.mark.parametrize(
    "g,value",
    [
        (star(2), 2), (star(6), 6), (wheel(4), 3), (wheel(7), 6),
        (friendship(1), 3), (friendship(2), 4), (friendship(3), 6),
        (complete(4), 3), (complete(5), 5), (complete_bipartite(2, 3), 3),
        (complete_bipartite(3, 3), 5),
    ],
    ids=repr,
)
def test_small_named_graphs(g, value):
    assert check(g) == value


@pytest.mark.parametrize("n", range(6, 11))
def test_paths_oracle_agreement(n):
    g = path(n)
    assert solve_oracle_enumeration(g) == solve_oracle_line_graph(g) == PATH_VALUES[n]


def test_k2_infeasible():
    res = solve_exact(path(2))
    assert res.status == INFEASIBLE and res.value is None and res.witness is None
    assert not tde_feasible(disjoint_union(cycle(4), path(2)))


def test_heuristic_refuses_infeasible():
    with pytest.raises(InfeasibleGraph):
        heuristic_upper(path(2))


def test_edgeless_graph_has_value_zero():
    res = solve_exact(Graph(3, []))
    assert res.status == EXACT and res.value == 0


def test_disconnected_feasible():
    assert check(disjoint_union(path(3), path(3))) == 4


@pytest.mark.parametrize("n", range(2, 9))
def test_heuristic_on_stars_is_tight(n):
    k, c = heuristic_upper(star(n))
    assert k == n and validate(star(n), c).valid


def test_heuristic_on_p9():
    k, c = heuristic_upper(path(9))
    assert 6 <= k <= 8
    assert validate(path(9), c).valid


@pytest.mark.parametrize("order", ["line-degree-desc", "input-order"])
def test_branching_orders_agree(order):
    for g in (cycle(9), complete(5), friendship(3)):
        assert check(g, branching_order=order) == check(g)


def test_determinism():
    g = complete_bipartite(3, 4)
    a = solve_exact(g).to_dict(include_time=False)
    b = solve_exact(g).to_dict(include_time=False)
    assert a == b
    assert json.loads(solve_exact(g).to_json(include_time=False)) == a


def test_initial_lower_at_true_value():
    assert check(path(9), initial_lower=PATH_VALUES[9]) == PATH_VALUES[9]


def test_oracle_cross_check_flag():
    assert check(cycle(7), oracle_cross_check=True) == CYCLE_VALUES[7]


def test_timeout_returns_bracket():
    g = path(40)
    res = solve_exact(g, SolverOptions(timeout=0.0))
    assert res.status == TIMED_OUT and res.value is None
    assert res.proven_lower <= res.proven_upper
    assert validate(g, res.witness).valid and res.witness.k == res.proven_upper


def subdivided_star():
    from tdec.graph import subdivide

    return subdivide(star(4), 3).graph


def test_subdivided_star_value():
    assert check(subdivided_star()) == 8


def test_oracle_caps():
    with pytest.raises(SizeCapExceeded):
        solve_oracle_enumeration(path(12))
    with pytest.raises(SizeCapExceeded):
        solve_oracle_line_graph(path(12))


def test_total_dominator_vertex_number_on_line_graph():
    from tdec.graph import line_graph

    assert total_dominator_vertex_number(line_graph(cycle(6))) == 4


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=6))
def test_random_graphs_match_oracles(g):
    if g.edge_count > 10:
        return
    res = solve_exact(g)
    expected = solve_oracle_enumeration(g)
    assert solve_oracle_line_graph(g) == expected
    if expected is None:
        assert res.status == INFEASIBLE
    else:
        assert res.status == EXACT and res.value == expected
        assert validate(g, res.witness).valid


def test_corpus_agreement(corpus5):
    bad = []
    for g in corpus5:
        res = solve_exact(g)
        value = res.value if res.status == EXACT else None
        if not (value == solve_oracle_enumeration(g) == solve_oracle_line_graph(g)):
            bad.append(g)
    assert not bad
