import json

import pytest

from tdec.bounds import (
    bipartite_bounds,
    bounds_report,
    complete_bounds,
    cycle_formula,
    delta_lower_bound,
    family_value,
    induced_path_lower_bound,
    path_formula,
    recognize_family,
    subdivision_bounds,
    subdivision_lower_mod4,
    subdivision_upper_mod4,
    surgery_interval,
)
from tdec.errors import CycleTooShort, EmptyGraph, InvalidK, ParameterTooSmall, PathTooShort
from tdec.formats import to_graph6
from tdec.families import complete, complete_bipartite, cycle, friendship, path, star, wheel
from tdec.graph import Graph
from tdec.harness import induced_p6_instances


def test_path_formula_values():
    assert [path_formula(n) for n in range(3, 15)] == [2, 2, 3, 4, 4, 5, 6, 7, 8, 8, 8, 9]


def test_cycle_formula_values():
    assert [cycle_formula(n) for n in range(3, 14)] == [3, 2, 4, 4, 5, 6, 7, 8, 8, 8, 9]


def test_formula_domain():
    with pytest.raises(PathTooShort):
        path_formula(2)
    with pytest.raises(CycleTooShort):
        cycle_formula(2)


@pytest.mark.parametrize("n", range(6, 201))
def test_path_equals_shorter_cycle(n):
    assert path_formula(n) == cycle_formula(n - 1)


def test_family_values():
    assert family_value("star", 5) == 5
    assert family_value("wheel", 6) == 5
    assert family_value("friendship", 3) == 6
    with pytest.raises(ParameterTooSmall):
        family_value("wheel", 3)


def test_complete_and_bipartite_bounds():
    assert complete_bounds(4) == (3, 6)
    assert complete_bounds(5) == (4, 7)
    assert bipartite_bounds(3, 3) == (3, 6)
    assert bipartite_bounds(2, 3) == (3, 4)
    with pytest.raises(ParameterTooSmall):
        bipartite_bounds(1, 1)


def test_delta_bound():
    assert delta_lower_bound(star(4)) == 4
    with pytest.raises(EmptyGraph):
        delta_lower_bound(Graph(3, []))


def test_induced_path_general_form():
    assert induced_path_lower_bound(path(5)) == 2
    assert induced_path_lower_bound(path(8)) == 2 + path_formula(6)


@pytest.mark.parametrize("k", range(10, 101))
@pytest.mark.parametrize("m,delta", [(1, 1), (3, 4), (7, 3)])
def test_mod4_forms_match_general(k, m, delta):
    rep = subdivision_bounds(m, delta, k)
    lower = {t: v for v, t in rep.lower}
    upper = {t: v for v, t in rep.upper}
    assert lower["subdiv-k10-lower"] == subdivision_lower_mod4(m, k)
    assert upper["subdiv-k10-upper"] == subdivision_upper_mod4(m, delta, k)


def test_mod4_needs_large_k():
    with pytest.raises(InvalidK):
        subdivision_lower_mod4(3, 9)


def test_subdivision_bounds_tags():
    tags = {t for _, t in subdivision_bounds(3, 2, 2).lower}
    assert tags == {"subdiv-sandwich-lower"}
    tags = {t for _, t in subdivision_bounds(3, 2, 12).lower}
    assert tags == {"subdiv-sandwich-lower", "subdiv-lower-m", "subdiv-k10-lower"}
    with pytest.raises(InvalidK):
        subdivision_bounds(3, 2, 1)


def test_surgery_intervals():
    assert surgery_interval("edge_removal", 5) == (3, 7)
    assert surgery_interval("vertex_removal", 5, 2) == (3, 7)
    assert surgery_interval("contraction", 5, 3) == (3, 7)


@pytest.mark.parametrize(
    "g,expected",
    [
        (path(6), ("path", (6,))),
        (cycle(7), ("cycle", (7,))),
        (star(4), ("star", (4,))),
        (wheel(6), ("wheel", (6,))),
        (friendship(3), ("friendship", (3,))),
        (complete(5), ("complete", (5,))),
        (complete_bipartite(2, 3), ("complete_bipartite", (2, 3))),
        (path(6).relabel([3, 5, 0, 1, 4, 2]), ("path", (6,))),
        (Graph(4, [(0, 1), (1, 2), (2, 0), (2, 3)]), None),
    ],
)
def test_recognize_family(g, expected):
    assert recognize_family(g) == expected


def test_report_json_shape():
    doc = json.loads(bounds_report(cycle(8)).to_json())
    assert {"lower", "upper", "best_lower", "best_upper"} <= set(doc)
    assert doc["best_lower"] == doc["best_upper"] == cycle_formula(8)


def test_report_edgeless():
    rep = bounds_report(Graph(2, []))
    assert rep.best_lower == rep.best_upper == 0


BRACKET_GRAPHS = [
    path(3), path(5), path(7), path(9), path(11), path(13),
    cycle(4), cycle(5), cycle(8), cycle(9), cycle(10), cycle(12),
    star(5), wheel(6), friendship(3), complete(4), complete(5), complete_bipartite(2, 3),
    complete_bipartite(3, 3),
] + induced_p6_instances(8)


@pytest.mark.parametrize("g", BRACKET_GRAPHS, ids=to_graph6)
def test_best_bounds_bracket_exact(g, exact_values):
    """Reported lower and upper bounds must bracket the exact value."""
    rep = bounds_report(g)
    value = exact_values(g)
    assert rep.best_lower <= value <= rep.best_upper, (rep.lower, rep.upper, value)
